"""JSON readers and writers for the file formats the CLI accepts.

All files are UTF-8 JSON.  Category files reject unknown keys; identities
are implicit with reserved ids ``id_<obj>``.  Matrices travel as row-major
arrays of decimal strings so integer width is never ambiguous.
"""

from __future__ import annotations

import json

from .diagrams import AbDiagram, GroupDiagram
from .fincat import Functor, factorization, opposite, validate_category
from .groups import FinGroup, FreeProduct, GroupHom, GroupPresentation
from .homalg import AbMap, FGAb, IntMatrix
from .hocolim import PointedDiagram, bg_diagram
from .presheaf import DSet, DSetMorphism, SSetMap, TruncSSet, elements_with_parts


class InputError(Exception):
    """Malformed input file; maps to exit code 1 in the CLI."""


def _require_keys(obj, required, optional=(), what="object"):
    keys = set(obj)
    missing = set(required) - keys
    unknown = keys - set(required) - set(optional)
    if missing:
        raise InputError("%s misses keys: %s" % (what, ", ".join(sorted(missing))))
    if unknown:
        raise InputError("%s has unknown keys: %s" % (what, ", ".join(sorted(unknown))))


def category_from_json(obj, name=""):
    _require_keys(obj, ("objects", "morphisms", "composition"), what="category")
    morphisms = []
    for m in obj["morphisms"]:
        _require_keys(m, ("id", "dom", "cod"), what="morphism")
        morphisms.append((m["id"], m["dom"], m["cod"]))
    composition = []
    for c in obj["composition"]:
        _require_keys(c, ("g", "f", "eq"), what="composition entry")
        composition.append((c["g"], c["f"], c["eq"]))
    return validate_category(obj["objects"], morphisms, composition, name=name)


def category_to_json(C):
    return {
        "objects": list(C.objects),
        "morphisms": [
            {"id": f, "dom": C.dom[f], "cod": C.cod[f]}
            for f in C.morphisms
            if not C.is_identity(f)
        ],
        "composition": [
            {"g": g, "f": f, "eq": h}
            for (g, f), h in sorted(C.comp.items())
            if not (C.is_identity(g) or C.is_identity(f))
        ],
    }


def functor_from_json(obj, workspace, name=""):
    _require_keys(obj, ("source", "target", "objects"), ("morphisms",), what="functor")
    src = workspace.category(obj["source"])
    tgt = workspace.category(obj["target"])
    return Functor(src, tgt, dict(obj["objects"]), dict(obj.get("morphisms", {})), name=name)


def group_from_json(obj, name=""):
    if obj.get("kind") == "presentation":
        return presentation_from_json(obj)
    _require_keys(obj, ("kind", "elements", "unit", "table"), what="group")
    if obj["kind"] != "table":
        raise InputError("unknown group kind %r" % obj["kind"])
    els = list(obj["elements"])
    rows = obj["table"]
    if len(rows) != len(els) or any(len(r) != len(els) for r in rows):
        raise InputError("group table must be a square over the elements")
    table = {}
    for i, a in enumerate(els):
        for j, b in enumerate(els):
            table[(a, b)] = rows[i][j]
    return FinGroup(els, obj["unit"], table, name=name)


def group_to_json(G):
    return {
        "kind": "table",
        "elements": list(G.elements),
        "unit": G.unit,
        "table": [[G.table[(a, b)] for b in G.elements] for a in G.elements],
    }


def presentation_from_json(obj):
    _require_keys(obj, ("kind", "generators", "relators"), what="presentation")
    if obj["kind"] != "presentation":
        raise InputError("unknown presentation kind %r" % obj["kind"])
    return GroupPresentation(obj["generators"], obj["relators"])


def presentation_to_json(P):
    return {
        "kind": "presentation",
        "generators": list(P.generators),
        "relators": P.relator_strings(),
    }


def free_product_from_json(obj, workspace):
    if "ref" in obj:
        G = workspace.group(obj["ref"])
        return FreeProduct.from_group(obj.get("label", obj["ref"]), G)
    if obj.get("kind") == "free_product":
        factors = []
        for fac in obj["factors"]:
            factors.append((fac["label"], group_from_json(fac["group"])))
        return FreeProduct(factors)
    G = group_from_json(obj)
    return FreeProduct.from_group(obj.get("label", G.name or "G"), G)


def _word_from_json(word):
    return tuple((l[0], l[1]) for l in word)


def group_diagram_from_json(obj, workspace, name=""):
    _require_keys(obj, ("category", "groups", "homs"), what="diagram")
    C = workspace.category(obj["category"])
    value = {o: free_product_from_json(g, workspace) for o, g in obj["groups"].items()}
    actions = {}
    for mid, table in obj["homs"].items():
        if mid not in C.dom:
            raise InputError("diagram references unknown morphism %s" % mid)
        src = value[C.dom[mid]]
        dst = value[C.cod[mid]]
        per = {}
        for lbl, grp in src.factors:
            per[lbl] = {}
            for el in grp.elements:
                if el == grp.unit:
                    per[lbl][el] = ()
                    continue
                key = "%s.%s" % (lbl, el)
                if key not in table:
                    raise InputError("hom at %s misses letter %s" % (mid, key))
                per[lbl][el] = _word_from_json(table[key])
        actions[mid] = GroupHom(src, dst, per)
    return GroupDiagram(C, value, actions, name=name)


def fgab_from_json(obj):
    _require_keys(obj, ("gens",), ("rels",), what="abelian group")
    rels = IntMatrix.from_json(obj["rels"]) if "rels" in obj else None
    return FGAb(obj["gens"], rels)


def ab_diagram_from_json(obj, workspace, name=""):
    _require_keys(obj, ("category", "values", "maps"), what="abelian diagram")
    C = workspace.category(obj["category"])
    value = {o: fgab_from_json(v) for o, v in obj["values"].items()}
    actions = {}
    for mid, mat in obj["maps"].items():
        if mid not in C.dom:
            raise InputError("diagram references unknown morphism %s" % mid)
        actions[mid] = AbMap(value[C.dom[mid]], value[C.cod[mid]], IntMatrix.from_json(mat))
    return AbDiagram(C, value, actions, name=name)


def dset_from_json(obj, workspace, name=""):
    _require_keys(obj, ("category", "sets", "maps"), what="presheaf")
    C = workspace.category(obj["category"])
    return DSet(C, {o: list(v) for o, v in obj["sets"].items()},
                {m: dict(t) for m, t in obj["maps"].items()}, name=name)


def dset_to_json(X, category_name):
    return {
        "category": category_name,
        "sets": {o: list(v) for o, v in X.sets.items()},
        "maps": {
            m: dict(t) for m, t in X.maps.items() if not X.base.is_identity(m)
        },
    }


def dset_morphism_from_json(obj, workspace, name=""):
    _require_keys(obj, ("source", "target", "components"), what="presheaf morphism")
    return DSetMorphism(workspace.dset(obj["source"]), workspace.dset(obj["target"]),
                        {o: dict(t) for o, t in obj["components"].items()})


def sset_from_json(obj, name=""):
    _require_keys(obj, ("level", "simplices", "faces", "degeneracies"), ("basepoint",),
                  what="simplicial set")
    level = int(obj["level"])
    faces = {}
    for key, table in obj["faces"].items():
        n, i = key.split(",")
        faces[(int(n), int(i))] = dict(table)
    degens = {}
    for key, table in obj["degeneracies"].items():
        n, i = key.split(",")
        degens[(int(n), int(i))] = dict(table)
    return TruncSSet(level, obj["simplices"], faces, degens,
                     basepoint=obj.get("basepoint"))


def sset_to_json(X):
    def enc(x):
        return x if isinstance(x, str) else repr(x)

    faces = {}
    for (n, i), table in sorted(X.faces.items()):
        faces["%d,%d" % (n, i)] = {enc(k): enc(v) for k, v in table.items()}
    degens = {}
    for (n, i), table in sorted(X.degeneracies.items()):
        degens["%d,%d" % (n, i)] = {enc(k): enc(v) for k, v in table.items()}
    out = {
        "level": X.level,
        "simplices": [[enc(x) for x in xs] for xs in X.simplices],
        "faces": faces,
        "degeneracies": degens,
    }
    if X.basepoint is not None:
        out["basepoint"] = enc(X.basepoint)
    return out


def pointed_diagram_from_json(obj, workspace, name=""):
    if obj.get("kind") == "bg":
        _require_keys(obj, ("kind", "diagram", "level"), what="pointed diagram")
        return bg_diagram(workspace.group_diagram(obj["diagram"]), int(obj["level"]))
    _require_keys(obj, ("category", "level", "values", "maps"), ("kind",),
                  what="pointed diagram")
    C = workspace.category(obj["category"])
    level = int(obj["level"])
    values = {o: sset_from_json(v) for o, v in obj["values"].items()}
    actions = {}
    for mid, tables in obj["maps"].items():
        src = values[C.dom[mid]]
        dst = values[C.cod[mid]]
        actions[mid] = SSetMap(src, dst, [dict(t) for t in tables], pointed=True)
    return PointedDiagram(C, level, values, actions, name=name)


def system_from_json(obj, workspace, name=""):
    """Coefficient system over a derived index category.

    ``over`` picks the base: the opposite category of elements of a named
    presheaf, or the opposite factorization category of a named category.
    Constant systems name a single group; explicit systems use the
    synthesized object/morphism ids (printable via the CLI).
    """
    _require_keys(obj, ("over",), ("constant_group", "constant_abelian", "diagram", "abdiagram"),
                  what="system")
    over = obj["over"]
    _require_keys(over, ("kind",), ("dset", "category"), what="system base")
    if over["kind"] == "elements-op":
        X = workspace.dset(over["dset"])
        E, _, _ = elements_with_parts(X)
        base = opposite(E)
    elif over["kind"] == "factorization-op":
        C = workspace.category(over["category"])
        base = factorization(C).category_op
    else:
        raise InputError("unknown system base kind %r" % over["kind"])
    if "constant_group" in obj:
        fp = free_product_from_json(obj["constant_group"], workspace)
        from .diagrams import constant_group_diagram

        return constant_group_diagram(base, fp, name=name)
    if "constant_abelian" in obj:
        from .diagrams import constant_ab_diagram

        return constant_ab_diagram(base, fgab_from_json(obj["constant_abelian"]), name=name)
    raise InputError("system needs constant_group or constant_abelian")


class Workspace:
    """Named registry of entities loaded from one or more JSON files."""

    SECTIONS = (
        "categories", "functors", "groups", "presentations", "diagrams",
        "abdiagrams", "dsets", "dsetmaps", "ssets", "pointed_diagrams", "systems",
    )

    def __init__(self):
        self.raw = {s: {} for s in self.SECTIONS}
        self._cache = {s: {} for s in self.SECTIONS}

    def load_file(self, path):
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        self.load_data(data, what=path)

    def load_data(self, data, what="workspace"):
        if "objects" in data:
            # a bare category file: register under a default name
            self.raw["categories"].setdefault("main", data)
            return
        unknown = set(data) - set(self.SECTIONS)
        if unknown:
            raise InputError("%s has unknown sections: %s" % (what, ", ".join(sorted(unknown))))
        for section in self.SECTIONS:
            for name, obj in data.get(section, {}).items():
                if name in self.raw[section]:
                    raise InputError("duplicate %s name %r" % (section[:-1], name))
                self.raw[section][name] = obj

    def _get(self, section, name, builder):
        if name not in self._cache[section]:
            if name not in self.raw[section]:
                raise InputError("unknown %s %r" % (section[:-1], name))
            self._cache[section][name] = builder(self.raw[section][name], name)
        return self._cache[section][name]

    def category(self, name):
        return self._get("categories", name, lambda o, n: category_from_json(o, name=n))

    def functor(self, name):
        return self._get("functors", name, lambda o, n: functor_from_json(o, self, name=n))

    def group(self, name):
        return self._get("groups", name, lambda o, n: group_from_json(o, name=n))

    def presentation(self, name):
        return self._get("presentations", name, lambda o, n: presentation_from_json(o))

    def group_diagram(self, name):
        return self._get("diagrams", name, lambda o, n: group_diagram_from_json(o, self, name=n))

    def ab_diagram(self, name):
        return self._get("abdiagrams", name, lambda o, n: ab_diagram_from_json(o, self, name=n))

    def dset(self, name):
        return self._get("dsets", name, lambda o, n: dset_from_json(o, self, name=n))

    def dset_morphism(self, name):
        return self._get("dsetmaps", name, lambda o, n: dset_morphism_from_json(o, self, name=n))

    def sset(self, name):
        return self._get("ssets", name, lambda o, n: sset_from_json(o, name=n))

    def pointed_diagram(self, name):
        return self._get("pointed_diagrams", name,
                         lambda o, n: pointed_diagram_from_json(o, self, name=n))

    def system(self, name):
        return self._get("systems", name, lambda o, n: system_from_json(o, self, name=n))

    def validate_all(self):
        """Force-build every entity; raises on the first invalid one."""
        report = {}
        for section, getter in (
            ("categories", self.category),
            ("functors", self.functor),
            ("groups", self.group),
            ("presentations", self.presentation),
            ("diagrams", self.group_diagram),
            ("abdiagrams", self.ab_diagram),
            ("dsets", self.dset),
            ("dsetmaps", self.dset_morphism),
            ("ssets", self.sset),
            ("pointed_diagrams", self.pointed_diagram),
            ("systems", self.system),
        ):
            for name in sorted(self.raw[section]):
                getter(name)
            report[section] = sorted(self.raw[section])
        return report
