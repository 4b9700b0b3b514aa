"""Pointed homotopy colimits of diagrams of truncated simplicial sets.

The homotopy colimit is the diagonal of the simplicial replacement: a
degree-n simplex is a pair (length-n chain of the base, degree-n simplex
of the value at the chain origin), with every pair whose coefficient is
a basepoint degeneracy identified to a single class per degree.
"""

from __future__ import annotations

from . import fincat
from .cofinal import certify_homotopy_cofinal
from .fincat import chain_degeneracy, chain_face, chain_origin, composable_chains
from .groups import BudgetExceeded, FinGroup, FreeProduct, fingerprint, tietze_simplify
from .presheaf import SSetMap, TruncSSet, edge_path_group, homology_ss, nerve


class HocolimError(Exception):
    pass


class LevelMismatch(HocolimError):
    pass


class CapExceeded(HocolimError):
    pass


BASECLASS = "*"


class PointedDiagram:
    """Diagram of pointed truncated simplicial sets over a finite category,
    all values at one common level."""

    __slots__ = ("base", "level", "value", "action", "name")

    def __init__(self, base, level, value, action, name="", _validate=True):
        self.base = base
        self.level = level
        self.value = dict(value)
        self.action = dict(action)
        self.name = name
        for o in base.objects:
            X = self.value.get(o)
            if X is None:
                raise HocolimError("diagram misses a value at %s" % o)
            if X.level != level:
                raise LevelMismatch("value at %s has level %d, want %d" % (o, X.level, level))
            if X.basepoint is None:
                raise HocolimError("value at %s is not pointed" % o)
        for o in base.objects:
            self.action.setdefault(base.identity[o], SSetMap.identity(self.value[o]))
        if _validate:
            self._check()

    def _check(self):
        B = self.base
        for f in B.morphisms:
            m = self.action.get(f)
            if m is None:
                raise HocolimError("diagram misses the action of %s" % f)
            if m.source is not self.value[B.dom[f]] or m.target is not self.value[B.cod[f]]:
                # allow structurally identical values
                if (
                    m.source.simplices != self.value[B.dom[f]].simplices
                    or m.target.simplices != self.value[B.cod[f]].simplices
                ):
                    raise HocolimError("action of %s connects the wrong values" % f)
            m._check(pointed=True)
        for o in B.objects:
            ident = self.action[B.identity[o]]
            for n in range(self.level + 1):
                for x in self.value[o].simplices[n]:
                    if ident.apply(n, x) != x:
                        raise HocolimError("identity at %s does not act as identity" % o)
        for g, f in B.composable_pairs():
            lhs = self.action[B.comp[(g, f)]]
            rhs_g = self.action[g]
            rhs_f = self.action[f]
            for n in range(self.level + 1):
                for x in self.value[B.dom[f]].simplices[n]:
                    if lhs.apply(n, x) != rhs_g.apply(n, rhs_f.apply(n, x)):
                        raise HocolimError("functoriality fails at (%s, %s)" % (g, f))

    def restrict(self, S):
        """Composition with a functor into the base."""
        return PointedDiagram(
            S.source,
            self.level,
            {c: self.value[S.on_obj(c)] for c in S.source.objects},
            {f: self.action[S.on_mor(f)] for f in S.source.morphisms},
            name=self.name and self.name + "|",
            _validate=False,
        )

    def __repr__(self):
        return "PointedDiagram(%s over %s, level %d)" % (
            self.name or "?",
            self.base.name or "?",
            self.level,
        )


# -- classifying spaces -------------------------------------------------------


def classifying_space(G, N, cap=100000):
    """Nerve of the one-object category of a group, pointed at the vertex.

    Free products with two or more nontrivial factors are infinite, so the
    word enumeration raises CapExceeded instead of truncating silently.
    """
    return _classifying_space_with_cat(G, N, cap=cap)[1]


def _classifying_space_with_cat(G, N, cap=100000):
    if isinstance(G, FreeProduct):
        try:
            G = G.as_table_group()
        except BudgetExceeded as exc:
            raise CapExceeded(str(exc)) from None
    if not isinstance(G, FinGroup):
        raise HocolimError("expected a finite group or a free product")
    if G.order() ** N > cap:
        raise CapExceeded("classifying space has %d top simplices" % G.order() ** N)
    cat = fincat.from_monoid(G.elements, G.unit, G.table, name="B(%s)" % (G.name or "?"))
    return cat, nerve(cat, N, basepoint="*")


def _word_key(word):
    return "|".join("%s.%s" % l for l in word) or "1"


def bg_diagram(G, N, cap=100000):
    """Pointed diagram of classifying spaces of a group diagram."""
    cats = {}
    values = {}
    words = {}
    for o in G.base.objects:
        fp = G.value[o]
        cats[o], values[o] = _classifying_space_with_cat(fp, N, cap=cap)
        words[o] = {_word_key(w): w for w in fp.elements()}
    actions = {}
    for alpha in G.base.morphisms:
        if G.base.is_identity(alpha):
            continue
        src_o, dst_o = G.base.dom[alpha], G.base.cod[alpha]
        hom = G.action[alpha]
        Xs, Xt = values[src_o], values[dst_o]
        el_map = {}
        for key, w in words[src_o].items():
            image = hom.apply(w)
            el_map[key] = _word_key(image)

        def mor_image(m, el_map=el_map, src=cats[src_o], dst=cats[dst_o]):
            if src.is_identity(m):
                return dst.identity["*"]
            key = el_map[m]
            return dst.identity["*"] if key == "1" else key

        mapping = []
        for n in range(N + 1):
            table = {}
            for x in Xs.simplices[n]:
                if n == 0:
                    table[x] = Xt.simplices[0][0]
                else:
                    table[x] = tuple(mor_image(m) for m in x)
            mapping.append(table)
        actions[alpha] = SSetMap(Xs, Xt, mapping, pointed=True)
    return PointedDiagram(G.base, N, values, actions, name="B(%s)" % (G.name or "?"))


# -- the diagonal -------------------------------------------------------------


def _transport(PD, sigma, n, x):
    """Coefficient transport along the first arrow of a chain."""
    alpha1 = sigma[0]
    return PD.action[alpha1].apply(n, x)


def hocolim_unpointed(PD, N):
    """Diagonal of the simplicial replacement, without basepoint
    identifications: all pairs (chain, coefficient simplex)."""
    if PD.level < N:
        raise LevelMismatch("diagram level %d below requested %d" % (PD.level, N))
    C = PD.base
    simplices = []
    for n in range(N + 1):
        layer = []
        for sigma in composable_chains(C, n):
            origin = chain_origin(C, sigma)
            for x in PD.value[origin].simplices[n]:
                layer.append((sigma, x))
        simplices.append(layer)
    faces = {}
    degens = {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            table = {}
            for sigma, x in simplices[n]:
                origin = chain_origin(C, sigma)
                sigma2 = chain_face(C, sigma, i)
                x1 = _transport(PD, sigma, n, x) if i == 0 else x
                x2 = PD.value[chain_origin(C, sigma2)].face(n, i, x1)
                table[(sigma, x)] = (sigma2, x2)
            faces[(n, i)] = table
    for n in range(N):
        for i in range(n + 1):
            table = {}
            for sigma, x in simplices[n]:
                origin = chain_origin(C, sigma)
                sigma2 = chain_degeneracy(C, sigma, i)
                x2 = PD.value[origin].degeneracy(n, i, x)
                table[(sigma, x)] = (sigma2, x2)
            degens[(n, i)] = table
    return TruncSSet(N, simplices, faces, degens)


def hocolim_pointed(PD, N):
    """Pointed homotopy colimit: the diagonal with all (chain, basepoint
    degeneracy) pairs identified to one class per degree."""
    if PD.level < N:
        raise LevelMismatch("diagram level %d below requested %d" % (PD.level, N))
    C = PD.base
    base_of = {o: [PD.value[o].base_degeneracy(n) for n in range(N + 1)] for o in C.objects}

    def collapse(n, sigma, x):
        if x == base_of[chain_origin(C, sigma)][n]:
            return BASECLASS
        return (sigma, x)

    simplices = []
    for n in range(N + 1):
        layer = [BASECLASS]
        for sigma in composable_chains(C, n):
            origin = chain_origin(C, sigma)
            bn = base_of[origin][n]
            for x in PD.value[origin].simplices[n]:
                if x != bn:
                    layer.append((sigma, x))
        simplices.append(layer)
    faces = {}
    degens = {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            table = {BASECLASS: BASECLASS}
            for cell in simplices[n]:
                if cell == BASECLASS:
                    continue
                sigma, x = cell
                sigma2 = chain_face(C, sigma, i)
                x1 = _transport(PD, sigma, n, x) if i == 0 else x
                x2 = PD.value[chain_origin(C, sigma2)].face(n, i, x1)
                table[cell] = collapse(n - 1, sigma2, x2)
            faces[(n, i)] = table
    for n in range(N):
        for i in range(n + 1):
            table = {BASECLASS: BASECLASS}
            for cell in simplices[n]:
                if cell == BASECLASS:
                    continue
                sigma, x = cell
                sigma2 = chain_degeneracy(C, sigma, i)
                x2 = PD.value[chain_origin(C, sigma)].degeneracy(n, i, x)
                table[cell] = collapse(n + 1, sigma2, x2)
            degens[(n, i)] = table
    return TruncSSet(N, simplices, faces, degens, basepoint=BASECLASS)


def hocolim_cardinalities(PD, N):
    """Exact degreewise count 1 + sum over chains of (|X(origin)_n| - 1)."""
    C = PD.base
    out = []
    for n in range(N + 1):
        total = 1
        for sigma in composable_chains(C, n):
            total += len(PD.value[chain_origin(C, sigma)].simplices[n]) - 1
        out.append(total)
    return out


# -- the quotient identity -----------------------------------------------------


def pointed_quotient_check(PD, N):
    """Degreewise check that collapsing the basepoint-chain subcomplex of
    the unpointed diagonal yields exactly the pointed diagonal.

    Verifies that the chain inclusion is a degreewise injection closed
    under faces and degeneracies (a cofibration), forms the quotient, and
    compares carriers and structure maps with the pointed construction.
    Failures are reported with a witness, not raised.
    """
    C = PD.base
    U = hocolim_unpointed(PD, N)
    P = hocolim_pointed(PD, N)
    base_of = {o: [PD.value[o].base_degeneracy(n) for n in range(N + 1)] for o in C.objects}
    sub = []
    for n in range(N + 1):
        layer = set()
        for sigma in composable_chains(C, n):
            layer.add((sigma, base_of[chain_origin(C, sigma)][n]))
        sub.append(layer)
    report = {"pass": True, "witness": None, "levels": N}

    def fail(why, **kw):
        report["pass"] = False
        report["witness"] = dict(why=why, **kw)
        return report

    # injectivity of the basepoint-chain inclusion, degreewise
    for n in range(N + 1):
        chains = composable_chains(C, n)
        if len(sub[n]) != len(chains):
            return fail("inclusion not injective", degree=n)
    # closure of the subcomplex under faces and degeneracies
    for n in range(1, N + 1):
        for i in range(n + 1):
            for cell in sub[n]:
                if U.face(n, i, cell) not in sub[n - 1]:
                    return fail("subcomplex not closed under faces", degree=n, i=i)
    for n in range(N):
        for i in range(n + 1):
            for cell in sub[n]:
                if U.degeneracy(n, i, cell) not in sub[n + 1]:
                    return fail("subcomplex not closed under degeneracies", degree=n, i=i)
    # the quotient carrier must biject with the pointed carrier
    for n in range(N + 1):
        quot = [BASECLASS] + [c for c in U.simplices[n] if c not in sub[n]]
        if sorted(map(repr, quot)) != sorted(map(repr, P.simplices[n])):
            return fail("carrier mismatch", degree=n)
    # structure maps must agree with the quotient-induced ones
    for n in range(1, N + 1):
        for i in range(n + 1):
            for cell in U.simplices[n]:
                if cell in sub[n]:
                    continue
                img = U.face(n, i, cell)
                want = BASECLASS if img in sub[n - 1] else img
                if P.face(n, i, cell) != want:
                    return fail("face mismatch", degree=n, i=i, cell=repr(cell))
    for n in range(N):
        for i in range(n + 1):
            for cell in U.simplices[n]:
                if cell in sub[n]:
                    continue
                img = U.degeneracy(n, i, cell)
                want = BASECLASS if img in sub[n + 1] else img
                if P.degeneracy(n, i, cell) != want:
                    return fail("degeneracy mismatch", degree=n, i=i, cell=repr(cell))
    return report


# -- cofinal comparison ---------------------------------------------------------


def cofinal_hocolim_compare(S, PD, N, n_max, effort=1, certify=True):
    """Compare homology and fundamental-group fingerprints of the pointed
    homotopy colimits over the source (restricted diagram) and target.

    Equality of these invariants is necessary for the restriction map to
    be a weak equivalence; the report never claims more.  When the
    cofinality hypothesis is not certified the comparison still runs,
    labeled as unconditional.
    """
    label = "unconditional comparison"
    verdicts = None
    if certify:
        cert = certify_homotopy_cofinal(S, effort=effort, n_max=n_max)
        verdicts = {d: v.kind for d, v in cert["per_object"].items()}
        if cert["aggregate"] == "CONTRACTIBLE":
            label = "certified"
        elif cert["aggregate"] == "EVIDENCE":
            label = "conditional"
    lhs = hocolim_pointed(PD.restrict(S), N)
    rhs = hocolim_pointed(PD, N)
    h_l = homology_ss(lhs, n_max)
    h_r = homology_ss(rhs, n_max)
    try:
        pi_l = list(fingerprint(tietze_simplify(edge_path_group(lhs))))
        pi_r = list(fingerprint(tietze_simplify(edge_path_group(rhs))))
    except BudgetExceeded:
        pi_l = pi_r = None
    agree = h_l == h_r and pi_l == pi_r
    return {
        "label": label,
        "hypothesis": verdicts,
        "homology": {"lhs": [str(h) for h in h_l], "rhs": [str(h) for h in h_r]},
        "pi1": {"lhs": pi_l, "rhs": pi_r},
        "verdict": "agree" if agree else "disagree",
    }
