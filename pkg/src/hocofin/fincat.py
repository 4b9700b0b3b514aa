"""Finite categories as full composition tables.

A category is a list of objects, a list of morphisms with domain and
codomain, synthesized identities ``id_<obj>``, and a total composition
table on composable pairs.  Validation checks the unit and associativity
laws exhaustively, so everything downstream may assume a genuine category.

Canonical ordering is input order everywhere; derived categories (comma
categories, factorization categories) enumerate their objects and
morphisms lexicographically in the constituent indices, so repeated
construction is byte-stable.
"""

from __future__ import annotations

from collections import deque


class CategoryError(Exception):
    """Base class for malformed categorical input."""


class MissingComposite(CategoryError):
    pass


class AssociativityViolation(CategoryError):
    pass


class IdentityViolation(CategoryError):
    pass


class DanglingId(CategoryError):
    pass


class UnknownObject(CategoryError):
    pass


class UnknownMorphism(CategoryError):
    pass


class SizeLimitExceeded(CategoryError):
    pass


def identity_id(obj):
    return "id_" + obj


class FinCat:
    """Validated finite category.

    ``comp[(g, f)]`` is the composite g∘f, defined exactly for pairs with
    dom(g) = cod(f).  Instances are immutable after construction and safe
    to share.
    """

    __slots__ = ("objects", "morphisms", "dom", "cod", "identity", "comp", "_hom", "_out", "name")

    def __init__(self, objects, morphisms, dom, cod, identity, comp, name="", _validate=True):
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        self.dom = dict(dom)
        self.cod = dict(cod)
        self.identity = dict(identity)
        self.comp = dict(comp)
        self.name = name
        self._hom = {}
        self._out = {}
        for f in self.morphisms:
            key = (self.dom[f], self.cod[f])
            self._hom.setdefault(key, []).append(f)
            self._out.setdefault(self.dom[f], []).append(f)
        if _validate:
            self._check()

    # -- structure -----------------------------------------------------

    def hom(self, x, y):
        """Morphisms x -> y, in canonical order."""
        return self._hom.get((x, y), [])

    def is_identity(self, f):
        return f == self.identity[self.dom[f]] and self.dom[f] == self.cod[f]

    def compose(self, g, f):
        """g∘f; raises when the pair is not composable."""
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise MissingComposite("no composite for (%s, %s)" % (g, f)) from None

    def out_morphisms(self, x):
        """Morphisms with domain x, in canonical order."""
        return self._out.get(x, [])

    def composable_pairs(self):
        for f in self.morphisms:
            for g in self._out.get(self.cod[f], []):
                yield g, f

    def _check(self):
        for o in self.objects:
            i = self.identity.get(o)
            if i is None or i not in self.dom:
                raise IdentityViolation("object %s has no identity morphism" % o)
            if self.dom[i] != o or self.cod[i] != o:
                raise IdentityViolation("identity of %s has wrong endpoints" % o)
        for f in self.morphisms:
            if self.dom[f] not in self.objects or self.cod[f] not in self.objects:
                raise DanglingId("morphism %s has undeclared endpoints" % f)
        seen_pairs = set()
        for (g, f), h in self.comp.items():
            if g not in self.dom or f not in self.dom or h not in self.dom:
                raise DanglingId("composition entry (%s, %s) -> %s references unknown ids" % (g, f, h))
            if self.dom[g] != self.cod[f]:
                raise DanglingId("composition entry for non-composable pair (%s, %s)" % (g, f))
            if self.dom[h] != self.dom[f] or self.cod[h] != self.cod[g]:
                raise AssociativityViolation(
                    "composite %s of (%s, %s) has wrong endpoints" % (h, g, f)
                )
            seen_pairs.add((g, f))
        for g, f in self.composable_pairs():
            if (g, f) not in seen_pairs:
                raise MissingComposite("composable pair (%s, %s) has no composite" % (g, f))
        for f in self.morphisms:
            if self.comp[(self.identity[self.cod[f]], f)] != f:
                raise IdentityViolation("id∘%s != %s" % (f, f))
            if self.comp[(f, self.identity[self.dom[f]])] != f:
                raise IdentityViolation("%s∘id != %s" % (f, f))
        # associativity on exactly the composable triples, via out-buckets
        for g, f in self.composable_pairs():
            gf = self.comp[(g, f)]
            for h in self._out.get(self.cod[g], []):
                if self.comp[(self.comp[(h, g)], f)] != self.comp[(h, gf)]:
                    raise AssociativityViolation(
                        "associativity fails on (%s, %s, %s)" % (h, g, f)
                    )

    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return NotImplemented
        return (
            self.objects == other.objects
            and self.morphisms == other.morphisms
            and self.dom == other.dom
            and self.cod == other.cod
            and self.identity == other.identity
            and self.comp == other.comp
        )

    def __repr__(self):
        return "FinCat(%s: %d objects, %d morphisms)" % (
            self.name or "?",
            len(self.objects),
            len(self.morphisms),
        )


def validate_category(objects, morphisms, composition, name=""):
    """Build a FinCat from raw parts.

    ``morphisms`` lists the non-identity morphisms as (id, dom, cod);
    identities ``id_<obj>`` are synthesized first, in object order, then
    the given morphisms in input order.  ``composition`` maps pairs of
    non-identity morphism ids (g, f) to g∘f; entries involving identities
    are allowed but must agree with the forced values.
    """
    objects = list(objects)
    if len(set(objects)) != len(objects):
        raise CategoryError("duplicate object ids")
    ident = {o: identity_id(o) for o in objects}
    mor_ids = []
    dom = {}
    cod = {}
    for o in objects:
        i = ident[o]
        mor_ids.append(i)
        dom[i] = o
        cod[i] = o
    for mid, d, c in morphisms:
        if mid in dom:
            raise DanglingId("morphism id %s duplicates another (identities are reserved)" % mid)
        if d not in objects or c not in objects:
            raise DanglingId("morphism %s references unknown object" % mid)
        mor_ids.append(mid)
        dom[mid] = d
        cod[mid] = c
    comp = {}
    for g, f, h in composition:
        if g not in dom or f not in dom or h not in dom:
            raise DanglingId("composition entry (%s, %s) -> %s references unknown ids" % (g, f, h))
        key = (g, f)
        if key in comp and comp[key] != h:
            raise CategoryError("conflicting composition entries for (%s, %s)" % key)
        comp[key] = h
    # forced entries: identity laws, including identity-with-identity
    for f in mor_ids:
        comp_forced = {
            (ident[cod[f]], f): f,
            (f, ident[dom[f]]): f,
        }
        for key, val in comp_forced.items():
            if key in comp and comp[key] != val:
                raise IdentityViolation("composition table contradicts identity law at %s" % (key,))
            comp[key] = val
    return FinCat(objects, mor_ids, dom, cod, ident, comp, name=name)


class Functor:
    """Structure-preserving map between two finite categories, checked
    exhaustively at construction."""

    __slots__ = ("source", "target", "obj_map", "mor_map", "name")

    def __init__(self, source, target, obj_map, mor_map, name="", _validate=True):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)
        self.name = name
        for o in source.objects:
            if o in self.obj_map:
                self.mor_map.setdefault(source.identity[o], target.identity[self.obj_map[o]])
        if _validate:
            self._check()

    def _check(self):
        S, T = self.source, self.target
        for o in S.objects:
            if self.obj_map.get(o) not in T.identity:
                raise UnknownObject("object %s has no valid image" % o)
        for f in S.morphisms:
            g = self.mor_map.get(f)
            if g not in T.dom:
                raise UnknownMorphism("morphism %s has no valid image" % f)
            if T.dom[g] != self.obj_map[S.dom[f]] or T.cod[g] != self.obj_map[S.cod[f]]:
                raise CategoryError("functor breaks dom/cod at %s" % f)
        for o in S.objects:
            if self.mor_map[S.identity[o]] != T.identity[self.obj_map[o]]:
                raise CategoryError("functor breaks identity at %s" % o)
        for g, f in S.composable_pairs():
            lhs = self.mor_map[S.comp[(g, f)]]
            rhs = T.comp[(self.mor_map[g], self.mor_map[f])]
            if lhs != rhs:
                raise CategoryError("functor breaks composition at (%s, %s)" % (g, f))

    def on_obj(self, o):
        return self.obj_map[o]

    def on_mor(self, f):
        return self.mor_map[f]

    def __repr__(self):
        return "Functor(%s -> %s)" % (self.source.name or "?", self.target.name or "?")


def identity_functor(C):
    return Functor(C, C, {o: o for o in C.objects}, {f: f for f in C.morphisms},
                   name="id", _validate=False)


def compose_functors(second, first):
    """second∘first."""
    if first.target is not second.source and first.target != second.source:
        raise CategoryError("functors do not compose")
    return Functor(
        first.source,
        second.target,
        {o: second.obj_map[first.obj_map[o]] for o in first.source.objects},
        {f: second.mor_map[first.mor_map[f]] for f in first.source.morphisms},
        _validate=False,
    )


def opposite(C):
    """Dual category: dom/cod swapped, comp(g, f) = comp_C(f, g)."""
    comp = {(f, g): h for (g, f), h in C.comp.items()}
    return FinCat(
        C.objects,
        C.morphisms,
        C.cod,
        C.dom,
        C.identity,
        comp,
        name=C.name + "^op" if C.name else "",
        _validate=False,
    )


def opposite_functor(S, source_op=None, target_op=None):
    """The same maps, viewed between the opposite categories."""
    return Functor(
        source_op if source_op is not None else opposite(S.source),
        target_op if target_op is not None else opposite(S.target),
        S.obj_map,
        S.mor_map,
        name=(S.name + "^op") if S.name else "",
        _validate=False,
    )


# -- comma categories ---------------------------------------------------


def _comma_obj_id(c, beta):
    return "(%s|%s)" % (c, beta)


def _comma_mor_id(alpha, src, dst):
    return "[%s:%s->%s]" % (alpha, src, dst)


def comma_left_fibre(S, d):
    """The left fibre S↓d and its projection to the source category.

    Objects are pairs (c, beta: S(c) -> d); a morphism (c, b) -> (c', b')
    is alpha: c -> c' with b'∘S(alpha) = b.
    """
    cat, proj, _ = comma_left_fibre_parts(S, d)
    return cat, proj


def comma_left_fibre_parts(S, d):
    """Like comma_left_fibre but also returns the map object id -> (c, beta)
    so callers never have to re-parse synthesized ids."""
    C, D = S.source, S.target
    if d not in D.identity:
        raise UnknownObject("unknown object %s" % d)
    objs = []
    parts = {}
    for c in C.objects:
        for beta in D.hom(S.on_obj(c), d):
            oid = _comma_obj_id(c, beta)
            objs.append(oid)
            parts[oid] = (c, beta)
    cat, proj = _comma_like(C, D, S, objs, parts, d, coslice=False)
    return cat, proj, parts


def comma_coslice(S, d):
    """The coslice d↓S: objects (c, beta: d -> S(c)), morphisms alpha with
    S(alpha)∘beta = beta'."""
    C, D = S.source, S.target
    if d not in D.identity:
        raise UnknownObject("unknown object %s" % d)
    objs = []
    parts = {}
    for c in C.objects:
        for beta in D.hom(d, S.on_obj(c)):
            oid = _comma_obj_id(c, beta)
            objs.append(oid)
            parts[oid] = (c, beta)
    cat, _ = _comma_like(C, D, S, objs, parts, d, coslice=True)
    return cat


def _comma_like(C, D, S, objs, parts, d, coslice):
    mors = []
    mor_alpha = {}
    dom = {}
    cod = {}
    for o1 in objs:
        c1, b1 = parts[o1]
        for o2 in objs:
            c2, b2 = parts[o2]
            for alpha in C.hom(c1, c2):
                if C.is_identity(alpha) and o1 == o2:
                    continue
                sa = S.on_mor(alpha)
                if coslice:
                    ok = D.comp[(sa, b1)] == b2
                else:
                    ok = D.comp[(b2, sa)] == b1
                if ok:
                    mid = _comma_mor_id(alpha, o1, o2)
                    mors.append((mid, o1, o2))
                    mor_alpha[mid] = alpha
    comp = []
    for m1, s1, t1 in mors:
        for m2, s2, t2 in mors:
            if s2 == t1:
                a = C.comp[(mor_alpha[m2], mor_alpha[m1])]
                if C.is_identity(a) and s1 == t2:
                    comp.append((m2, m1, identity_id(s1)))
                else:
                    comp.append((m2, m1, _comma_mor_id(a, s1, t2)))
    cat = validate_category(objs, mors, comp, name="comma")
    # projection functor to C
    obj_map = {o: parts[o][0] for o in objs}
    mor_map = {}
    for o in objs:
        mor_map[cat.identity[o]] = C.identity[parts[o][0]]
    for mid, _, _ in mors:
        mor_map[mid] = mor_alpha[mid]
    proj = Functor(cat, C, obj_map, mor_map, name="Q_%s" % d)
    return cat, proj


# -- factorization categories -------------------------------------------


def _fact_mor_id(alpha, beta, f, g):
    return "[%s,%s:%s->%s]" % (alpha, beta, f, g)


class FactorizationData:
    """Factorization category of C with its two projections.

    ``dom`` is a functor from the opposite of the factorization category
    (morphism (a, b): f -> g projects to a: dom g -> dom f), ``cod`` is a
    functor from the factorization category itself.
    """

    __slots__ = ("base", "category", "category_op", "dom", "cod", "pair")

    def __init__(self, base, category, category_op, dom, cod, pair):
        self.base = base
        self.category = category
        self.category_op = category_op
        self.dom = dom
        self.cod = cod
        self.pair = pair  # morphism id -> (alpha, beta)


def factorization(C):
    """Category whose objects are the morphisms of C and whose morphisms
    f -> g are pairs (alpha, beta) with g = beta∘f∘alpha."""
    objs = list(C.morphisms)
    mors = []
    pair = {}
    for f in objs:
        for alpha in C.morphisms:
            if C.cod[alpha] != C.dom[f]:
                continue
            fa = C.comp[(f, alpha)]
            for beta in C.morphisms:
                if C.dom[beta] != C.cod[f]:
                    continue
                g = C.comp[(beta, fa)]
                if C.is_identity(alpha) and C.is_identity(beta):
                    continue  # the identity (id, id): f -> f is synthesized
                mid = _fact_mor_id(alpha, beta, f, g)
                mors.append((mid, f, g))
                pair[mid] = (alpha, beta)
    comp = []
    for m1, f1, g1 in mors:
        a1, b1 = pair[m1]
        for m2, f2, g2 in mors:
            if f2 != g1:
                continue
            a2, b2 = pair[m2]
            a = C.comp[(a1, a2)]
            b = C.comp[(b2, b1)]
            if C.is_identity(a) and C.is_identity(b):
                comp.append((m2, m1, identity_id(f1)))
            else:
                comp.append((m2, m1, _fact_mor_id(a, b, f1, g2)))
    cat = validate_category(objs, mors, comp, name=(C.name and "F(%s)" % C.name))
    pair_full = dict(pair)
    for f in objs:
        pair_full[cat.identity[f]] = (C.identity[C.dom[f]], C.identity[C.cod[f]])
    cat_op = opposite(cat)
    cod_f = Functor(
        cat,
        C,
        {f: C.cod[f] for f in objs},
        {m: pair_full[m][1] for m in cat.morphisms},
        name="cod",
    )
    dom_f = Functor(
        cat_op,
        C,
        {f: C.dom[f] for f in objs},
        {m: pair_full[m][0] for m in cat.morphisms},
        name="dom",
    )
    return FactorizationData(C, cat, cat_op, dom_f, cod_f, pair_full)


def factor_functor(S, fc=None, fd=None):
    """The induced functor between factorization categories."""
    fc = fc or factorization(S.source)
    fd = fd or factorization(S.target)
    C, D = S.source, S.target
    obj_map = {f: S.on_mor(f) for f in fc.category.objects}
    mor_map = {}
    for m in fc.category.morphisms:
        a, b = fc.pair[m]
        f = fc.category.dom[m]
        g = fc.category.cod[m]
        sa, sb = S.on_mor(a), S.on_mor(b)
        sf, sg = S.on_mor(f), S.on_mor(g)
        if D.is_identity(sa) and D.is_identity(sb):
            mor_map[m] = fd.category.identity[sf]
        else:
            mor_map[m] = _fact_mor_id(sa, sb, sf, sg)
    return Functor(fc.category, fd.category, obj_map, mor_map, name="F(%s)" % (S.name or "S"))


def factor_slice(S, alpha):
    """The category of factorizations of alpha through values of S.

    Objects are triples (c, u, v) with u: dom alpha -> S(c),
    v: S(c) -> cod alpha and v∘u = alpha; morphisms are beta: c -> c'
    with u' = S(beta)∘u and v = v'∘S(beta).
    """
    C, D = S.source, S.target
    if alpha not in D.dom:
        raise UnknownMorphism("unknown morphism %s" % alpha)
    a0, a1 = D.dom[alpha], D.cod[alpha]
    objs = []
    parts = {}
    for c in C.objects:
        sc = S.on_obj(c)
        for u in D.hom(a0, sc):
            for v in D.hom(sc, a1):
                if D.comp[(v, u)] == alpha:
                    oid = "(%s|%s|%s)" % (c, u, v)
                    objs.append(oid)
                    parts[oid] = (c, u, v)
    mors = []
    mor_beta = {}
    for o1 in objs:
        c1, u1, v1 = parts[o1]
        for o2 in objs:
            c2, u2, v2 = parts[o2]
            for beta in C.hom(c1, c2):
                if C.is_identity(beta) and o1 == o2:
                    continue
                sb = S.on_mor(beta)
                if D.comp[(sb, u1)] == u2 and D.comp[(v2, sb)] == v1:
                    mid = _comma_mor_id(beta, o1, o2)
                    mors.append((mid, o1, o2))
                    mor_beta[mid] = beta
    comp = []
    for m1, s1, t1 in mors:
        for m2, s2, t2 in mors:
            if s2 == t1:
                b = C.comp[(mor_beta[m2], mor_beta[m1])]
                if C.is_identity(b) and s1 == t2:
                    comp.append((m2, m1, identity_id(s1)))
                else:
                    comp.append((m2, m1, _comma_mor_id(b, s1, t2)))
    return validate_category(objs, mors, comp, name="slice")


# -- isomorphism search --------------------------------------------------


def iso_check(C, D, max_objects=12, max_morphisms=64):
    """Search for an invertible functor C -> D by deterministic backtracking.

    Returns the functor, or None when the categories are not isomorphic.
    Raises SizeLimitExceeded beyond the configured bounds.
    """
    if len(C.objects) > max_objects or len(D.objects) > max_objects:
        raise SizeLimitExceeded("too many objects for isomorphism search")
    if len(C.morphisms) > max_morphisms or len(D.morphisms) > max_morphisms:
        raise SizeLimitExceeded("too many morphisms for isomorphism search")
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return None

    def profile(cat, x):
        outs = sorted(len(cat.hom(x, y)) for y in cat.objects)
        ins = sorted(len(cat.hom(y, x)) for y in cat.objects)
        return (len(cat.hom(x, x)), tuple(outs), tuple(ins))

    cprof = {x: profile(C, x) for x in C.objects}
    dprof = {y: profile(D, y) for y in D.objects}
    if sorted(cprof.values()) != sorted(dprof.values()):
        return None

    cobj = C.objects

    def assign_objects(k, omap, used):
        if k == len(cobj):
            yield dict(omap)
            return
        x = cobj[k]
        for y in D.objects:
            if y in used or cprof[x] != dprof[y]:
                continue
            ok = True
            for x2, y2 in omap.items():
                if len(C.hom(x, x2)) != len(D.hom(y, y2)) or len(C.hom(x2, x)) != len(D.hom(y2, y)):
                    ok = False
                    break
            if ok:
                omap[x] = y
                used.add(y)
                yield from assign_objects(k + 1, omap, used)
                del omap[x]
                used.discard(y)

    cmor = [f for f in C.morphisms if not C.is_identity(f)]

    def assign_morphisms(omap):
        mmap = {C.identity[x]: D.identity[omap[x]] for x in cobj}
        used = set(mmap.values())

        def backtrack(k):
            if k == len(cmor):
                return dict(mmap)
            f = cmor[k]
            for g in D.hom(omap[C.dom[f]], omap[C.cod[f]]):
                if g in used or D.is_identity(g):
                    continue
                mmap[f] = g
                used.add(g)
                if _compat(f):
                    result = backtrack(k + 1)
                    if result is not None:
                        return result
                del mmap[f]
                used.discard(g)
            return None

        def _compat(f):
            # check every composition both of whose factors are assigned
            for h in list(mmap):
                if C.dom[h] == C.cod[f]:
                    hf = C.comp[(h, f)]
                    if hf in mmap and D.comp[(mmap[h], mmap[f])] != mmap[hf]:
                        return False
                if C.dom[f] == C.cod[h]:
                    fh = C.comp[(f, h)]
                    if fh in mmap and D.comp[(mmap[f], mmap[h])] != mmap[fh]:
                        return False
            return True

        return backtrack(0)

    for omap in assign_objects(0, {}, set()):
        mmap = assign_morphisms(omap)
        if mmap is not None:
            return Functor(C, D, omap, mmap, name="iso")
    return None


# -- connectivity and (co)limits of shapes --------------------------------


def connected_components(C):
    """Partition of the objects by the undirected graph of morphisms."""
    adj = {o: set() for o in C.objects}
    for f in C.morphisms:
        adj[C.dom[f]].add(C.cod[f])
        adj[C.cod[f]].add(C.dom[f])
    seen = set()
    comps = []
    for o in C.objects:
        if o in seen:
            continue
        comp = []
        queue = deque([o])
        seen.add(o)
        while queue:
            x = queue.popleft()
            comp.append(x)
            for y in sorted(adj[x], key=C.objects.index):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        comps.append(sorted(comp, key=C.objects.index))
    return comps


def final_objects(C):
    """Objects t with exactly one morphism x -> t from every x."""
    return [t for t in C.objects if all(len(C.hom(x, t)) == 1 for x in C.objects)]


def initial_objects(C):
    return [s for s in C.objects if all(len(C.hom(s, x)) == 1 for x in C.objects)]


def full_subcategory(C, objs):
    """Full subcategory on the given objects (order induced from C)."""
    objs = [o for o in C.objects if o in set(objs)]
    oset = set(objs)
    mors = [f for f in C.morphisms if C.dom[f] in oset and C.cod[f] in oset]
    mset = set(mors)
    comp = {k: v for k, v in C.comp.items() if k[0] in mset and k[1] in mset}
    ident = {o: C.identity[o] for o in objs}
    return FinCat(objs, mors, {f: C.dom[f] for f in mors}, {f: C.cod[f] for f in mors},
                  ident, comp, name=C.name and C.name + "|", _validate=False)


def inclusion_functor(C, sub):
    return Functor(sub, C, {o: o for o in sub.objects}, {f: f for f in sub.morphisms},
                   _validate=False)


# -- builders -------------------------------------------------------------


def from_monoid(elements, unit, table, name=""):
    """One-object category from a monoid multiplication table.

    ``table[(a, b)]`` is a*b, read as the composite a∘b.
    """
    obj = "*"
    mors = [(e, obj, obj) for e in elements if e != unit]
    comp = []
    for a in elements:
        for b in elements:
            if a == unit or b == unit:
                continue
            comp.append((a, b, table[(a, b)] if table[(a, b)] != unit else identity_id(obj)))
    # non-identity composites equal to the unit must point at the identity id
    cat = validate_category([obj], mors, comp, name=name)
    return cat


def from_poset(elements, leq, name=""):
    """Poset as a category: one morphism x -> y whenever leq(x, y)."""
    mors = []
    for x in elements:
        for y in elements:
            if x != y and leq(x, y):
                mors.append(("%s<=%s" % (x, y), x, y))
    comp = []
    for m2, y1, z in mors:
        for m1, x, y2 in mors:
            if y2 == y1:
                comp.append((m2, m1, "%s<=%s" % (x, z)))
    return validate_category(elements, mors, comp, name=name)


def disjoint_union(C, D, tags=("0", "1"), name=""):
    ta, tb = tags

    def t0(x):
        return "%s:%s" % (ta, x)

    def t1(x):
        return "%s:%s" % (tb, x)

    objs = [t0(o) for o in C.objects] + [t1(o) for o in D.objects]
    mors = []
    for f in C.morphisms:
        if not C.is_identity(f):
            mors.append((t0(f), t0(C.dom[f]), t0(C.cod[f])))
    for f in D.morphisms:
        if not D.is_identity(f):
            mors.append((t1(f), t1(D.dom[f]), t1(D.cod[f])))
    comp = []
    for (g, f), h in C.comp.items():
        if not C.is_identity(g) and not C.is_identity(f) and not C.is_identity(h):
            comp.append((t0(g), t0(f), t0(h)))
        elif not C.is_identity(g) and not C.is_identity(f) and C.is_identity(h):
            comp.append((t0(g), t0(f), identity_id(t0(C.dom[h]))))
    for (g, f), h in D.comp.items():
        if not D.is_identity(g) and not D.is_identity(f) and not D.is_identity(h):
            comp.append((t1(g), t1(f), t1(h)))
        elif not D.is_identity(g) and not D.is_identity(f) and D.is_identity(h):
            comp.append((t1(g), t1(f), identity_id(t1(D.dom[h]))))
    return validate_category(objs, mors, comp, name=name)


# -- nerve chains ---------------------------------------------------------


def composable_chains(C, n, nondegenerate=False):
    """Length-n chains of composable morphisms, lexicographic in the
    canonical morphism order.  Degree 0 gives the objects.

    A chain is degenerate when some entry is an identity.
    """
    if n == 0:
        return list(C.objects)
    pool = [f for f in C.morphisms if not (nondegenerate and C.is_identity(f))]
    chains = [(f,) for f in pool]
    for _ in range(n - 1):
        nxt = []
        for ch in chains:
            last = ch[-1]
            for f in pool:
                if C.dom[f] == C.cod[last]:
                    nxt.append(ch + (f,))
        chains = nxt
    return chains


def chain_origin(C, chain):
    if isinstance(chain, str):
        return chain
    return C.dom[chain[0]]


def chain_face(C, chain, i):
    """Nerve face: drop or compose; degree-1 faces yield the object."""
    n = len(chain)
    if isinstance(chain, str) or n == 0:
        raise ValueError("no faces in degree 0")
    if n == 1:
        return C.cod[chain[0]] if i == 0 else C.dom[chain[0]]
    if i == 0:
        return chain[1:]
    if i == n:
        return chain[:-1]
    return chain[: i - 1] + (C.comp[(chain[i], chain[i - 1])],) + chain[i + 1 :]


def chain_degeneracy(C, chain, i):
    """Nerve degeneracy: insert an identity at position i."""
    if isinstance(chain, str):
        if i != 0:
            raise ValueError("degree-0 chains only have s_0")
        return (C.identity[chain],)
    n = len(chain)
    if i == 0:
        return (C.identity[C.dom[chain[0]]],) + chain
    return chain[:i] + (C.identity[C.cod[chain[i - 1]]],) + chain[i:]


def chain_is_degenerate(C, chain):
    if isinstance(chain, str):
        return False
    return any(C.is_identity(f) for f in chain)
