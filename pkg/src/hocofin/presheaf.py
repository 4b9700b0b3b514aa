"""Truncated simplicial sets and finite presheaves.

A TruncSSet stores every simplex up to a truncation level, including the
degenerate ones, with explicit face and degeneracy tables; the simplicial
identities are verified wherever both sides exist.  Homology is reported
only for degrees the truncation determines exactly, and the fundamental
group needs level >= 2 -- asking for more is an error, never a silently
wrong answer.
"""

from __future__ import annotations

from collections import deque

from . import fincat
from .homalg import AbMap, ChainComplex, FGAb, IntMatrix
from .groups import GroupPresentation


class PresheafError(Exception):
    pass


class LevelTooLow(PresheafError):
    pass


class NotConnected(PresheafError):
    pass


class NaturalityViolation(PresheafError):
    pass


class TruncSSet:
    """Level-N truncated simplicial set.

    ``simplices[n]`` lists the degree-n simplices in canonical order;
    ``faces[(n, i)]`` and ``degeneracies[(n, i)]`` are total maps on them.
    Simplex ids may be any hashable value.
    """

    __slots__ = ("level", "simplices", "faces", "degeneracies", "basepoint", "_degenerate")

    def __init__(self, level, simplices, faces, degeneracies, basepoint=None, _validate=True):
        self.level = level
        self.simplices = [list(xs) for xs in simplices]
        if len(self.simplices) != level + 1:
            raise PresheafError("need one simplex list per degree 0..N")
        self.faces = {k: dict(v) for k, v in faces.items()}
        self.degeneracies = {k: dict(v) for k, v in degeneracies.items()}
        self.basepoint = basepoint
        self._degenerate = None
        if _validate:
            self._check()

    # -- structure ------------------------------------------------------

    def face(self, n, i, x):
        return self.faces[(n, i)][x]

    def degeneracy(self, n, i, x):
        return self.degeneracies[(n, i)][x]

    def degenerate_set(self, n):
        """Simplices of degree n in the image of some degeneracy."""
        if self._degenerate is None:
            self._degenerate = [set() for _ in range(self.level + 1)]
            for n_ in range(1, self.level + 1):
                for i in range(n_):
                    self._degenerate[n_].update(self.degeneracies[(n_ - 1, i)].values())
        return self._degenerate[n]

    def nondegenerate(self, n):
        deg = self.degenerate_set(n)
        return [x for x in self.simplices[n] if x not in deg]

    def base_degeneracy(self, n):
        """The degree-n degeneracy of the basepoint (the basepoint itself
        in degree 0)."""
        if self.basepoint is None:
            raise PresheafError("simplicial set is not pointed")
        x = self.basepoint
        for m in range(n):
            x = self.degeneracies[(m, 0)][x]
        return x

    def _check(self):
        N = self.level
        sets = [set(xs) for xs in self.simplices]
        if any(len(s) != len(xs) for s, xs in zip(sets, self.simplices)):
            raise PresheafError("duplicate simplex ids in one degree")
        if self.basepoint is not None and self.basepoint not in sets[0]:
            raise PresheafError("basepoint is not a vertex")
        for n in range(1, N + 1):
            for i in range(n + 1):
                table = self.faces.get((n, i))
                if table is None or set(table) != sets[n]:
                    raise PresheafError("face (%d, %d) is not total" % (n, i))
                if any(v not in sets[n - 1] for v in table.values()):
                    raise PresheafError("face (%d, %d) leaves the simplicial set" % (n, i))
        for n in range(N):
            for i in range(n + 1):
                table = self.degeneracies.get((n, i))
                if table is None or set(table) != sets[n]:
                    raise PresheafError("degeneracy (%d, %d) is not total" % (n, i))
                if any(v not in sets[n + 1] for v in table.values()):
                    raise PresheafError("degeneracy (%d, %d) leaves the simplicial set" % (n, i))
        # simplicial identities, wherever both sides are defined
        for n in range(2, N + 1):
            for j in range(n + 1):
                for i in range(j):
                    for x in self.simplices[n]:
                        lhs = self.face(n - 1, i, self.face(n, j, x))
                        rhs = self.face(n - 1, j - 1, self.face(n, i, x))
                        if lhs != rhs:
                            raise PresheafError("d_i d_j identity fails at %r" % (x,))
        for n in range(N - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    for x in self.simplices[n]:
                        lhs = self.degeneracy(n + 1, i, self.degeneracy(n, j, x))
                        rhs = self.degeneracy(n + 1, j + 1, self.degeneracy(n, i, x))
                        if lhs != rhs:
                            raise PresheafError("s_i s_j identity fails at %r" % (x,))
        for n in range(N):
            for j in range(n + 1):
                for i in range(n + 2):
                    for x in self.simplices[n]:
                        sx = self.degeneracy(n, j, x)
                        got = self.face(n + 1, i, sx)
                        if i in (j, j + 1):
                            want = x
                        elif i < j:
                            # i < j forces n >= 1
                            want = self.degeneracy(n - 1, j - 1, self.face(n, i, x))
                        else:
                            # i > j + 1 forces n >= 1
                            want = self.degeneracy(n - 1, j, self.face(n, i - 1, x))
                        if got != want:
                            raise PresheafError("d_i s_j identity fails at %r" % (x,))

    def __repr__(self):
        counts = ",".join(str(len(xs)) for xs in self.simplices)
        return "TruncSSet(level %d; %s)" % (self.level, counts)


class SSetMap:
    """Simplicial map between truncated simplicial sets of the same level."""

    __slots__ = ("source", "target", "mapping")

    def __init__(self, source, target, mapping, pointed=False, _validate=True):
        self.source = source
        self.target = target
        self.mapping = [dict(m) for m in mapping]
        if _validate:
            self._check(pointed)

    def _check(self, pointed):
        X, Y = self.source, self.target
        if X.level != Y.level or len(self.mapping) != X.level + 1:
            raise PresheafError("level mismatch in simplicial map")
        for n in range(X.level + 1):
            for x in X.simplices[n]:
                if self.mapping[n].get(x) not in set(Y.simplices[n]):
                    raise PresheafError("map not total in degree %d" % n)
        for n in range(1, X.level + 1):
            for i in range(n + 1):
                for x in X.simplices[n]:
                    if self.mapping[n - 1][X.face(n, i, x)] != Y.face(n, i, self.mapping[n][x]):
                        raise PresheafError("map does not commute with d_%d" % i)
        for n in range(X.level):
            for i in range(n + 1):
                for x in X.simplices[n]:
                    if self.mapping[n + 1][X.degeneracy(n, i, x)] != Y.degeneracy(
                        n, i, self.mapping[n][x]
                    ):
                        raise PresheafError("map does not commute with s_%d" % i)
        if pointed:
            if X.basepoint is None or Y.basepoint is None:
                raise PresheafError("pointed map between unpointed simplicial sets")
            if self.mapping[0][X.basepoint] != Y.basepoint:
                raise PresheafError("map does not preserve the basepoint")

    def apply(self, n, x):
        return self.mapping[n][x]

    def compose(self, other):
        return SSetMap(
            other.source,
            self.target,
            [
                {x: self.mapping[n][other.mapping[n][x]] for x in other.source.simplices[n]}
                for n in range(other.source.level + 1)
            ],
            _validate=False,
        )

    @classmethod
    def identity(cls, X):
        return cls(X, X, [{x: x for x in X.simplices[n]} for n in range(X.level + 1)],
                   _validate=False)


def nerve(C, N, basepoint=None):
    """Nerve of a finite category, truncated at level N.

    Degree-n simplices are length-n chains of composable morphisms
    (identities allowed); nondegenerate chains contain no identity.
    """
    simplices = [fincat.composable_chains(C, n) for n in range(N + 1)]
    faces = {}
    degens = {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            faces[(n, i)] = {ch: fincat.chain_face(C, ch, i) for ch in simplices[n]}
    for n in range(N):
        for i in range(n + 1):
            degens[(n, i)] = {ch: fincat.chain_degeneracy(C, ch, i) for ch in simplices[n]}
    return TruncSSet(N, simplices, faces, degens, basepoint=basepoint)


def standard_simplex(k, N, basepoint=None):
    """Delta[k] truncated at level N: degree-n simplices are nondecreasing
    (n+1)-tuples in {0..k}."""
    import itertools

    simplices = [
        [t for t in itertools.combinations_with_replacement(range(k + 1), n + 1)]
        for n in range(N + 1)
    ]
    faces = {}
    degens = {}
    for n in range(1, N + 1):
        for i in range(n + 1):
            faces[(n, i)] = {t: t[:i] + t[i + 1 :] for t in simplices[n]}
    for n in range(N):
        for i in range(n + 1):
            degens[(n, i)] = {t: t[: i + 1] + t[i:] for t in simplices[n]}
    if basepoint is not None:
        basepoint = (basepoint,)
    return TruncSSet(N, simplices, faces, degens, basepoint=basepoint)


# -- D-sets ----------------------------------------------------------------


class DSet:
    """Finite presheaf of sets over a finite category.

    ``maps[alpha]`` (for alpha: b -> a) sends X(a) to X(b); identity maps
    are synthesized; contravariant functoriality is checked exhaustively.
    """

    __slots__ = ("base", "sets", "maps", "name")

    def __init__(self, base, sets, maps, name="", _validate=True):
        self.base = base
        self.sets = {o: list(v) for o, v in sets.items()}
        self.maps = {m: dict(v) for m, v in maps.items()}
        self.name = name
        for o in base.objects:
            if o not in self.sets:
                self.sets[o] = []
        for o in base.objects:
            self.maps[base.identity[o]] = {x: x for x in self.sets[o]}
        if _validate:
            self._check()

    def _check(self):
        B = self.base
        for f in B.morphisms:
            table = self.maps.get(f)
            if table is None:
                raise PresheafError("presheaf misses the action of %s" % f)
            src = set(self.sets[B.cod[f]])
            dst = set(self.sets[B.dom[f]])
            if set(table) != src or any(v not in dst for v in table.values()):
                raise PresheafError("action of %s is not a map X(%s) -> X(%s)" % (f, B.cod[f], B.dom[f]))
        for g, f in B.composable_pairs():
            h = B.comp[(g, f)]
            for x in self.sets[B.cod[g]]:
                if self.maps[h][x] != self.maps[f][self.maps[g][x]]:
                    raise PresheafError("contravariance fails at (%s, %s)" % (g, f))

    def apply(self, alpha, x):
        return self.maps[alpha][x]

    def is_empty(self):
        return all(not v for v in self.sets.values())

    def __repr__(self):
        return "DSet(%s over %s)" % (self.name or "?", self.base.name or "?")


class DSetMorphism:
    """Natural transformation of presheaves over the same base."""

    __slots__ = ("source", "target", "components")

    def __init__(self, source, target, components, _validate=True):
        if source.base is not target.base and source.base != target.base:
            raise PresheafError("presheaf morphism needs a common base")
        self.source = source
        self.target = target
        self.components = {o: dict(c) for o, c in components.items()}
        if _validate:
            self._check()

    def _check(self):
        B = self.source.base
        for o in B.objects:
            comp = self.components.get(o, {})
            if set(comp) != set(self.source.sets[o]):
                raise NaturalityViolation("component at %s is not total" % o)
            if any(v not in set(self.target.sets[o]) for v in comp.values()):
                raise NaturalityViolation("component at %s leaves the target" % o)
        for alpha in B.morphisms:
            a, b = B.cod[alpha], B.dom[alpha]
            for x in self.source.sets[a]:
                lhs = self.components[b][self.source.apply(alpha, x)]
                rhs = self.target.apply(alpha, self.components[a][x])
                if lhs != rhs:
                    raise NaturalityViolation("naturality fails at %s" % alpha)

    def at(self, o, x):
        return self.components[o][x]


def representable(D, d, name=None):
    """The presheaf h_d = Hom(-, d)."""
    sets = {a: list(D.hom(a, d)) for a in D.objects}
    maps = {}
    for beta in D.morphisms:
        a, b = D.cod[beta], D.dom[beta]
        maps[beta] = {alpha: D.comp[(alpha, beta)] for alpha in sets[a]}
    return DSet(D, sets, maps, name=name or "h_%s" % d)


def constant_singleton(D, name="pt"):
    sets = {a: ["*"] for a in D.objects}
    maps = {m: {"*": "*"} for m in D.morphisms}
    return DSet(D, sets, maps, name=name)


def empty_dset(D, name="empty"):
    return DSet(D, {a: [] for a in D.objects}, {m: {} for m in D.morphisms}, name=name)


def dset_disjoint_union(X, Y, tags=("0", "1"), name=""):
    ta, tb = tags
    B = X.base
    sets = {
        o: ["%s:%s" % (ta, x) for x in X.sets[o]] + ["%s:%s" % (tb, y) for y in Y.sets[o]]
        for o in B.objects
    }
    maps = {}
    for m in B.morphisms:
        table = {}
        for x, v in X.maps[m].items():
            table["%s:%s" % (ta, x)] = "%s:%s" % (ta, v)
        for y, v in Y.maps[m].items():
            table["%s:%s" % (tb, y)] = "%s:%s" % (tb, v)
        maps[m] = table
    return DSet(B, sets, maps, name=name or "%s+%s" % (X.name, Y.name))


def elements(X):
    """Category of elements of a presheaf, with its projection.

    Objects are pairs (d, x in X(d)); a morphism (d, x) -> (d', x') is
    alpha: d -> d' with X(alpha)(x') = x.
    """
    cat, proj, _ = elements_with_parts(X)
    return cat, proj


def elements_with_parts(X):
    """Like elements, but also returns the map object id -> (d, x)."""
    D = X.base
    objs = []
    parts = {}
    for d in D.objects:
        for x in X.sets[d]:
            oid = "(%s|%s)" % (d, x)
            objs.append(oid)
            parts[oid] = (d, x)
    mors = []
    mor_alpha = {}
    for o1 in objs:
        d1, x1 = parts[o1]
        for o2 in objs:
            d2, x2 = parts[o2]
            for alpha in D.hom(d1, d2):
                if D.is_identity(alpha) and o1 == o2:
                    continue
                if X.apply(alpha, x2) == x1:
                    mid = "[%s:%s->%s]" % (alpha, o1, o2)
                    mors.append((mid, o1, o2))
                    mor_alpha[mid] = alpha
    comp = []
    for m1, s1, t1 in mors:
        for m2, s2, t2 in mors:
            if s2 == t1:
                a = D.comp[(mor_alpha[m2], mor_alpha[m1])]
                if D.is_identity(a) and s1 == t2:
                    comp.append((m2, m1, fincat.identity_id(s1)))
                else:
                    comp.append((m2, m1, "[%s:%s->%s]" % (a, s1, t2)))
    cat = fincat.validate_category(objs, mors, comp, name="el(%s)" % (X.name or "?"))
    obj_map = {o: parts[o][0] for o in objs}
    mor_map = {}
    for o in objs:
        mor_map[cat.identity[o]] = D.identity[parts[o][0]]
    for mid, _, _ in mors:
        mor_map[mid] = mor_alpha[mid]
    proj = fincat.Functor(cat, D, obj_map, mor_map, name="Q_X")
    return cat, proj, parts


def inverse_fibre(f, d, y):
    """Pullback of a presheaf morphism against the representable at d,
    taken over the element y in Y(d); computed elementwise."""
    X, Y = f.source, f.target
    D = X.base
    if d not in D.identity:
        raise fincat.UnknownObject("unknown object %s" % d)
    if y not in set(Y.sets[d]):
        raise PresheafError("element %s is not in Y(%s)" % (y, d))
    sets = {}
    parts = {}
    for a in D.objects:
        items = []
        for x in X.sets[a]:
            for alpha in D.hom(a, d):
                if f.at(a, x) == Y.apply(alpha, y):
                    eid = "(%s|%s)" % (x, alpha)
                    items.append(eid)
                    parts[(a, eid)] = (x, alpha)
        sets[a] = items
    maps = {}
    for beta in D.morphisms:
        a, b = D.cod[beta], D.dom[beta]
        table = {}
        for eid in sets[a]:
            x, alpha = parts[(a, eid)]
            table[eid] = "(%s|%s)" % (X.apply(beta, x), D.comp[(alpha, beta)])
        maps[beta] = table
    return DSet(D, sets, maps, name="fibre(%s@%s)" % (y, d))


# -- invariants -------------------------------------------------------------


def normalized_chain_complex(X, n_max):
    """Normalized chains: free abelian on nondegenerate simplices; a face
    landing on a degenerate simplex contributes zero."""
    if X.level < n_max + 1:
        raise LevelTooLow("need level >= %d, have %d" % (n_max + 1, X.level))
    basis = {n: X.nondegenerate(n) for n in range(n_max + 2)}
    index = {n: {x: i for i, x in enumerate(basis[n])} for n in basis}
    groups = {-1: FGAb.trivial()}
    for n in range(n_max + 2):
        groups[n] = FGAb.free(len(basis[n]))
    boundaries = {0: AbMap.zero(groups[0], groups[-1])}
    for n in range(1, n_max + 2):
        rows = len(basis[n - 1])
        cols = len(basis[n])
        M = [[0] * cols for _ in range(rows)]
        for j, x in enumerate(basis[n]):
            for i in range(n + 1):
                y = X.face(n, i, x)
                r = index[n - 1].get(y)
                if r is not None:
                    M[r][j] += -1 if i % 2 else 1
        boundaries[n] = AbMap(groups[n], groups[n - 1], IntMatrix(M, (rows, cols)), check=False)
    return ChainComplex(groups, boundaries)


def homology_ss(X, n_max):
    """H_0..H_{n_max} of the normalized chain complex."""
    K = normalized_chain_complex(X, n_max)
    return [K.homology(n) for n in range(n_max + 1)]


def vertex_components(X):
    """Vertex partition under the (undirected) 1-skeleton."""
    adj = {v: set() for v in X.simplices[0]}
    if X.level >= 1:
        for e in X.simplices[1]:
            a = X.face(1, 1, e)
            b = X.face(1, 0, e)
            adj[a].add(b)
            adj[b].add(a)
    seen = set()
    comps = []
    order = {v: i for i, v in enumerate(X.simplices[0])}
    for v in X.simplices[0]:
        if v in seen:
            continue
        comp = []
        queue = deque([v])
        seen.add(v)
        while queue:
            w = queue.popleft()
            comp.append(w)
            for u in sorted(adj[w], key=order.get):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        comps.append(comp)
    return comps


def edge_path_group(X):
    """Edge-path presentation of the fundamental group of a pointed,
    connected simplicial set of level >= 2.

    Generators are the nondegenerate edges; a BFS spanning tree from the
    basepoint (lexicographic edge order) is killed, and every
    nondegenerate 2-simplex sigma imposes d_1(sigma) = d_0(sigma)·d_2(sigma),
    with degenerate edges read as the unit.
    """
    if X.level < 2:
        raise LevelTooLow("fundamental group needs level >= 2")
    if X.basepoint is None:
        raise PresheafError("fundamental group needs a basepoint")
    comps = vertex_components(X)
    if len(comps) != 1:
        raise NotConnected("simplicial set is not connected")
    edges = X.nondegenerate(1)
    eidx = {e: i for i, e in enumerate(edges)}
    gens = ["g%d" % i for i in range(len(edges))]
    # BFS spanning tree from the basepoint, edges scanned in canonical order
    tree = set()
    reached = {X.basepoint}
    frontier = deque([X.basepoint])
    incident = {}
    for e in edges:
        incident.setdefault(X.face(1, 1, e), []).append(e)
        incident.setdefault(X.face(1, 0, e), []).append(e)
    while frontier:
        v = frontier.popleft()
        for e in incident.get(v, []):
            a, b = X.face(1, 1, e), X.face(1, 0, e)
            other = b if a == v else a
            if other not in reached:
                reached.add(other)
                tree.add(e)
                frontier.append(other)
    relators = [((gens[eidx[e]], 1),) for e in sorted(tree, key=eidx.get)]
    degen1 = X.degenerate_set(1)

    def gen_word(e, exp):
        if e in degen1:
            return ()
        return ((gens[eidx[e]], exp),)

    for s in X.nondegenerate(2):
        d0 = X.face(2, 0, s)
        d1 = X.face(2, 1, s)
        d2 = X.face(2, 2, s)
        rel = gen_word(d1, -1) + gen_word(d0, 1) + gen_word(d2, 1)
        if rel:
            relators.append(rel)
    return GroupPresentation(gens, relators)
