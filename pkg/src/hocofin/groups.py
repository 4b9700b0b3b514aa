"""Finite groups, free products, presentations, and fingerprints.

Isomorphism of finitely presented groups is undecidable, so comparisons
go through an isomorphism-invariant *fingerprint*: the vector of
homomorphism counts into every group of order <= 8 (14 isomorphism
classes).  Equal fingerprints are reported as "indistinguishable", never
as "isomorphic".
"""

from __future__ import annotations

import itertools

from .homalg import FGAb, IntMatrix


class GroupError(Exception):
    pass


class UnknownLabel(GroupError):
    pass


class BudgetExceeded(GroupError):
    pass


class FinGroup:
    """Finite group given by a full multiplication table.

    ``table[(a, b)]`` is the product a*b; the group axioms are verified
    exhaustively at construction.
    """

    __slots__ = ("elements", "unit", "table", "inv", "name")

    def __init__(self, elements, unit, table, name=""):
        self.elements = list(elements)
        self.unit = unit
        self.table = dict(table)
        self.name = name
        if unit not in self.elements:
            raise GroupError("unit is not an element")
        eset = set(self.elements)
        if len(eset) != len(self.elements):
            raise GroupError("duplicate elements")
        for a in self.elements:
            for b in self.elements:
                c = self.table.get((a, b))
                if c not in eset:
                    raise GroupError("table is not closed at (%s, %s)" % (a, b))
        for a in self.elements:
            if self.table[(self.unit, a)] != a or self.table[(a, self.unit)] != a:
                raise GroupError("unit law fails at %s" % a)
        for a in self.elements:
            for b in self.elements:
                for c in self.elements:
                    if self.table[(self.table[(a, b)], c)] != self.table[(a, self.table[(b, c)])]:
                        raise GroupError("associativity fails at (%s, %s, %s)" % (a, b, c))
        self.inv = {}
        for a in self.elements:
            for b in self.elements:
                if self.table[(a, b)] == self.unit:
                    self.inv[a] = b
            if a not in self.inv:
                raise GroupError("no inverse for %s" % a)

    def mul(self, a, b):
        return self.table[(a, b)]

    def order(self):
        return len(self.elements)

    def is_abelian(self):
        return all(
            self.table[(a, b)] == self.table[(b, a)]
            for a in self.elements
            for b in self.elements
        )

    def element_orders(self):
        out = []
        for a in self.elements:
            x, n = a, 1
            while x != self.unit:
                x = self.table[(x, a)]
                n += 1
            out.append(n)
        return sorted(out)

    def __repr__(self):
        return "FinGroup(%s, order %d)" % (self.name or "?", len(self.elements))


def cyclic_group(n, name=None):
    els = [str(i) for i in range(n)]
    table = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    return FinGroup(els, "0", table, name=name or "Z%d" % n)


def trivial_group():
    return cyclic_group(1, name="1")


def product_group(G, H, name=""):
    els = ["%s,%s" % (a, b) for a in G.elements for b in H.elements]
    table = {}
    for a1 in G.elements:
        for b1 in H.elements:
            for a2 in G.elements:
                for b2 in H.elements:
                    table[("%s,%s" % (a1, b1), "%s,%s" % (a2, b2))] = "%s,%s" % (
                        G.table[(a1, a2)],
                        H.table[(b1, b2)],
                    )
    return FinGroup(els, "%s,%s" % (G.unit, H.unit), table, name=name or "%sx%s" % (G.name, H.name))


def symmetric_group_3():
    perms = list(itertools.permutations((0, 1, 2)))

    def pname(p):
        return "".join(map(str, p))

    table = {}
    for p in perms:
        for q in perms:
            pq = tuple(p[q[i]] for i in range(3))  # apply q first, then p
            table[(pname(p), pname(q))] = pname(pq)
    return FinGroup([pname(p) for p in perms], "012", table, name="S3")


def dihedral_group_4():
    # symmetries of the square: r^i s^j with s r s = r^-1
    els = ["r%ds%d" % (i, j) for j in range(2) for i in range(4)]

    def mul(x, y):
        i1, j1 = int(x[1]), int(x[3])
        i2, j2 = int(y[1]), int(y[3])
        # (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + i2*(-1)^j1) s^(j1+j2)
        i = (i1 + (i2 if j1 == 0 else -i2)) % 4
        return "r%ds%d" % (i, (j1 + j2) % 2)

    table = {(x, y): mul(x, y) for x in els for y in els}
    return FinGroup(els, "r0s0", table, name="D4")


def quaternion_group():
    els = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {
        ("i", "i"): "-1", ("j", "j"): "-1", ("k", "k"): "-1",
        ("i", "j"): "k", ("j", "k"): "i", ("k", "i"): "j",
        ("j", "i"): "-k", ("k", "j"): "-i", ("i", "k"): "-j",
    }

    def split(x):
        return (-1 if x.startswith("-") else 1, x.lstrip("-"))

    def mul(x, y):
        sx, cx = split(x)
        sy, cy = split(y)
        s = sx * sy
        if cx == "1":
            s, c = s, cy
        elif cy == "1":
            s, c = s, cx
        else:
            sz, cz = split(base[(cx, cy)])
            s, c = s * sz, cz
        return ("-" if s < 0 else "") + c

    table = {(x, y): mul(x, y) for x in els for y in els}
    return FinGroup(els, "1", table, name="Q8")


_CATALOG = None


def catalog():
    """The 14 isomorphism classes of groups of order <= 8, in a fixed order.

    Order 8 has exactly five classes (three abelian, plus the dihedral and
    quaternion groups); lower orders are cyclic except for V4 and S3.
    """
    global _CATALOG
    if _CATALOG is None:
        z2 = cyclic_group(2)
        z4 = cyclic_group(4)
        _CATALOG = [
            trivial_group(),
            z2,
            cyclic_group(3),
            z4,
            product_group(z2, z2, name="V4"),
            cyclic_group(5),
            cyclic_group(6),
            symmetric_group_3(),
            cyclic_group(7),
            cyclic_group(8),
            product_group(z4, z2, name="Z4xZ2"),
            product_group(product_group(z2, z2), z2, name="Z2^3"),
            dihedral_group_4(),
            quaternion_group(),
        ]
    return _CATALOG


def enumerate_group_tables(n):
    """All group tables on {0..n-1} with unit 0, up to isomorphism.

    Backtracking over the multiplication table with row/column (latin
    square) constraints and incremental associativity pruning; practical
    for n <= 6.  Used as the completeness oracle for the catalog.
    """
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    table = [[None] * n for _ in range(n)]
    for k in range(n):
        table[0][k] = k
        table[k][0] = k
    found = []

    def consistent(i, j):
        # check all triples whose products are already known
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                if ab is None:
                    continue
                for c in range(n):
                    bc = table[b][c]
                    if bc is None:
                        continue
                    lhs = table[ab][c]
                    rhs = table[a][bc]
                    if lhs is not None and rhs is not None and lhs != rhs:
                        return False
        return True

    def place(k):
        if k == len(cells):
            els = [str(x) for x in range(n)]
            t = {(str(i), str(j)): str(table[i][j]) for i in range(n) for j in range(n)}
            G = FinGroup(els, "0", t)
            if not any(_tables_isomorphic(G, H) for H in found):
                found.append(G)
            return
        i, j = cells[k]
        used_row = {table[i][c] for c in range(n) if table[i][c] is not None}
        used_col = {table[r][j] for r in range(n) if table[r][j] is not None}
        for v in range(n):
            if v in used_row or v in used_col:
                continue
            table[i][j] = v
            if consistent(i, j):
                place(k + 1)
            table[i][j] = None

    place(0)
    return found


def _tables_isomorphic(G, H):
    if G.order() != H.order():
        return False
    if G.element_orders() != H.element_orders():
        return False
    n = G.order()
    g_els = [e for e in G.elements if e != G.unit]
    h_els = [e for e in H.elements if e != H.unit]

    def backtrack(k, mapping):
        if k == len(g_els):
            return True
        a = g_els[k]
        for b in h_els:
            if b in mapping.values():
                continue
            mapping[a] = b
            ok = True
            for x in list(mapping):
                xa = G.table[(x, a)]
                ax = G.table[(a, x)]
                if xa in mapping or xa == G.unit:
                    img = H.unit if xa == G.unit else mapping.get(xa)
                    if img is not None and H.table[(mapping[x], b)] != img:
                        ok = False
                        break
                if ax in mapping or ax == G.unit:
                    img = H.unit if ax == G.unit else mapping.get(ax)
                    if img is not None and H.table[(b, mapping[x])] != img:
                        ok = False
                        break
            if ok and backtrack(k + 1, mapping):
                return True
            del mapping[a]
        return False

    return backtrack(0, {})


# -- free products ---------------------------------------------------------


class FreeProduct:
    """Free product of finite groups, with elements stored as reduced words.

    A word is a tuple of (label, element) letters: no unit letters, and no
    two consecutive letters with the same label.  The empty word is the
    unit, so equality is syntactic.

    >>> fp = FreeProduct([("A", cyclic_group(2))])
    >>> fp.multiply((("A", "1"),), (("A", "1"),))
    ()
    """

    __slots__ = ("factors", "fmap", "name")

    def __init__(self, factors, name=""):
        self.factors = [(str(lbl), G) for lbl, G in factors]
        self.fmap = dict(self.factors)
        if len(self.fmap) != len(self.factors):
            raise GroupError("duplicate factor labels")
        self.name = name

    @classmethod
    def from_group(cls, label, G):
        return cls([(label, G)], name=G.name)

    @classmethod
    def trivial(cls):
        return cls([], name="1")

    def unit(self):
        return ()

    def letter(self, label, elem):
        G = self.fmap.get(label)
        if G is None:
            raise UnknownLabel("unknown factor label %s" % label)
        if elem not in set(G.elements):
            raise UnknownLabel("unknown element %s in factor %s" % (elem, label))
        if elem == G.unit:
            return ()
        return ((label, elem),)

    def reduce(self, letters):
        """Reduce a letter sequence to normal form.

        Reduction is confluent: adjacent same-label letters multiply in the
        factor and unit letters drop, so any reduction order gives the same
        word.
        """
        out = []
        for lbl, el in letters:
            G = self.fmap.get(lbl)
            if G is None:
                raise UnknownLabel("unknown factor label %s" % lbl)
            if el == G.unit:
                continue
            if out and out[-1][0] == lbl:
                merged = G.table[(out[-1][1], el)]
                out.pop()
                if merged != G.unit:
                    out.append((lbl, merged))
            else:
                out.append((lbl, el))
        return tuple(out)

    def multiply(self, w1, w2):
        return self.reduce(tuple(w1) + tuple(w2))

    def invert(self, w):
        return tuple((lbl, self.fmap[lbl].inv[el]) for lbl, el in reversed(tuple(w)))

    def nontrivial_factors(self):
        return [(lbl, G) for lbl, G in self.factors if G.order() > 1]

    def element_count(self):
        """Number of reduced words, or None when infinite."""
        nt = self.nontrivial_factors()
        if not nt:
            return 1
        if len(nt) == 1:
            return nt[0][1].order()
        return None

    def elements(self, cap=100000):
        """All reduced words when the free product is a finite group."""
        count = self.element_count()
        if count is None or count > cap:
            raise BudgetExceeded("free product has too many (or infinitely many) elements")
        nt = self.nontrivial_factors()
        if not nt:
            return [()]
        lbl, G = nt[0]
        return [()] + [((lbl, e),) for e in G.elements if e != G.unit]

    def as_table_group(self, name=""):
        """Convert to a FinGroup when at most one factor is nontrivial."""
        if self.element_count() is None:
            raise BudgetExceeded("free product is infinite")
        els = self.elements()
        keys = ["|".join("%s.%s" % l for l in w) or "1" for w in els]
        by_word = dict(zip(keys, els))
        table = {}
        for k1, w1 in by_word.items():
            for k2, w2 in by_word.items():
                prod = self.multiply(w1, w2)
                table[(k1, k2)] = "|".join("%s.%s" % l for l in prod) or "1"
        return FinGroup(keys, "1", table, name=name or self.name)

    def __repr__(self):
        return "FreeProduct(%s)" % " * ".join(
            "%s:%s" % (lbl, G.name or G.order()) for lbl, G in self.factors
        ) if self.factors else "FreeProduct(1)"


class GroupHom:
    """Homomorphism between free products, given factorwise.

    ``per_factor[label][element]`` is a word of the target; each factor map
    is checked to be multiplicative on the whole (finite) factor.
    """

    __slots__ = ("source", "target", "per_factor")

    def __init__(self, source, target, per_factor, _validate=True):
        self.source = source
        self.target = target
        self.per_factor = {
            lbl: {el: target.reduce(w) for el, w in table.items()}
            for lbl, table in per_factor.items()
        }
        if _validate:
            self._check()

    def _check(self):
        for lbl, G in self.source.factors:
            table = self.per_factor.get(lbl)
            if table is None:
                raise UnknownLabel("no map for factor %s" % lbl)
            for el in G.elements:
                if el not in table:
                    raise UnknownLabel("factor %s misses element %s" % (lbl, el))
            if table[G.unit] != ():
                raise GroupError("factor %s does not send the unit to the unit" % lbl)
            for a in G.elements:
                for b in G.elements:
                    lhs = table[G.table[(a, b)]]
                    rhs = self.target.multiply(table[a], table[b])
                    if lhs != rhs:
                        raise GroupError(
                            "factor map %s is not multiplicative at (%s, %s)" % (lbl, a, b)
                        )

    @classmethod
    def identity(cls, fp):
        return cls(
            fp,
            fp,
            {lbl: {el: fp.letter(lbl, el) for el in G.elements} for lbl, G in fp.factors},
            _validate=False,
        )

    def apply(self, word):
        letters = []
        for lbl, el in word:
            table = self.per_factor.get(lbl)
            if table is None:
                raise UnknownLabel("unknown factor label %s" % lbl)
            letters.extend(table[el])
        return self.target.reduce(letters)

    def compose(self, other):
        """self after other."""
        per = {
            lbl: {el: self.apply(w) for el, w in table.items()}
            for lbl, table in other.per_factor.items()
        }
        return GroupHom(other.source, self.target, per, _validate=False)

    def equals(self, other):
        if set(self.per_factor) != set(other.per_factor):
            return False
        return all(
            self.per_factor[lbl] == other.per_factor[lbl] for lbl in self.per_factor
        )


# -- presentations ---------------------------------------------------------


GEN_INVERSE_SUFFIX = "!"


class GroupPresentation:
    """Generators and relators; a relator is a tuple of (generator, ±1)."""

    __slots__ = ("generators", "relators")

    def __init__(self, generators, relators):
        self.generators = list(generators)
        gset = set(self.generators)
        if len(gset) != len(self.generators):
            raise GroupError("duplicate generators")
        rels = []
        for rel in relators:
            w = []
            for item in rel:
                if isinstance(item, str):
                    if item.endswith(GEN_INVERSE_SUFFIX):
                        g, e = item[:-1], -1
                    else:
                        g, e = item, 1
                else:
                    g, e = item
                if g not in gset:
                    raise GroupError("relator references unknown generator %s" % g)
                if e not in (1, -1):
                    raise GroupError("letter exponent must be ±1")
                w.append((g, e))
            rels.append(tuple(w))
        self.relators = rels

    def relator_strings(self):
        return [
            ["%s%s" % (g, "" if e == 1 else GEN_INVERSE_SUFFIX) for g, e in rel]
            for rel in self.relators
        ]

    def __repr__(self):
        return "GroupPresentation(<%d gens | %d rels>)" % (
            len(self.generators),
            len(self.relators),
        )


def free_reduce(word):
    out = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def cyclic_reduce(word):
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
        w = list(free_reduce(w))
    return tuple(w)


def hom_count(P, T, budget=10 ** 7):
    """Number of homomorphisms from the presented group into the table
    group T, by exhaustive search over generator images."""
    k = len(P.generators)
    size = T.order()
    if size ** k > budget:
        raise BudgetExceeded("hom count needs %d assignments" % size ** k)
    rels = []
    gidx = {g: i for i, g in enumerate(P.generators)}
    for rel in P.relators:
        rels.append([(gidx[g], e) for g, e in rel])
    count = 0
    for assign in itertools.product(T.elements, repeat=k):
        ok = True
        for rel in rels:
            acc = T.unit
            for gi, e in rel:
                x = assign[gi] if e == 1 else T.inv[assign[gi]]
                acc = T.table[(acc, x)]
            if acc != T.unit:
                ok = False
                break
        if ok:
            count += 1
    return count


def fingerprint(P, budget=10 ** 7):
    """Hom-count vector over the order-<=8 catalog.

    An isomorphism invariant: equal vectors are necessary (not sufficient)
    for isomorphism.
    """
    return tuple(hom_count(P, T, budget=budget) for T in catalog())


def abelianization(P):
    """The presented group made abelian, as an FGAb (exponent-sum matrix)."""
    gidx = {g: i for i, g in enumerate(P.generators)}
    cols = []
    for rel in P.relators:
        col = [0] * len(P.generators)
        for g, e in rel:
            col[gidx[g]] += e
        cols.append(col)
    return FGAb(len(P.generators), IntMatrix.from_columns(cols, len(P.generators)))


def tietze_simplify(P, budget=100000):
    """Equivalent, usually smaller, presentation.

    Moves used: free and cyclic reduction of relators, duplicate/empty
    relator removal, and elimination of a generator that occurs exactly
    once in some relator.  Each move is a Tietze transformation, so the
    isomorphism class never changes.  On budget exhaustion the current
    form is returned.
    """
    gens = list(P.generators)
    rels = [cyclic_reduce(r) for r in P.relators]
    spent = 0

    def canon(rel):
        # canonical representative among rotations of the relator and its inverse
        best = None
        for w in (rel, tuple((g, -e) for g, e in reversed(rel))):
            for i in range(max(1, len(w))):
                rot = w[i:] + w[:i]
                if best is None or rot < best:
                    best = rot
        return best if best is not None else ()

    while True:
        rels = [cyclic_reduce(r) for r in rels]
        seen = set()
        out = []
        for r in rels:
            if not r:
                continue
            c = canon(r)
            if c in seen:
                continue
            seen.add(c)
            out.append(r)
        rels = out
        # find a generator occurring exactly once in some relator,
        # scanning shortest relators first for smaller substitutions
        target = None
        for rel_idx in sorted(range(len(rels)), key=lambda i: (len(rels[i]), i)):
            rel_w = rels[rel_idx]
            counts = {}
            for g, _ in rel_w:
                counts[g] = counts.get(g, 0) + 1
            for pos, (g, e) in enumerate(rel_w):
                if counts[g] == 1:
                    target = (rel_idx, pos, g, e)
                    break
            if target:
                break
        if not target or spent > budget:
            break
        rel_idx, pos, g, e = target
        rel_w = rels[rel_idx]
        # solve the relator for g: g = replacement word
        rest = rel_w[pos + 1 :] + rel_w[:pos]
        repl = tuple((h, -x) for h, x in reversed(rest))
        if e == -1:
            repl = tuple((h, -x) for h, x in reversed(repl))
        new_rels = []
        for i, r in enumerate(rels):
            if i == rel_idx:
                continue
            w = []
            for h, x in r:
                if h == g:
                    w.extend(repl if x == 1 else [(a, -b) for a, b in reversed(repl)])
                else:
                    w.append((h, x))
                spent += 1
            new_rels.append(free_reduce(tuple(w)))
        rels = new_rels
        gens = [h for h in gens if h != g]
    return GroupPresentation(gens, rels)


def presentation_of_table_group(G, prefix="g"):
    """Presentation with one generator per non-unit element and the full
    multiplication table as relations."""
    gens = ["%s%d" % (prefix, i) for i, _ in enumerate(e for e in G.elements if e != G.unit)]
    nonunit = [e for e in G.elements if e != G.unit]
    gmap = dict(zip(nonunit, gens))
    rels = []
    for a in nonunit:
        for b in nonunit:
            c = G.table[(a, b)]
            rel = [(gmap[a], 1), (gmap[b], 1)]
            if c != G.unit:
                rel.append((gmap[c], -1))
            rels.append(tuple(rel))
    return GroupPresentation(gens, rels)


def fingerprint_of_table_group(G, budget=10 ** 7):
    return fingerprint(tietze_simplify(presentation_of_table_group(G)), budget=budget)
