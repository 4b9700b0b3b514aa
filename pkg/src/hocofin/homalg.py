"""Exact integer linear algebra.

Smith normal form with unimodular transforms, finitely generated abelian
groups in invariant-factor form, and homology of bounded complexes of
finitely presented abelian groups.  All arithmetic runs on Python's
arbitrary-precision integers; nothing here is modular or floating point.
"""

from __future__ import annotations


class HomalgError(Exception):
    """Base class for errors raised by this module."""


class DegreeMissing(HomalgError):
    """Homology requested in a degree missing one of its neighbours."""


class IntMatrix:
    """Dense integer matrix, row-major.

    Entries are plain Python ints; decimal strings are accepted and
    converted, which is how matrices arrive from JSON.

    >>> IntMatrix([[1, 2], [3, 4]]).mul(IntMatrix.identity(2)).entries
    [[1, 2], [3, 4]]
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, shape=None):
        data = [[int(x) for x in row] for row in entries]
        if shape is None:
            if not data:
                raise ValueError("shape is required for a matrix with no rows")
            shape = (len(data), len(data[0]))
        m, n = shape
        if len(data) != m or any(len(row) != n for row in data):
            raise ValueError("entries do not match shape %dx%d" % (m, n))
        self.rows = m
        self.cols = n
        self.entries = data

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], (n, n))

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)], (m, n))

    @classmethod
    def from_columns(cls, columns, rows):
        cols = [list(map(int, c)) for c in columns]
        if any(len(c) != rows for c in cols):
            raise ValueError("column of wrong length")
        return cls([[c[i] for c in cols] for i in range(rows)], (rows, len(cols)))

    def column(self, j):
        return [row[j] for row in self.entries]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return IntMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            (self.cols, self.rows),
        )

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        ot = other.transpose().entries
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ot] for row in self.entries],
            (self.rows, other.cols),
        )

    def mul_vec(self, v):
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(a * b for a, b in zip(row, v)) for row in self.entries]

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return IntMatrix(
            [self.entries[i] + other.entries[i] for i in range(self.rows)],
            (self.rows, self.cols + other.cols),
        )

    def is_zero(self):
        return all(x == 0 for row in self.entries for x in row)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return "IntMatrix(%r)" % (self.entries,)

    def to_json(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "data": [str(x) for row in self.entries for x in row],
        }

    @classmethod
    def from_json(cls, obj):
        m, n = int(obj["rows"]), int(obj["cols"])
        data = [int(x) for x in obj["data"]]
        if len(data) != m * n:
            raise ValueError("matrix data length does not match rows*cols")
        return cls([data[i * n : (i + 1) * n] for i in range(m)], (m, n))


def smith_normal_form(A):
    """Return (U, D, V) with U*A*V == D diagonal, d1 | d2 | ..., U, V unimodular.

    Pivot selection is deterministic: smallest nonzero absolute value,
    ties broken by row-major position.

    >>> U, D, V = smith_normal_form(IntMatrix([[2, 4], [6, 8]]))
    >>> [D.entries[i][i] for i in range(2)]
    [2, 4]
    """
    m, n = A.rows, A.cols
    D = [row[:] for row in A.entries]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        if i != j:
            D[i], D[j] = D[j], D[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in D:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src, mirrored on U
        if q:
            Dd, Ds = D[dst], D[src]
            for k in range(n):
                Dd[k] += q * Ds[k]
            Ud, Us = U[dst], U[src]
            for k in range(m):
                Ud[k] += q * Us[k]

    def add_col(dst, src, q):
        if q:
            for row in D:
                row[dst] += q * row[src]
            for row in V:
                row[dst] += q * row[src]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    t = 0
    bound = min(m, n)
    while t < bound:
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                a = D[i][j]
                if a and (best is None or abs(a) < best):
                    best, piv = abs(a), (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            if D[t][t] < 0:
                negate_row(t)
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = D[i][t] // p
                add_row(i, t, -q)
                if D[i][t]:
                    # nonzero remainder: strictly smaller pivot candidate
                    swap_rows(t, i)
                    dirty = True
                    break
            if dirty:
                continue
            for j in range(t + 1, n):
                q = D[t][j] // p
                add_col(j, t, -q)
                if D[t][j]:
                    swap_cols(t, j)
                    dirty = True
                    break
            if dirty:
                continue
            # the pivot must divide the remaining submatrix for d1 | d2 | ...
            bad_row = None
            for i in range(t + 1, m):
                if any(D[i][j] % p for j in range(t + 1, n)):
                    bad_row = i
                    break
            if bad_row is None:
                break
            add_row(t, bad_row, 1)
        t += 1
    return (
        IntMatrix(U, (m, m)),
        IntMatrix(D, (m, n)),
        IntMatrix(V, (n, n)),
    )


def determinant(M):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return 1
    a = [row[:] for row in M.entries]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def verify_smith_normal_form(A, U, D, V):
    """Check U*A*V == D, diagonality, the divisibility chain, |det| = 1.

    Raises HomalgError on any failure; used by the test suite on every
    randomised instance.
    """
    if U.mul(A).mul(V) != D:
        raise HomalgError("U*A*V != D")
    diag = [D.entries[i][i] for i in range(min(D.rows, D.cols))]
    for i in range(D.rows):
        for j in range(D.cols):
            if i != j and D.entries[i][j]:
                raise HomalgError("D is not diagonal")
    for i, d in enumerate(diag):
        if d < 0:
            raise HomalgError("negative invariant factor")
        if i + 1 < len(diag):
            nxt = diag[i + 1]
            if d == 0 and nxt != 0:
                raise HomalgError("zero before nonzero on the diagonal")
            if d != 0 and nxt % d != 0:
                raise HomalgError("divisibility chain broken")
    if abs(determinant(U)) != 1:
        raise HomalgError("U is not unimodular")
    if abs(determinant(V)) != 1:
        raise HomalgError("V is not unimodular")


def kernel_basis(A):
    """Basis for the integer kernel of A, returned as columns of a matrix."""
    _, D, V = smith_normal_form(A)
    r = 0
    for i in range(min(A.rows, A.cols)):
        if D.entries[i][i]:
            r += 1
    return IntMatrix.from_columns([V.column(j) for j in range(r, A.cols)], A.cols)


class _Solver:
    """Repeated exact solving of A*x = v against a fixed A via one SNF."""

    def __init__(self, A):
        self.A = A
        self.U, self.D, self.V = smith_normal_form(A)
        self.rank_bound = min(A.rows, A.cols)

    def solve(self, v):
        if len(v) != self.A.rows:
            raise ValueError("rhs length mismatch")
        w = self.U.mul_vec(v)
        z = [0] * self.A.cols
        for i in range(self.rank_bound):
            d = self.D.entries[i][i]
            if d:
                if w[i] % d:
                    return None
                z[i] = w[i] // d
            elif w[i]:
                return None
        for i in range(self.rank_bound, self.A.rows):
            if w[i]:
                return None
        return self.V.mul_vec(z)


def lattice_member(v, A):
    """Integer coordinates x with A*x == v, or None when v is outside the
    column lattice of A."""
    return _Solver(A).solve(v)


class FGAb:
    """Finitely generated abelian group presented by a generator count and a
    matrix whose columns are relations.

    The canonical form (free rank plus invariant factors d1 | d2 | ...)
    is computed once by Smith normal form; equality and hashing use it.

    >>> print(FGAb(2, IntMatrix([[2, 0], [0, 3]])))
    Z/6
    >>> print(FGAb(3, IntMatrix([[2], [0], [0]])))
    Z^2 (+) Z/2
    """

    __slots__ = ("gens", "rels", "free_rank", "torsion")

    def __init__(self, gens, rels=None):
        gens = int(gens)
        if rels is None:
            rels = IntMatrix.zeros(gens, 0)
        if rels.rows != gens:
            raise ValueError("relation matrix must have one row per generator")
        self.gens = gens
        self.rels = rels
        _, D, _ = smith_normal_form(rels)
        diag = [D.entries[i][i] for i in range(min(D.rows, D.cols))]
        nonzero = [d for d in diag if d]
        self.free_rank = gens - len(nonzero)
        self.torsion = tuple(d for d in nonzero if d > 1)

    @classmethod
    def free(cls, rank):
        return cls(rank)

    @classmethod
    def trivial(cls):
        return cls(0)

    @classmethod
    def cyclic(cls, d):
        if d == 0:
            return cls(1)
        return cls(1, IntMatrix([[d]]))

    @classmethod
    def from_invariants(cls, free_rank, torsion=()):
        ds = list(torsion)
        k = free_rank + len(ds)
        cols = [[d if i == j + free_rank else 0 for i in range(k)] for j, d in enumerate(ds)]
        return cls(k, IntMatrix.from_columns(cols, k))

    def invariants(self):
        return (self.free_rank, self.torsion)

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def direct_sum(self, *others):
        """Block direct sum at presentation level (generator order kept)."""
        groups = (self,) + others
        gens = sum(g.gens for g in groups)
        cols = []
        offset = 0
        for g in groups:
            for col in g.rels.columns():
                cols.append([0] * offset + col + [0] * (gens - offset - g.gens))
            offset += g.gens
        return FGAb(gens, IntMatrix.from_columns(cols, gens))

    def __eq__(self, other):
        if not isinstance(other, FGAb):
            return NotImplemented
        return self.invariants() == other.invariants()

    def __hash__(self):
        return hash(self.invariants())

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % d for d in self.torsion)
        return " (+) ".join(parts) if parts else "0"

    def __repr__(self):
        return "FGAb<%s>" % self

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


class AbMap:
    """Homomorphism of finitely presented abelian groups, as a matrix on
    generators that must carry source relations into the target lattice."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix, check=True):
        if matrix.rows != target.gens or matrix.cols != source.gens:
            raise ValueError("matrix shape does not fit source/target generators")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check and not self._well_defined():
            raise HomalgError("matrix does not respect the source relations")

    def _well_defined(self):
        if self.source.rels.cols == 0:
            return True
        image = self.matrix.mul(self.source.rels)
        return _columns_in_lattice(image, self.target.rels)

    @classmethod
    def identity(cls, group):
        return cls(group, group, IntMatrix.identity(group.gens), check=False)

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, IntMatrix.zeros(target.gens, source.gens), check=False)

    def compose(self, other):
        """self after other."""
        if other.target.gens != self.source.gens:
            raise ValueError("composition shape mismatch")
        return AbMap(other.source, self.target, self.matrix.mul(other.matrix), check=False)

    def equals_mod_relations(self, other):
        if self.matrix.rows != other.matrix.rows or self.matrix.cols != other.matrix.cols:
            return False
        diff = IntMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.matrix.entries, other.matrix.entries)
            ],
            (self.matrix.rows, self.matrix.cols),
        )
        return _columns_in_lattice(diff, self.target.rels)


def _columns_in_lattice(M, lattice):
    """True when every column of M lies in the column lattice given."""
    if M.is_zero():
        return True
    if lattice.cols == 0:
        return M.is_zero()
    solver = _Solver(lattice)
    return all(solver.solve(col) is not None for col in M.columns())


class ChainComplex:
    """Bounded complex of finitely presented abelian groups.

    ``groups[n]`` for lo <= n <= hi, ``boundaries[n]: C_n -> C_{n-1}`` for
    lo < n <= hi.  Construction checks that consecutive boundaries compose
    to zero modulo the relation lattice of the target.
    """

    def __init__(self, groups, boundaries):
        degrees = sorted(groups)
        if not degrees:
            raise ValueError("empty complex")
        lo, hi = degrees[0], degrees[-1]
        if degrees != list(range(lo, hi + 1)):
            raise ValueError("degrees must be contiguous")
        self.lo, self.hi = lo, hi
        self.groups = dict(groups)
        self.boundaries = dict(boundaries)
        for n in range(lo + 1, hi + 1):
            if n not in self.boundaries:
                raise ValueError("missing boundary in degree %d" % n)
            d = self.boundaries[n]
            if d.matrix.cols != self.groups[n].gens or d.matrix.rows != self.groups[n - 1].gens:
                raise ValueError("boundary shape mismatch in degree %d" % n)
        for n in range(lo + 2, hi + 1):
            comp = self.boundaries[n - 1].matrix.mul(self.boundaries[n].matrix)
            if not _columns_in_lattice(comp, self.groups[n - 2].rels):
                raise HomalgError("boundary squared is nonzero in degree %d" % n)

    def homology(self, n):
        """H_n = ker d_n / im d_{n+1}, in canonical invariant-factor form.

        Works for finitely presented chain groups by lifting everything to
        the free covers: a free-cover element is a cycle when its boundary
        lands in the relation lattice one degree down, and relation columns
        of C_n are folded into the divided-out sublattice.
        """
        if n - 1 < self.lo or n + 1 > self.hi:
            raise DegreeMissing("homology in degree %d needs degrees %d..%d" % (n, n - 1, n + 1))
        Cn = self.groups[n]
        if Cn.gens == 0:
            return FGAb.trivial()
        below = self.groups[n - 1]
        Dn = self.boundaries[n].matrix
        Dup = self.boundaries[n + 1].matrix
        # cycles: x in Z^gens with Dn*x in the relation lattice below
        stacked = Dn.hstack(below.rels)
        ker = kernel_basis(stacked)
        gen_mat = IntMatrix(
            [ker.entries[i] for i in range(Cn.gens)], (Cn.gens, ker.cols)
        )
        t = gen_mat.cols
        quotient_cols = Cn.rels.columns() + Dup.columns()
        if t == 0:
            if any(any(x for x in col) for col in quotient_cols):
                raise HomalgError("boundary image escapes the cycle lattice")
            return FGAb.trivial()
        syz = kernel_basis(gen_mat)
        solver = _Solver(gen_mat)
        rel_cols = syz.columns()
        for col in quotient_cols:
            coords = solver.solve(col)
            if coords is None:
                raise HomalgError("boundary image escapes the cycle lattice")
            rel_cols.append(coords)
        return FGAb(t, IntMatrix.from_columns(rel_cols, t))

    def homology_range(self, n_lo, n_hi):
        return [self.homology(n) for n in range(n_lo, n_hi + 1)]
