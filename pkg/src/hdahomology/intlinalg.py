"""Exact integer linear algebra.

Everything here runs on arbitrary-precision Python integers; there is no
floating point anywhere.  Pivot growth in Smith reduction is real, but the
matrices in this package stay at desk scale.

The prime-field variants at the bottom provide the same services modulo a
prime p via Gaussian elimination.

>>> snf(IntMatrix([[2, 4], [6, 8]])).diagonal
(2, 4)
>>> lattice_member(IntMatrix([[2]]), (4,)).witness
(2,)
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch


class IntMatrix:
    """Immutable dense integer matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Sequence[int]], *, ncols: Optional[int] = None):
        rows = tuple(tuple(int(v) for v in r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged rows")
            if ncols is not None and ncols != width:
                raise DimensionMismatch("ncols disagrees with row width")
            ncols = width
        elif ncols is None:
            ncols = 0
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.ncols == other.ncols
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __repr__(self):
        return f"IntMatrix({self.nrows}x{self.ncols})"

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, m: int, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(m)], ncols=n)

    @classmethod
    def from_columns(cls, cols: Iterable[Sequence[int]], nrows: int) -> "IntMatrix":
        cols = [tuple(c) for c in cols]
        for c in cols:
            if len(c) != nrows:
                raise DimensionMismatch("column of wrong height")
        return cls([[c[i] for c in cols] for i in range(nrows)], ncols=len(cols))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.rows), ncols=self.nrows) if self.rows \
            else IntMatrix([[] for _ in range(self.ncols)], ncols=0)

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch("inner dimensions disagree")
        ocols = other.columns()
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in ocols]
             for row in self.rows],
            ncols=other.ncols)

    def mul_vec(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.ncols:
            raise DimensionMismatch("vector of wrong length")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.rows)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.nrows != other.nrows:
            raise DimensionMismatch("row counts disagree")
        return IntMatrix([ra + rb for ra, rb in zip(self.rows, other.rows)],
                         ncols=self.ncols + other.ncols)

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.rows for v in r)


def det(A: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = A.nrows
    if n != A.ncols:
        raise DimensionMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in A.rows]
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            for r in range(t + 1, n):
                if a[r][t] != 0:
                    a[t], a[r] = a[r], a[t]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = a[t][t]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SNFDecomposition:
    """D = U A V with U, V unimodular and d_1 | d_2 | ... >= 0.

    uinv and vinv are the exact inverses of U and V, tracked during the
    reduction; they come for free and save a separate inversion.
    """

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix
    uinv: IntMatrix
    vinv: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.d.rows[i][i] for i in range(min(self.d.nrows, self.d.ncols)))

    @property
    def rank(self) -> int:
        return sum(1 for v in self.diagonal if v != 0)


@lru_cache(maxsize=None)
def snf(A: IntMatrix) -> SNFDecomposition:
    """Smith normal form.

    Pivot choice: smallest nonzero absolute value in the working block,
    ties broken by (row, column) position, so output is deterministic.
    """
    m, n = A.nrows, A.ncols
    a = [list(r) for r in A.rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    Ui = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vi = [[int(i == j) for j in range(n)] for i in range(n)]

    def row_swap(p, q):
        a[p], a[q] = a[q], a[p]
        U[p], U[q] = U[q], U[p]
        for r in Ui:
            r[p], r[q] = r[q], r[p]

    def row_add(p, q, c):
        # row p += c * row q; inverse: column q of Ui -= c * column p.
        a[p] = [x + c * y for x, y in zip(a[p], a[q])]
        U[p] = [x + c * y for x, y in zip(U[p], U[q])]
        for r in Ui:
            r[q] -= c * r[p]

    def row_neg(p):
        a[p] = [-x for x in a[p]]
        U[p] = [-x for x in U[p]]
        for r in Ui:
            r[p] = -r[p]

    def col_swap(p, q):
        for r in a:
            r[p], r[q] = r[q], r[p]
        for r in V:
            r[p], r[q] = r[q], r[p]
        Vi[p], Vi[q] = Vi[q], Vi[p]

    def col_add(p, q, c):
        # column p += c * column q; inverse: row q of Vi -= c * row p.
        for r in a:
            r[p] += c * r[q]
        for r in V:
            r[p] += c * r[q]
        Vi[q] = [x - c * y for x, y in zip(Vi[q], Vi[p])]

    t = 0
    while t < m and t < n:
        piv, pv = None, None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(a[i][j])
                if v and (pv is None or v < pv):
                    piv, pv = (i, j), v
        if piv is None:
            break
        if piv[0] != t:
            row_swap(t, piv[0])
        if piv[1] != t:
            col_swap(t, piv[1])
        while True:
            p = a[t][t]
            for r in range(m):
                if r != t and a[r][t]:
                    q = a[r][t] // p
                    if q:
                        row_add(r, t, -q)
            rem = [r for r in range(m) if r != t and a[r][t]]
            if rem:
                r = min(rem, key=lambda r: (abs(a[r][t]), r))
                row_swap(t, r)
                continue
            for c in range(n):
                if c != t and a[t][c]:
                    q = a[t][c] // p
                    if q:
                        col_add(c, t, -q)
            rem = [c for c in range(n) if c != t and a[t][c]]
            if rem:
                c = min(rem, key=lambda c: (abs(a[t][c]), c))
                col_swap(t, c)
                continue
            # Row and column are clear; force p to divide the rest so the
            # divisibility chain holds.
            bad = None
            for i in range(t + 1, m):
                if any(x % p for x in a[i][t + 1:]):
                    bad = i
                    break
            if bad is None:
                break
            row_add(t, bad, 1)
        t += 1

    for i in range(min(m, n)):
        if a[i][i] < 0:
            row_neg(i)

    return SNFDecomposition(IntMatrix(U), IntMatrix(a, ncols=n), IntMatrix(V),
                            IntMatrix(Ui), IntMatrix(Vi))


@dataclass(frozen=True)
class Obstruction:
    """Certificate of unsolvability: row index i of U with U_i . b not
    divisible by the i-th invariant factor (modulus 0 means 'must vanish')."""

    row_index: int
    u_row: tuple[int, ...]
    modulus: int


@dataclass(frozen=True)
class LatticeDecision:
    solvable: bool
    witness: Optional[tuple[int, ...]]
    obstruction: Optional[Obstruction]

    def __bool__(self):
        return self.solvable


def lattice_member(A: IntMatrix, b: Sequence[int]) -> LatticeDecision:
    """Decide A x = b over the integers; return a witness or an obstruction."""
    b = tuple(int(v) for v in b)
    if len(b) != A.nrows:
        raise DimensionMismatch(f"vector length {len(b)} vs {A.nrows} rows")
    s = snf(A)
    ub = s.u.mul_vec(b)
    diag = s.diagonal
    y = [0] * A.ncols
    for i in range(A.nrows):
        d = diag[i] if i < len(diag) else 0
        if d:
            if ub[i] % d:
                return LatticeDecision(False, None,
                                       Obstruction(i, s.u.rows[i], d))
            y[i] = ub[i] // d
        elif ub[i]:
            return LatticeDecision(False, None, Obstruction(i, s.u.rows[i], 0))
    x = s.v.mul_vec(y)
    if A.mul_vec(x) != b:
        raise AssertionError("witness check failed")
    return LatticeDecision(True, x, None)


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """Columns form a basis of the integer kernel lattice {x : A x = 0}.

    The basis is saturated: every integer kernel vector is an integer
    combination of the columns.
    """
    s = snf(A)
    diag = s.diagonal
    cols = [s.v.column(j) for j in range(A.ncols)
            if j >= len(diag) or diag[j] == 0]
    return IntMatrix.from_columns(cols, A.ncols)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = gcd(a, b) >= 0 and s*a + t*b = g.

    >>> xgcd(12, -8)
    (4, 1, 1)
    """
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


class IntegerLattice:
    """A sublattice of Z^width kept as echelon rows with positive pivots.

    Supports membership tests and the canonical coset representative: the
    unique vector in a coset whose entry at every pivot column lies in
    [0, pivot).  That uniqueness is what makes reduce() a normal form.
    """

    def __init__(self, width: int, rows: Iterable[Sequence[int]] = ()):
        self.width = width
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []
        for r in rows:
            self.add(r)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vec: Sequence[int]) -> bool:
        """Insert a vector; returns True if the lattice grew."""
        v = list(vec)
        if len(v) != self.width:
            raise DimensionMismatch("vector of wrong length")
        grew = False
        while True:
            j = next((i for i, x in enumerate(v) if x), None)
            if j is None:
                return grew
            pos = bisect_left(self._pivots, j)
            if pos < len(self._pivots) and self._pivots[pos] == j:
                row = self._rows[pos]
                p = row[j]
                if v[j] % p == 0:
                    q = v[j] // p
                    v = [x - q * y for x, y in zip(v, row)]
                    continue
                g, s, t = xgcd(p, v[j])
                new_row = [s * x + t * y for x, y in zip(row, v)]
                v = [(p // g) * y - (v[j] // g) * x for x, y in zip(row, v)]
                self._rows[pos] = new_row
                grew = True
                continue
            if v[j] < 0:
                v = [-x for x in v]
            self._rows.insert(pos, v)
            self._pivots.insert(pos, j)
            return True

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative of vec modulo the lattice."""
        v = list(vec)
        if len(v) != self.width:
            raise DimensionMismatch("vector of wrong length")
        for row, j in zip(self._rows, self._pivots):
            q = v[j] // row[j]
            if q:
                v = [x - q * y for x, y in zip(v, row)]
        return tuple(v)

    def __contains__(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    def basis_rows(self) -> tuple[tuple[int, ...], ...]:
        """Hermite-normalized basis: above-pivot entries reduced mod pivot."""
        rows = [list(r) for r in self._rows]
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                j = self._pivots[b]
                q = rows[a][j] // rows[b][j]
                if q:
                    rows[a] = [x - q * y for x, y in zip(rows[a], rows[b])]
        return tuple(tuple(r) for r in rows)


# ----------------------------------------------------------- prime fields

def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def fp_rref(rows: Iterable[Sequence[int]], width: int, p: int):
    """Reduced row echelon form mod p; returns (rows, pivot columns)."""
    work = [[v % p for v in r] for r in rows]
    out: list[list[int]] = []
    pivots: list[int] = []
    for col in range(width):
        src = next((r for r in work if r[col] % p), None)
        if src is None:
            continue
        work.remove(src)
        inv = pow(src[col], p - 2, p)
        src = [(v * inv) % p for v in src]
        for r in work:
            c = r[col]
            if c:
                for i in range(width):
                    r[i] = (r[i] - c * src[i]) % p
        for r in out:
            c = r[col]
            if c:
                for i in range(width):
                    r[i] = (r[i] - c * src[i]) % p
        out.append(src)
        pivots.append(col)
    return out, pivots


def fp_rank(A: IntMatrix, p: int) -> int:
    return len(fp_rref(A.rows, A.ncols, p)[1])


def fp_kernel_basis(A: IntMatrix, p: int) -> IntMatrix:
    """Columns form a basis of the kernel of A over Z/p."""
    rows, pivots = fp_rref(A.rows, A.ncols, p)
    free = [j for j in range(A.ncols) if j not in pivots]
    cols = []
    for f in free:
        vec = [0] * A.ncols
        vec[f] = 1
        for row, piv in zip(rows, pivots):
            vec[piv] = (-row[f]) % p
        cols.append(vec)
    return IntMatrix.from_columns(cols, A.ncols)


def fp_solve(A: IntMatrix, b: Sequence[int], p: int) -> Optional[tuple[int, ...]]:
    """One solution of A x = b over Z/p, or None."""
    b = [v % p for v in b]
    if len(b) != A.nrows:
        raise DimensionMismatch(f"vector length {len(b)} vs {A.nrows} rows")
    aug = [list(r) + [bv] for r, bv in zip(A.rows, b)]
    rows, pivots = fp_rref(aug, A.ncols + 1, p)
    if A.ncols in pivots:
        return None
    x = [0] * A.ncols
    for row, piv in zip(rows, pivots):
        x[piv] = row[A.ncols] % p
    if tuple(v % p for v in A.mul_vec(x)) != tuple(b):
        raise AssertionError("witness check failed")
    return tuple(x)


class FpRowSpace:
    """Row space over Z/p with the same reduce/contains interface as
    IntegerLattice (pivots are 1, so residues vanish at pivot columns)."""

    def __init__(self, width: int, p: int, rows: Iterable[Sequence[int]] = ()):
        self.width = width
        self.p = p
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []
        for r in rows:
            self.add(r)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def add(self, vec: Sequence[int]) -> bool:
        p = self.p
        v = [x % p for x in vec]
        if len(v) != self.width:
            raise DimensionMismatch("vector of wrong length")
        for row, piv in zip(self._rows, self._pivots):
            c = v[piv]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, row)]
        j = next((i for i, x in enumerate(v) if x), None)
        if j is None:
            return False
        inv = pow(v[j], p - 2, p)
        v = [(x * inv) % p for x in v]
        for pos, row in enumerate(self._rows):
            c = row[j]
            if c:
                self._rows[pos] = [(x - c * y) % p for x, y in zip(row, v)]
        pos = bisect_left(self._pivots, j)
        self._rows.insert(pos, v)
        self._pivots.insert(pos, j)
        return True

    def reduce(self, vec: Sequence[int]) -> tuple[int, ...]:
        p = self.p
        v = [x % p for x in vec]
        for row, piv in zip(self._rows, self._pivots):
            c = v[piv]
            if c:
                v = [(x - c * y) % p for x, y in zip(v, row)]
        return tuple(v)

    def __contains__(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))
