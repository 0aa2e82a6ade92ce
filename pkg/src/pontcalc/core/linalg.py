"""Exact integer and rational linear algebra on small dense matrices.

Row spans are the objects of interest: an ideal's weight-w component is the
integer row span of a matrix whose columns are the weight-w monomials.
Hermite normal form decides lattice membership; Bareiss elimination gives
ranks over the rationals; Smith invariants measure torsion in quotients.
"""

from dataclasses import dataclass
from fractions import Fraction

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors as _invariant_factors

from pontcalc.errors import DimensionError


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise DimensionError("entry count %d != %d*%d" % (len(self.entries), self.rows, self.cols))

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionError("column count needed for an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n):
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * (rows * cols))

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]


def _as_rows(M):
    if isinstance(M, IntMatrix):
        return M.to_rows(), M.cols
    rows = [list(r) for r in M]
    return rows, (len(rows[0]) if rows else 0)


def hermite_rows(rows, ncols, transform=False):
    """Row-style Hermite normal form of the integer row span of ``rows``.

    Returns ``(H, pivots, U)`` where H lists the nonzero HNF rows, ``pivots``
    their pivot columns (strictly increasing, pivot entries positive, entries
    above each pivot reduced into ``[0, pivot)``) and, if ``transform``, U
    is a list of coefficient rows with ``H[i] == sum_j U[i][j] * rows[j]``.
    """
    A = [list(r) for r in rows]
    m = len(A)
    U = [[int(i == j) for j in range(m)] for i in range(m)] if transform else None

    def swap(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def addmul(dst, src, q):
        # row[dst] -= q * row[src]
        if q:
            ra, rs = A[dst], A[src]
            for c in range(ncols):
                if rs[c]:
                    ra[c] -= q * rs[c]
            if U is not None:
                ua, us = U[dst], U[src]
                for c in range(m):
                    if us[c]:
                        ua[c] -= q * us[c]

    pivots = []
    top = 0
    for col in range(ncols):
        if top >= m:
            break
        while True:
            nz = [i for i in range(top, m) if A[i][col]]
            if not nz:
                break
            best = min(nz, key=lambda i: abs(A[i][col]))
            swap(top, best)
            done = True
            for i in range(top + 1, m):
                if A[i][col]:
                    addmul(i, top, A[i][col] // A[top][col])
                    if A[i][col]:
                        done = False
            if done:
                break
        if top < m and A[top][col]:
            if A[top][col] < 0:
                A[top] = [-x for x in A[top]]
                if U is not None:
                    U[top] = [-x for x in U[top]]
            p = A[top][col]
            for i in range(top):
                addmul(i, top, A[i][col] // p)
            pivots.append(col)
            top += 1
    H = A[:top]
    return H, pivots, (U[:top] if U is not None else None)


@dataclass(frozen=True)
class Membership:
    member: bool
    certificate: tuple = None

    def __bool__(self):
        return self.member


def lattice_membership(M, v):
    """Decide whether ``v`` is in the integer row span of ``M``.

    A positive answer carries coefficients ``c`` with ``c @ M == v``; the
    certificate is re-multiplied before being returned.
    """
    rows, ncols = _as_rows(M)
    v = [int(x) for x in v]
    if len(v) != ncols:
        raise DimensionError("vector length %d != %d columns" % (len(v), ncols))
    H, pivots, U = hermite_rows(rows, ncols, transform=True)
    rest = list(v)
    coeffs = [0] * len(H)
    for i, (h, c) in enumerate(zip(H, pivots)):
        if rest[c] % h[c]:
            return Membership(False)
        q = rest[c] // h[c]
        coeffs[i] = q
        if q:
            rest = [a - q * b for a, b in zip(rest, h)]
    if any(rest):
        return Membership(False)
    cert = [sum(coeffs[i] * U[i][j] for i in range(len(H))) for j in range(len(rows))]
    check = [sum(cert[j] * rows[j][c] for j in range(len(rows))) for c in range(ncols)]
    if check != v:
        raise AssertionError("membership certificate failed to re-multiply")
    return Membership(True, tuple(cert))


def rational_rank(M):
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    rows, ncols = _as_rows(M)
    A = [list(r) for r in rows if any(r)]
    m = len(A)
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, m) if A[i][col]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][col]
        for i in range(rank + 1, m):
            a = A[i][col]
            A[i] = [(p * A[i][c] - a * A[rank][c]) // prev for c in range(ncols)]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def determinant(M):
    """Exact determinant of a square integer matrix (Bareiss)."""
    A, _ = _as_rows(M)
    A = [list(r) for r in A]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * (A[n - 1][n - 1] if n else 1)


def rational_membership(M, v):
    rows, ncols = _as_rows(M)
    if len(v) != ncols:
        raise DimensionError("vector length %d != %d columns" % (len(v), ncols))
    return rational_rank(rows + [list(v)]) == rational_rank(rows) if rows else not any(v)


def rational_row_reduce(rows, ncols):
    """Reduced row echelon form over Q: (rows as Fractions, pivot columns)."""
    A = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(A)) if A[i][col]), None)
        if piv is None:
            continue
        A[top], A[piv] = A[piv], A[top]
        p = A[top][col]
        A[top] = [x / p for x in A[top]]
        for i in range(len(A)):
            if i != top and A[i][col]:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[top])]
        pivots.append(col)
        top += 1
    return A[:top], pivots


def invariant_factors(M):
    """Nonzero Smith invariants d_1 | d_2 | ... of the row lattice of ``M``."""
    rows, ncols = _as_rows(M)
    rows = [r for r in rows if any(r)]
    if not rows or ncols == 0:
        return ()
    dm = DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), ncols), ZZ)
    return tuple(int(f) for f in _invariant_factors(dm) if f)


def quotient_structure(M, ncols=None):
    """Free rank and torsion of Z^ncols / rowspan(M)."""
    rows, n = _as_rows(M)
    if ncols is None:
        ncols = n
    factors = invariant_factors(rows) if rows else ()
    return ncols - len(factors), tuple(f for f in factors if f > 1)
