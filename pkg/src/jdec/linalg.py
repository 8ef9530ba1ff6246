"""Exact integer and rational matrix algorithms.

Matrices are plain lists of rows. Integer entries are Python ints and rational
entries are ``fractions.Fraction``; nothing here touches floating point.
Lattices follow the row convention: each row of a coordinate matrix is a basis
vector written in the ambient basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

IntMatrix = list[list[int]]
RatMatrix = list[list[Fraction]]


class LinalgError(ValueError):
    pass


# ---------------------------------------------------------------- basic helpers

def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> IntMatrix:
    return [[0] * c for _ in range(r)]


def copy(M: Sequence[Sequence]) -> list[list]:
    return [list(row) for row in M]


def shape(M: Sequence[Sequence]) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def transpose(M: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*M)] if M else []


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    if A and B and len(A[0]) != len(B):
        raise LinalgError(f"shape mismatch {shape(A)} x {shape(B)}")
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matadd(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(c, M):
    return [[c * x for x in row] for row in M]


def is_zero(M) -> bool:
    return all(x == 0 for row in M for x in row)


def to_int(M: Sequence[Sequence]) -> IntMatrix:
    out = []
    for row in M:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise LinalgError(f"non-integral entry {x}")
            r.append(x.numerator)
        out.append(r)
    return out


def to_rat(M: Sequence[Sequence]) -> RatMatrix:
    return [[Fraction(x) for x in row] for row in M]


def inverse_rat(M: Sequence[Sequence]) -> RatMatrix:
    """Gauss-Jordan inverse over Q."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise LinalgError("inverse of non-square matrix")
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        p = next((r for r in range(c, n) if A[r][c] != 0), None)
        if p is None:
            raise LinalgError("singular matrix")
        A[c], A[p] = A[p], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


def inverse_unimodular(M: Sequence[Sequence[int]]) -> IntMatrix:
    return to_int(inverse_rat(M))


def rank(M: Sequence[Sequence]) -> int:
    A = to_rat(M)
    r = 0
    rows, cols = shape(A)
    for c in range(cols):
        p = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(r + 1, rows):
            if A[i][c]:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
    return r


# ------------------------------------------------------------------ determinants

def det_exact(M: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise LinalgError("determinant of non-square matrix")
    if n == 0:
        return 1
    A = [list(map(int, row)) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * A[n - 1][n - 1]


def det_cofactor(M: Sequence[Sequence]) -> int:
    """Laplace expansion along the first row. Exponential; for checking only."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * det_cofactor(minor)
    return total


# ------------------------------------------------------------------ normal forms

def hnf(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``H == U*M`` and ``U`` unimodular. Pivots are
    positive, entries above a pivot lie in ``[0, pivot)``, zero rows are moved
    to the bottom.
    """
    m, n = shape(M)
    H = [list(map(int, row)) for row in M]
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        # gcd-combine column c of rows r..m-1 into row r
        for i in range(r + 1, m):
            b = H[i][c]
            if b == 0:
                continue
            a = H[r][c]
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            Hr, Hi = H[r], H[i]
            H[r] = [x * u + y * v for u, v in zip(Hr, Hi)]
            H[i] = [-q * u + p * v for u, v in zip(Hr, Hi)]
            Ur, Ui = U[r], U[i]
            U[r] = [x * u + y * v for u, v in zip(Ur, Ui)]
            U[i] = [-q * u + p * v for u, v in zip(Ur, Ui)]
        piv = H[r][c]
        if piv == 0:
            continue
        if piv < 0:
            H[r] = [-v for v in H[r]]
            U[r] = [-v for v in U[r]]
            piv = -piv
        for i in range(r):
            f = H[i][c] // piv
            if f:
                H[i] = [u - f * v for u, v in zip(H[i], H[r])]
                U[i] = [u - f * v for u, v in zip(U[i], U[r])]
        r += 1
    return H, U


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # g = x*a + y*b, g > 0 (b != 0)
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def snf(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``S = U*M*V`` with ``d_1 | d_2 | ...`` and ``d_i >= 0``."""
    m, n = shape(M)
    S = [list(map(int, row)) for row in M]
    U = identity(m)
    V = identity(n)

    def row_comb(A, i, j, a, b, c, d):
        # rows (i, j) <- (a*Ri + b*Rj, c*Ri + d*Rj)
        Ri, Rj = A[i], A[j]
        A[i] = [a * x + b * y for x, y in zip(Ri, Rj)]
        A[j] = [c * x + d * y for x, y in zip(Ri, Rj)]

    def col_comb(A, i, j, a, b, c, d):
        for row in A:
            x, y = row[i], row[j]
            row[i] = a * x + b * y
            row[j] = c * x + d * y

    for t in range(min(m, n)):
        # pick the smallest nonzero entry in the trailing block as pivot
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    v = S[i][j]
                    if v and (best is None or abs(v) < abs(S[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                return S, U, V
            i, j = best
            if i != t:
                S[t], S[i] = S[i], S[t]
                U[t], U[i] = U[i], U[t]
            if j != t:
                col_comb(S, t, j, 0, 1, 1, 0)
                col_comb(V, t, j, 0, 1, 1, 0)
            done = True
            p = S[t][t]
            for i in range(t + 1, m):
                if S[i][t]:
                    q = S[i][t] // p
                    row_comb(S, t, i, 1, 0, -q, 1)
                    row_comb(U, t, i, 1, 0, -q, 1)
                    if S[i][t]:
                        done = False
            for j in range(t + 1, n):
                if S[t][j]:
                    q = S[t][j] // p
                    col_comb(S, t, j, 1, 0, -q, 1)
                    col_comb(V, t, j, 1, 0, -q, 1)
                    if S[t][j]:
                        done = False
            if not done:
                continue
            # pivot must divide the rest of the block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % p), None)
            if bad is None:
                break
            row_comb(S, t, bad[0], 1, 1, 0, 1)
            row_comb(U, t, bad[0], 1, 1, 0, 1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
    return S, U, V


def elementary_divisors(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal of the Smith form."""
    S, _, _ = snf(M)
    return [S[i][i] for i in range(min(shape(S))) if S[i][i]]


# ------------------------------------------------------------------ lattices

@dataclass(frozen=True)
class SubLattice:
    """A saturated sublattice of Z^ambient_rank, basis rows stored in HNF."""

    ambient_rank: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def matrix(self) -> IntMatrix:
        return [list(r) for r in self.basis]

    def __contains__(self, v) -> bool:
        return _coords_in_echelon(self.matrix(), list(v)) is not None

    @classmethod
    def full(cls, n: int) -> SubLattice:
        return cls(n, tuple(tuple(r) for r in identity(n)))


def _nonzero_rows(M):
    return [row for row in M if any(row)]


def rational_column_space(M: Sequence[Sequence]) -> IntMatrix:
    """Integer rows spanning the Q-span of the columns of ``M``."""
    cols = []
    for col in transpose(M):
        col = [Fraction(x) for x in col]
        if not any(col):
            continue
        d = lcm(*(x.denominator for x in col))
        ints = [int(x * d) for x in col]
        g = gcd(*ints)
        cols.append([x // g for x in ints])
    if not cols:
        return []
    H, _ = hnf(cols)
    return _nonzero_rows(H)


def saturate(B: Sequence[Sequence[int]], ambient_rank: int) -> SubLattice:
    """span_Q(rows of B) intersected with Z^ambient_rank."""
    rows = _nonzero_rows([list(map(int, r)) for r in B])
    if not rows:
        return SubLattice(ambient_rank, ())
    if any(len(r) != ambient_rank for r in rows):
        raise LinalgError("row length differs from ambient rank")
    S, _, V = snf(rows)
    r = sum(1 for i in range(min(shape(S))) if S[i][i])
    Vinv = inverse_unimodular(V)
    H, _ = hnf(Vinv[:r])
    return SubLattice(ambient_rank, tuple(tuple(row) for row in H[:r]))


def lattice_from_basis(B: Sequence[Sequence[int]], ambient_rank: int) -> SubLattice:
    """Wrap an already-saturated basis; raises if it is not saturated."""
    lat = saturate(B, ambient_rank)
    H, _ = hnf(B)
    if _nonzero_rows(H) != lat.matrix():
        raise LinalgError("basis does not span a saturated lattice")
    return lat


def _coords_in_echelon(H: IntMatrix, v: list[int]) -> list[int] | None:
    # integer coordinates of v in the HNF basis H, or None if v is not in the span
    v = list(v)
    coeffs = []
    for row in H:
        c = next(j for j, x in enumerate(row) if x)
        q, rem = divmod(v[c], row[c])
        if rem:
            return None
        coeffs.append(q)
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return coeffs if not any(v) else None


def lattice_index(full: SubLattice, sub: Sequence[Sequence[int]]) -> int:
    """Index of the row span of ``sub`` inside ``full``.

    ``sub`` must have as many rows as ``full`` has rank, with rows independent.
    """
    if len(sub) != full.rank:
        raise LinalgError(f"sub has {len(sub)} rows, lattice rank is {full.rank}")
    basis = full.matrix()
    C = []
    for v in sub:
        c = _coords_in_echelon(basis, list(v))
        if c is None:
            raise LinalgError(f"vector {list(v)} not in lattice")
        C.append(c)
    d = abs(det_exact(C))
    if d == 0:
        raise LinalgError("sub is rank-deficient, index is infinite")
    return d
