"""Exact integer and rational linear algebra.

Everything here works on plain lists of Python ``int`` / ``Fraction`` so that
entries never overflow and results are exact.  Matrices are lists of rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence

IntMatrix = List[List[int]]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B, inner: int | None = None):
    """Product of two list-of-rows matrices (works for ints and Fractions)."""
    if inner is None:
        inner = len(B)
    cols = len(B[0]) if B else 0
    return [[sum(row[k] * B[k][j] for k in range(inner)) for j in range(cols)] for row in A]


def transpose(A, ncols: int | None = None):
    if ncols is None:
        ncols = len(A[0]) if A else 0
    return [[A[i][j] for i in range(len(A))] for j in range(ncols)]


def determinant(A) -> Fraction:
    """Determinant of a square matrix by fraction-exact Gaussian elimination."""
    n = len(A)
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


# ---------------------------------------------------------------------------
# rational linear algebra


def rref(rows, ncols: int | None = None):
    """Reduced row echelon form over Q.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    M = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows, ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols: int) -> List[List[Fraction]]:
    """Basis of ``{x in Q^ncols : rows . x = 0}``, one vector per free column."""
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def solve(A, b):
    """One rational solution of ``A x = b`` or ``None`` when inconsistent."""
    ncols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    return x


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


# ---------------------------------------------------------------------------
# lattice vectors


def mu(v: Sequence) -> int:
    """Smallest positive integer ``d`` such that ``d * v`` is integral."""
    d = 1
    for x in v:
        d = lcm(d, Fraction(x).denominator)
    return d


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g


def primitive_generator(v: Sequence) -> tuple:
    """The coprime integer vector spanning the ray ``Q_{>=0} v``."""
    w = [Fraction(x) * mu(v) for x in v]
    g = content(w)
    if g == 0:
        raise ValueError("no primitive generator of the zero ray")
    return tuple(int(x) // g for x in w)


def primitive_rows(rows) -> List[tuple]:
    """Scale every nonzero rational row to a primitive integer vector."""
    return [primitive_generator(r) for r in rows if any(x != 0 for x in r)]


# ---------------------------------------------------------------------------
# normal forms


def hermite_normal_form(M, ncols: int | None = None):
    """Row-style Hermite normal form.

    Returns ``(H, U, r)`` with ``U`` unimodular, ``U M = H``, the first ``r``
    rows of ``H`` in echelon form with positive pivots, entries above each
    pivot reduced into ``[0, pivot)``, and the remaining rows zero.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    m = len(M)
    H = [[int(x) for x in row] for row in M]
    U = identity(m)

    def sub(i, j, q):
        H[i] = [a - q * b for a, b in zip(H[i], H[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: (abs(H[i][c]), i))
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            clean = True
            for i in range(r + 1, m):
                if H[i][c]:
                    sub(i, r, H[i][c] // H[r][c])
                    if H[i][c]:
                        clean = False
            if clean:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                sub(i, r, q)
        r += 1
    return H, U, r


@dataclass(frozen=True)
class SNFResult:
    """``U . M . V == S`` with ``U``, ``V`` unimodular."""

    U: IntMatrix
    S: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> List[int]:
        return [self.S[i][i] for i in range(min(len(self.S), len(self.V)))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def smith_normal_form(M, ncols: int | None = None) -> SNFResult:
    """Smith normal form by elementary operations with a minimal-|entry| pivot.

    The diagonal is nonnegative and satisfies ``d_1 | d_2 | ... | d_k``
    followed by zeros.  ``ncols`` is only needed for matrices without rows.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    m, n = len(M), ncols
    S = [[int(x) for x in row] for row in M]
    U = identity(m)
    V = identity(n)

    def row_sub(i, j, q):  # row_i -= q * row_j
        S[i] = [a - q * b for a, b in zip(S[i], S[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_sub(i, j, q):  # col_i -= q * col_j
        for row in S:
            row[i] -= q * row[j]
        for row in V:
            row[i] -= q * row[j]

    def row_swap(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        entries = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        row_swap(t, i)
        col_swap(t, j)
        while True:
            for i in range(t + 1, m):
                if S[i][t]:
                    row_sub(i, t, S[i][t] // S[t][t])
            for j in range(t + 1, n):
                if S[t][j]:
                    col_sub(j, t, S[t][j] // S[t][t])
            rest = [(abs(S[i][t]), i, t) for i in range(t + 1, m) if S[i][t]]
            rest += [(abs(S[t][j]), t, j) for j in range(t + 1, n) if S[t][j]]
            if rest:
                _, i, j = min(rest)
                row_swap(t, i)
                col_swap(t, j)
                continue
            d = S[t][t]
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if S[i][j] % d),
                None,
            )
            if bad is None:
                break
            row_sub(t, bad, -1)
        if S[t][t] < 0:
            S[t] = [-x for x in S[t]]
            U[t] = [-x for x in U[t]]
    return SNFResult(U, S, V)


def integer_kernel_basis(M, ncols: int | None = None) -> List[tuple]:
    """Basis of the lattice ``{v in Z^ncols : M v = 0}``.

    The basis is the Hermite normal form of the kernel lattice, so it does not
    depend on how the kernel was found.  Vectors are returned in
    lexicographic order.
    """
    if ncols is None:
        ncols = len(M[0]) if M else 0
    # U M^T = H; rows of U opposite zero rows of H span the kernel lattice.
    H, U, r = hermite_normal_form(transpose(M, ncols), len(M))
    kernel = U[r:]
    if not kernel:
        return []
    K, _, kr = hermite_normal_form(kernel, ncols)
    return sorted(tuple(row) for row in K[:kr])
