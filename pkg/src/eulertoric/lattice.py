"""Exact integer linear algebra on Python ints.

Vectors are tuples of ints and matrices are tuples of row tuples. Nothing here
touches machine-word arithmetic, so intermediate Hermite/Smith entries may grow
without overflow.

Hermite normal form convention (fixed once for the whole package): row style,
``U @ A == H`` with ``H`` in row echelon form, every pivot positive and every
entry above a pivot reduced into ``[0, pivot)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimMismatch, NotABasis, ZeroVector

IntVector = tuple[int, ...]
IntMatrix = tuple[IntVector, ...]


def vector(coords: Sequence[int]) -> IntVector:
    v = tuple(int(c) for c in coords)
    if not v:
        raise DimMismatch("vectors must have dimension >= 1")
    return v


def matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    m = tuple(tuple(int(x) for x in r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise DimMismatch("ragged matrix rows")
    return m


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(A: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(zip(*A)) if A else ()


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A: Sequence[Sequence[int]], v: Sequence[int]) -> IntVector:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def pairing(p: Sequence[int], m: Sequence[int]) -> int:
    """Standard dot product between an element of N and an element of M."""
    if len(p) != len(m):
        raise DimMismatch(f"cannot pair vectors of dims {len(p)} and {len(m)}")
    return sum(a * b for a, b in zip(p, m))


def primitive(v: Sequence[int]) -> IntVector:
    """Divide ``v`` by the gcd of its entries.

    >>> primitive((2, 4))
    (1, 2)
    """
    g = math.gcd(*v)
    if g == 0:
        raise ZeroVector("the zero vector has no primitive generator")
    return tuple(x // g for x in v)


def det(A: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(A)
    if any(len(r) != n for r in A):
        raise DimMismatch("determinant of a non-square matrix")
    if n == 0:
        return 1
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _rref(A: Sequence[Sequence[Fraction | int]]) -> tuple[list[list[Fraction]], list[int]]:
    M = [[Fraction(x) for x in r] for r in A]
    pivots = []
    row = 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(M)) if M[i][col] != 0), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        inv = 1 / M[row][col]
        M[row] = [x * inv for x in M[row]]
        for i in range(len(M)):
            if i != row and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[row])]
        pivots.append(col)
        row += 1
        if row == len(M):
            break
    return M, pivots


def rank(A: Sequence[Sequence[int]]) -> int:
    if not A:
        return 0
    return len(_rref(A)[1])


def solve_rational(A: Sequence[Sequence[int]], b: Sequence[int]) -> tuple[Fraction, ...] | None:
    """Unique rational solution of ``A x = b`` for square nonsingular ``A``.

    Returns None when ``A`` is singular.
    """
    n = len(A)
    aug = [list(r) + [rhs] for r, rhs in zip(A, b)]
    M, pivots = _rref(aug)
    if pivots != list(range(n)):
        return None
    return tuple(M[i][n] for i in range(n))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b == g == gcd(a, b) >= 0.

    When ``a`` divides ``b`` the result is ``(|a|, sign(a), 0)`` so that the
    pivot row is never mixed with the row being cleared.
    """
    if a and b % a == 0:
        return abs(a), (1 if a > 0 else -1), 0
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _combine(rows: list[list[int]], i: int, j: int, x: int, y: int, u: int, v: int) -> None:
    # (row_i, row_j) <- (x*row_i + y*row_j, u*row_i + v*row_j)
    ri, rj = rows[i], rows[j]
    rows[i] = [x * a + y * b for a, b in zip(ri, rj)]
    rows[j] = [u * a + v * b for a, b in zip(ri, rj)]


def hnf(A: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Args:
        A: an m x n integer matrix.

    Returns:
        ``(H, U)`` with ``U`` unimodular and ``U @ A == H``.
    """
    H = [list(r) for r in A]
    m = len(H)
    ncols = len(H[0]) if m else 0
    U = [list(r) for r in identity(m)]
    row = 0
    for col in range(ncols):
        if row == m:
            break
        for i in range(row + 1, m):
            b = H[i][col]
            if b == 0:
                continue
            a = H[row][col]
            g, x, y = _xgcd(a, b)
            u, v = -b // g, a // g
            _combine(H, row, i, x, y, u, v)
            _combine(U, row, i, x, y, u, v)
        p = H[row][col]
        if p == 0:
            continue
        if p < 0:
            H[row] = [-a for a in H[row]]
            U[row] = [-a for a in U[row]]
            p = -p
        for i in range(row):
            q = H[i][col] // p
            if q:
                H[i] = [a - q * b for a, b in zip(H[i], H[row])]
                U[i] = [a - q * b for a, b in zip(U[i], U[row])]
        row += 1
    return matrix(H), matrix(U)


def lattice_hnf(generators: Sequence[Sequence[int]]) -> IntMatrix:
    """Canonical basis (nonzero HNF rows) of the lattice spanned by ``generators``."""
    if not generators:
        return ()
    H, _ = hnf(generators)
    return tuple(r for r in H if any(r))


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == S`` with ``S`` diagonal and ``U``, ``V`` unimodular."""

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix
    invariants: tuple[int, ...]


def snf(A: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form with nonnegative invariant factors d_1 | d_2 | ... .

    ``invariants`` lists the nonzero diagonal entries; zero diagonal entries
    of ``S`` trail them.
    """
    D = [list(r) for r in A]
    m = len(D)
    n = len(D[0]) if m else 0
    U = [list(r) for r in identity(m)]
    Vt = [list(r) for r in identity(n)]  # column ops are applied as row ops on V^T

    def col_op(i: int, j: int, x: int, y: int, u: int, v: int) -> None:
        Dt = [list(c) for c in zip(*D)]
        _combine(Dt, i, j, x, y, u, v)
        _combine(Vt, i, j, x, y, u, v)
        D[:] = [list(r) for r in zip(*Dt)]

    for t in range(min(m, n)):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        if i0 != t:
            D[t], D[i0] = D[i0], D[t]
            U[t], U[i0] = U[i0], U[t]
        if j0 != t:
            col_op(t, j0, 0, 1, 1, 0)
        while True:
            for i in range(t + 1, m):
                b = D[i][t]
                if b:
                    a = D[t][t]
                    g, x, y = _xgcd(a, b)
                    _combine(D, t, i, x, y, -b // g, a // g)
                    _combine(U, t, i, x, y, -b // g, a // g)
            for j in range(t + 1, n):
                b = D[t][j]
                if b:
                    a = D[t][t]
                    g, x, y = _xgcd(a, b)
                    col_op(t, j, x, y, -b // g, a // g)
            if any(D[i][t] for i in range(t + 1, m)):
                continue
            p = D[t][t]
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            D[t] = [a + b for a, b in zip(D[t], D[bad])]
            U[t] = [a + b for a, b in zip(U[t], U[bad])]
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    invariants = tuple(D[i][i] for i in range(min(m, n)) if D[i][i])
    return SmithDecomposition(
        S=matrix(D) if m else (),
        U=matrix(U) if m else (),
        V=transpose(Vt) if n else (),
        invariants=invariants,
    )


def is_lattice_basis(vs: Sequence[Sequence[int]]) -> bool:
    """True iff ``vs`` are exactly n vectors of dim n with determinant +-1."""
    if not vs:
        return False
    n = len(vs[0])
    if len(vs) != n or any(len(v) != n for v in vs):
        return False
    return abs(det(vs)) == 1


def coords_in_basis(basis: Sequence[Sequence[int]], v: Sequence[int]) -> IntVector:
    """Integer coordinates ``c`` with ``sum(c[i] * basis[i]) == v``."""
    if not is_lattice_basis(basis):
        raise NotABasis("coordinates requested in a non-basis")
    if len(v) != len(basis):
        raise DimMismatch("vector and basis dimensions differ")
    sol = solve_rational(transpose(basis), v)
    return tuple(int(c) for c in sol)


def dual_basis(basis: Sequence[Sequence[int]]) -> tuple[IntVector, ...]:
    """Vectors m_j with ``pairing(basis[i], m_j) == (i == j)``."""
    if not is_lattice_basis(basis):
        raise NotABasis("dual basis of a non-basis")
    n = len(basis)
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        sol = solve_rational(basis, e)
        cols.append(tuple(int(c) for c in sol))
    return tuple(cols)


def unimodular_part(vs: Sequence[Sequence[int]]) -> bool:
    """True iff ``vs`` can be extended to a lattice basis.

    Equivalently the vectors are independent and all their elementary
    divisors equal 1.
    """
    if not vs:
        return True
    dec = snf(vs)
    return len(dec.invariants) == len(vs) and all(d == 1 for d in dec.invariants)
