"""Small exact integer matrix routines (lists of rows, no floating point)."""

from __future__ import annotations

from itertools import product
from math import gcd
from typing import Sequence

Matrix = list[list[int]]

__all__ = [
    "matmul",
    "matvec",
    "identity",
    "transpose",
    "bareiss_det",
    "adjugate",
    "column_hnf",
    "column_gcd",
    "box",
]


def identity(n: int, scale: int = 1) -> Matrix:
    return [[scale if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*A)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    Bt = transpose(B)
    return [[sum(x * y for x, y in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in A]


def bareiss_det(A: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    M = [list(r) for r in A]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def adjugate(A: Sequence[Sequence[int]]) -> Matrix:
    """Classical adjoint, so that ``A @ adj(A) = det(A) * I``."""
    n = len(A)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(A) if k != i]
            # transpose: cofactor (i, j) lands at (j, i)
            adj[j][i] = (-1) ** (i + j) * bareiss_det(minor)
    return adj


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def column_hnf(A: Sequence[Sequence[int]]) -> Matrix:
    """Lower-triangular basis of the column lattice of a nonsingular ``A``.

    Unimodular column operations only; the diagonal is made positive.
    """
    H = [list(r) for r in A]
    n = len(H)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = H[i][i], H[i][j]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            ca, cb = a // g, b // g
            for r in range(n):
                hi, hj = H[r][i], H[r][j]
                H[r][i] = x * hi + y * hj
                H[r][j] = -cb * hi + ca * hj
        if H[i][i] == 0:
            raise ValueError("matrix is singular")
        if H[i][i] < 0:
            for r in range(n):
                H[r][i] = -H[r][i]
    return H


def column_gcd(A: Sequence[Sequence[int]], j: int) -> int:
    g = 0
    for row in A:
        g = gcd(g, row[j])
    return g


def box(bounds: Sequence[int]):
    """All integer vectors ``0 <= x_i < bounds[i]``."""
    return product(*(range(b) for b in bounds))
