"""Generating functions for sorted ``a`` with ``sum(a) = s >= 1``.

The cone of sorted solutions is generated by the columns ``A_j`` of
``s * C^{-1}``.  Its lattice points are ``p + sum c_j A_j`` for ``p`` in the
half-open parallelepiped spanned by the generators; the strict descent
inequalities of a permutation class only bite on points ``p`` whose
coordinates ``i`` and ``i+1`` coincide.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .algebra import FactoredGF, LaurentPoly, MultiGF, MultiTerm
from .constraint import ConstraintVector, ValidationError, constraint_matrix
from .intlinalg import adjugate, bareiss_det, box, column_gcd, column_hnf, identity, matmul, matvec
from .permstat import algorithm_g, all_permutations, descent_set
from .sum_one import permute_exponents

__all__ = [
    "GeneratorMatrixT2",
    "Parallelepiped",
    "validate_general",
    "generator_matrix_t2",
    "parallelepiped_points",
    "parallelepiped_points_scan",
    "gf_q_general",
    "gf_multi_general",
    "DEFAULT_POINT_CAP",
    "DEFAULT_MULTI_GUARD_T2",
]

DEFAULT_POINT_CAP = 10**6
DEFAULT_MULTI_GUARD_T2 = 6


@dataclass(frozen=True)
class GeneratorMatrixT2:
    A: tuple[tuple[int, ...], ...]  # rows
    column_divisors: tuple[int, ...]
    det: int

    @property
    def n(self) -> int:
        return len(self.A)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.A)

    @property
    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(self.n)]

    @property
    def column_sums(self) -> list[int]:
        return [sum(c) for c in self.columns]


@dataclass(frozen=True)
class Parallelepiped:
    points: tuple[tuple[int, ...], ...]
    matrix: GeneratorMatrixT2


def validate_general(a: Sequence[int] | ConstraintVector) -> ConstraintVector:
    cv = a if isinstance(a, ConstraintVector) else ConstraintVector.from_raw(a)
    if cv.s < 1:
        raise ValidationError(f"entries sum to {cv.s} < 1", route="oracle")
    bad = [j + 1 for j, p in enumerate(cv.prefix[:-1]) if p > 0]
    if bad:
        raise ValidationError(
            f"prefix sum a_1+...+a_{bad[0]} = {cv.prefix[bad[0] - 1]} > 0; only the oracle applies",
            route="oracle",
        )
    return cv


def generator_matrix_t2(a: ConstraintVector, reduce: bool = True) -> GeneratorMatrixT2:
    """Generators as columns; with ``reduce`` each column is divided by its gcd."""
    a = validate_general(a)
    n, s, pre = a.n, a.s, a.prefix
    A = [[0] * n for _ in range(n)]
    for j in range(n):
        for i in range(n):
            if j == n - 1:
                A[i][j] = 1
            elif i <= j:
                A[i][j] = s - pre[j]
            else:
                A[i][j] = -pre[j]
    if matmul(constraint_matrix(a), A) != identity(n, s):
        raise AssertionError(f"C*A != sI for {a.a}")
    divisors = [1] * n
    if reduce:
        for j in range(n):
            d = column_gcd(A, j)
            if d > 1:
                divisors[j] = d
                for row in A:
                    row[j] //= d
    det = bareiss_det(A)
    if det <= 0:
        raise AssertionError(f"generator determinant {det} is not positive")
    return GeneratorMatrixT2(tuple(map(tuple, A)), tuple(divisors), det)


def _in_parallelepiped(adj: list[list[int]], det: int, p: Sequence[int]) -> bool:
    return all(0 <= c < det for c in matvec(adj, p))


def parallelepiped_points(M: GeneratorMatrixT2, cap: int = DEFAULT_POINT_CAP) -> Parallelepiped:
    """Integer points of the half-open parallelepiped spanned by the columns.

    Coset representatives of ``Z^n / A Z^n`` are read off a triangular basis
    of the column lattice, then folded into the parallelepiped by
    subtracting ``A * floor(A^{-1} r)``.
    """
    if M.det > cap:
        raise ValidationError(f"{M.det} lattice points exceed the cap {cap}")
    A = [list(r) for r in M.A]
    adj = adjugate(A)
    H = column_hnf(A)
    pts = set()
    for r in box([H[i][i] for i in range(M.n)]):
        floors = [c // M.det for c in matvec(adj, r)]
        p = tuple(ri - si for ri, si in zip(r, matvec(A, floors)))
        pts.add(p)
    if len(pts) != M.det:
        raise AssertionError(f"found {len(pts)} points, expected det = {M.det}")
    for p in pts:
        if not _in_parallelepiped(adj, M.det, p):
            raise AssertionError(f"{p} outside the parallelepiped")
    return Parallelepiped(tuple(sorted(pts)), M)


def parallelepiped_points_scan(M: GeneratorMatrixT2) -> Parallelepiped:
    """Bounding-box scan with the exact membership test; slow, for checking."""
    A = [list(r) for r in M.A]
    adj = adjugate(A)
    bounds = [max(1, sum(row)) for row in A]
    pts = tuple(p for p in box(bounds) if _in_parallelepiped(adj, M.det, p))
    if len(pts) != M.det:
        raise AssertionError(f"scan found {len(pts)} points, expected det = {M.det}")
    return Parallelepiped(pts, M)


def _tie_pattern(p: Sequence[int]) -> tuple[bool, ...]:
    return tuple(p[i] == p[i + 1] for i in range(len(p) - 1))


def gf_q_general(a: ConstraintVector, reduce: bool = True, cap: int = DEFAULT_POINT_CAP) -> FactoredGF:
    """``F(q)`` summed over parallelepiped points.

    Points are grouped by which neighbouring coordinates tie, since the
    Algorithm G factor depends only on that pattern.
    """
    a = validate_general(a)
    M = generator_matrix_t2(a, reduce=reduce)
    sums = M.column_sums
    shifts: dict[tuple[bool, ...], LaurentPoly] = defaultdict(LaurentPoly.zero)
    for p in parallelepiped_points(M, cap).points:
        shifts[_tie_pattern(p)] += LaurentPoly.monomial(sum(p))
    one = LaurentPoly.one()
    numerator = LaurentPoly.zero()
    for pattern, weight in shifts.items():
        u = [LaurentPoly.monomial(sums[i]) if tie else one for i, tie in enumerate(pattern)]
        numerator += weight * algorithm_g(a.n, u)
    return FactoredGF(numerator, tuple(sums))


def gf_multi_general(
    a: ConstraintVector,
    n_guard: int = DEFAULT_MULTI_GUARD_T2,
    reduce: bool = True,
    cap: int = DEFAULT_POINT_CAP,
) -> MultiGF:
    """``F(z_1..z_n)``: one term per permutation, numerator summed over points."""
    a = validate_general(a)
    n = a.n
    if n > n_guard:
        raise ValidationError(f"n={n} exceeds the multivariate guard {n_guard}")
    M = generator_matrix_t2(a, reduce=reduce)
    cols = M.columns
    points = parallelepiped_points(M, cap).points
    terms = []
    for pi in all_permutations(n):
        D = descent_set(pi)
        num: dict[tuple[int, ...], int] = defaultdict(int)
        for p in points:
            mono = list(p)
            for i in D:
                if p[i - 1] == p[i]:
                    mono = [m + c for m, c in zip(mono, cols[i - 1])]
            num[permute_exponents(mono, pi)] += 1
        terms.append(
            MultiTerm(
                numerator=tuple(sorted(num.items())),
                denominators=tuple(permute_exponents(c, pi) for c in cols),
            )
        )
    return MultiGF(n, tuple(terms))
