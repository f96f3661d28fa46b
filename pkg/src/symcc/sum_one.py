"""Generating functions for constraint vectors whose entries sum to one.

For sorted ``a`` with ``sum(a) == 1`` the constraint matrix ``C`` (rows
``e_i - e_{i+1}`` and ``a``) is unimodular, its inverse ``B`` is
nonnegative, and every permutation class of solutions is a simplicial
cone generated by the columns of ``B`` with the strict descent
inequalities shifting the apex.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import FactoredGF, LaurentPoly, MultiGF, MultiTerm
from .constraint import ConstraintVector, ValidationError, constraint_matrix
from .intlinalg import identity, matmul
from .permstat import algorithm_g, all_permutations, descent_set

__all__ = [
    "validate_sum_one",
    "generator_matrix_t1",
    "descent_exponents_t1",
    "gf_q_t1",
    "gf_multi_t1",
    "permute_exponents",
    "DEFAULT_MULTI_GUARD_T1",
]

DEFAULT_MULTI_GUARD_T1 = 8


def validate_sum_one(a: Sequence[int] | ConstraintVector) -> ConstraintVector:
    cv = a if isinstance(a, ConstraintVector) else ConstraintVector.from_raw(a)
    if cv.s != 1:
        raise ValidationError(f"entries sum to {cv.s}, not 1; use the general engine", route="t2")
    # sorted with total 1 forces every proper prefix sum <= 0
    assert all(p <= 0 for p in cv.prefix[:-1]), cv
    return cv


def generator_matrix_t1(a: ConstraintVector) -> list[list[int]]:
    """Inverse of the constraint matrix, as rows."""
    n, pre = a.n, a.prefix
    B = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if j == n - 1:
                B[i][j] = 1
            elif i > j:
                B[i][j] = -pre[j]
            else:
                B[i][j] = 1 - pre[j]
    if matmul(constraint_matrix(a), B) != identity(n):
        raise AssertionError(f"C*B != I for {a.a}")
    return B


def descent_exponents_t1(a: ConstraintVector) -> list[int]:
    """Total degree ``j - n * prefix_j`` of generator j, for j = 1..n-1."""
    return [j - a.n * a.prefix[j - 1] for j in range(1, a.n)]


def gf_q_t1(a: ConstraintVector) -> FactoredGF:
    """``F(q)``: Algorithm G numerator over ``(1-q^n) prod_j (1-q^{j - n prefix_j})``."""
    a = validate_sum_one(a)
    exps = descent_exponents_t1(a)
    numerator = algorithm_g(a.n, [LaurentPoly.monomial(e) for e in exps])
    return FactoredGF(numerator, (a.n, *exps))


def permute_exponents(b: Sequence[int], pi: Sequence[int]) -> tuple[int, ...]:
    """Exponent vector of ``z_pi ** b``: coordinate i of ``b`` goes to variable pi(i)."""
    out = [0] * len(b)
    for i, bi in enumerate(b):
        out[pi[i] - 1] = bi
    return tuple(out)


def gf_multi_t1(a: ConstraintVector, n_guard: int = DEFAULT_MULTI_GUARD_T1) -> MultiGF:
    """``F(z_1..z_n)`` as one uncombined term per permutation."""
    a = validate_sum_one(a)
    n = a.n
    if n > n_guard:
        raise ValidationError(f"n={n} exceeds the multivariate guard {n_guard} ({n}! terms)")
    B = generator_matrix_t1(a)
    cols = [tuple(B[i][j] for i in range(n)) for j in range(n)]
    terms = []
    for pi in all_permutations(n):
        mono = [0] * n
        for j in descent_set(pi):
            mono = [m + c for m, c in zip(mono, cols[j - 1])]
        terms.append(
            MultiTerm(
                numerator=((permute_exponents(mono, pi), 1),),
                denominators=tuple(permute_exponents(c, pi) for c in cols),
            )
        )
    return MultiGF(n, tuple(terms))
