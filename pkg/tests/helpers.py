"""Independent reference routines shared by the tests."""

from fractions import Fraction

from symcc.algebra import MultiGF, MultiTerm
from symcc.oracle import valid_set


def fraction_inverse(M):
    """Gauss-Jordan inverse over the rationals."""
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def oracle_multi_series(a, max_degree):
    return {lam: 1 for lam in valid_set(a, max_degree)}


def single_term(numerator, denominators, n):
    return MultiGF(n, (MultiTerm(tuple(numerator), tuple(denominators)),))
