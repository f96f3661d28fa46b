"""Four reference families with closed-form generating functions.

Every family has ``sum(a) == 1``:

1. ``[-b, ..., -b, nb-b+1]``
2. ``[-(nb-b-1), b, ..., b]``
3. ``[-b, 0, ..., 0, b+1]``
4. ``[-m, 0, ..., 0, k, l]`` with ``m = k + l - 1``

Families 1 and 2 have factored forms; 3 and 4 have a genuinely rational
structure and are exposed as truncated series.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .algebra import (
    FactoredGF,
    LaurentPoly,
    bipoly_substitute_x,
    series_add,
    series_expand,
    series_expand_laurent,
    series_mul,
)
from .constraint import ConstraintVector
from .permstat import carlitz

__all__ = [
    "ExampleParams",
    "example_vector",
    "example1_gf",
    "example2_gf",
    "example3_gf",
    "example3_presimplified",
    "example4_gf",
    "example4_factored",
    "family_series",
]


@dataclass(frozen=True)
class ExampleParams:
    family: int
    n: int
    b: int | None = None
    k: int | None = None
    l: int | None = None

    def __post_init__(self):
        if self.family not in (1, 2, 3, 4):
            raise ValueError(f"unknown family {self.family}")
        if self.family == 4:
            if self.n < 3:
                raise ValueError("family 4 needs n >= 3")
            if self.k is None or self.l is None or not 1 <= self.k <= self.l:
                raise ValueError("family 4 needs 1 <= k <= l")
        else:
            if self.n < 2:
                raise ValueError(f"family {self.family} needs n >= 2")
            if self.b is None or self.b < 1:
                raise ValueError(f"family {self.family} needs b >= 1")
            if self.family == 2 and self.n * self.b - 1 < 1:
                raise ValueError("family 2 needs nb - 1 >= 1")

    @property
    def m(self) -> int | None:
        return None if self.family != 4 else self.k + self.l - 1


def example_vector(p: ExampleParams) -> ConstraintVector:
    n, b = p.n, p.b
    if p.family == 1:
        raw = [-b] * (n - 1) + [n * b - b + 1]
    elif p.family == 2:
        raw = [-(n * b - b - 1)] + [b] * (n - 1)
    elif p.family == 3:
        raw = [-b] + [0] * (n - 2) + [b + 1]
    else:
        raw = [-p.m] + [0] * (n - 3) + [p.k, p.l]
    return ConstraintVector.from_raw(raw)


def example1_gf(n: int, b: int) -> FactoredGF:
    e = n * b + 1
    return FactoredGF(LaurentPoly({0: 1, n * e: -1}), (n, *[e] * n))


def example2_gf(n: int, b: int) -> FactoredGF:
    e = n * b - 1
    if e < 1:
        raise ValueError("need nb - 1 >= 1")
    return FactoredGF(LaurentPoly({0: 1, n * e: -1}), (n, *[e] * n))


def _geometric(exponent: int, M: int) -> list[int]:
    return series_expand(FactoredGF(LaurentPoly.one(), (exponent,)), M)


def example3_presimplified(n: int, b: int) -> FactoredGF:
    """Carlitz numerator ``C_n(q^{bn}, q)`` over the engine's denominator."""
    num = bipoly_substitute_x(carlitz(n), b * n)
    return FactoredGF(num, (n, *[j + b * n for j in range(1, n)]))


def example3_gf(n: int, b: int, M: int) -> list[int]:
    """Series of the binomial-sum closed form, cross-checked against the Carlitz form."""
    bn = b * n
    prefactor = series_expand(
        FactoredGF(LaurentPoly({0: 1, bn: -1}) * LaurentPoly({0: 1, bn + n: -1}), (n, *[1] * n)),
        M,
    )
    total = [0] * (M + 1)
    for i in range(n + 1):
        summand = [comb(n, i) * (-1) ** i * c for c in _geometric(bn + i, M)]
        summand = [0] * i + summand[: M + 1 - i]  # times q^i
        total = series_add(total, summand)
    result = series_mul(prefactor, total, M)
    check = series_expand(example3_presimplified(n, b), M)
    if result != check:
        raise AssertionError(f"family 3 closed forms disagree for n={n}, b={b}")
    return result


def example4_factored(n: int, k: int, l: int) -> FactoredGF:
    """Carlitz-based form; the numerator may carry the Laurent term ``q^{-nk}``."""
    if n < 3 or not 1 <= k <= l:
        raise ValueError("family 4 needs n >= 3 and 1 <= k <= l")
    m = k + l - 1
    x = n * m
    cn = bipoly_substitute_x(carlitz(n), x)
    cn1 = bipoly_substitute_x(carlitz(n - 1), x)
    num = cn * LaurentPoly({0: 1, n * l - 1: -1}) - cn1 * LaurentPoly({x + n - 1: n, x + n - 1 - n * k: -n})
    dens = (n, n * l - 1, *[x + 1 + i for i in range(n - 1)])
    return FactoredGF(num, dens)


def example4_gf(n: int, k: int, l: int, M: int) -> list[int]:
    return series_expand_laurent(example4_factored(n, k, l), M)


def family_series(p: ExampleParams, M: int) -> list[int]:
    """Closed-form series for any family, to degree ``M``."""
    if p.family == 1:
        return series_expand(example1_gf(p.n, p.b), M)
    if p.family == 2:
        return series_expand(example2_gf(p.n, p.b), M)
    if p.family == 3:
        return example3_gf(p.n, p.b, M)
    return example4_gf(p.n, p.k, p.l, M)
