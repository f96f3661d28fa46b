"""Brute-force enumeration of symmetrically constrained compositions.

Works on any integer vector, sorted or not, including those the engines
reject.  Meant to be obviously correct rather than fast.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator, Literal, Sequence

from .constraint import ConstraintVector

__all__ = ["compositions", "is_valid", "count_by_weight", "valid_set", "DEFAULT_ORACLE_GUARD"]

DEFAULT_ORACLE_GUARD = 25


def _coeffs(a: Sequence[int] | ConstraintVector) -> tuple[int, ...]:
    return a.original if isinstance(a, ConstraintVector) else tuple(a)


def compositions(M: int, n: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``M`` into ``n`` parts, lexicographically descending."""
    if n == 1:
        yield (M,)
        return
    for first in range(M, -1, -1):
        for rest in compositions(M - first, n - 1):
            yield (first, *rest)


def is_valid(
    lam: Sequence[int],
    a: Sequence[int] | ConstraintVector,
    mode: Literal["fast", "full"] = "fast",
) -> bool:
    """Whether every rearrangement of ``lam`` satisfies ``sum a_i lam_i >= 0``.

    ``fast`` pairs ascending ``a`` with descending ``lam``, the minimising
    pairing by the rearrangement inequality; ``full`` tries all n! orders.
    """
    coeffs = _coeffs(a)
    if len(lam) != len(coeffs):
        raise ValueError(f"composition has {len(lam)} parts, constraint has {len(coeffs)}")
    if mode == "fast":
        return sum(x * y for x, y in zip(sorted(coeffs), sorted(lam, reverse=True))) >= 0
    if mode == "full":
        return all(sum(x * y for x, y in zip(coeffs, perm)) >= 0 for perm in permutations(lam))
    raise ValueError(f"unknown mode {mode!r}")


def count_by_weight(a: Sequence[int] | ConstraintVector, M_max: int) -> list[int]:
    """Number of valid compositions of each weight ``0..M_max``."""
    if M_max < 0:
        raise ValueError("M_max must be nonnegative")
    coeffs = _coeffs(a)
    n = len(coeffs)
    return [sum(1 for lam in compositions(M, n) if is_valid(lam, coeffs)) for M in range(M_max + 1)]


def valid_set(a: Sequence[int] | ConstraintVector, M_max: int) -> list[tuple[int, ...]]:
    """All valid compositions of weight at most ``M_max``, by weight then lexicographically."""
    coeffs = _coeffs(a)
    n = len(coeffs)
    return [lam for M in range(M_max + 1) for lam in compositions(M, n) if is_valid(lam, coeffs)]
