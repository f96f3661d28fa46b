"""Descent statistics, Carlitz q-Eulerian polynomials and Algorithm G.

Permutations are tuples in one-line notation over ``1..n``; descent
positions are 1-based, so ``(3, 2, 1)`` has descent set ``{1, 2}``.
"""

from __future__ import annotations

from itertools import permutations
from typing import Any, Iterator, Sequence

from .algebra import BiPoly, LaurentPoly

__all__ = [
    "MAX_ENUMERATION_N",
    "descent_set",
    "descent_stats",
    "all_permutations",
    "carlitz",
    "carlitz_nodesc",
    "maj_distribution",
    "algorithm_g",
    "g_table",
    "descent_sum_direct",
]

MAX_ENUMERATION_N = 10


def descent_set(pi: Sequence[int]) -> frozenset[int]:
    return frozenset(j + 1 for j in range(len(pi) - 1) if pi[j] > pi[j + 1])


def descent_stats(pi: Sequence[int]) -> tuple[frozenset[int], int, int]:
    """Return ``(descent set, des, maj)`` of a permutation of ``1..n``."""
    if sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError(f"{tuple(pi)} is not a permutation of 1..{len(pi)}")
    d = descent_set(pi)
    return d, len(d), sum(d)


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    return permutations(range(1, n + 1))


def _check_enumerable(n: int) -> None:
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"n={n} too large for direct enumeration (limit {MAX_ENUMERATION_N})")


def carlitz_nodesc(n: int, i: int) -> BiPoly:
    """Sum of ``x**des q**maj`` over permutations with no descent at n-i..n-1."""
    _check_enumerable(n)
    if not 0 <= i <= n - 1:
        raise ValueError(f"i must lie in 0..{n - 1}, got {i}")
    forbidden = set(range(n - i, n))
    acc: dict[tuple[int, int], int] = {}
    for pi in all_permutations(n):
        d = descent_set(pi)
        if d & forbidden:
            continue
        key = (len(d), sum(d))
        acc[key] = acc.get(key, 0) + 1
    return BiPoly(acc)


def carlitz(n: int) -> BiPoly:
    """Carlitz q-Eulerian polynomial, the joint (des, maj) distribution on S_n."""
    return carlitz_nodesc(n, 0)


def maj_distribution(n: int) -> LaurentPoly:
    _check_enumerable(n)
    return LaurentPoly.from_terms((sum(descent_set(pi)), 1) for pi in all_permutations(n))


def descent_sum_direct(n: int, u: Sequence[Any], one: Any = None) -> Any:
    """Sum over S_n of the product of ``u[j-1]`` for descents ``j``; n! terms."""
    one = LaurentPoly.one() if one is None else one
    total = one - one
    for pi in all_permutations(n):
        prod = one
        for j in sorted(descent_set(pi)):
            prod = prod * u[j - 1]
        total = total + prod
    return total


def _g_rows(n: int, weights: Sequence[Any], one: Any) -> Iterator[list[Any]]:
    # Row k holds G_k^(1..k); weights[k-2] is the descent weight u_{k-1}.
    row = [one]
    yield row
    for k in range(2, len(weights) + 2):
        w = weights[k - 2]
        prev = row
        new = [w * _sum(prev, one)]
        for i in range(1, k):
            new.append(new[i - 1] + prev[i - 1] - w * prev[i - 1])
        row = new
        yield row


def _sum(items: Sequence[Any], one: Any) -> Any:
    total = items[0]
    for it in items[1:]:
        total = total + it
    return total


def g_table(n: int, u: Sequence[Any], u_last: Any = None, one: Any = None) -> dict[tuple[int, int], Any]:
    """Full memo table ``{(k, i): G_k^(i)}`` for ``1 <= i <= k <= n+1``.

    ``u_last`` plays the part of ``u_n``, which only enters level n+1.
    """
    one = LaurentPoly.one() if one is None else one
    if len(u) != n - 1:
        raise ValueError(f"need {n - 1} weights for n={n}, got {len(u)}")
    u_last = one - one if u_last is None else u_last
    table = {}
    for k, row in enumerate(_g_rows(n, list(u) + [u_last], one), start=1):
        for i, g in enumerate(row, start=1):
            table[k, i] = g
    return table


def algorithm_g(n: int, u: Sequence[Any], one: Any = None) -> Any:
    """``G_n``: sum over S_n of the product of descent weights, in O(n^2) additions.

    Evaluated as ``G_{n+1}^(n+1)``; the weight ``u_n`` needed by that last
    level cancels, so it is taken as zero.  ``u`` may hold any ring
    elements (LaurentPoly by default, ints, BiPoly) that support ``+``,
    ``-`` and ``*``; pass ``one`` when they are not LaurentPoly.

    >>> q = LaurentPoly.monomial
    >>> algorithm_g(3, [q(1), q(2)]).terms()
    [(0, 1), (1, 2), (2, 2), (3, 1)]
    """
    one = LaurentPoly.one() if one is None else one
    if n < 1:
        raise ValueError("n must be positive")
    if len(u) != n - 1:
        raise ValueError(f"need {n - 1} weights for n={n}, got {len(u)}")
    row = None
    for row in _g_rows(n, list(u) + [one - one], one):
        pass
    return row[-1]
