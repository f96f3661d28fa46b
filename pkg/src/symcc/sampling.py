"""Random constraint vectors for benchmarks and randomized checks."""

from __future__ import annotations

import random

from .constraint import ValidationError
from .general import validate_general


def random_sum_one_vector(n: int, rng: random.Random, band: int = 5) -> list[int]:
    """Sorted vector with entries in ``[-band, band]`` summing to 1 (rejection sampling)."""
    if n == 1:
        return [1]
    while True:
        head = [rng.randint(-band, band) for _ in range(n - 1)]
        last = 1 - sum(head)
        if -band <= last <= band:
            return sorted(head + [last])


def random_general_vector(n: int, s: int, rng: random.Random, band: int = 5) -> list[int]:
    """Sorted vector summing to ``s`` that the general engine accepts."""
    while True:
        head = [rng.randint(-band, band) for _ in range(n - 1)]
        last = s - sum(head)
        if not -band <= last <= band:
            continue
        vec = sorted(head + [last])
        try:
            validate_general(vec)
        except ValidationError:
            continue
        return vec
