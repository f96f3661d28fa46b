"""Constraint vectors: the problem instance ``sum_i a_i * lam_{pi(i)} >= 0``."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate
from typing import Sequence

__all__ = ["ValidationError", "ConstraintVector", "constraint_matrix"]


class ValidationError(ValueError):
    """Input rejected by an engine; ``route`` names the suggested fallback."""

    def __init__(self, message: str, route: str | None = None):
        super().__init__(message)
        self.route = route


@dataclass(frozen=True)
class ConstraintVector:
    """Sorted constraint coefficients with prefix sums.

    ``original`` keeps the caller's order; every generating function refers
    to ``a``, the ascending sort (the solution set does not depend on it).
    """

    a: tuple[int, ...]
    original: tuple[int, ...] = field(compare=False)
    prefix: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(accumulate(self.a)))

    @classmethod
    def from_raw(cls, values: Sequence[int]) -> "ConstraintVector":
        vals = tuple(int(v) for v in values)
        if not vals:
            raise ValidationError("constraint vector must be nonempty")
        return cls(tuple(sorted(vals)), vals)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def s(self) -> int:
        return self.prefix[-1]

    def suffix(self, j: int) -> int:
        """``a_{j+1} + ... + a_n`` (1-based j)."""
        return self.s - (self.prefix[j - 1] if j else 0)

    @property
    def was_sorted(self) -> bool:
        return self.a == self.original


def constraint_matrix(a: ConstraintVector) -> list[list[int]]:
    """Rows ``e_i - e_{i+1}`` for i < n, then the row ``a``."""
    n = a.n
    rows = []
    for i in range(n - 1):
        row = [0] * n
        row[i], row[i + 1] = 1, -1
        rows.append(row)
    rows.append(list(a.a))
    return rows
