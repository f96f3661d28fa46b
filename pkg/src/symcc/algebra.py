"""Exact integer polynomial arithmetic and power-series expansion.

Two sparse polynomial types carry every expression in the package:

* :class:`LaurentPoly` -- integer coefficients, integer (possibly negative)
  exponents of ``q``.
* :class:`BiPoly` -- integer coefficients in ``x`` (exponent >= 0) and ``q``.

Generating functions are kept with factored denominators
(:class:`FactoredGF`, :class:`MultiGF`) and compared through truncated
series expansion.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = [
    "NonExactDivision",
    "LaurentPoly",
    "BiPoly",
    "FactoredGF",
    "MultiTerm",
    "MultiGF",
    "poly_mul",
    "poly_exact_div",
    "series_expand",
    "series_expand_laurent",
    "series_mul",
    "series_add",
    "q_factorial",
    "q_pochhammer",
    "bipoly_substitute_x",
    "multi_series",
    "multi_specialize",
]


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial quotient leaves a nonzero remainder."""


def _pruned(terms: Mapping) -> dict:
    return {k: v for k, v in terms.items() if v}


class LaurentPoly:
    """Sparse Laurent polynomial in ``q`` with integer coefficients.

    Instances are immutable; arithmetic returns new objects.

    >>> (LaurentPoly.from_coeffs([1, 1]) * LaurentPoly.from_coeffs([1, -1])).terms()
    [(0, 1), (2, -1)]
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._t = _pruned(terms) if terms else {}

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._t = terms
        return obj

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls._raw({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], offset: int = 0) -> "LaurentPoly":
        """Dense coefficient list ``[c0, c1, ...]`` starting at ``q**offset``."""
        return cls({offset + i: c for i, c in enumerate(coeffs)})

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[int, int]]) -> "LaurentPoly":
        acc: dict[int, int] = defaultdict(int)
        for e, c in pairs:
            acc[e] += c
        return cls(acc)

    # --- inspection ---------------------------------------------------

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs by ascending exponent."""
        return sorted(self._t.items())

    def as_dict(self) -> dict[int, int]:
        return dict(self._t)

    def coeff(self, exponent: int) -> int:
        return self._t.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._t

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    @property
    def min_exponent(self) -> int:
        if not self._t:
            raise ValueError("zero polynomial has no exponents")
        return min(self._t)

    @property
    def max_exponent(self) -> int:
        if not self._t:
            raise ValueError("zero polynomial has no exponents")
        return max(self._t)

    def to_list(self) -> list[int]:
        """Dense coefficients of q^0..q^max; requires no negative exponents."""
        if not self._t:
            return []
        if self.min_exponent < 0:
            raise ValueError("negative exponents present")
        out = [0] * (self.max_exponent + 1)
        for e, c in self._t.items():
            out[e] = c
        return out

    # --- arithmetic ---------------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(other._t) > len(self._t):
            big, small = other._t, self._t
        else:
            big, small = self._t, other._t
        out = dict(big)
        for e, c in small.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                del out[e]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly({0: other}) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            return LaurentPoly._raw({e: c * other for e, c in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._t.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Replace ``q`` by ``q**k``."""
        if k == 0:
            return LaurentPoly({0: sum(self._t.values())})
        return LaurentPoly._raw({e * k: c for e, c in self._t.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly({self.terms()!r})"

    def __str__(self) -> str:
        if not self._t:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                mono = str(abs(c))
            else:
                var = "q" if e == 1 else f"q^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, mono in parts[1:]:
            text += f" {sign} {mono}"
        return text


def poly_mul(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    """Exact product of two Laurent polynomials."""
    a, b = p._t, r._t
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return LaurentPoly.zero()
    if len(b) == 1:
        ((eb, cb),) = b.items()
        return LaurentPoly._raw({e + eb: c * cb for e, c in a.items()})
    out: dict[int, int] = defaultdict(int)
    for eb, cb in b.items():
        for ea, ca in a.items():
            out[ea + eb] += ca * cb
    return LaurentPoly(out)


def poly_exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Quotient ``p / d``, raising :class:`NonExactDivision` on a remainder."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero()
    shift = p.min_exponent - d.min_exponent
    num = p.shift(-p.min_exponent).to_list()
    den = d.shift(-d.min_exponent).to_list()
    if len(den) > len(num):
        raise NonExactDivision(f"{p} is not divisible by {d}")
    lead = den[-1]
    quotient = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    for i in range(len(quotient) - 1, -1, -1):
        top = rem[i + len(den) - 1]
        if top % lead:
            raise NonExactDivision(f"{p} is not divisible by {d}")
        c = top // lead
        quotient[i] = c
        if c:
            for j, dj in enumerate(den):
                rem[i + j] -= c * dj
    if any(rem):
        raise NonExactDivision(f"{p} is not divisible by {d}")
    return LaurentPoly.from_coeffs(quotient).shift(shift)


# --- bivariate --------------------------------------------------------


class BiPoly:
    """Sparse polynomial in ``x`` (exponent >= 0) and ``q`` (any integer)."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        t = _pruned(terms) if terms else {}
        if any(xe < 0 for xe, _ in t):
            raise ValueError("x-exponents must be nonnegative")
        self._t = t

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def monomial(cls, x_exp: int, q_exp: int, coeff: int = 1) -> "BiPoly":
        return cls({(x_exp, q_exp): coeff})

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "BiPoly":
        return cls({(0, e): c for e, c in p.terms()})

    def terms(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._t.items())

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __len__(self) -> int:
        return len(self._t)

    def to_laurent(self) -> LaurentPoly:
        if any(xe for xe, _ in self._t):
            raise ValueError("polynomial depends on x")
        return LaurentPoly({qe: c for (_, qe), c in self._t.items()})

    def __add__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._t)
        for k, c in other._t.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self._t.items()})

    def __sub__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "BiPoly":
        return BiPoly({(0, 0): other}) - self

    def __mul__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            return BiPoly({k: c * other for k, c in self._t.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = defaultdict(int)
        for (xa, qa), ca in self._t.items():
            for (xb, qb), cb in other._t.items():
                out[xa + xb, qa + qb] += ca * cb
        return BiPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiPoly({(0, 0): other})
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self.terms()!r})"


def bipoly_substitute_x(P: BiPoly, k: int) -> LaurentPoly:
    """Evaluate ``P`` at ``x = q**k``."""
    out: dict[int, int] = defaultdict(int)
    for (xe, qe), c in P._t.items():
        out[xe * k + qe] += c
    return LaurentPoly(out)


def q_pochhammer(k: int, n: int, x_degree: int = 0) -> BiPoly:
    """``(x**x_degree * q**k; q)_n``, the product of ``1 - x**x_degree q**(k+i)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = BiPoly.one()
    for i in range(n):
        result = result * BiPoly({(0, 0): 1, (x_degree, k + i): -1})
    return result


def q_factorial(n: int) -> LaurentPoly:
    """``[n]_q!`` obtained by exact division of ``(q;q)_n`` by ``(1-q)**n``."""
    if n < 1:
        raise ValueError("n must be positive")
    result = LaurentPoly.one()
    one_minus_q = LaurentPoly({0: 1, 1: -1})
    for i in range(1, n + 1):
        result = result * poly_exact_div(LaurentPoly({0: 1, i: -1}), one_minus_q)
    return result


# --- univariate factored generating functions -------------------------


@dataclass(frozen=True)
class FactoredGF:
    """``numerator / prod_j (1 - q**e_j)`` with the denominator kept factored."""

    numerator: LaurentPoly
    denominators: tuple[int, ...]

    def __post_init__(self):
        dens = tuple(sorted(int(e) for e in self.denominators))
        if any(e < 1 for e in dens):
            raise ValueError(f"denominator exponents must be >= 1, got {dens}")
        object.__setattr__(self, "denominators", dens)

    def __str__(self) -> str:
        den = "".join(f"(1 - q^{e})" for e in self.denominators) or "1"
        return f"({self.numerator}) / {den}"


def _divide_by_factors(coeffs: list[int], exponents: Iterable[int]) -> list[int]:
    # in-place: c_i += c_{i-e} ascending applies 1/(1 - q^e)
    M = len(coeffs) - 1
    for e in exponents:
        for i in range(e, M + 1):
            coeffs[i] += coeffs[i - e]
    return coeffs


def series_expand(gf: FactoredGF, M: int) -> list[int]:
    """Coefficients of ``q**0 .. q**M`` in the power series of ``gf``."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    num = gf.numerator
    coeffs = [0] * (M + 1)
    if num.is_zero():
        return coeffs
    if num.min_exponent < 0:
        raise ValueError(
            f"numerator has negative exponent q^{num.min_exponent}; "
            "use series_expand_laurent"
        )
    for e, c in num.terms():
        if e <= M:
            coeffs[e] += c
    return _divide_by_factors(coeffs, gf.denominators)


def series_expand_laurent(gf: FactoredGF, M: int) -> list[int]:
    """Like :func:`series_expand` but tolerates a Laurent numerator.

    The numerator is multiplied through by ``q**-min_exponent``, expanded,
    and shifted back.  The resulting Laurent series must have no negative
    powers, otherwise ``ValueError`` is raised.
    """
    num = gf.numerator
    if num.is_zero() or num.min_exponent >= 0:
        return series_expand(gf, M)
    low = num.min_exponent
    shifted = series_expand(FactoredGF(num.shift(-low), gf.denominators), M - low)
    if any(shifted[: -low]):
        raise ValueError("series has nonzero coefficients at negative powers of q")
    return shifted[-low:]


def series_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def series_mul(a: Sequence[int], b: Sequence[int], M: int) -> list[int]:
    """Product of two power series truncated to degree ``M``."""
    out = [0] * (M + 1)
    for i, ai in enumerate(a[: M + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: M + 1 - i]):
            out[i + j] += ai * bj
    return out


# --- multivariate -----------------------------------------------------

ExpVector = tuple[int, ...]


@dataclass(frozen=True)
class MultiTerm:
    """``sum(numerator) / prod_{v in denominators} (1 - z**v)``."""

    numerator: tuple[tuple[ExpVector, int], ...]
    denominators: tuple[ExpVector, ...]


@dataclass(frozen=True)
class MultiGF:
    """Sum of :class:`MultiTerm` in ``n`` variables, kept uncombined."""

    n: int
    terms: tuple[MultiTerm, ...]

    def __post_init__(self):
        for t in self.terms:
            if len(t.denominators) != self.n:
                raise ValueError("each term needs exactly n denominator vectors")
            vecs = list(t.denominators) + [m for m, _ in t.numerator]
            for v in vecs:
                if len(v) != self.n or min(v) < 0:
                    raise ValueError(f"bad exponent vector {v}")


def _add_vec(a: ExpVector, b: ExpVector) -> ExpVector:
    return tuple(x + y for x, y in zip(a, b))


def multi_series(gf: MultiGF, max_degree: int) -> dict[ExpVector, int]:
    """Multivariate series of ``gf`` through total degree ``max_degree``.

    Zero coefficients are omitted from the result.
    """
    total: dict[ExpVector, int] = defaultdict(int)
    for term in gf.terms:
        buckets: list[dict[ExpVector, int]] = [defaultdict(int) for _ in range(max_degree + 1)]
        for mono, c in term.numerator:
            d = sum(mono)
            if d <= max_degree:
                buckets[d][mono] += c
        for v in term.denominators:
            step = sum(v)
            if step < 1:
                raise ValueError("denominator monomial of degree zero")
            for d in range(max_degree + 1 - step):
                for mono, c in list(buckets[d].items()):
                    if c:
                        buckets[d + step][_add_vec(mono, v)] += c
        for bucket in buckets:
            for mono, c in bucket.items():
                total[mono] += c
    return {m: c for m, c in total.items() if c}


def multi_specialize(gf: MultiGF, M: int) -> list[int]:
    """Series in ``q`` of ``gf`` at ``z_1 = ... = z_n = q``, to degree ``M``."""
    out = [0] * (M + 1)
    for term in gf.terms:
        num = LaurentPoly.from_terms((sum(m), c) for m, c in term.numerator)
        dens = tuple(sum(v) for v in term.denominators)
        out = series_add(out, series_expand(FactoredGF(num, dens), M))
    return out
