"""Exact arithmetic for Lebesgue exponents p in [1, inf].

Exponents are kept as exact rationals (or an infinity tag) so that values
like 1.5 and inf compare exactly and conjugate-exponent arithmetic never
goes through floating point.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering

_INF_TOKENS = {"inf", "infinity", "oo", "∞"}


@total_ordering
class Exponent:
    """An exponent p in [1, inf], stored as a rational or an infinity tag."""

    __slots__ = ("_frac",)

    def __init__(self, value):
        if isinstance(value, Exponent):
            self._frac = value._frac
            return
        if isinstance(value, str):
            text = value.strip().lower()
            if text in _INF_TOKENS:
                self._frac = None
                return
            frac = Fraction(text)
        elif isinstance(value, float):
            if math.isinf(value):
                self._frac = None
                return
            # decimal-literal semantics: 1.5 -> 3/2, not the binary expansion
            frac = Fraction(str(value))
        elif isinstance(value, (int, Fraction)):
            frac = Fraction(value)
        else:
            raise TypeError(f"cannot interpret {value!r} as an exponent")
        if frac < 1:
            raise ValueError(f"exponent must satisfy p >= 1, got {frac}")
        self._frac = frac

    @property
    def is_inf(self) -> bool:
        return self._frac is None

    @property
    def fraction(self) -> Fraction:
        if self._frac is None:
            raise ValueError("infinite exponent has no finite rational value")
        return self._frac

    def reciprocal(self) -> Fraction:
        """1/p as an exact rational, with 1/inf = 0."""
        return Fraction(0) if self._frac is None else 1 / self._frac

    def conjugate(self) -> "Exponent":
        """The exponent p' with 1/p + 1/p' = 1; conjugate(1) = inf."""
        if self._frac is None:
            return Exponent(1)
        if self._frac == 1:
            return INF
        return Exponent(self._frac / (self._frac - 1))

    def _key(self):
        return (1, Fraction(0)) if self._frac is None else (0, self._frac)

    def __eq__(self, other):
        if isinstance(other, (int, float, Fraction)):  # numeric cross-type, like Fraction
            try:
                other = Exponent(other)
            except (TypeError, ValueError):
                return NotImplemented
        if not isinstance(other, Exponent):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        if not isinstance(other, Exponent):
            other = Exponent(other)
        return self._key() < other._key()

    def __hash__(self):
        # consistent with numeric equality: hash(Exponent(2)) == hash(2)
        return hash(math.inf) if self._frac is None else hash(self._frac)

    def __float__(self) -> float:
        return math.inf if self._frac is None else self._frac.numerator / self._frac.denominator

    def __str__(self) -> str:
        if self._frac is None:
            return "inf"
        if self._frac.denominator == 1:
            return str(self._frac.numerator)
        den = self._frac.denominator
        for base in (2, 5):
            while den % base == 0:
                den //= base
        if den == 1:  # terminating decimal
            return f"{float(self):g}"
        return f"{self._frac.numerator}/{self._frac.denominator}"

    def __repr__(self) -> str:
        return f"Exponent({str(self)!r})"


INF = Exponent("inf")


def as_exponent(value) -> Exponent:
    return value if isinstance(value, Exponent) else Exponent(value)


def holder_gap(p, q) -> Fraction:
    """1/p - 1/q as an exact rational."""
    return as_exponent(p).reciprocal() - as_exponent(q).reciprocal()
