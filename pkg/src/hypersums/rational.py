"""Exact rational scalars and the small combinatorial primitives built on them.

``Rational`` is :class:`fractions.Fraction`, which already keeps every value
reduced with a positive denominator and stores zero as ``0/1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"N"``, ``"-N"`` or ``"N/D"``; a zero denominator is rejected."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(text)


def format_rational(x: Fraction | int) -> str:
    """Canonical text form: ``num/den`` reduced, or a bare integer when den = 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def binomial(n: int, k: int) -> int:
    """C(n, k), zero whenever k < 0, k > n or n < 0."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def pochhammer(x: RationalLike, n: int) -> Fraction:
    """Rising factorial x(x+1)...(x+n-1)."""
    if n < 0:
        raise ValueError("pochhammer length must be non-negative")
    x = as_rational(x)
    out = Fraction(1)
    for j in range(n):
        out *= x + j
    return out


def ratpow(x: RationalLike, p: int) -> Fraction:
    # 0**0 == 1 on Fraction already; kept explicit so the convention is visible.
    if p < 0:
        raise ValueError("exponent must be non-negative")
    if p == 0:
        return Fraction(1)
    return as_rational(x) ** p


@dataclass(frozen=True)
class SumQuery:
    """Parameters (p, a, d, n, r) of one (hyper-)sum of an arithmetic progression."""

    p: int
    a: Fraction
    d: Fraction
    n: int
    r: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "d", as_rational(self.d))
        for name in ("p", "n", "r"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"{name} must be a non-negative integer, got {value!r}")
        if self.d == 0:
            raise ValueError("common difference d must be nonzero")

    @property
    def ratio(self) -> Fraction:
        """a/d, the shift that appears in every closed formula."""
        return self.a / self.d

    def terms(self):
        return [self.a + s * self.d for s in range(self.n + 1)]

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "a": format_rational(self.a),
            "d": format_rational(self.d),
            "n": self.n,
            "r": self.r,
        }
