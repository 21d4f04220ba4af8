"""Exact rational helpers: parsing, formatting, intervals, integer square roots."""

from __future__ import annotations

import math
from fractions import Fraction


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q" or a plain integer/decimal literal into a Fraction."""
    return Fraction(text.strip())


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def floor_div(a: int, b: int) -> int:
    return a // b


def ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def fraction_floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def fraction_ceil(x: Fraction) -> int:
    return ceil_div(x.numerator, x.denominator)


def dyadic_below(x: Fraction, bits: int) -> Fraction:
    """Largest multiple of 2**-bits that is <= x."""
    return Fraction(floor_div(x.numerator << bits, x.denominator), 1 << bits)


def dyadic_above(x: Fraction, bits: int) -> Fraction:
    return Fraction(ceil_div(x.numerator << bits, x.denominator), 1 << bits)


def sqrt_enclosure(x: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure [lo, hi] of sqrt(x) with hi - lo <= 2**-bits, x >= 0."""
    if x < 0:
        raise ValueError("sqrt of a negative rational")
    if x == 0:
        return Fraction(0), Fraction(0)
    # sqrt(p/q) = sqrt(p*q)/q; scale so the integer sqrt carries enough bits.
    p, q = x.numerator, x.denominator
    shift = 2 * bits + 4
    n = (p * q) << (2 * ((shift + 1) // 2))
    r = math.isqrt(n)
    denom = q << ((shift + 1) // 2)
    lo = Fraction(r, denom)
    hi = Fraction(r + 1, denom)
    return lo, hi


class RatInterval:
    """Closed interval with exact rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Fraction, hi: Fraction):
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        self.lo = lo
        self.hi = hi

    @classmethod
    def point(cls, x: Fraction) -> "RatInterval":
        x = Fraction(x)
        return cls(x, x)

    def __repr__(self) -> str:
        return f"RatInterval({self.lo}, {self.hi})"

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __add__(self, other):
        if isinstance(other, RatInterval):
            return RatInterval(self.lo + other.lo, self.hi + other.hi)
        other = Fraction(other)
        return RatInterval(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __neg__(self):
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-other if isinstance(other, RatInterval) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + Fraction(other)

    def __mul__(self, other):
        if isinstance(other, RatInterval):
            prods = (
                self.lo * other.lo,
                self.lo * other.hi,
                self.hi * other.lo,
                self.hi * other.hi,
            )
            return RatInterval(min(prods), max(prods))
        other = Fraction(other)
        if other >= 0:
            return RatInterval(self.lo * other, self.hi * other)
        return RatInterval(self.hi * other, self.lo * other)

    __rmul__ = __mul__

    def sign(self) -> int | None:
        """Definite sign of every point in the interval, or None if mixed."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def rounded(self, bits: int) -> "RatInterval":
        return RatInterval(dyadic_below(self.lo, bits), dyadic_above(self.hi, bits))

    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2


def interval_horner(coeffs, iv: RatInterval) -> RatInterval:
    """Enclose p(x) over x in iv for p given by coefficients, constant first."""
    acc = RatInterval.point(Fraction(0))
    for c in reversed(coeffs):
        acc = acc * iv + Fraction(c)
    return acc
