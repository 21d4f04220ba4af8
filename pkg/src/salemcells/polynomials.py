"""Dense exact polynomials over Z and Q, Sturm sequences, trace transform.

Coefficient order is constant term first throughout, matching the CLI text
format `[c0, c1, ..., cn]`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .rationals import RatInterval, interval_horner


def _strip(coeffs: Sequence) -> tuple:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPolynomial:
    """Integer-coefficient polynomial; immutable, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = []
        for c in coeffs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {type(c).__name__}")
            cs.append(c)
        object.__setattr__(self, "coeffs", _strip(cs))

    def __setattr__(self, *a):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # zero polynomial has degree -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading == 1

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial([])
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by x**k."""
        return IntPolynomial([0] * k + list(self.coeffs))

    def eval(self, x):
        """Evaluate exactly at an int or Fraction."""
        acc = 0 if isinstance(x, int) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, iv: RatInterval) -> RatInterval:
        return interval_horner(self.coeffs, iv)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPolynomial":
        """Content-free copy with positive leading coefficient."""
        if self.is_zero():
            return self
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial([c // g for c in self.coeffs])

    def reversed_coeffs(self) -> "IntPolynomial":
        return IntPolynomial(list(reversed(self.coeffs)))

    def to_rat(self) -> "RatPolynomial":
        return RatPolynomial([Fraction(c) for c in self.coeffs])

    def cauchy_bound(self) -> Fraction:
        """All real roots lie in (-B, B)."""
        if self.degree < 1:
            return Fraction(1)
        lead = abs(self.leading)
        m = max(abs(c) for c in self.coeffs[:-1])
        return 1 + Fraction(m, lead)


class RatPolynomial:
    """Rational-coefficient polynomial with exact arithmetic."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", _strip([Fraction(c) for c in coeffs]))

    def __setattr__(self, *a):
        raise AttributeError("RatPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPolynomial) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"RatPolynomial({[str(c) for c in self.coeffs]})"

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "RatPolynomial") -> "RatPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPolynomial(out)

    def __neg__(self) -> "RatPolynomial":
        return RatPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: "RatPolynomial") -> "RatPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPolynomial([])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return RatPolynomial(out)

    __rmul__ = __mul__

    def eval(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_interval(self, iv: RatInterval) -> RatInterval:
        return interval_horner(self.coeffs, iv)

    def derivative(self) -> "RatPolynomial":
        return RatPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "RatPolynomial") -> tuple["RatPolynomial", "RatPolynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(dn - dd + 1, 0)
        while len(rem) - 1 >= dd and rem:
            k = len(rem) - 1 - dd
            q = rem[-1] / lead
            quot[k] = q
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= q * c
            while rem and rem[-1] == 0:
                rem.pop()
        return RatPolynomial(quot), RatPolynomial(rem)

    def mod(self, other: "RatPolynomial") -> "RatPolynomial":
        return self.divmod(other)[1]

    def scaled_int(self) -> IntPolynomial:
        """Positive rational multiple with integer coefficients (sign preserved)."""
        if self.is_zero():
            return IntPolynomial([])
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        return IntPolynomial([c // g for c in ints])


def poly_from_list(values: Sequence[int]) -> IntPolynomial:
    return IntPolynomial([int(v) for v in values])


def self_reciprocal(p: IntPolynomial) -> bool:
    """True iff the coefficient list reads the same reversed."""
    return p.coeffs == tuple(reversed(p.coeffs))


def int_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Q, returned with integer coefficients."""
    f, g = a.primitive(), b.primitive()
    if f.is_zero():
        return g
    while not g.is_zero():
        r = f.to_rat().mod(g.to_rat())
        f, g = g, (r.scaled_int() if not r.is_zero() else IntPolynomial([]))
        f = f.primitive()
    return f


def square_free_part(p: IntPolynomial) -> IntPolynomial:
    if p.is_zero():
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return IntPolynomial([1])
    g = int_gcd(p, p.derivative())
    if g.degree == 0:
        return p.primitive()
    q, r = p.to_rat().divmod(g.to_rat())
    assert r.is_zero()
    return q.scaled_int()


def is_square_free(p: IntPolynomial) -> bool:
    return int_gcd(p, p.derivative()).degree == 0


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------

def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    """Canonical Sturm chain of the square-free part of p.

    Each remainder is rescaled to a primitive integer polynomial; the scaling
    factor is positive, so the sign pattern of the chain is preserved.
    """
    p = square_free_part(p)
    chain = [p, p.derivative().primitive()]
    while not chain[-1].is_zero():
        r = chain[-2].to_rat().mod(chain[-1].to_rat())
        if r.is_zero():
            break
        chain.append((-r).scaled_int())
    return chain


def _sign_right(p: IntPolynomial, x: Fraction) -> int:
    """Sign of p just to the right of x (first nonzero derivative at x)."""
    q = p
    while not q.is_zero():
        v = q.eval(x)
        if v != 0:
            return 1 if v > 0 else -1
        q = q.derivative()
    return 0


def _variations_right(chain: Sequence[IntPolynomial], x: Fraction) -> int:
    signs = [s for s in (_sign_right(q, x) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_root_count(p: IntPolynomial, lo, hi) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi].

    Endpoint roots are handled exactly: the sign of each chain element just to
    the right of an endpoint is read off its first nonvanishing derivative.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no root count")
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        return 0
    if p.degree == 0:
        return 0
    chain = sturm_chain(p)
    return _variations_right(chain, lo) - _variations_right(chain, hi)


# ---------------------------------------------------------------------------
# Trace transform for self-reciprocal polynomials
# ---------------------------------------------------------------------------

def _chebyshev_v(k: int) -> IntPolynomial:
    """V_k with x**k + x**-k = V_k(x + 1/x): V_0 = 2, V_1 = y, V_{k+1} = y V_k - V_{k-1}."""
    v0, v1 = IntPolynomial([2]), IntPolynomial([0, 1])
    if k == 0:
        return v0
    y = IntPolynomial([0, 1])
    for _ in range(k - 1):
        v0, v1 = v1, y * v1 - v0
    return v1


def trace_polynomial(p: IntPolynomial) -> IntPolynomial:
    """G with p(x) = x**d * G(x + 1/x) for self-reciprocal p of even degree 2d."""
    if p.is_zero() or p.degree % 2 != 0 or p.degree == 0:
        raise ValueError("trace polynomial needs even degree >= 2")
    if not self_reciprocal(p):
        raise ValueError("trace polynomial needs a self-reciprocal polynomial")
    d = p.degree // 2
    out = IntPolynomial([p[d]])
    for k in range(1, d + 1):
        out = out + p[d + k] * _chebyshev_v(k)
    return out


def compose_trace_back(g: IntPolynomial, d: int) -> IntPolynomial:
    """x**d * G(x + 1/x) as a polynomial, for round-trip identity checks."""
    # sum_k g_k x^(d-k) (x^2+1)^k  equals x^d G(x + 1/x)
    out = IntPolynomial([])
    x2p1 = IntPolynomial([1, 0, 1])
    power = IntPolynomial([1])
    for k in range(g.degree + 1):
        if k > d:
            raise ValueError("G degree exceeds d")
        term = (g[k] * power).shift(d - k)
        out = out + term
        power = power * x2p1
    return out
