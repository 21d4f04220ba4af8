"""Exact real algebraic numbers: isolation, sign, floor, comparison.

A RealAlgebraic is a square-free primitive integer polynomial together with a
rational interval isolating exactly one of its real roots.  All decisions
(sign, floor, equality) are exact; intervals are only a computational aid and
are refined by bisection, never trusted for zero tests.

Invariant kept everywhere: interval endpoints are never roots of the defining
polynomial, so the root is strictly interior.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import (
    IntPolynomial,
    RatPolynomial,
    int_gcd,
    square_free_part,
    sturm_root_count,
)
from .rationals import RatInterval


class RealAlgebraic:
    """One real root of a square-free integer polynomial, isolated exactly.

    Not hashable: equality is semantic (same real number), which a structural
    hash cannot honor across different defining polynomials.
    """

    def __init__(self, minpoly: IntPolynomial, lo: Fraction, hi: Fraction):
        self.minpoly = minpoly
        self._iv = (Fraction(lo), Fraction(hi))

    __hash__ = None  # type: ignore[assignment]

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rational(cls, x) -> "RealAlgebraic":
        x = Fraction(x)
        poly = IntPolynomial([-x.numerator, x.denominator]).primitive()
        return cls(poly, x - 1, x + 1)

    @classmethod
    def isolated(cls, p: IntPolynomial, lo, hi) -> "RealAlgebraic":
        """Wrap an interval already known to isolate one root of p (checked)."""
        p = square_free_part(p)
        lo, hi = Fraction(lo), Fraction(hi)
        if p.eval(lo) == 0 or p.eval(hi) == 0 or sturm_root_count(p, lo, hi) != 1:
            raise ValueError("interval does not cleanly isolate one root")
        return cls(p, lo, hi)

    # -- interval handling ---------------------------------------------------

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self._iv

    def rat_interval(self) -> RatInterval:
        lo, hi = self._iv
        return RatInterval(lo, hi)

    def refine(self) -> None:
        """Halve the isolating interval.  Copy-on-refine: one atomic swap."""
        lo, hi = self._iv
        mid = (lo + hi) / 2
        v = self.minpoly.eval(mid)
        if v == 0:
            # the root is exactly mid; shrink symmetrically around it
            w = (hi - lo) / 8
            while self.minpoly.eval(mid - w) == 0 or self.minpoly.eval(mid + w) == 0:
                w /= 2
            self._iv = (mid - w, mid + w)
            return
        if (self.minpoly.eval(lo) > 0) != (v > 0):
            self._iv = (lo, mid)
        else:
            self._iv = (mid, hi)

    def refine_to(self, width) -> None:
        width = Fraction(width)
        while self._iv[1] - self._iv[0] > width:
            self.refine()

    def __float__(self) -> float:
        self.refine_to(Fraction(1, 1 << 60))
        lo, hi = self._iv
        return float((lo + hi) / 2)

    # -- exact decisions -----------------------------------------------------

    def sign_of(self, q) -> int:
        """Exact sign of q(self) for q with rational coefficients.

        Zero is decided by reduction mod the defining polynomial plus a gcd
        root count; only nonzero values fall through to interval refinement.
        """
        if isinstance(q, IntPolynomial):
            q = q.to_rat()
        r = q.mod(self.minpoly.to_rat())
        if r.is_zero():
            return 0
        g = int_gcd(self.minpoly, r.scaled_int())
        if g.degree >= 1 and sturm_root_count(g, *self._iv) >= 1:
            # a root of g inside the isolating interval must be this number
            return 0
        while True:
            s = r.eval_interval(self.rat_interval()).sign()
            if s is not None:
                return s
            self.refine()

    def is_rational(self) -> Fraction | None:
        if self.minpoly.degree == 1:
            return Fraction(-self.minpoly[0], self.minpoly[1])
        return None

    def compare(self, other) -> int:
        """Sign of self - other; other may be rational or RealAlgebraic."""
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return self.sign_of(RatPolynomial([-other, 1]))
        if not isinstance(other, RealAlgebraic):
            raise TypeError("cannot compare with " + type(other).__name__)
        g = int_gcd(self.minpoly, other.minpoly)
        may_be_equal = g.degree >= 1
        while True:
            a_lo, a_hi = self._iv
            b_lo, b_hi = other._iv
            if a_hi <= b_lo:
                return -1
            if b_hi <= a_lo:
                return 1
            if may_be_equal:
                lo, hi = max(a_lo, b_lo), min(a_hi, b_hi)
                # overlap endpoints are interval endpoints, never roots of g
                if sturm_root_count(g, lo, hi) >= 1:
                    return 0
                may_be_equal = False  # inequality is now proven
            self.refine()
            other.refine()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, RealAlgebraic)):
            return self.compare(other) == 0
        return NotImplemented

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __neg__(self) -> "RealAlgebraic":
        flipped = IntPolynomial(
            [(-1) ** i * c for i, c in enumerate(self.minpoly.coeffs)]
        ).primitive()
        lo, hi = self._iv
        return RealAlgebraic(flipped, -hi, -lo)

    def floor_of(self, q) -> int:
        """Exact floor of q(self)."""
        if isinstance(q, IntPolynomial):
            q = q.to_rat()
        while True:
            iv = q.eval_interval(self.rat_interval())
            flo = iv.lo.numerator // iv.lo.denominator
            fhi = iv.hi.numerator // iv.hi.denominator
            if flo == fhi:
                return flo
            if iv.width < Fraction(1, 4):
                break
            self.refine()
        n = flo
        while True:
            if self.sign_of(q - RatPolynomial([n])) < 0:
                n -= 1
                continue
            if self.sign_of(q - RatPolynomial([n + 1])) >= 0:
                n += 1
                continue
            return n

    def __repr__(self) -> str:
        lo, hi = self._iv
        return f"RealAlgebraic({list(self.minpoly.coeffs)}, [{lo}, {hi}])"


def isolate_real_roots(p: IntPolynomial) -> list[RealAlgebraic]:
    """All distinct real roots of p, ascending, with disjoint intervals."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    q = square_free_part(p)
    if q.degree == 0:
        return []
    bound = q.cauchy_bound() + 1
    roots: list[RealAlgebraic] = []

    def isolate_at(mid: Fraction, radius: Fraction) -> RealAlgebraic:
        w = radius
        while (
            q.eval(mid - w) == 0
            or q.eval(mid + w) == 0
            or sturm_root_count(q, mid - w, mid + w) != 1
        ):
            w /= 2
        return RealAlgebraic(q, mid - w, mid + w)

    # split keeps the invariant q(lo) != 0 != q(hi); count is over (lo, hi]
    def split(lo: Fraction, hi: Fraction, count: int) -> None:
        if count == 0:
            return
        if count == 1:
            roots.append(RealAlgebraic(q, lo, hi))
            return
        mid = (lo + hi) / 2
        if q.eval(mid) == 0:
            cell = isolate_at(mid, (hi - lo) / 8)
            left = sturm_root_count(q, lo, cell.interval[0])
            split(lo, cell.interval[0], left)
            roots.append(cell)
            split(cell.interval[1], hi, count - left - 1)
            return
        left = sturm_root_count(q, lo, mid)
        split(lo, mid, left)
        split(mid, hi, count - left)

    total = sturm_root_count(q, -bound, bound)
    split(-bound, bound, total)
    return roots


def alg_sign(q, beta: RealAlgebraic) -> int:
    return beta.sign_of(q)


def alg_floor(q, beta: RealAlgebraic) -> int:
    return beta.floor_of(q)


def alg_ceil(q, beta: RealAlgebraic) -> int:
    if isinstance(q, IntPolynomial):
        q = q.to_rat()
    return -beta.floor_of(-q)


class AlgebraicScalar:
    """Element q(theta) of Q(theta) for a shared RealAlgebraic theta.

    Just enough arithmetic for the lattice map: ring operations with rational
    scalars, exact ceiling/floor and sign.
    """

    __slots__ = ("base", "rep")

    def __init__(self, base: RealAlgebraic, rep: RatPolynomial):
        self.base = base
        self.rep = rep.mod(base.minpoly.to_rat())

    @classmethod
    def of_base(cls, base: RealAlgebraic) -> "AlgebraicScalar":
        return cls(base, RatPolynomial([0, 1]))

    def _coerce(self, other) -> RatPolynomial:
        if isinstance(other, AlgebraicScalar):
            if other.base is not self.base:
                raise ValueError("mixed base fields")
            return other.rep
        return RatPolynomial([Fraction(other)])

    def __add__(self, other):
        return AlgebraicScalar(self.base, self.rep + self._coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraicScalar(self.base, -self.rep)

    def __sub__(self, other):
        return AlgebraicScalar(self.base, self.rep - self._coerce(other))

    def __rsub__(self, other):
        return AlgebraicScalar(self.base, self._coerce(other) - self.rep)

    def __mul__(self, other):
        return AlgebraicScalar(self.base, self.rep * self._coerce(other))

    __rmul__ = __mul__

    def sign(self) -> int:
        return self.base.sign_of(self.rep)

    def floor(self) -> int:
        return self.base.floor_of(self.rep)

    def ceil(self) -> int:
        return -self.base.floor_of(-self.rep)

    def __float__(self) -> float:
        self.base.refine_to(Fraction(1, 1 << 80))
        return float(self.rep.eval(self.base.rat_interval().mid()))
