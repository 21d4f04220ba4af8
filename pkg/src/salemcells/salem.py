"""Salem number classification and conjugate data extraction.

For a Salem minimal polynomial P of degree 2d the trace polynomial G satisfies
P(x) = x^d G(x + 1/x).  G has one root gamma = beta + 1/beta > 2 and d-1 roots
2cos(theta_i) in (-2, 2).  The conjugate coordinates used by the period cells
are alpha_i = -2cos(theta_i), i.e. the NEGATIVES of the small trace roots:
the quadratic factor x^2 + alpha_i x + 1 of P has root pair exp(+-i theta_i),
and the cofactor P / (x^2 - gamma x + 1) is x^4 + c1 x^3 + c2 x^2 + c1 x + 1
with c1 = alpha_1 + alpha_2, c2 = alpha_1 alpha_2 + 2 in the sextic case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebraic import RealAlgebraic, isolate_real_roots
from .polynomials import (
    IntPolynomial,
    RatPolynomial,
    int_gcd,
    is_square_free,
    self_reciprocal,
    sturm_root_count,
    trace_polynomial,
)
from .rationals import RatInterval, sqrt_enclosure


@dataclass
class SalemData:
    minpoly: IntPolynomial
    beta: RealAlgebraic
    gamma: RealAlgebraic
    alphas: list[RealAlgebraic]  # ascending, each -2cos(theta_i) in (-2, 2)
    trace_poly: IntPolynomial
    trace_roots: list[RealAlgebraic]  # ascending small roots 2cos(theta_i)

    @property
    def degree(self) -> int:
        return self.minpoly.degree


@dataclass
class SalemVerdict:
    salem: bool
    reason: str | None
    degree: int
    data: SalemData | None = field(default=None, repr=False)


def _cyclotomic_factor(p: IntPolynomial) -> int | None:
    """Smallest n with a common factor between p and x^n - 1, if any.

    Any cyclotomic divisor of degree <= deg(p) divides some x^n - 1 with
    phi(n) <= deg(p), hence n <= 2 deg(p)^2.
    """
    deg = p.degree
    limit = 2 * deg * deg + 1
    phi = list(range(limit + 1))
    for i in range(2, limit + 1):
        if phi[i] == i:  # prime
            for j in range(i, limit + 1, i):
                phi[j] -= phi[j] // i
    for n in range(1, limit + 1):
        if phi[n] <= deg:
            xn1 = IntPolynomial([-1] + [0] * (n - 1) + [1])
            if int_gcd(p, xn1).degree >= 1:
                return n
    return None


def _has_rational_root(g: IntPolynomial) -> bool:
    # g is monic here, so any rational root is an integer; isolate the real
    # roots and test the single integer candidate per isolating interval
    if g[0] == 0:
        return True
    for r in isolate_real_roots(g):
        r.refine_to(Fraction(1, 2))
        lo, hi = r.interval
        k = -((-lo.numerator) // lo.denominator)  # ceil(lo)
        if Fraction(k) < hi and g.eval(k) == 0:
            return True
    return False


def _beta_from_gamma(p: IntPolynomial, gamma: RealAlgebraic) -> RealAlgebraic:
    """Isolate the root beta > 1 of p from gamma = beta + 1/beta."""
    while True:
        gamma.refine_to(Fraction(1, 1 << 24))
        glo, ghi = gamma.interval
        lo_s = sqrt_enclosure(max(glo * glo - 4, Fraction(0)), 40)[0]
        hi_s = sqrt_enclosure(ghi * ghi - 4, 40)[1]
        blo = (glo + lo_s) / 2 - Fraction(1, 1 << 30)
        bhi = (ghi + hi_s) / 2 + Fraction(1, 1 << 30)
        if p.eval(blo) != 0 and p.eval(bhi) != 0 and sturm_root_count(p, blo, bhi) == 1:
            return RealAlgebraic(p, blo, bhi)
        gamma.refine()


def classify_salem(p: IntPolynomial) -> SalemVerdict:
    """Decide whether p is the minimal polynomial of a Salem number.

    Salem-ness is decided by the trace-polynomial criterion (G(2) < 0 and
    d-1 distinct roots of G in (-2, 2)) plus cheap irreducibility screens:
    square-freeness, no cyclotomic factor, no rational root of G.
    """
    if not p.is_monic():
        raise ValueError("classification needs a monic polynomial")
    deg = p.degree

    def verdict(reason: str) -> SalemVerdict:
        return SalemVerdict(False, reason, deg)
    if deg < 4 or deg % 2 != 0:
        return verdict("degree-not-even-at-least-4")
    if not self_reciprocal(p):
        return verdict("not-self-reciprocal")
    if not is_square_free(p):
        return verdict("not-square-free")
    if _cyclotomic_factor(p) is not None:
        return verdict("cyclotomic-factor")
    g = trace_polynomial(p)
    d = deg // 2
    if g.eval(Fraction(2)) >= 0:
        return verdict("trace-value-at-2-not-negative")
    if sturm_root_count(g, -2, 2) != d - 1:
        return verdict("trace-root-count")
    if _has_rational_root(g):
        return verdict("trace-rational-root")

    roots = isolate_real_roots(g)
    small = [r for r in roots if r.compare(Fraction(-2)) > 0 and r.compare(Fraction(2)) < 0]
    large = [r for r in roots if r.compare(Fraction(2)) > 0]
    if len(small) != d - 1 or len(large) != 1:
        return verdict("trace-root-placement")
    gamma = large[0]
    # small roots come out ascending; negation reverses the order exactly
    alphas = [-r for r in reversed(small)]
    beta = _beta_from_gamma(p, gamma)
    data = SalemData(
        minpoly=p,
        beta=beta,
        gamma=gamma,
        alphas=alphas,
        trace_poly=g,
        trace_roots=small,
    )
    return SalemVerdict(True, None, deg, data)


def require_salem(p: IntPolynomial) -> SalemData:
    v = classify_salem(p)
    if not v.salem:
        raise ValueError(f"not a Salem polynomial: {v.reason}")
    assert v.data is not None
    return v.data


# ---------------------------------------------------------------------------
# Well-posed sextic test
# ---------------------------------------------------------------------------

def sextic_coefficients(p: IntPolynomial) -> tuple[int, int, int]:
    """(a, b, c) for p = x^6 - a x^5 - b x^4 - c x^3 - b x^2 - a x + 1."""
    if p.degree != 6 or p[6] != 1 or p[0] != 1 or p[1] != p[5] or p[2] != p[4]:
        raise ValueError("polynomial is not of the symmetric sextic shape")
    return -p[5], -p[4], -p[3]


def sextic_from_abc(a: int, b: int, c: int) -> IntPolynomial:
    return IntPolynomial([1, -a, -b, -c, -b, -a, 1])


def well_posed_sextic(p: IntPolynomial) -> tuple[bool, dict]:
    """Three integer inequalities placing the trace-cubic roots as
    -1 < r1 < 0 < r2 < 1 < 2 < gamma.  Diagnostics name the failed conditions.
    """
    a, b, c = sextic_coefficients(p)
    conds = {
        "2-2b<2a+c": 2 - 2 * b < 2 * a + c,
        "c<2a": c < 2 * a,
        "|b+2|<c-a": abs(b + 2) < c - a,
    }
    ok = all(conds.values())
    diag = {
        "a": a,
        "b": b,
        "c": c,
        "conditions": conds,
        "failed": [k for k, v in conds.items() if not v],
        "root_placement": "-1<r1<0<r2<1<2<gamma" if ok else None,
    }
    return ok, diag


# ---------------------------------------------------------------------------
# Powers of a Salem number
# ---------------------------------------------------------------------------

def _companion(p: IntPolynomial) -> list[list[int]]:
    n = p.degree
    m = [[0] * n for _ in range(n)]
    for i in range(1, n):
        m[i][i - 1] = 1
    for i in range(n):
        m[i][n - 1] = -p[i]
    return m


def _mat_mul(a, b):
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def _mat_pow(m, e):
    n = len(m)
    out = [[int(i == j) for j in range(n)] for i in range(n)]
    base = m
    while e:
        if e & 1:
            out = _mat_mul(out, base)
        base = _mat_mul(base, base)
        e >>= 1
    return out


def _charpoly(m) -> IntPolynomial:
    """Characteristic polynomial of an integer matrix (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [row[:] for row in m]
    for k in range(1, n + 1):
        tr = sum(mk[i][i] for i in range(n))
        assert tr % k == 0
        ck = -(tr // k)
        coeffs[n - k] = ck
        if k < n:
            for i in range(n):
                mk[i][i] += ck
            mk = _mat_mul(m, mk)
    return IntPolynomial(coeffs)


def minpoly_power(s: SalemData, m: int) -> IntPolynomial:
    """Minimal polynomial of beta**m, via an exact companion-matrix power.

    The characteristic polynomial of C(P)**m has roots root**m; for a Salem
    number the powers of the conjugates stay distinct, so it is square-free
    and equals the minimal polynomial.  Cross-checked against an enclosure of
    beta**m.
    """
    if m < 1:
        raise ValueError("positive exponent required")
    if m == 1:
        return s.minpoly
    pm = _charpoly(_mat_pow(_companion(s.minpoly), m))
    if not is_square_free(pm):
        raise ArithmeticError("unexpected repeated conjugates in a Salem power")
    s.beta.refine_to(Fraction(1, 1 << 40))
    blo, bhi = s.beta.interval
    iv = RatInterval(blo**m, bhi**m)
    if pm.eval_interval(iv).sign() not in (None, 0):
        raise ArithmeticError("power minimal polynomial failed the enclosure check")
    return pm


def power_conjugate_point(s: SalemData, m: int) -> list[RealAlgebraic]:
    """Exact conjugate coordinates (-2cos(m theta_i)) of beta**m, ordered so
    that entry i corresponds to s.alphas[i].

    The values satisfy the three-term recurrence A_0 = -2, A_1 = alpha,
    A_{k+1} = -alpha A_k - A_{k-1}; an interval run of the recurrence picks
    the matching roots of the power's trace polynomial.
    """
    if m < 1:
        raise ValueError("positive exponent required")
    if m == 1:
        return list(s.alphas)
    data_m = require_salem(minpoly_power(s, m))
    alphas_m = data_m.alphas
    out: list[RealAlgebraic] = []
    for alpha in s.alphas:
        bits = 2 * m + 60
        while True:
            alpha.refine_to(Fraction(1, 1 << bits))
            prev = RatInterval.point(Fraction(-2))
            cur = alpha.rat_interval()
            a_iv = alpha.rat_interval()
            for _ in range(m - 1):
                prev, cur = cur, (-a_iv) * cur - prev
            hits = [
                r
                for r in alphas_m
                if not (cur.hi < r.interval[0] or r.interval[1] < cur.lo)
            ]
            if len(hits) == 1:
                out.append(hits[0])
                break
            if len(hits) == 0:
                raise ArithmeticError("power conjugate outside (-2, 2)")
            for r in hits:
                r.refine()
            bits += 32
    return out


# ---------------------------------------------------------------------------
# Exact conjugate point in (c1, c2) coordinates, for cell membership
# ---------------------------------------------------------------------------

class RationalCPoint:
    """Exact rational point in the (c1, c2) chart."""

    def __init__(self, c1: Fraction, c2: Fraction):
        self.c1 = Fraction(c1)
        self.c2 = Fraction(c2)

    @classmethod
    def from_alphas(cls, a1, a2) -> "RationalCPoint":
        a1, a2 = Fraction(a1), Fraction(a2)
        return cls(a1 + a2, a1 * a2 + 2)

    def form_sign(self, a0: int, a1: int, a2: int) -> int:
        v = a0 + a1 * self.c1 + a2 * self.c2
        return (v > 0) - (v < 0)

    def in_domain(self) -> bool:
        """Both alpha coordinates real and inside (-2, 2)."""
        return (
            self.c2 > 2 * self.c1 - 2
            and self.c2 > -2 * self.c1 - 2
            and -4 < self.c1 < 4
            and self.c2 <= self.c1 * self.c1 / 4 + 2
        )

    def on_diagonal(self) -> bool:
        return self.c2 == self.c1 * self.c1 / 4 + 2

    def c_interval(self, bits: int) -> tuple[RatInterval, RatInterval]:
        return RatInterval.point(self.c1), RatInterval.point(self.c2)


class SalemCPoint:
    """Exact (c1, c2) coordinates of a sextic Salem number's conjugate pair.

    c1 = gamma - s1 and c2 = -g0/gamma + 2 where s1 is the root sum and g0 the
    constant term of the trace cubic; a linear form in (c1, c2) becomes, after
    clearing the positive denominator gamma, a quadratic in gamma whose sign
    is decided exactly.
    """

    def __init__(self, data: SalemData):
        if data.degree != 6:
            raise ValueError("c-chart points are specific to sextic Salem numbers")
        self.data = data
        g = data.trace_poly
        assert g[3] == 1
        self.s1 = -g[2]  # sum of the trace roots
        self.g0 = g[0]  # product of the trace roots (cubic, monic)

    def form_sign(self, a0: int, a1: int, a2: int) -> int:
        # sign of a0 + a1 c1 + a2 c2, multiplied through by gamma > 0
        q = RatPolynomial([-a2 * self.g0, a0 - a1 * self.s1 + 2 * a2, a1])
        return self.data.gamma.sign_of(q)

    def in_domain(self) -> bool:
        return True  # guaranteed by Salem classification

    def on_diagonal(self) -> bool:
        return False  # conjugate angles of a Salem number are distinct

    def c_interval(self, bits: int) -> tuple[RatInterval, RatInterval]:
        self.data.gamma.refine_to(Fraction(1, 1 << bits))
        giv = self.data.gamma.rat_interval()
        c1 = giv - Fraction(self.s1)
        inv = RatInterval(1 / giv.hi, 1 / giv.lo)
        c2 = inv * Fraction(-self.g0) + Fraction(2)
        return c1, c2


def conjugate_c_point(data: SalemData) -> SalemCPoint:
    return SalemCPoint(data)
