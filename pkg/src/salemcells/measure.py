"""Rigorous measure of a union of period cells under the conjugate-angle
distribution.

The distribution of (alpha1, alpha2) = (-2cos(theta1), -2cos(theta2)) with
theta uniform on (0, pi)^2 is exactly the density
1/(pi^2 sqrt((4-a1^2)(4-a2^2))), so the measure is computed in theta space
where it is plain normalized area and the integrand's edge singularity
disappears.  Dyadic boxes are classified against the cells with certified
integer enclosures of cos on the dyadic angle grid (half-angle and
angle-averaging identities, outward-rounded integer arithmetic); undecided
boxes split until the unresolved mass is below the tolerance.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cells import PeriodCell
from .rationals import ceil_div, floor_div

SCALE_BITS = 64
SCALE = 1 << SCALE_BITS


class CosGrid:
    """Certified integer enclosures of cos(pi * j / 2**k) at scale 2**80.

    Seeds cos(pi/2**k) descend by half-angle (integer sqrt); general odd grid
    points use cos((A+B)/2) = (cos A + cos B) / (2 cos((A-B)/2)) with A, B the
    two even neighbours, whose enclosures live one level up.
    """

    def __init__(self) -> None:
        self._memo: dict[tuple[int, int], tuple[int, int]] = {}
        self._seed: dict[int, tuple[int, int]] = {}

    def _sqrt_iv(self, lo: int, hi: int) -> tuple[int, int]:
        # sqrt of value*SCALE**-1 given at scale: result at scale
        return math.isqrt(lo * SCALE), math.isqrt(hi * SCALE) + 1

    def seed(self, k: int) -> tuple[int, int]:
        """Enclosure of cos(pi / 2**k), k >= 1."""
        got = self._seed.get(k)
        if got is not None:
            return got
        if k == 1:
            val = (0, 0)
        else:
            plo, phi = self.seed(k - 1)
            val = self._sqrt_iv((SCALE + plo) // 2, ceil_div(SCALE + phi, 2))
        self._seed[k] = val
        return val

    def cos(self, j: int, k: int) -> tuple[int, int]:
        """Enclosure of cos(pi * j / 2**k), 0 <= j <= 2**k."""
        while j % 2 == 0 and k > 0:
            j //= 2
            k -= 1
        if j == 0:
            return (SCALE, SCALE)
        if k == 0:
            return (-SCALE, -SCALE)
        if j == 1 and k == 1:
            return (0, 0)
        got = self._memo.get((j, k))
        if got is not None:
            return got
        if j == 1:
            val = self.seed(k)
        else:
            alo, ahi = self.cos(j - 1, k)
            blo, bhi = self.cos(j + 1, k)
            nlo, nhi = alo + blo, ahi + bhi
            dlo, dhi = self.seed(k)
            dlo, dhi = 2 * dlo, 2 * dhi
            # n, d at scale; value n/d; d > 0 for k >= 2
            corners = (
                floor_div(nlo * SCALE, dlo),
                floor_div(nlo * SCALE, dhi),
                floor_div(nhi * SCALE, dlo),
                floor_div(nhi * SCALE, dhi),
            )
            val = (min(corners), max(corners) + 1)
        self._memo[(j, k)] = val
        return val

    def alpha(self, j: int, k: int) -> tuple[int, int]:
        """Enclosure of -2cos(pi j / 2**k) at scale."""
        lo, hi = self.cos(j, k)
        return (-2 * hi, -2 * lo)


@dataclass
class _CellTest:
    """Integer-threshold form tests for one cell at the working scale."""

    forms: list[tuple[int, int, int]]  # (a0*S^2, a1, a2) with c1 at S, c2 at S^2
    lo_thr: int  # form value must exceed this (scale S^2)
    hi_thr: int  # and be at most this
    bbox: tuple[int, int, int, int]  # c1 lo, c1 hi (S), c2 lo, c2 hi (S^2)


def _prepare_cells(cells: Sequence[PeriodCell], epsilon: Fraction) -> list[_CellTest]:
    s2 = SCALE * SCALE
    lo_thr = (epsilon.numerator * s2) // epsilon.denominator if epsilon else 0
    hi_frac = 1 - epsilon
    hi_thr = ceil_div(hi_frac.numerator * s2, hi_frac.denominator) if epsilon else s2
    out = []
    for cell in cells:
        if cell.empty:
            continue
        forms = []
        last = len(cell.forms) - 1
        ok = True
        for i in range(1, last):
            f = cell.forms[i]
            if f.is_constant():
                if epsilon and f.a0 == 1:
                    ok = False  # a constant-1 coefficient dies under shrinking
                continue
            forms.append((f.a0 * s2, f.a1, f.a2))
        if not ok:
            continue
        bb = cell.bbox()
        if bb is None:
            continue
        c1lo = floor_div(bb[0].numerator * SCALE, bb[0].denominator)
        c1hi = ceil_div(bb[1].numerator * SCALE, bb[1].denominator)
        c2lo = floor_div(bb[2].numerator * s2, bb[2].denominator)
        c2hi = ceil_div(bb[3].numerator * s2, bb[3].denominator)
        out.append(_CellTest(forms, lo_thr, hi_thr, (c1lo, c1hi, c2lo, c2hi)))
    return out


@dataclass
class MeasureResult:
    lower: Fraction
    upper: Fraction
    method: str
    samples_or_cells: int
    seconds: float
    converged: bool = True

    def to_json(self) -> dict:
        return {
            "lower": f"{self.lower.numerator}/{self.lower.denominator}",
            "upper": f"{self.upper.numerator}/{self.upper.denominator}",
            "lower_decimal": round(float(self.lower), 9),
            "upper_decimal": round(float(self.upper), 9),
            "method": self.method,
            "boxes": self.samples_or_cells,
            "seconds": round(self.seconds, 3),
            "converged": self.converged,
        }


MAX_ACC_BITS = 2 * 40  # accumulate masses at 4**-40 granularity


def _classify(tests, candidates, a1lo, a1hi, a2lo, a2hi):
    """(1, ()) inside some cell; (-1, ()) outside all; (0, survivors)."""
    c1lo, c1hi = a1lo + a2lo, a1hi + a2hi
    prods = (a1lo * a2lo, a1lo * a2hi, a1hi * a2lo, a1hi * a2hi)
    s2 = SCALE * SCALE
    c2lo, c2hi = min(prods) + 2 * s2, max(prods) + 2 * s2
    survivors = []
    for ti in candidates:
        t = tests[ti]
        bb = t.bbox
        if c1hi < bb[0] or c1lo > bb[1] or c2hi < bb[2] or c2lo > bb[3]:
            continue  # definitely outside this cell
        inside = True
        outside = False
        for a0s, a1c, a2c in t.forms:
            v_lo = a0s
            v_hi = a0s
            if a1c > 0:
                v_lo += a1c * c1lo * SCALE
                v_hi += a1c * c1hi * SCALE
            elif a1c < 0:
                v_lo += a1c * c1hi * SCALE
                v_hi += a1c * c1lo * SCALE
            if a2c > 0:
                v_lo += a2c * c2lo
                v_hi += a2c * c2hi
            elif a2c < 0:
                v_lo += a2c * c2hi
                v_hi += a2c * c2lo
            if v_hi <= t.lo_thr or v_lo > t.hi_thr:
                outside = True
                break
            if not (v_lo > t.lo_thr and v_hi <= t.hi_thr):
                inside = False
        if outside:
            continue
        if inside:
            return 1, ()
        survivors.append(ti)
    return (0, tuple(survivors)) if survivors else (-1, ())


def cell_measure(
    cells: Sequence[PeriodCell],
    tolerance,
    epsilon=Fraction(0),
    method: str = "rigorous-grid",
    max_depth: int = 26,
    mc_samples: int = 200_000,
    seed: int = 0,
) -> MeasureResult:
    """Measure of the union of cells under the conjugate-angle distribution.

    Rigorous grid: returns exact rational [lower, upper] with
    upper - lower < tolerance (unless the depth cap was hit, reported via
    `converged`).  Monte-carlo: a 99 percent confidence interval, labeled.
    """
    tolerance = Fraction(tolerance)
    if tolerance <= 0:
        raise ValueError("tolerance must be positive")
    epsilon = Fraction(epsilon)
    if not Fraction(0) <= epsilon < Fraction(1, 2):
        raise ValueError("epsilon must lie in [0, 1/2)")
    start = time.monotonic()
    if method == "monte-carlo":
        return _monte_carlo(cells, mc_samples, seed, start)
    if method != "rigorous-grid":
        raise ValueError(f"unknown method: {method}")

    tests = _prepare_cells(cells, epsilon)
    full_square = any(len(t.forms) == 0 for t in tests)
    if full_square or not tests:
        val = Fraction(1 if full_square else 0)
        return MeasureResult(val, val, "rigorous-grid", 1, time.monotonic() - start)

    grid = CosGrid()
    boxes_seen = 0

    alpha = grid.alpha
    all_idx = tuple(range(len(tests)))

    def run(depth_cap: int) -> tuple[int, int]:
        """(inside_num, pending_num) at scale 4**-MAX_ACC_BITS/2 squared."""
        nonlocal boxes_seen
        inside_num = 0
        pending_num = 0
        # stack entries: (i, j, k, weight, on_diagonal, candidate cells)
        stack = [(0, 0, 0, 1, True, all_idx)]
        while stack:
            i, j, k, w, diag, cands = stack.pop()
            boxes_seen += 1
            a1lo = alpha(i, k)[0]
            a1hi = alpha(i + 1, k)[1]
            a2lo = alpha(j, k)[0]
            a2hi = alpha(j + 1, k)[1]
            cls, survivors = _classify(tests, cands, a1lo, a1hi, a2lo, a2hi)
            if cls == -1:
                continue
            mass = w << (2 * (MAX_ACC_BITS // 2 - k))
            if cls == 1:
                inside_num += mass
                continue
            if k >= depth_cap:
                pending_num += mass
                continue
            i2, j2, k2 = 2 * i, 2 * j, k + 1
            if diag:
                stack.append((i2, j2, k2, w, True, survivors))
                stack.append((i2 + 1, j2 + 1, k2, w, True, survivors))
                stack.append((i2, j2 + 1, k2, 2 * w, False, survivors))
            else:
                stack.append((i2, j2, k2, w, False, survivors))
                stack.append((i2 + 1, j2, k2, w, False, survivors))
                stack.append((i2, j2 + 1, k2, w, False, survivors))
                stack.append((i2 + 1, j2 + 1, k2, w, False, survivors))
        return inside_num, pending_num

    denom = 1 << (2 * (MAX_ACC_BITS // 2))
    depth = 9
    inside_num, pending_num = run(depth)
    while pending_num > 0 and Fraction(pending_num, denom) >= tolerance:
        gap = float(Fraction(pending_num, denom) / tolerance)
        extra = max(1, math.ceil(math.log2(gap)))
        depth = min(depth + extra, max_depth)
        inside_num, pending_num = run(depth)
        if depth >= max_depth:
            break
    lower = Fraction(inside_num, denom)
    upper = Fraction(inside_num + pending_num, denom)
    return MeasureResult(
        lower,
        upper,
        "rigorous-grid",
        boxes_seen,
        time.monotonic() - start,
        converged=(upper - lower) < tolerance,
    )


def shrunken_cell_measure(cells: Sequence[PeriodCell], epsilon, tolerance, **kw) -> MeasureResult:
    """Measure of the epsilon-shrunken cells: epsilon < g_i < 1 - epsilon on
    the non-constant coefficients."""
    return cell_measure(cells, tolerance, epsilon=Fraction(epsilon), **kw)


def _monte_carlo(cells, samples, seed, start) -> MeasureResult:
    from .salem import RationalCPoint
    from .cells import cell_contains

    rng = random.Random(seed)
    live = [c for c in cells if not c.empty]
    hits = 0
    for _ in range(samples):
        t1 = rng.random() * math.pi
        t2 = rng.random() * math.pi
        a1 = Fraction(round(-2 * math.cos(t1) * (1 << 40)), 1 << 40)
        a2 = Fraction(round(-2 * math.cos(t2) * (1 << 40)), 1 << 40)
        pt = RationalCPoint.from_alphas(a1, a2)
        if any(cell_contains(c, pt) for c in live):
            hits += 1
    p = hits / samples
    half = 2.576 * math.sqrt(max(p * (1 - p), 1e-12) / samples)
    lo = Fraction(max(p - half, 0.0)).limit_denominator(10**12)
    hi = Fraction(min(p + half, 1.0)).limit_denominator(10**12)
    return MeasureResult(lo, hi, "monte-carlo", samples, time.monotonic() - start)
