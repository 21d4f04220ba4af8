"""Period cells: symbolic coefficient forms, cell regions, membership,
(u, v) selection, expansion prediction, and pairwise disjointness.

A candidate R(x) determines coefficient forms g_i of
(x^4 + c1 x^3 + c2 x^2 + c1 x + 1) R(x), each an integer-affine form
a0 + a1 c1 + a2 c2.  The cell is the set of admissible (c1, c2) with
0 < g_i <= 1 for every non-constant interior coefficient; identically-1
coefficients carry side conditions checked separately.  Geometry is done in
the linear (c1, c2) chart; the (alpha1, alpha2) description with y < x is a
derived view whose boundary pieces are lines and hyperbola arcs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .expansion import ExpansionRecord, minimal_periodic_record
from .geometry import (
    Constraint,
    Edge,
    Mobius,
    Point,
    QuadExt,
    centroid,
    interior_point,
    polygon_dimension,
    polygon_edges,
    polygon_vertices,
    vertex_to_xy,
)
from .polynomials import IntPolynomial
from .rationals import RatInterval
from .salem import RationalCPoint, SalemCPoint, SalemData, conjugate_c_point


@dataclass(frozen=True)
class LinearForm:
    """Integer-affine form a0 + a1*c1 + a2*c2."""

    a0: int
    a1: int
    a2: int

    def value(self, c1: Fraction, c2: Fraction) -> Fraction:
        return self.a0 + self.a1 * c1 + self.a2 * c2

    def interval(self, c1_iv: RatInterval, c2_iv: RatInterval) -> RatInterval:
        return c1_iv * self.a1 + c2_iv * self.a2 + Fraction(self.a0)

    def is_constant(self) -> bool:
        return self.a1 == 0 and self.a2 == 0

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(self.a0 + other.a0, self.a1 + other.a1, self.a2 + other.a2)

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(self.a0 - other.a0, self.a1 - other.a1, self.a2 - other.a2)


def symbolic_g(r: IntPolynomial) -> list[LinearForm]:
    """Coefficient forms of (x^4 + c1 x^3 + c2 x^2 + c1 x + 1) * R(x)."""
    if r.is_zero() or r[0] != 1:
        raise ValueError("candidate polynomial must have constant term 1")
    quartic = (
        LinearForm(1, 0, 0),
        LinearForm(0, 1, 0),
        LinearForm(0, 0, 1),
        LinearForm(0, 1, 0),
        LinearForm(1, 0, 0),
    )
    out = [LinearForm(0, 0, 0) for _ in range(r.degree + 5)]
    for i, rc in enumerate(r.coeffs):
        if rc == 0:
            continue
        for j, q in enumerate(quartic):
            cur = out[i + j]
            out[i + j] = LinearForm(cur.a0 + rc * q.a0, cur.a1 + rc * q.a1, cur.a2 + rc * q.a2)
    assert out[0] == LinearForm(1, 0, 0)
    return out


DOMAIN_CONSTRAINTS = (
    Constraint(Fraction(2), Fraction(-2), Fraction(1), True, "domain"),  # c2 > 2c1 - 2
    Constraint(Fraction(2), Fraction(2), Fraction(1), True, "domain"),  # c2 > -2c1 - 2
    Constraint(Fraction(4), Fraction(-1), Fraction(0), True, "domain"),  # c1 < 4
    Constraint(Fraction(4), Fraction(1), Fraction(0), True, "domain"),  # c1 > -4
    Constraint(Fraction(7), Fraction(0), Fraction(-1), False, "cap"),  # c2 <= 7 (redundant)
    Constraint(Fraction(3), Fraction(0), Fraction(1), False, "cap"),  # c2 >= -3 (redundant)
)


def parabola_margin(pt: Point) -> Fraction:
    """c1^2/4 + 2 - c2: positive strictly below the diagonal parabola."""
    return pt[0] * pt[0] / 4 + 2 - pt[1]


@dataclass
class Bullet:
    """One boundary piece of the y < x view: y (<= or >) M(x) on [x_lo, x_hi]."""

    side: str  # "upper" or "lower"
    strict: bool
    curve: Mobius
    x_lo: QuadExt
    x_hi: QuadExt

    def key(self) -> tuple:
        return (self.side, self.strict, self.curve)

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "strict": self.strict,
            "curve": self.curve.to_json(),
            "x_range": [self.x_lo.to_json(), self.x_hi.to_json()],
        }


@dataclass
class PeriodCell:
    name: str | None
    poly: IntPolynomial
    forms: list[LinearForm]
    one_indices: list[int]
    constraints: list[Constraint] = field(repr=False)
    vertices: list[Point] = field(repr=False)
    empty: bool = False
    has_interior: bool = False
    bullets: list[Bullet] = field(default_factory=list, repr=False)
    vertical_pieces: list[dict] = field(default_factory=list, repr=False)
    symmetric: bool = True
    view_complete: bool = True

    @property
    def degenerate(self) -> bool:
        return (not self.empty) and (not self.has_interior)

    @property
    def degree(self) -> int:
        return self.poly.degree

    def bbox(self) -> tuple[Fraction, Fraction, Fraction, Fraction] | None:
        if not self.vertices:
            return None
        xs = [v[0] for v in self.vertices]
        ys = [v[1] for v in self.vertices]
        return (min(xs), max(xs), min(ys), max(ys))

    def g_constraints(self, strictify: bool = False) -> list[Constraint]:
        if strictify:
            return [
                Constraint(c.a0, c.a1, c.a2, True, c.kind, c.index)
                for c in self.constraints
                if c.kind.startswith("g-")
            ]
        return [c for c in self.constraints if c.kind.startswith("g-")]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "R": list(self.poly.coeffs),
            "forms": [[f.a0, f.a1, f.a2] for f in self.forms],
            "one_indices": self.one_indices,
            "empty": self.empty,
            "degenerate": self.degenerate,
            "symmetric": self.symmetric,
            "vertices": [
                [f"{v[0].numerator}/{v[0].denominator}", f"{v[1].numerator}/{v[1].denominator}"]
                for v in self.vertices
            ],
            "boundary": [b.to_json() for b in self.bullets],
            "vertical_pieces": self.vertical_pieces,
        }


def _build_constraints(forms: Sequence[LinearForm]) -> tuple[list[Constraint], bool]:
    """(constraints, constants_ok) for the interior coefficient forms."""
    cons: list[Constraint] = []
    seen: set[tuple] = set()
    constants_ok = True
    last = len(forms) - 1
    for i in range(1, last):
        f = forms[i]
        if f.is_constant():
            if f.a0 != 1:
                constants_ok = False
            continue
        lower = Constraint(Fraction(f.a0), Fraction(f.a1), Fraction(f.a2), True, "g-lower", i)
        upper = Constraint(Fraction(1 - f.a0), Fraction(-f.a1), Fraction(-f.a2), False, "g-upper", i)
        for c in (lower, upper):
            key = (c.a0, c.a1, c.a2, c.strict, c.kind)
            if key not in seen:
                seen.add(key)
                cons.append(c)
    cons.extend(DOMAIN_CONSTRAINTS)
    return cons, constants_ok


def _den_sign_on_range(a1: int, a2: int, x_lo: QuadExt, x_hi: QuadExt) -> int:
    """Sign of a1 + a2*x on the open range (pole allowed only at endpoints)."""
    s_lo = QuadExt.make(x_lo.a * a2 + a1, x_lo.b * a2, x_lo.n).compare(0)
    s_hi = QuadExt.make(x_hi.a * a2 + a1, x_hi.b * a2, x_hi.n).compare(0)
    if s_lo == 0 and s_hi == 0:
        raise ArithmeticError("boundary curve denominator vanishes on the whole range")
    if s_lo == 0:
        return s_hi
    if s_hi == 0:
        return s_lo
    if s_lo != s_hi:
        raise ArithmeticError("boundary curve has a pole inside its x-range")
    return s_lo


def _edge_bullet(edge: Edge) -> Bullet | dict | None:
    """Map a polygon edge to a y<x boundary piece, or a vertical piece dict."""
    con = edge.constraint
    if not con.kind.startswith("g-"):
        return None
    xa, ya = vertex_to_xy(edge.start)
    xb, yb = vertex_to_xy(edge.end)
    if xa.compare(xb) == 0:
        y_pair = sorted([ya, yb])
        return {
            "x": xa.to_json(),
            "y_lo": y_pair[0].to_json(),
            "y_hi": y_pair[1].to_json(),
            "strict": con.strict,
        }
    x_lo, x_hi = (xa, xb) if xa.compare(xb) < 0 else (xb, xa)
    a0, a1, a2 = con.int_coeffs()
    curve = Mobius.from_constraint(a0, a1, a2)
    if curve.A * curve.D == curve.B * curve.C:  # degenerate: a constant line
        if curve.C != 0:
            curve = Mobius.normalized(curve.A, 0, curve.C, 0)
        else:
            curve = Mobius.normalized(curve.B, 0, curve.D, 0)
    den_sign = _den_sign_on_range(a1, a2, x_lo, x_hi)
    side = "lower" if den_sign > 0 else "upper"
    return Bullet(side, con.strict, curve, x_lo, x_hi)


def _merge_bullets(bullets: list[Bullet]) -> list[Bullet]:
    groups: dict[tuple, list[Bullet]] = {}
    for b in bullets:
        groups.setdefault(b.key(), []).append(b)
    out: list[Bullet] = []
    for key, group in groups.items():
        group.sort(key=lambda b: (float(b.x_lo), float(b.x_hi)))
        cur = group[0]
        for nxt in group[1:]:
            if cur.x_hi.compare(nxt.x_lo) == 0:
                cur = Bullet(cur.side, cur.strict, cur.curve, cur.x_lo, nxt.x_hi)
            else:
                out.append(cur)
                cur = nxt
        out.append(cur)
    return out


def derive_cell(r: IntPolynomial, name: str | None = None) -> PeriodCell:
    """Cell of admissible (c1, c2) where every non-constant coefficient form
    lies in (0, 1].  The cell may be empty or degenerate (no interior)."""
    forms = symbolic_g(r)
    one_indices = [
        i for i in range(1, len(forms) - 1) if forms[i] == LinearForm(1, 0, 0)
    ]
    constraints, constants_ok = _build_constraints(forms)
    if not constants_ok:
        return PeriodCell(name, r, forms, one_indices, constraints, [], empty=True)
    verts = polygon_vertices(constraints)
    if not verts:
        return PeriodCell(name, r, forms, one_indices, constraints, [], empty=True)
    dim = polygon_dimension(verts)
    max_margin = max(parabola_margin(v) for v in verts)
    if max_margin < 0:
        # entirely above the parabola: no real alpha pair satisfies the system
        return PeriodCell(name, r, forms, one_indices, constraints, verts, empty=True)
    has_interior = (
        dim == 2
        and max_margin > 0
        and interior_point(constraints, verts) is not None
    )
    cell = PeriodCell(
        name,
        r,
        forms,
        one_indices,
        constraints,
        verts,
        empty=False,
        has_interior=has_interior,
    )
    if not has_interior:
        # closure is a point or segment; the mixed-strictness set may still
        # be empty.  Probe vertices and pair midpoints for actual members.
        probes = list(verts)
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                probes.append(
                    ((verts[i][0] + verts[j][0]) / 2, (verts[i][1] + verts[j][1]) / 2)
                )
        cell.empty = not any(
            cell_contains(cell, RationalCPoint(p[0], p[1])) for p in probes
        )
        if cell.empty:
            return cell
    if dim == 2:
        bullets: list[Bullet] = []
        for edge in polygon_edges(constraints, verts):
            try:
                piece = _edge_bullet(edge)
            except (ValueError, ArithmeticError):
                # edge reaches above the parabola or folds; the alpha view is
                # partial there (membership and measure are unaffected)
                cell.view_complete = False
                continue
            if piece is None:
                continue
            if isinstance(piece, Bullet):
                bullets.append(piece)
            else:
                cell.vertical_pieces.append(piece)
        cell.bullets = _merge_bullets(bullets)
    return cell


# ---------------------------------------------------------------------------
# Membership and location
# ---------------------------------------------------------------------------

def cell_contains(cell: PeriodCell, point, strict: bool = False) -> bool:
    """Membership of an exact point (RationalCPoint or SalemCPoint).

    Default semantics: 0 < g_i <= 1, open domain, diagonal admitted.
    Strict: 0 < g_i < 1 and off the diagonal (true interior).
    """
    if cell.empty:
        return False
    if not point.in_domain():
        return False
    if strict and point.on_diagonal():
        return False
    last = len(cell.forms) - 1
    for i in range(1, last):
        f = cell.forms[i]
        if f.is_constant():
            if f.a0 != 1:
                return False
            if strict:
                return False  # a constant-1 coefficient sits on the boundary case
            continue
        if point.form_sign(f.a0, f.a1, f.a2) <= 0:
            return False
        s_up = point.form_sign(f.a0 - 1, f.a1, f.a2)
        if s_up > 0 or (strict and s_up == 0):
            return False
    return True


def locate_point(point, cells: Sequence[PeriodCell], strict: bool = False) -> int | None:
    """Index of the unique cell containing the point, or None."""
    for idx, cell in enumerate(cells):
        if cell_contains(cell, point, strict=strict):
            return idx
    return None


# ---------------------------------------------------------------------------
# (u, v) selection and the beta threshold
# ---------------------------------------------------------------------------

@dataclass
class ChosenUV:
    u: Fraction
    v: Fraction
    threshold: Fraction
    value_one_indices: list[int]


def _uv_from_bounds(min_lb: Fraction, max_ub: Fraction | None, eq_lb: Fraction | None) -> ChosenUV:
    candidates = [min_lb]
    if eq_lb is not None:
        candidates.append(eq_lb)
    u = min(candidates) / 2
    if max_ub is None:
        v = (u + 1) / 2
    else:
        v = (1 + max_ub) / 2
        if v <= u:
            v = (u + 1) / 2
    threshold = max(2 / u, 1 / (1 - v))
    return ChosenUV(u, v, threshold, [])


def choose_uv(cell: PeriodCell, point) -> ChosenUV:
    """Exact (u, v) and the threshold max(2/u, 1/(1-v)) at a point of the cell.

    For indices whose coefficient equals one at the point the side conditions
    are verified: g_1 < g_{i-1} + g_{i+1}, or equality together with
    g_1 - g_{i+1} > 0 (whose value then also bounds u).
    """
    if not cell_contains(cell, point):
        raise ValueError("point is outside the cell")
    forms = cell.forms
    last = len(forms) - 1
    ones: list[int] = []
    others: list[int] = []
    for i in range(1, last):
        f = forms[i]
        if f.is_constant():
            ones.append(i)
        elif point.form_sign(f.a0 - 1, f.a1, f.a2) == 0:
            ones.append(i)
        else:
            others.append(i)
    eq_forms: list[LinearForm] = []
    g1 = forms[1]
    for i in ones:
        lhs = forms[i - 1] + forms[i + 1] - g1  # g_{i-1} + g_{i+1} - g_1
        s = point.form_sign(lhs.a0, lhs.a1, lhs.a2)
        if s < 0:
            raise ValueError(f"side condition fails at coefficient {i}")
        if s == 0:
            diff = g1 - forms[i + 1]
            if point.form_sign(diff.a0, diff.a1, diff.a2) <= 0:
                raise ValueError(f"equality-case side condition fails at coefficient {i}")
            eq_forms.append(diff)

    if isinstance(point, RationalCPoint):
        vals = [forms[i].value(point.c1, point.c2) for i in range(1, last)]
        min_lb = min(vals)
        non_one = [forms[i].value(point.c1, point.c2) for i in others]
        max_ub = max(non_one) if non_one else None
        eq_lb = min((f.value(point.c1, point.c2) for f in eq_forms), default=None)
        uv = _uv_from_bounds(min_lb, max_ub, eq_lb)
        return ChosenUV(uv.u, uv.v, uv.threshold, ones)

    # algebraic point: rational bounds via interval refinement
    bits = 48
    while True:
        c1_iv, c2_iv = point.c_interval(bits)
        all_iv = [forms[i].interval(c1_iv, c2_iv) for i in range(1, last)]
        min_lb = min(iv.lo for iv in all_iv)
        non_one_iv = [forms[i].interval(c1_iv, c2_iv) for i in others]
        max_ub = max((iv.hi for iv in non_one_iv), default=None)
        eq_lb = min((f.interval(c1_iv, c2_iv).lo for f in eq_forms), default=None)
        if min_lb > 0 and (max_ub is None or max_ub < 1) and (eq_lb is None or eq_lb > 0):
            uv = _uv_from_bounds(min_lb, max_ub, eq_lb)
            return ChosenUV(uv.u, uv.v, uv.threshold, ones)
        bits *= 2
        if bits > 1 << 14:
            raise ArithmeticError("could not separate coefficient values from {0, 1}")


# ---------------------------------------------------------------------------
# Expansion prediction
# ---------------------------------------------------------------------------

@dataclass
class ExpansionPrediction:
    record: ExpansionRecord
    digits_head: tuple[int, ...]
    u: Fraction
    v: Fraction
    threshold: Fraction
    cell_name: str | None


def predicted_word(f: IntPolynomial) -> ExpansionRecord:
    """Digit word c_1 (c_2 ... c_{N-2}, c_1 - 1, c_1 - 1)^infinity read off
    f = x^N + 1 - sum c_i x^i, canonicalized to minimal (m, p)."""
    n_deg = f.degree
    if f[0] != 1 or f[n_deg] != 1:
        raise ValueError("product polynomial must be monic with constant term 1")
    digits = [-f[i] for i in range(1, n_deg)]  # c_1 .. c_{N-1}, c_{N-1} = c_1
    c1 = digits[0]
    if any(d <= 0 for d in digits) or any(d >= c1 for d in digits[1:-1]):
        raise ValueError("digit inequalities c_1 > c_j > 0 fail")
    cycle = digits[1:-1] + [c1 - 1, c1 - 1]
    return minimal_periodic_record([c1] + cycle, 1, len(cycle))


def predict_expansion(data: SalemData, r: IntPolynomial, cell: PeriodCell | None = None) -> ExpansionPrediction:
    """Predicted d_beta(1) for the Salem number of `data` through cell R.

    Refuses (ValueError) when the conjugate point is outside the cell or when
    beta does not exceed the threshold: the prediction would be unsound.
    """
    if cell is None:
        cell = derive_cell(r)
    point = conjugate_c_point(data)
    if not cell_contains(cell, point):
        raise ValueError("conjugate point is not in the cell")
    uv = choose_uv(cell, point)
    if not (data.beta.compare(uv.threshold) > 0):
        raise ValueError(
            f"beta below the prediction threshold {uv.threshold}; prediction unsound"
        )
    f = r * data.minpoly
    rec = predicted_word(f)
    half = (f.degree - 1 + 1) // 2
    return ExpansionPrediction(
        record=rec,
        digits_head=tuple(-f[i] for i in range(1, half + 1)),
        u=uv.u,
        v=uv.v,
        threshold=uv.threshold,
        cell_name=cell.name,
    )


# ---------------------------------------------------------------------------
# Disjointness
# ---------------------------------------------------------------------------

def cells_disjoint(a: PeriodCell, b: PeriodCell) -> tuple[bool, Point | None]:
    """Whether the open interiors are disjoint inside the admissible domain.

    Exact rational feasibility: vertex enumeration of the combined linear
    system; the parabola side is decided by maximizing the concave margin
    c1^2/4 + 2 - c2 ... equivalently minimizing the concave c2 - c1^2/4 at
    the vertices (a concave function attains its minimum at a vertex).
    """
    if a.empty or b.empty:
        return True, None
    combined = a.g_constraints(strictify=True) + b.g_constraints(strictify=True)
    combined += list(DOMAIN_CONSTRAINTS)
    verts = polygon_vertices(combined)
    if polygon_dimension(verts) < 2:
        return True, None
    margins = [(parabola_margin(v), v) for v in verts]
    best, vstar = max(margins, key=lambda t: t[0])
    if best <= 0:
        return True, None
    c = centroid(verts)
    t = Fraction(1, 2)
    for _ in range(200):
        w = (vstar[0] + t * (c[0] - vstar[0]), vstar[1] + t * (c[1] - vstar[1]))
        if parabola_margin(w) > 0 and all(con.holds_strict(w) for con in combined):
            return False, w
        t /= 2
    raise ArithmeticError("failed to construct an intersection witness")


# ---------------------------------------------------------------------------
# The shipped catalog
# ---------------------------------------------------------------------------

CATALOG_POLYS: dict[str, list[int]] = {
    "R1": [1],
    "R2": [1, 1],
    "R3": [1, 0, 1],
    "R4": [1, 2, 1],
    "R5": [1, 1, 1, 1],
    "R6": [1, 2, 2, 1],
    "R7": [1, -1, 1, -1, 1],
    "R8": [1, 2, 2, 2, 2, 1],
    "R9": [1, 1, -1, -1, 1, 1],
    "R10": [1, 0, 2, 0, 2, 0, 1],
    "R11": [1, 1, 1, 2, 1, 1, 1],
    "R12": [1, 1, 1, 2, 2, 1, 1, 1],
    "R13": [1, 1, 2, 2, 2, 2, 1, 1],
    "R14": [1, 2, 1, -1, -1, 1, 2, 1],
    "R15": [1, 0, 1, -1, 1, -1, 1, 0, 1],
    "R16": [1, -2, 2, -1, 1, -2, 3, -2, 1, -1, 2, -2, 1],
    "R17": [1, 3, 4, 3, 1],
    "R18": [1, 3, 4, 2, -2, -4, -2, 2, 4, 3, 1],
    "R19": [1, 3, 5, 5, 3, 1],
    "R20": [1, 3, 5, 6, 5, 3, 1],
    "R21": [1, 3, 5, 6, 6, 5, 3, 1],
    "R22": [1, 3, 5, 6, 6, 6, 6, 5, 3, 1],
    "R23": [1, 3, 4, 4, 4, 4, 3, 1],
    "R24": [1, 3, 4, 3, 2, 3, 4, 3, 1],
    "R25": [1, 1, 1, 2, 2, 2, 2, 1, 1, 1],
    "R26": [1, 1, 1, 2, 2, 2, 3, 2, 2, 2, 1, 1, 1],
    "R27": [1, 4, 8, 11, 11, 8, 4, 1],
    "R28": [1, 1, 2, 2, 2, 3, 2, 2, 2, 1, 1],
    "R29": [1, 1, 2, 2, 3, 3, 3, 3, 2, 2, 1, 1],
    "R30": [1, 1, 2, 3, 3, 4, 4, 4, 4, 3, 3, 2, 1, 1],
    "R31": [1, 0, 2, -1, 2, -2, 2, -2, 2, -1, 2, 0, 1],
    "R32": [1, 2, 2, 2, 3, 3, 2, 2, 2, 1],
    "R33": [1, 2, 2, 3, 4, 4, 4, 4, 3, 2, 2, 1],
    "L1": [1, 0, -1, 1, 1, -1, 0, 1],
    "L2": [1, -1, 0, 1, 0, -1, 1],
    "L3": [1, 0, -1, 1, 0, 0, 1, -1, 0, 1],
    "L4": [1, -2, 2, 0, -2, 3, -2, 0, 2, -2, 1],
    "L5": [1, -1, 0, 1, 0, 0, -1, 1, 1, -1, 0, 0, 1, 0, -1, 1],
    "L6": [1, -3, 5, -5, 3, 0, -2, 2, 0, -2, 3, -2, 0, 2, -2, 0, 3, -5, 5, -3, 1],
    "L7": [1, -3, 6, -8, 8, -5, 0, 5, -7, 5, 0, -5, 8, -8, 6, -3, 1],
}

NAMES_23 = [f"R{i}" for i in range(1, 19)] + [f"L{i}" for i in range(1, 6)]
NAMES_40 = [f"R{i}" for i in range(1, 34)] + [f"L{i}" for i in range(1, 8)]


def build_catalog(names: Sequence[str] | None = None) -> list[PeriodCell]:
    names = list(names) if names is not None else NAMES_40
    cells = []
    for name in names:
        cells.append(derive_cell(IntPolynomial(CATALOG_POLYS[name]), name))
    return cells


def catalog_to_json(cells: Sequence[PeriodCell]) -> str:
    return json.dumps([c.to_json() for c in cells], indent=1, sort_keys=True)


def load_catalog_file(path: str) -> list[PeriodCell]:
    """Rebuild cells from the R polynomials stored in a catalog JSON file."""
    with open(path) as fh:
        entries = json.load(fh)
    return [derive_cell(IntPolynomial(e["R"]), e.get("name")) for e in entries]
