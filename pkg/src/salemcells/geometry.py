"""Exact 2D half-plane geometry in the (c1, c2) chart, plus quadratic surds
and Moebius curves for the (alpha1, alpha2) view.

Every cell constraint is linear in (c1, c2) = (alpha1 + alpha2,
alpha1 alpha2 + 2); under the chart map each boundary line becomes a line or
hyperbola y = (A + Bx)/(C + Dx) over x, and polygon vertices become quadratic
surds a + b sqrt(n).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Constraint:
    """Half-plane a0 + a1*c1 + a2*c2 >= 0 (or > 0 when strict)."""

    a0: Fraction
    a1: Fraction
    a2: Fraction
    strict: bool
    kind: str  # "g-lower", "g-upper", "domain", "cap"
    index: int = -1  # coefficient index for g-constraints

    def value(self, pt: Point) -> Fraction:
        return self.a0 + self.a1 * pt[0] + self.a2 * pt[1]

    def holds_closed(self, pt: Point) -> bool:
        return self.value(pt) >= 0

    def holds_strict(self, pt: Point) -> bool:
        return self.value(pt) > 0

    def int_coeffs(self) -> tuple[int, int, int]:
        """Integer (a0, a1, a2) scaled by the positive common denominator."""
        den = math.lcm(self.a0.denominator, self.a1.denominator, self.a2.denominator)
        return (int(self.a0 * den), int(self.a1 * den), int(self.a2 * den))

    def line_key(self) -> tuple[int, int, int]:
        """Normalized key identifying the boundary line (up to positive scale)."""
        ints = list(self.int_coeffs())
        g = math.gcd(*ints)
        if g:
            ints = [i // g for i in ints]
        for v in ints:
            if v != 0:
                if v < 0:
                    ints = [-i for i in ints]
                break
        return tuple(ints)


def _intersect(a: Constraint, b: Constraint) -> Point | None:
    det = a.a1 * b.a2 - a.a2 * b.a1
    if det == 0:
        return None
    c1 = (-a.a0 * b.a2 + b.a0 * a.a2) / det
    c2 = (-a.a1 * b.a0 + b.a1 * a.a0) / det
    return (c1, c2)


def polygon_vertices(constraints: Sequence[Constraint]) -> list[Point]:
    """Vertices of the closed polygon (strictness ignored), deduplicated."""
    verts: list[Point] = []
    n = len(constraints)
    for i in range(n):
        for j in range(i + 1, n):
            pt = _intersect(constraints[i], constraints[j])
            if pt is None:
                continue
            if all(c.holds_closed(pt) for c in constraints):
                if pt not in verts:
                    verts.append(pt)
    return verts


def polygon_dimension(verts: Sequence[Point]) -> int:
    if not verts:
        return -1
    if len(verts) == 1:
        return 0
    p0 = verts[0]
    direction = None
    for p in verts[1:]:
        d = (p[0] - p0[0], p[1] - p0[1])
        if d == (Fraction(0), Fraction(0)):
            continue
        if direction is None:
            direction = d
            continue
        if direction[0] * d[1] - direction[1] * d[0] != 0:
            return 2
    return 1 if direction is not None else 0


def centroid(verts: Sequence[Point]) -> Point:
    n = len(verts)
    return (
        sum((v[0] for v in verts), Fraction(0)) / n,
        sum((v[1] for v in verts), Fraction(0)) / n,
    )


def interior_point(constraints: Sequence[Constraint], verts: Sequence[Point]) -> Point | None:
    """A point satisfying every constraint strictly, or None."""
    if polygon_dimension(verts) < 2:
        return None
    c = centroid(verts)
    if all(con.holds_strict(c) for con in constraints):
        return c
    return None


def order_vertices(verts: Sequence[Point]) -> list[Point]:
    """Counterclockwise ring around the centroid, by exact angular sort."""
    if len(verts) <= 2:
        return list(verts)
    cx, cy = centroid(verts)

    def half(p: Point) -> int:
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    import functools

    def cmp(p: Point, q: Point) -> int:
        hp, hq = half(p), half(q)
        if hp != hq:
            return -1 if hp < hq else 1
        cross = (p[0] - cx) * (q[1] - cy) - (p[1] - cy) * (q[0] - cx)
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return sorted(verts, key=functools.cmp_to_key(cmp))


@dataclass
class Edge:
    """Polygon edge with its supporting constraint."""

    start: Point
    end: Point
    constraint: Constraint


def polygon_edges(constraints: Sequence[Constraint], verts: Sequence[Point]) -> list[Edge]:
    """Edges of a 2D polygon; the support is identified at the edge midpoint."""
    ring = order_vertices(verts)
    edges: list[Edge] = []
    n = len(ring)
    for i in range(n):
        a, b = ring[i], ring[(i + 1) % n]
        if a == b:
            continue
        mid = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        support = [c for c in constraints if c.value(mid) == 0]
        if not support:
            continue  # midpoint interior: consecutive ring points not an edge
        edges.append(Edge(a, b, support[0]))
    return edges


# ---------------------------------------------------------------------------
# Quadratic surds a + b sqrt(n)
# ---------------------------------------------------------------------------

def _squarefree_split(n: int) -> tuple[int, int]:
    """n = s*s*m with m squarefree; returns (s, m).  Trial division."""
    s, m, d = 1, 1, 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
            s *= d
        if n % d == 0:
            n //= d
            m *= d
        d += 1
    return s, m * n


@dataclass(frozen=True)
class QuadExt:
    """Canonical quadratic surd a + b*sqrt(n): n squarefree > 1 and b != 0,
    or the rational case (b = 0, n = 0)."""

    a: Fraction
    b: Fraction
    n: int

    @classmethod
    def make(cls, a, b=Fraction(0), n: int = 0) -> "QuadExt":
        a, b = Fraction(a), Fraction(b)
        if b == 0 or n == 0:
            return cls(a, Fraction(0), 0)
        if n < 0:
            raise ValueError("negative radicand")
        s, m = _squarefree_split(n)
        if m <= 1:
            return cls(a + b * s * m, Fraction(0), 0)
        return cls(a, b * s, m)

    @classmethod
    def sqrt_of(cls, x: Fraction) -> "QuadExt":
        """sqrt of a nonnegative rational as a canonical surd."""
        x = Fraction(x)
        if x < 0:
            raise ValueError("negative radicand")
        if x == 0:
            return cls.make(0)
        return cls.make(0, Fraction(1, x.denominator), x.numerator * x.denominator)

    def is_rational(self) -> bool:
        return self.n == 0

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        if self.n == 0:
            return self.a, self.a
        num = self.n << (2 * bits)
        r = math.isqrt(num)
        lo_s, hi_s = Fraction(r, 1 << bits), Fraction(r + 1, 1 << bits)
        if self.b >= 0:
            return self.a + self.b * lo_s, self.a + self.b * hi_s
        return self.a + self.b * hi_s, self.a + self.b * lo_s

    def __float__(self) -> float:
        lo, hi = self.enclosure(64)
        return float((lo + hi) / 2)

    def compare(self, other) -> int:
        if not isinstance(other, QuadExt):
            other = QuadExt.make(Fraction(other))
        if (self.a, self.b, self.n) == (other.a, other.b, other.n):
            return 0
        bits = 32
        while True:
            alo, ahi = self.enclosure(bits)
            blo, bhi = other.enclosure(bits)
            if ahi < blo:
                return -1
            if bhi < alo:
                return 1
            # distinct canonical surds denote distinct reals, so this ends
            bits *= 2

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def to_json(self) -> dict:
        return {
            "a": f"{self.a.numerator}/{self.a.denominator}",
            "b": f"{self.b.numerator}/{self.b.denominator}",
            "n": self.n,
        }

    def __repr__(self) -> str:
        if self.n == 0:
            return f"QuadExt({self.a})"
        return f"QuadExt({self.a} + {self.b}*sqrt({self.n}))"


def vertex_to_xy(pt: Point) -> tuple[QuadExt, QuadExt]:
    """Map a (c1, c2) vertex to (x, y) with y <= x: the ordered alpha pair."""
    c1, c2 = pt
    disc = c1 * c1 - 4 * c2 + 8
    if disc < 0:
        raise ValueError("vertex above the parabola has no real alpha pair")
    root = QuadExt.sqrt_of(disc)
    x = QuadExt.make(c1 / 2, root.b / 2, root.n) if not root.is_rational() else QuadExt.make(c1 / 2 + root.a / 2)
    y = QuadExt.make(c1 / 2, -root.b / 2, root.n) if not root.is_rational() else QuadExt.make(c1 / 2 - root.a / 2)
    return x, y


# ---------------------------------------------------------------------------
# Moebius boundary curves y = (A + Bx)/(C + Dx)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Mobius:
    A: int
    B: int
    C: int
    D: int

    @classmethod
    def normalized(cls, A: int, B: int, C: int, D: int) -> "Mobius":
        g = math.gcd(A, B, C, D)
        if g:
            A, B, C, D = A // g, B // g, C // g, D // g
        lead = C if C != 0 else D
        if lead < 0:
            A, B, C, D = -A, -B, -C, -D
        return cls(A, B, C, D)

    @classmethod
    def from_constraint(cls, a0: int, a1: int, a2: int) -> "Mobius":
        """The zero set of a0 + a1 c1 + a2 c2 in (x, y): y = -(a0+2a2+a1 x)/(a1+a2 x)."""
        return cls.normalized(-(a0 + 2 * a2), -a1, a1, a2)

    def eval_at(self, x: Fraction) -> Fraction:
        den = self.C + self.D * x
        if den == 0:
            raise ZeroDivisionError("pole of the boundary curve")
        return Fraction(self.A + self.B * x, 1) / den

    def kind(self) -> str:
        if self.D == 0:
            return "line"
        if self.B == 0 and self.C == 0:
            return "hyperbola-through-origin"
        return "hyperbola"

    def to_json(self) -> dict:
        return {"A": self.A, "B": self.B, "C": self.C, "D": self.D, "kind": self.kind()}
