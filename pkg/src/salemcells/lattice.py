"""The four-dimensional discretized rotation on Z^4 and the shifted-addition
construction of candidate period polynomials.

The map sends (k_n, k_{n+1}, k_{n+2}, k_{n+3}) to
(k_{n+1}, k_{n+2}, k_{n+3}, -ceil(c1 k_{n+3} + c2 k_{n+2} + c1 k_{n+1} + k_n - 1))
with c1 = alpha1 + alpha2 and c2 = alpha1 alpha2 + 2, so every window
satisfies 0 < k_{n+4} + c1 k_{n+3} + c2 k_{n+2} + c1 k_{n+1} + k_n <= 1.
Scalars are exact: Fractions, or elements of a real algebraic field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebraic import AlgebraicScalar
from .polynomials import IntPolynomial
from .rationals import fraction_ceil, fraction_floor

Scalar = Fraction | AlgebraicScalar

DEFAULT_ORBIT_CAP = 50_000


def _ceil_scalar(x: Scalar) -> int:
    if isinstance(x, AlgebraicScalar):
        return x.ceil()
    return fraction_ceil(Fraction(x))


def _floor_scalar(x: Scalar) -> int:
    if isinstance(x, AlgebraicScalar):
        return x.floor()
    return fraction_floor(Fraction(x))


@dataclass
class RotationParams:
    """Exact coefficients c1 = alpha1 + alpha2, c2 = alpha1 alpha2 + 2."""

    c1: Scalar
    c2: Scalar

    @classmethod
    def from_alphas(cls, a1, a2) -> "RotationParams":
        if isinstance(a1, AlgebraicScalar) or isinstance(a2, AlgebraicScalar):
            return cls(a1 + a2, a1 * a2 + 2)
        a1, a2 = Fraction(a1), Fraction(a2)
        return cls(a1 + a2, a1 * a2 + 2)

    def admissible(self) -> bool:
        """c2 > 2|c1| - 2 and c2 - 2 < c1^2/4 < 4: both alphas in (-2, 2), distinct."""
        c1, c2 = self.c1, self.c2
        quarter = Fraction(1, 4)
        conds = (
            c2 - 2 * c1 + 2,
            c2 + 2 * c1 + 2,
            4 - c1 * c1 * quarter,
            c1 * c1 * quarter + 2 - c2,
        )
        return all(_sig(v) > 0 for v in conds)


State = tuple[int, int, int, int]


def step_T(state: State, params: RotationParams) -> State:
    """One application of the discretized rotation."""
    k0, k1, k2, k3 = state
    u = params.c1 * (k3 + k1) + params.c2 * k2 + (k0 - 1)
    return (k1, k2, k3, -_ceil_scalar(u))


def inverse_step_T(state: State, params: RotationParams) -> State:
    """Exact inverse: recover k_n from (k_{n+1}, ..., k_{n+4})."""
    k1, k2, k3, k4 = state
    u = params.c1 * (k3 + k1) + params.c2 * k2 + (k4 - 1)
    return (-_ceil_scalar(u), k1, k2, k3)


def constraint_value(window: tuple[int, int, int, int, int], params: RotationParams):
    """k_{n+4} + c1 k_{n+3} + c2 k_{n+2} + c1 k_{n+1} + k_n, exactly."""
    k0, k1, k2, k3, k4 = window
    return params.c1 * (k3 + k1) + params.c2 * k2 + k0 + k4


@dataclass
class OrbitRecord:
    seed: State
    ks: list[int]
    period: int | None
    iterations: int
    status: str  # "periodic" or "cap-exceeded"


def orbit(seed: State, params: RotationParams, cap: int = DEFAULT_ORBIT_CAP) -> OrbitRecord:
    """Iterate until first return to the seed (valid by bijectivity) or cap."""
    state = seed
    ks: list[int] = []
    for n in range(1, cap + 1):
        state = step_T(state, params)
        ks.append(state[3])
        if state == seed:
            return OrbitRecord(seed, ks, n, n, "periodic")
    return OrbitRecord(seed, ks, None, cap, "cap-exceeded")


def orbit_from_origin(params: RotationParams, cap: int = DEFAULT_ORBIT_CAP) -> OrbitRecord:
    return orbit((0, 0, 0, 0), params, cap)


def orbit_period_scaled(p1: int, p2: int, q: int, cap: int) -> int | None:
    """Fast integer-only origin-orbit period for c1 = p1/q, c2 = p2/q.

    Uses -ceil(u) = floor(-u) so each step is one floor division.
    """
    k0 = k1 = k2 = k3 = 0
    for n in range(1, cap + 1):
        t = p1 * (k3 + k1) + p2 * k2 + q * (k0 - 1)
        k0, k1, k2, k3 = k1, k2, k3, (-t) // q
        if k0 == 0 and k1 == 0 and k2 == 0 and k3 == 0:
            return n
    return None


# ---------------------------------------------------------------------------
# Shifted addition
# ---------------------------------------------------------------------------

@dataclass
class SearchResult:
    poly: IntPolynomial | None
    ks: list[int]
    steps: int
    status: str  # "found" or "cap-exceeded"


def shifted_addition_search(params: RotationParams, cap: int = DEFAULT_ORBIT_CAP) -> SearchResult:
    """Iterate z_{n+1} = (t2 + c1 k, t3 + c2 k, t4 + c1 k, k) with
    k = -ceil(t1 - 1), from z_{-1} = 0; stop when 0 < t_i <= 1 for i = 1, 2, 3
    and the last entry is 1.  Returns R(x) = sum k_i x^i on success.

    The candidate cell may still be empty after intersecting the domain;
    validation is the caller's job.
    """
    c1, c2 = params.c1, params.c2
    t1: Scalar = Fraction(0)
    t2: Scalar = Fraction(0)
    t3: Scalar = Fraction(0)
    t4 = 0
    ks: list[int] = []
    for n in range(cap + 1):
        k = -_ceil_scalar(t1 - 1)
        t1, t2, t3, t4 = t2 + c1 * k, t3 + c2 * k, t4 + c1 * k, k
        ks.append(k)
        if k == 1 and _stop_ok(t1, t2, t3):
            return SearchResult(IntPolynomial(ks), ks, n, "found")
    return SearchResult(None, ks, cap, "cap-exceeded")


def _sig(v: Scalar) -> int:
    if isinstance(v, AlgebraicScalar):
        return v.sign()
    v = Fraction(v)
    return (v > 0) - (v < 0)


def _stop_ok(t1: Scalar, t2: Scalar, t3: Scalar) -> bool:
    for t in (t1, t2, t3):
        if _sig(t) <= 0 or _sig(t - 1) > 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Two-dimensional comparison map
# ---------------------------------------------------------------------------

def step_srs2(state: tuple[int, int], lam: Scalar) -> tuple[int, int]:
    """Planar discretized rotation: 0 <= a_{n+2} + lambda a_{n+1} + a_n < 1."""
    a0, a1 = state
    return (a1, -_floor_scalar(lam * a1 + a0))


def orbit_srs2(seed: tuple[int, int], lam: Scalar, cap: int = DEFAULT_ORBIT_CAP) -> int | None:
    state = seed
    for n in range(1, cap + 1):
        state = step_srs2(state, lam)
        if state == seed:
            return n
    return None
