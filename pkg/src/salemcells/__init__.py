"""Exact beta-expansions for Salem numbers and period cells of the
four-dimensional discretized rotation, with rigorous measure bounds."""

__version__ = "0.1.0"

from .polynomials import IntPolynomial, RatPolynomial, self_reciprocal, sturm_root_count, trace_polynomial
from .algebraic import RealAlgebraic, alg_ceil, alg_floor, alg_sign, isolate_real_roots

__all__ = [
    "IntPolynomial",
    "RatPolynomial",
    "RealAlgebraic",
    "alg_ceil",
    "alg_floor",
    "alg_sign",
    "isolate_real_roots",
    "self_reciprocal",
    "sturm_root_count",
    "trace_polynomial",
]
