from fractions import Fraction

import hypothesis
import hypothesis.strategies as st
import pytest

from salemcells.polynomials import (
    IntPolynomial,
    RatPolynomial,
    compose_trace_back,
    int_gcd,
    is_square_free,
    self_reciprocal,
    square_free_part,
    sturm_root_count,
    trace_polynomial,
)

P = IntPolynomial


def test_normalization_and_degree():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([]).degree == -1
    assert P([0]).degree == -1
    assert P([5]).degree == 0


def test_arithmetic_consistency():
    p = P([1, -3, 2])
    q = P([-1, 1])
    t = Fraction(7, 3)
    assert (p + q).eval(t) == p.eval(t) + q.eval(t)
    assert (p * q).eval(t) == p.eval(t) * q.eval(t)
    assert (p - q).eval(t) == p.eval(t) - q.eval(t)


coeffs_strategy = st.lists(st.integers(min_value=-20, max_value=20), min_size=1, max_size=13)


@hypothesis.given(coeffs_strategy, coeffs_strategy, st.fractions())
@hypothesis.settings(max_examples=60, deadline=None)
def test_ring_ops_vs_evaluation(a, b, t):
    p, q = P(a), P(b)
    assert (p + q).eval(t) == p.eval(t) + q.eval(t)
    assert (p * q).eval(t) == p.eval(t) * q.eval(t)


def test_rat_divmod():
    p = RatPolynomial([2, 0, 1])  # x^2 + 2
    d = RatPolynomial([1, 1])  # x + 1
    q, r = p.divmod(d)
    assert (q * d + r).coeffs == p.coeffs
    assert r.degree < d.degree


def test_gcd_and_square_free():
    p = P([-1, 0, 1])  # x^2 - 1
    q = P([-1, 1])  # x - 1
    assert int_gcd(p, q).coeffs == (-1, 1)
    cube = P([0, 0, 0, 1])  # x^3
    assert square_free_part(cube).coeffs == (0, 1)
    assert not is_square_free(cube)
    assert is_square_free(P([-1, 0, 1]))


def test_self_reciprocal():
    assert self_reciprocal(P([1, -2, 3, -2, 1]))
    assert not self_reciprocal(P([-1, -1, 1]))
    # a degree-12 palindrome
    r16 = P([1, -2, 2, -1, 1, -2, 3, -2, 1, -1, 2, -2, 1])
    assert self_reciprocal(r16)


def test_sturm_basic_counts():
    assert sturm_root_count(P([-2, 0, 1]), 0, 2) == 1  # sqrt(2)
    assert sturm_root_count(P([1, 0, 1]), -10, 10) == 0
    # endpoint roots: (lo, hi] semantics
    p = P([0, -1, 0, 1])  # x(x-1)(x+1)
    assert sturm_root_count(p, -1, 1) == 2  # 0 and 1; -1 excluded
    assert sturm_root_count(p, 0, 1) == 1
    assert sturm_root_count(p, -2, 2) == 3


def test_sturm_trace_of_known_sextic():
    # derived via an independent numeric oracle: the cubic has two roots in (-2, 2)
    p = P([1, -8, 10, -15, 10, -8, 1])
    g = trace_polynomial(p)
    assert g.coeffs == (1, 7, -8, 1)
    assert sturm_root_count(g, -2, 2) == 2


def test_sturm_rejects_zero():
    with pytest.raises(ValueError):
        sturm_root_count(P([]), 0, 1)


@hypothesis.given(
    coeffs_strategy,
    st.fractions(min_value=-30, max_value=30),
    st.fractions(min_value=-30, max_value=30),
    st.fractions(min_value=-30, max_value=30),
)
@hypothesis.settings(max_examples=60, deadline=None)
def test_sturm_partition_additivity(a, x, y, z):
    p = P(a)
    hypothesis.assume(not p.is_zero())
    lo, mid, hi = sorted((x, y, z))
    hypothesis.assume(lo < mid < hi)
    whole = sturm_root_count(p, lo, hi)
    assert whole == sturm_root_count(p, lo, mid) + sturm_root_count(p, mid, hi)


def test_trace_polynomial_examples():
    assert trace_polynomial(P([1, 0, 0, 0, 1])).coeffs == (-2, 0, 1)  # x^4+1 -> y^2-2
    assert trace_polynomial(P([1, -3, 1])).coeffs == (-3, 1)  # x^2-3x+1 -> y-3
    # x^6 - a x^5 - b x^4 - c x^3 - b x^2 - a x + 1 with (a, b, c) = (4, -1, 6)
    p = P([1, -4, 1, -6, 1, -4, 1])
    assert trace_polynomial(p).coeffs == (2, -2, -4, 1)  # y^3 - 4y^2 - 2y + 2


def test_trace_polynomial_domain_errors():
    with pytest.raises(ValueError):
        trace_polynomial(P([1, -1, -1]))  # not self-reciprocal
    with pytest.raises(ValueError):
        trace_polynomial(P([1, 1]))  # odd degree


def _random_self_reciprocal(draw_half):
    half = list(draw_half)
    full = half + half[-2::-1] if len(half) > 1 else half
    return P(full)


@hypothesis.given(st.lists(st.integers(min_value=-9, max_value=9), min_size=2, max_size=7))
@hypothesis.settings(max_examples=60, deadline=None)
def test_trace_round_trip(half):
    half = half + [1]  # force nonzero middle-to-leading half
    full = half[-1:0:-1] + half
    p = P(full)
    hypothesis.assume(p.degree % 2 == 0 and p.degree >= 2 and self_reciprocal(p))
    g = trace_polynomial(p)
    assert compose_trace_back(g, p.degree // 2) == p
