import math
from fractions import Fraction

import pytest

from salemcells.polynomials import IntPolynomial
from salemcells.salem import (
    RationalCPoint,
    classify_salem,
    conjugate_c_point,
    minpoly_power,
    power_conjugate_point,
    require_salem,
    sextic_from_abc,
    well_posed_sextic,
)

P = IntPolynomial

LEHMER = P([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
REMARK_A = P([1, -7, -3, -11, -3, -7, 1])
REMARK_B = P([1, -9, -1, -11, -1, -9, 1])
REMARK_C = P([1, -8, 10, -15, 10, -8, 1])


def test_classify_known_salem_sextic():
    v = classify_salem(REMARK_A)
    assert v.salem and v.reason is None
    data = v.data
    assert float(data.beta) > 7 and float(data.gamma) > 2
    # the small trace roots are about -1.08 and 0.35; the conjugate
    # coordinates used by the cells are their negatives
    tr = sorted(float(r) for r in data.trace_roots)
    assert abs(tr[0] + 1.08) < 0.01
    al = sorted(float(a) for a in data.alphas)
    assert abs(al[0] + 0.35) < 0.01 and abs(al[1] - 1.08) < 0.01


def test_classify_rejects_quadratic():
    v = classify_salem(P([1, -3, 1]))
    assert not v.salem and v.reason == "degree-not-even-at-least-4"


def test_classify_rejects_non_reciprocal_and_cyclotomic():
    assert classify_salem(P([1, 0, 0, 0, 0, -1, 1])).reason == "not-self-reciprocal"
    prod = LEHMER * P([1, 1, 1])  # times x^2+x+1
    assert classify_salem(prod).reason == "cyclotomic-factor"


def test_classify_lehmer():
    # numeric oracle: 8 of the 10 roots are on the unit circle
    import numpy as np

    v = classify_salem(LEHMER)
    assert v.salem
    roots = np.roots(list(reversed(LEHMER.coeffs)))
    unimodular = sum(1 for r in roots if abs(abs(r) - 1) < 1e-9)
    assert unimodular == 8
    assert len(v.data.alphas) == 4


def test_classify_pisot_like_product_rejected():
    # (x^2-3x+1)(x^2+3x+1): reciprocal pairs off the unit circle
    p = P([1, -3, 1]) * P([1, 3, 1])
    v = classify_salem(p)
    assert not v.salem


def test_beta_interval_is_tight_and_correct():
    data = require_salem(REMARK_B)
    b = float(data.beta)
    assert REMARK_B.eval(Fraction(9)) < 0  # beta between 9 and 10
    assert 9 < b < 10


def test_well_posed_examples():
    ok, diag = well_posed_sextic(sextic_from_abc(7, 3, 11))
    assert not ok and "|b+2|<c-a" in diag["failed"]
    ok, diag = well_posed_sextic(sextic_from_abc(4, -1, 6))
    assert ok and diag["failed"] == []
    ok, diag = well_posed_sextic(sextic_from_abc(2, 0, 3))
    assert not ok and "|b+2|<c-a" in diag["failed"]


def test_well_posed_root_placement():
    from salemcells.polynomials import sturm_root_count, trace_polynomial

    p = sextic_from_abc(4, -1, 6)
    g = trace_polynomial(p)
    # -1 < r1 < 0 < r2 < 1 < 2 < gamma, checked by exact root counts
    assert sturm_root_count(g, -1, 0) == 1
    assert sturm_root_count(g, 0, 1) == 1
    assert sturm_root_count(g, 1, 2) == 0
    assert sturm_root_count(g, 2, g.cauchy_bound()) == 1
    assert g.eval(Fraction(-1)) < 0 and g.eval(Fraction(0)) > 0
    assert g.eval(Fraction(1)) < 0 and g.eval(Fraction(2)) < 0


def test_power_conjugate_identity():
    data = require_salem(REMARK_A)
    assert power_conjugate_point(data, 1) == data.alphas


def test_power_conjugate_against_arccos_oracle():
    data = require_salem(REMARK_C)
    thetas = [math.acos(-float(a) / 2) for a in data.alphas]
    for m in (2, 3, 6, 11):
        pts = power_conjugate_point(data, m)
        for a, th in zip(pts, thetas):
            assert abs(float(a) - (-2 * math.cos(m * th))) < 1e-6
            assert -2 < float(a) < 2


def test_minpoly_power_is_salem():
    data = require_salem(REMARK_A)
    pm = minpoly_power(data, 5)
    v = classify_salem(pm)
    assert v.salem
    assert abs(float(v.data.beta) - float(data.beta) ** 5) < 1e-3 * float(data.beta) ** 5


def test_power_semigroup_property():
    data = require_salem(REMARK_A)
    p6 = power_conjugate_point(data, 6)
    d2 = require_salem(minpoly_power(data, 2))
    p2_then_3 = power_conjugate_point(d2, 3)
    # as sets of real numbers these must agree exactly
    assert all(any(x == y for y in p2_then_3) for x in p6)


def test_conjugate_c_point_signs():
    data = require_salem(REMARK_A)
    pt = conjugate_c_point(data)
    c1_iv, c2_iv = pt.c_interval(40)
    c1 = float(c1_iv.mid())
    c2 = float(c2_iv.mid())
    a1, a2 = (float(a) for a in data.alphas)
    assert abs(c1 - (a1 + a2)) < 1e-6
    assert abs(c2 - (a1 * a2 + 2)) < 1e-6
    # sign of c1 - (a1+a2) style forms agrees with numerics
    assert pt.form_sign(0, 1, 0) == (1 if c1 > 0 else -1)
    assert pt.form_sign(-2, 0, 1) == (1 if c2 > 2 else -1)
    assert pt.form_sign(-8, 0, 1) == -1  # c2 < 8 always


def test_rational_c_point():
    pt = RationalCPoint.from_alphas(Fraction(7, 4), Fraction(-1))
    assert pt.c1 == Fraction(3, 4) and pt.c2 == Fraction(1, 4)
    assert pt.in_domain() and not pt.on_diagonal()
    diag = RationalCPoint.from_alphas(Fraction(1, 2), Fraction(1, 2))
    assert diag.on_diagonal()


def test_non_monic_rejected():
    with pytest.raises(ValueError):
        classify_salem(P([1, 0, 2]))
