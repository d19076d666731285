from __future__ import annotations

import random
from fractions import Fraction
from math import ceil, comb

import mpmath
import pytest

from codezeta.code import weight_distribution
from codezeta.corpus import code_corpus, self_reciprocal_poly
from codezeta.duality import check_zeta_functional
from codezeta.errors import GenusZero, HypothesisViolation, ZeroConstantTerm, ZeroPolynomial
from codezeta.fixtures import ext_hamming84, golay24, hamming74
from codezeta.poly import RationalPoly
from codezeta.rha import (
    CLOSED_DEG2,
    CLOSED_DEG4,
    DEGENERATE,
    EXACT_STURM,
    ODD_DEGREE,
    RECIPROCITY,
    QuadRingElement,
    RhaVerdict,
    deg2_zeta,
    deg4_zeta,
    field_bound,
    log_coefficient_growth,
    log_coefficients,
    rha_check,
    rha_closed_form,
    rha_deg2,
    rha_deg4,
)
from codezeta.zeta import zeta_profile

HAMMING_P = RationalPoly([Fraction(1, 5), Fraction(2, 5), Fraction(2, 5)])


def test_hamming_verdict():
    v = rha_check(HAMMING_P, 2)
    assert v.holds and v.method == EXACT_STURM
    assert v.exact_certificate["G"] == RationalPoly([2, 1])
    assert v.max_residual < 1e-9
    for z, _ in v.root_diagnostics:
        assert abs(abs(z) - 2**-0.5) < 1e-12
    assert RhaVerdict.from_json(v.to_json()).holds


def test_rejections():
    assert rha_check(RationalPoly([0, 1]), 2).method == ODD_DEGREE
    v = rha_check(RationalPoly([1]), 5)
    assert v.holds and v.method == DEGENERATE
    v = rha_check(RationalPoly([1, 1, 4]), 2)
    assert not v.holds and v.method == RECIPROCITY
    with pytest.raises(ZeroPolynomial):
        rha_check(RationalPoly(), 2)


def test_deg2_examples():
    assert rha_deg2(Fraction(1, 5), 2)
    assert not rha_deg2(Fraction(1, 100), 2)
    assert rha_deg2(Fraction(1, 9), 4) and rha_deg2(1, 4)
    assert rha_check(deg2_zeta(Fraction(1, 9), 4), 4, diagnostics=False).holds
    with pytest.raises(HypothesisViolation):
        rha_deg2(0, 2)


def test_deg4_examples():
    with pytest.raises(HypothesisViolation):
        rha_deg4(1, 100, 2)
    assert not rha_deg4(Fraction(1, 2), 100, 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_deg2_grid(q):
    for i in range(1, 401):
        c0 = Fraction(i, 200)
        assert rha_deg2(c0, q) == rha_check(deg2_zeta(c0, q), q, diagnostics=False).holds


@pytest.mark.parametrize("q", [2, 3, 4])
def test_deg4_boundary(q):
    """Boundary of the deg-4 region: c1 = 2 sqrt(c0) - (q+1) c0 for square c0."""
    for a in range(1, 10):
        c0 = Fraction(a, 10) ** 2
        for sgn in (1, -1):
            c1 = sgn * 2 * Fraction(a, 10) - (q + 1) * c0
            assert ((q + 1) * c0 + c1) ** 2 == 4 * c0
            assert rha_deg4(c0, c1, q) == rha_check(deg4_zeta(c0, c1, q), q, diagnostics=False).holds


def test_closed_form_dispatch():
    v = rha_closed_form(RationalPoly([Fraction(1, 5)]), 2)
    assert v.method == CLOSED_DEG2 and v.holds
    v = rha_closed_form(RationalPoly([Fraction(1, 4), 0, Fraction(1, 2)]), 2)
    assert v.method == CLOSED_DEG4
    assert rha_closed_form(RationalPoly([1, 2, 3]), 2) is None


def test_field_bound_examples():
    assert field_bound(4, 4, 1, 14, 2) == (True, 14)
    C = comb(8, 4)
    q = (ceil(C**0.5) + 2) ** 2
    assert field_bound(4, 4, 1, q - 1, q) == (False, 1)
    assert field_bound(12, 8, 5, 759, 2) == (True, 759)
    with pytest.raises(GenusZero):
        field_bound(2, 3, 0, 6, 3)


def test_log_coefficients():
    assert log_coefficients(HAMMING_P, 1) == [2]
    assert log_coefficients(RationalPoly([1]), 5) == [0] * 5
    s = log_coefficients(HAMMING_P, 50)
    assert log_coefficient_growth(s, 2) <= 2 + 1e-12
    with pytest.raises(ZeroConstantTerm):
        log_coefficients(RationalPoly([0, 1]), 3)


def test_self_reciprocal_corpus_agrees_with_numerics():
    rng = random.Random(21)
    for _ in range(150):
        q = rng.choice([2, 3, 4, 5, 9])
        p = self_reciprocal_poly(q, rng.randint(1, 4), rng, rng.random() < 0.5)
        v = rha_check(p, q)
        if v.holds:
            assert v.max_residual < 1e-9
        else:
            assert v.max_residual > 1e-6


def test_quad_ring_against_decimals():
    rng = random.Random(3)
    mpmath.mp.dps = 100
    try:
        for _ in range(1000):
            q = rng.choice([2, 3, 5, 6, 7, 8, 10, 11])
            x = QuadRingElement(Fraction(rng.randint(-99, 99), rng.randint(1, 30)), Fraction(rng.randint(-99, 99), rng.randint(1, 30)), q)
            y = QuadRingElement(Fraction(rng.randint(-99, 99), rng.randint(1, 30)), Fraction(rng.randint(-99, 99), rng.randint(1, 30)), q)
            def val(z):
                return mpmath.mpf(z.a.numerator) / z.a.denominator + mpmath.mpf(z.b.numerator) / z.b.denominator * mpmath.sqrt(q)
            assert (x < y) == (val(x) < val(y))
            assert (x * y).sign() == mpmath.sign(val(x) * val(y))
    finally:
        mpmath.mp.dps = 15


def test_quad_ring_perfect_square():
    x = QuadRingElement(1, 1, 9)
    assert x.b == 0 and x.a == 4


def test_rha_implies_functional_equation():
    codes = [hamming74(), ext_hamming84(), golay24()] + list(code_corpus(60, seed=13))
    for code in codes:
        zp = zeta_profile(weight_distribution(code))
        if rha_check(zp.P, zp.profile.q, diagnostics=False).holds:
            assert check_zeta_functional(zp.P, zp.profile.q, zp.profile.g)
            assert zp.profile.g == zp.profile.g_dual
