from __future__ import annotations

import random
from dataclasses import replace
from fractions import Fraction

import pytest

from codezeta.errors import (
    BadConstantTerm,
    ConstructionFailure,
    FunctionalEquationViolation,
    InconsistentCounts,
    InexactDivision,
    OddDegree,
)
from codezeta.funcfield import (
    CURVES,
    FunctionFieldProfile,
    b_relations_check,
    b_relations_report,
    b_sequence,
    check_b_relations,
    class_number_bounds,
    count_points,
    curve_point_counts,
    curve_profile,
    duursma_reduced_ff,
    from_h_decomposition,
    genus0_ag_identity,
    h_decomposition,
    lpoly_from_point_counts,
    profile_from_effective_counts,
    profile_from_lpoly,
    profile_from_point_counts,
    reduce_genus,
    synthetic_lpoly,
)
from codezeta.field import make_field
from codezeta.poly import RationalPoly, q_reciprocal_transform

SQUARE = RationalPoly([1, 0, 4, 0, 4])


def test_profile_from_lpoly_examples():
    e = profile_from_lpoly([1, 0, 2], 2)
    assert (e.g, e.A, e.h) == (1, (1,), 3)
    s = profile_from_lpoly(SQUARE, 2)
    assert (s.g, s.A, s.h) == (2, (1, 3), 9)
    with pytest.raises(OddDegree):
        profile_from_lpoly([1, 1], 2)
    with pytest.raises(BadConstantTerm):
        profile_from_lpoly([2, 0, 2], 2)
    with pytest.raises(FunctionalEquationViolation):
        profile_from_lpoly([1, 1, 1], 2)


def test_point_count_examples():
    assert lpoly_from_point_counts([3], 2) == RationalPoly([1, 0, 2])
    assert lpoly_from_point_counts([1], 2) == RationalPoly([1, -2, 2])
    with pytest.raises(InconsistentCounts):
        profile_from_point_counts([0], 2)


def test_point_counter():
    assert count_points([1], [0, 0, 0, 1], make_field(2)) == 3
    assert count_points([], [0, -1, 0, 1], make_field(3)) == 4
    # over GF(4) the same elliptic curve has 1 + 4 - a_2 points with a_2 = a_1^2 - 2q = -4
    assert curve_point_counts([1], [0, 0, 0, 1], 2, 2) == [3, 9]


def test_curve_fixtures():
    e = curve_profile("elliptic_gf2")
    assert e.L == RationalPoly([1, 0, 2]) and e.h == 3
    for name in CURVES:
        p = curve_profile(name)
        assert p.violations() == []
        assert class_number_bounds(p)
        assert b_relations_check(p, 3 * p.g + 5)


def test_reduce_genus_examples():
    assert reduce_genus(SQUARE, 2, 2) == RationalPoly([1, 3, 2])
    assert reduce_genus(RationalPoly([1, 0, 2]), 2, 1) == RationalPoly([1])
    L = RationalPoly.one_minus_t_one_minus_qt(3) + RationalPoly([0, 1])
    assert reduce_genus(L, 3, 1) == RationalPoly([1])
    with pytest.raises(InexactDivision):
        reduce_genus(RationalPoly([1, 1, 1, 1, 1]), 2, 2)


def test_h_decomposition_examples():
    assert h_decomposition(SQUARE, 2, 2) == [1, 6, 9]
    assert h_decomposition(RationalPoly([1, 0, 2]), 2, 1) == [1, 3]
    for g in range(1, 4):
        L = RationalPoly.one_minus_t_one_minus_qt(5) ** g
        assert h_decomposition(L, 5, g) == [1] + [0] * g


def test_duursma_examples():
    assert duursma_reduced_ff(profile_from_lpoly([1, 0, 2], 2)) == RationalPoly([1])
    assert duursma_reduced_ff(profile_from_lpoly(SQUARE, 2)) == RationalPoly([1, 3, 2])
    v = profile_from_effective_counts([1, 0], 3, 2)
    assert v.D_F == RationalPoly([1, 0, 2])
    assert duursma_reduced_ff(v) == reduce_genus(v.L, 2, 2)


def test_b_sequence_examples():
    e = profile_from_lpoly([1, 0, 2], 2)
    assert b_sequence(e, 10) == [2 ** (i + 1) - 1 for i in range(11)]
    assert b_sequence(profile_from_lpoly(SQUARE, 2), 3) == [1, 6, 18, 42]
    assert b_sequence(e, 0) == [1]


def test_b_relations_examples():
    s = profile_from_lpoly(SQUARE, 2)
    assert b_relations_check(s, 6)
    assert b_relations_check(profile_from_lpoly([1, 0, 2], 2), 6)
    bad = list(b_sequence(s, 6))
    bad[2] += 1
    rep = check_b_relations(bad, 2, 2, 6)
    assert not rep.holds and any(f.startswith("B_2") for f in rep.failures)


def test_class_number_examples():
    assert class_number_bounds(profile_from_lpoly([1, 0, 2], 2))
    s = profile_from_lpoly(SQUARE, 2)
    assert class_number_bounds(s)
    assert not class_number_bounds(replace(s, h=40))


def test_genus0_examples():
    assert genus0_ag_identity(5, 5, 2)
    assert genus0_ag_identity(4, 4, 1)
    with pytest.raises(ConstructionFailure):
        genus0_ag_identity(2, 3, 1)


def test_profile_json_roundtrip():
    p = profile_from_lpoly(SQUARE, 2)
    data = p.to_json()
    assert data == {"q": 2, "g": 2, "L": [1, 0, 4, 0, 4], "A": [1, 3], "h": 9, "D_F": [1, 3, 2], "h_seq": ["1/1", "6/1", "9/1"]}
    assert FunctionFieldProfile.from_json(data) == p


def test_synthetic_corpus():
    rng = random.Random(17)
    for _ in range(200):
        q = rng.choice([2, 3, 4, 5, 7, 8, 9])
        g = rng.randint(1, 4)
        L = synthetic_lpoly(q, g, rng)
        p = profile_from_lpoly(L, q)
        assert reduce_genus(L, q, g) == duursma_reduced_ff(p)
        assert from_h_decomposition(p.h_seq, q) == L
        assert p.D_F.is_integral()
        assert g == 1 or q_reciprocal_transform(p.D_F, q, g - 1, 2 * g - 2) == p.D_F
        assert b_relations_report(p, 3 * g).holds
        assert class_number_bounds(p)
        assert p.h == L(1) > 0
        assert Fraction(p.h_seq[-1]) == p.h
