from __future__ import annotations

import json
from math import comb

import pytest

from codezeta.code import (
    WeightDistribution,
    build_code,
    code_from_json,
    code_profile,
    dual_code,
    enumerate_weights,
    macwilliams,
    min_distance,
    null_space,
    support_count,
    weight_distribution,
    weight_distribution_any_side,
)
from codezeta.corpus import code_corpus
from codezeta.errors import BudgetExceeded, DivisibilityViolation, EmptyMatrix, NonIntegerResult, TrivialDual, ZeroColumn
from codezeta.field import make_field
from codezeta.fixtures import (
    GF2,
    HAMMING74,
    ext_hamming84,
    fixture,
    full_space,
    golay24,
    hamming74,
    random_code,
    reed_solomon,
    simplex73,
)


def test_build_examples():
    full = build_code(GF2, [[1, 0], [0, 1]])
    assert (full.n, full.k) == (2, 2)
    assert hamming74().k == 4
    with pytest.raises(ZeroColumn):
        build_code(GF2, [[1, 0, 1], [1, 0, 0]])
    with pytest.raises(EmptyMatrix):
        build_code(GF2, [])


def test_rank_deficient_reduced():
    code = build_code(GF2, HAMMING74 + [[1, 1, 0, 0, 1, 0, 1]])
    assert code.k == 4 and code.rank_reduced


def test_weight_distribution_examples():
    assert weight_distribution(hamming74()).counts == (1, 0, 0, 7, 7, 0, 0, 1)
    assert weight_distribution(full_space(2, GF2)).counts == (1, 2, 1)
    golay = weight_distribution(golay24())
    assert {w: c for w, c in enumerate(golay.counts) if c} == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def test_min_distance_examples():
    assert min_distance(hamming74()) == 3
    assert min_distance(full_space(2, GF2)) == 1
    assert min_distance(golay24()) == 8


def test_budget():
    with pytest.raises(BudgetExceeded):
        weight_distribution(golay24(), budget=1000)


def test_dual_examples():
    dual = dual_code(hamming74())
    assert weight_distribution(dual).counts == weight_distribution(simplex73()).counts
    with pytest.raises(TrivialDual):
        dual_code(full_space(3, GF2))
    e = ext_hamming84()
    assert dual_code(e).generator == e.generator


def test_dual_of_dual():
    for code in code_corpus(30, seed=5, max_n=10):
        try:
            dd = dual_code(dual_code(code))
        except ZeroColumn:
            continue
        assert dd.generator == code.generator


def test_macwilliams_examples():
    h = weight_distribution(hamming74())
    assert macwilliams(h).counts == (1, 0, 0, 0, 7, 0, 0, 0)
    assert macwilliams(WeightDistribution((1, 2, 1), 2, 2, 2)).counts == (1, 0, 0)
    e = weight_distribution(ext_hamming84())
    assert macwilliams(e) == e
    with pytest.raises(NonIntegerResult):
        macwilliams(WeightDistribution((1, 0, 0, 8, 7, 0, 0, 0), 7, 4, 2))


def test_macwilliams_involution():
    for code in code_corpus(40, seed=1, max_n=10):
        wd = weight_distribution(code)
        assert macwilliams(macwilliams(wd)) == wd


def test_macwilliams_matches_dual_enumeration():
    codes = [hamming74(), ext_hamming84(), simplex73(), golay24()]
    codes += list(code_corpus(60, seed=2, max_n=12))
    for code in codes:
        wd = weight_distribution(code)
        dual_counts = enumerate_weights(code.field, null_space(code.field, code), code.n)
        assert list(macwilliams(wd).counts) == dual_counts


def test_distribution_invariants():
    for code in code_corpus(60, seed=3):
        wd = weight_distribution(code)
        assert wd.violations() == []
        d = wd.min_weight
        assert support_count(wd) <= comb(code.n, d)


def test_support_count_examples():
    assert support_count(weight_distribution(hamming74())) == 7
    assert support_count(weight_distribution(ext_hamming84())) == 14
    rs = weight_distribution(reed_solomon(make_field(3), 3, 2))
    assert rs.counts == (1, 0, 6, 2)
    assert support_count(rs) == 3
    with pytest.raises(DivisibilityViolation):
        support_count(WeightDistribution((1, 0, 5, 3), 3, 2, 3))


def test_extension_field_code_roundtrip():
    code = reed_solomon(make_field(2, 2), 4, 2)
    data = json.loads(json.dumps(code.to_json()))
    again = code_from_json(data)
    assert again == code
    assert weight_distribution(code).counts == (1, 0, 0, 12, 3)


def test_shorthand_json():
    code = code_from_json({"q": 5, "rows": [[1, 1, 1, 1, 1], [0, 1, 2, 3, 4]]})
    assert code_profile(code).d == 4


def test_any_side_matches_direct():
    for code in code_corpus(30, seed=4, max_n=10):
        assert weight_distribution_any_side(code) == weight_distribution(code)
    f = make_field(2, 3)
    assert weight_distribution_any_side(full_space(3, f)).counts == (1, 21, 147, 343)


def test_random_code_reproducible():
    f = make_field(3)
    a, b = random_code(f, 8, 3, 7), random_code(f, 8, 3, 7)
    assert a == b and a.k == 3
    assert random_code(GF2, 10, 4, 42) == random_code(GF2, 10, 4, 42)


def test_fixture_registry():
    assert fixture("rs", 5, 5, 3).n == 5
    assert fixture("full", 2, 3).k == 3
