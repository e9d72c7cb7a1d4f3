"""The brute-force oracle is checked against hand counts before anything else."""
from fractions import Fraction as F
from math import comb

import pytest

from toricbordism.geometry.polytope import canonicalize
from toricbordism.oracle import (
    OracleError, enumerate_level, enumerate_points, graded_section_counts,
    semigroup_generated_check, weight_subalgebra_model,
)

from conftest import simplex


def test_simplex_dilates_count_binomials():
    D3 = simplex(3)
    for m in range(1, 7):
        assert len(enumerate_points(D3, m)) == comb(m + 3, 3)


def test_segment_table():
    t = graded_section_counts(canonicalize([(0,), (2,)]), (1,), 3)
    assert t.level_counts(1) == {0: 1, 1: 1, 2: 1}
    assert t.level_counts(3) == {k: 1 for k in range(7)}
    assert t.totals[2] == 5


def test_level_counts_of_2_simplex3():
    t = graded_section_counts(simplex(3), (0, 1, 1), 2)
    assert t.level_counts(2) == {0: 3, 1: 4, 2: 3}
    assert t.totals[2] == 10


def test_level_enumeration_agrees_with_full_scan():
    P = canonicalize([(0, 0, 0), (2, 0, 1), (0, 3, 0), (1, 1, 2)])
    for m in (1, 2, 3):
        pts = enumerate_points(P, m)
        for k in range(-2, 12):
            want = sorted(x for x in pts if x[0] + 2 * x[1] - x[2] == k)
            assert enumerate_level(P, m, (1, 2, -1), k) == want


def test_square_counts():
    sq = canonicalize([(0, 0), (1, 0), (0, 1), (1, 1)])
    t = graded_section_counts(sq, (1, 1), 2)
    assert t.level_counts(1) == {0: 1, 1: 2, 2: 1}
    assert t.level_counts(2) == {0: 1, 1: 2, 2: 3, 3: 2, 4: 1}


def test_m_max_must_be_positive():
    with pytest.raises(OracleError):
        graded_section_counts(simplex(2), (1, 0), 0)


def test_semigroup_examples():
    assert semigroup_generated_check([(0, 1), (1, 1), (2, 1)], 6).passed
    bad = semigroup_generated_check([(0, 1), (2, 1)], 4)
    assert not bad.passed and bad.missing == (1, 1)
    assert semigroup_generated_check([(1, 1), (1, 2), (3, 2)], 8).passed


def test_semigroup_uses_interior_grading_when_needed():
    # cone in the plane not graded by the last coordinate
    r = semigroup_generated_check([(1, 0), (1, 1), (0, 1)], 5)
    assert r.passed and r.grading != (0, 1)


def test_subalgebra_model_stabilizes_on_half_slice():
    D3 = simplex(3)
    m = weight_subalgebra_model(D3, (0, 1, 1), F(1, 2), 4)
    assert m.stabilized
    assert m.degrees == (2, 4)
    assert len(m.hull.vertices) == 4
    assert m.polytope.dim == 2


def test_subalgebra_model_needs_integral_level():
    with pytest.raises(OracleError):
        weight_subalgebra_model(simplex(2), (1, 0), F(1, 3), 2)
