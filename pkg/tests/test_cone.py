from fractions import Fraction as F

from toricbordism.geometry.cone import cone_from_generators, cone_over, generation_degree, hilbert_basis
from toricbordism.geometry.polytope import canonicalize
from toricbordism.oracle import semigroup_generated_check

from conftest import simplex


def test_hilbert_basis_of_segment_cone():
    assert hilbert_basis(cone_over(canonicalize([(0,), (2,)]))) == [(0, 1), (1, 1), (2, 1)]


def test_hilbert_basis_of_wide_cone():
    C = cone_from_generators([(1, 0), (1, 4)])
    assert hilbert_basis(C) == [(1, k) for k in range(5)]


def test_hilbert_basis_of_rational_segment():
    C = cone_over(canonicalize([(F(1, 2),), (F(3, 2),)]))
    hb = hilbert_basis(C)
    assert sorted(hb) == [(1, 1), (1, 2), (3, 2)]
    assert semigroup_generated_check(hb, 8, cone=C).passed


def test_generation_degrees():
    assert generation_degree(canonicalize([(F(1, 2),), (F(3, 2),)])).degree == 2
    assert generation_degree(simplex(2)).degree == 1


def test_reeve_tetrahedron_is_not_idp():
    # empty lattice simplex of normalized volume 3: IDP fails in degree one
    P = canonicalize([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 3)])
    g = generation_degree(P)
    assert g.degree > 1 and g.failures


def test_cone_contains_generators():
    C = cone_from_generators([(1, 0, 1), (0, 1, 1), (0, 0, 1)])
    for g in [(1, 0, 1), (0, 1, 1), (1, 1, 3)]:
        assert C.contains(g)
    assert not C.contains((1, 1, 1))
