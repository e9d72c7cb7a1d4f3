from fractions import Fraction as F

import pytest

from toricbordism.geometry.polytope import (
    EmptyError, LatticePolytope, UnboundedError, canonicalize, f_vector, faces, from_json,
    lattice_points, slab, slice_polytope,
)
from toricbordism.oracle import enumerate_points

from conftest import box, simplex


def test_hull_drops_interior_points():
    P = canonicalize([(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)])
    assert isinstance(P, LatticePolytope)
    assert len(P.vertices) == 4 and len(P.facets) == 4


def test_empty_and_unbounded():
    with pytest.raises(EmptyError):
        canonicalize(halfspaces=[((1,), 0), ((-1,), -1)])
    with pytest.raises(UnboundedError):
        canonicalize(halfspaces=[((1, 0), 0), ((0, 1), 0)])


def test_double_description_round_trip():
    for P in (simplex(3), box(1, 2, 3), canonicalize([(0, 0), (3, 1), (1, 2)])):
        Q = canonicalize(halfspaces=[(f.normal, f.offset) for f in P.facets], rank=P.rank)
        assert Q == P and Q.facets == P.facets


def test_f_vectors():
    assert f_vector(simplex(3)) == (4, 6, 4, 1)
    assert f_vector(box(1, 1, 1)) == (8, 12, 6, 1)
    assert len(faces(simplex(2))) == 8    # includes the empty face


def test_half_slice_of_simplex():
    S = slice_polytope(simplex(3), (0, 1, 1), F(1, 2))
    assert S.dim == 2 and len(S.vertices) == 4
    assert lattice_points(S) == []


def test_lattice_points_match_oracle():
    P = canonicalize([(0, 0, 0), (2, 1, 0), (0, 2, 1), (1, 0, 3)])
    for m in range(1, 5):
        assert lattice_points(P.dilate(m)) == enumerate_points(P, m)
    assert len(lattice_points(simplex(2, 2))) == 6


def test_slab_and_contains():
    T = slab(simplex(3), (0, 1, 1), F(1, 4), F(3, 4))
    assert len(T.vertices) == 8 and len(T.facets) == 6
    assert T.contains((F(1, 4), F(1, 4), 0))
    assert not T.contains((0, 0, 0))


def test_lower_dimensional_facets_are_canonical():
    S = canonicalize([(0, 0, 1), (1, 0, 1), (0, 1, 1)])
    assert S.dim == 2 and len(S.equations) == 1
    for f in S.facets:
        # normals live in the direction space z = 0
        assert f.normal[2] == 0


def test_from_json_rational_offsets():
    P = from_json({"rank": 1, "halfspaces": [{"normal": [1], "offset": "-1/2"},
                                             {"normal": [-1], "offset": "3/2"}]})
    assert P.vertices == ((F(1, 2),), (F(3, 2),))
    assert not P.is_lattice
