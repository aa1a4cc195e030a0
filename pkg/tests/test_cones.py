# tests/test_cones.py
from fractions import Fraction

import pytest

from cones import (Cone, Verdict, cone_generators_from_inequalities, dual, equal, facet_normals, is_subcone,
                   membership)
from core.errors import DimensionMismatchError, UnsupportedDimensionError, ZeroGeneratorError
from exactmath import RatMat, RatVec, rank


def _random_pointed_cone(rng, dim):
    while True:
        count = rng.randint(dim, dim + 2)
        # A positive first coordinate keeps the cone pointed.
        gens = [RatVec([rng.randint(1, 5)] + [rng.randint(-5, 5) for _ in range(dim - 1)]) for _ in range(count)]
        if rank(RatMat(gens, ncols=dim)) == dim:
            return Cone(gens)


def test_orthants_are_self_dual():
    assert equal(dual(Cone([[1, 0], [0, 1]])), Cone([[1, 0], [0, 1]]))
    octant = Cone([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert equal(dual(octant), octant)


def test_dual_of_curve_functionals():
    curves = Cone([[1, 0, 0], [-3, 0, 4], [0, 8, 0]])
    expected = Cone([[1, 0, Fraction(3, 4)], [0, 1, 0], [0, 0, 1]])
    assert equal(dual(curves), expected)


def test_dual_of_half_plane_is_ray():
    half_plane = Cone([[1, 0], [-1, 0], [0, 1]])
    assert equal(dual(half_plane), Cone([[0, 1]]))
    assert equal(dual(Cone([[0, 1]])), half_plane)


def test_dual_of_zero_cone_is_everything():
    zero = Cone([], ambient_dim=2)
    assert zero.generators == ()
    assert equal(dual(zero), Cone([[1, 0], [-1, 0], [0, 1], [0, -1]]))


@pytest.mark.parametrize("dim", [2, 3])
def test_double_dual_is_identity(rng, dim):
    for _ in range(500):
        cone = _random_pointed_cone(rng, dim)
        assert equal(dual(dual(cone)), cone)
        assert cone.verify()


@pytest.mark.parametrize("dim", [2, 3])
def test_membership_witnesses_verify(rng, dim):
    for _ in range(500):
        cone = _random_pointed_cone(rng, dim)
        point = RatVec(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(dim))
        cert = membership(cone, point)
        assert cert.verify(cone, point)
        assert cert.inside == cone.contains(point)


def test_membership_examples():
    cone = Cone([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    inside = membership(cone, [1, 1, 0])
    assert inside.verdict in (Verdict.INTERIOR, Verdict.BOUNDARY)
    assert inside.verify(cone, RatVec([1, 1, 0]))
    assert membership(cone, [1, 1, 1]).verdict is Verdict.INTERIOR
    outside = membership(cone, [-1, 0, 0])
    assert outside.verdict is Verdict.OUTSIDE
    assert outside.separating.dot(RatVec([-1, 0, 0])) < 0


def test_equal_and_subcone():
    assert equal(Cone([[1, 0], [1, 1]]), Cone([[1, 1], [1, 0]]))
    assert not equal(Cone([[1, 0], [0, 1]]), Cone([[1, 0], [-1, 0], [0, 1]]))
    assert is_subcone(Cone([[1, 1]]), Cone([[1, 0], [0, 1]]))
    assert Cone([[2, 0], [0, 3]]) == Cone([[1, 0], [0, 1]])


def test_redundant_generators_are_pruned():
    cone = Cone([[1, 0], [0, 1], [1, 1], [2, 0]])
    assert len(cone.generators) == 2
    assert len(cone.extremal_rays()) == 2


def test_inequality_description_round_trip():
    gens = cone_generators_from_inequalities([[1, 0], [0, 1]], 2)
    assert sorted(tuple(g) for g in gens) == [(0, 1), (1, 0)]


def test_serialization_round_trip():
    cone = Cone([[1, Fraction(1, 2), 0], [0, 0, 1]])
    assert equal(Cone.from_dict(cone.as_dict()), cone)


def test_invalid_cones():
    with pytest.raises(UnsupportedDimensionError):
        Cone([[1, 0, 0, 0, 0]])
    with pytest.raises(ZeroGeneratorError):
        Cone([[0, 0]])
    with pytest.raises(DimensionMismatchError):
        Cone([[1, 0], [1, 0, 0]])
    with pytest.raises(DimensionMismatchError):
        is_subcone(Cone([[1, 0]]), Cone([[1, 0, 0]]))


def test_facet_normals_of_quadrant_and_line():
    normals = facet_normals([RatVec([1, 0]), RatVec([0, 1])], 2)
    assert sorted(tuple(n) for n in normals) == [(0, 1), (1, 0)]
    # A ray in the plane: one inequality plus one equation written as a +/- pair.
    normals = facet_normals([RatVec([1, 0])], 2)
    assert sorted(tuple(n) for n in normals) == [(0, -1), (0, 1), (1, 0)]


def test_lower_dimensional_cone_in_dimension_four():
    cone = Cone([[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]])
    assert len(cone.generators) == 2
    assert cone.contains([2, 3, 0, 0])
    assert not cone.contains([1, 1, 1, 0])
    assert cone.verify()
    assert equal(dual(dual(cone)), cone)


def test_inequalities_with_lineality_give_line_pairs():
    gens = cone_generators_from_inequalities([[0, 1, 0], [0, 0, 1]], 3)
    assert len(gens) == 4
    assert equal(Cone(gens), Cone([[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, 0, 1]]))
