# cones/cone.py
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Optional

from core.errors import DimensionMismatchError, UnsupportedDimensionError, ZeroGeneratorError
from exactmath import RatVec, format_rat, to_rat
from .polyhedra import cone_generators_from_inequalities, facet_normals, irredundant_generators, nonnegative_combination

MAX_AMBIENT_DIM = 4


class Verdict(str, Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


class MembershipCert(NamedTuple):
    verdict: Verdict
    coefficients: Optional[tuple] = None  # Interior/Boundary: weights on cone.generators
    separating: Optional[RatVec] = None  # Outside: facet normal with normal . point < 0

    @property
    def inside(self):
        return self.verdict is not Verdict.OUTSIDE

    def verify(self, cone, point):
        point = RatVec(point, dim=cone.ambient_dim)
        if self.verdict is Verdict.OUTSIDE:
            if self.separating is None or self.separating.dot(point) >= 0:
                return False
            return all(self.separating.dot(g) >= 0 for g in cone.generators)
        if self.coefficients is None or any(c < 0 for c in self.coefficients):
            return False
        total = RatVec.zero(cone.ambient_dim)
        for c, g in zip(self.coefficients, cone.generators):
            total = total + g.scale(c)
        return total == point

    def as_dict(self):
        payload = {"verdict": self.verdict.value}
        if self.coefficients is not None:
            payload["coefficients"] = [format_rat(c) for c in self.coefficients]
        if self.separating is not None:
            payload["separating"] = self.separating.to_strings()
        return payload


def _contains_by_facets(facets, point):
    return all(f.dot(point) >= 0 for f in facets)


class Cone:
    """
    Finitely generated rational convex cone in ambient dimension <= 4.

    Generators are pruned to an irredundant set on construction and the facet
    normals (inner convention: x in cone iff f . x >= 0 for every facet f) are
    computed eagerly and normalized to primitive integer vectors. A cone that
    is not full-dimensional lists each equation as a +/- pair of normals.
    """

    def __init__(self, generators, ambient_dim=None):
        generators = [g if isinstance(g, RatVec) else RatVec(g) for g in generators]
        if ambient_dim is None:
            if not generators:
                raise DimensionMismatchError("ambient_dim is required for a cone without generators.")
            ambient_dim = generators[0].dim
        if ambient_dim > MAX_AMBIENT_DIM or ambient_dim < 1:
            raise UnsupportedDimensionError(f"Ambient dimension {ambient_dim} outside 1..{MAX_AMBIENT_DIM}.")
        for g in generators:
            if g.dim != ambient_dim:
                raise DimensionMismatchError(f"Generator {g!r} does not live in dimension {ambient_dim}.")
            if g.is_zero():
                raise ZeroGeneratorError("Cone generators must be nonzero.")

        self._ambient_dim = ambient_dim
        self._generators = tuple(irredundant_generators(generators, ambient_dim))
        facets = facet_normals(self._generators, ambient_dim)
        self._facets = tuple(sorted(facets, key=lambda f: tuple(f)))

    @property
    def ambient_dim(self):
        return self._ambient_dim

    @property
    def generators(self):
        return self._generators

    @property
    def facets(self):
        return self._facets

    def extremal_rays(self):
        return list(self._generators)

    def __repr__(self):
        gens = ", ".join("(" + ", ".join(g.to_strings()) + ")" for g in self._generators)
        return f"Cone<{self._ambient_dim}>[{gens}]"

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return equal(self, other)

    __hash__ = None

    def contains(self, point):
        return _contains_by_facets(self._facets, RatVec(point, dim=self._ambient_dim))

    def membership(self, point):
        return membership(self, point)

    def dual(self):
        return dual(self)

    def verify(self):
        """Cross-checks the V- and H-representations against each other."""
        for f in self._facets:
            if any(f.dot(g) < 0 for g in self._generators):
                return False
        recovered = cone_generators_from_inequalities(self._facets, self._ambient_dim)
        return all(nonnegative_combination(r, self._generators, self._ambient_dim) is not None for r in recovered)

    def as_dict(self):
        return {
            "generators": [g.to_strings() for g in self._generators],
            "facets": [f.to_strings() for f in self._facets],
        }

    @classmethod
    def from_dict(cls, payload, ambient_dim=None):
        generators = [RatVec(to_rat(x) for x in g) for g in payload.get("generators", [])]
        return cls(generators, ambient_dim=ambient_dim)


def dual(cone):
    """{y : y . g >= 0 for every generator g}, carrying both representations."""
    return Cone(cone.facets, ambient_dim=cone.ambient_dim)


def membership(cone, point):
    point = RatVec(point, dim=cone.ambient_dim)
    for f in cone.facets:
        if f.dot(point) < 0:
            return MembershipCert(Verdict.OUTSIDE, separating=f)
    coefficients = nonnegative_combination(point, cone.generators, cone.ambient_dim)
    if coefficients is None:
        # Facets accept the point, so a combination must exist.
        raise ArithmeticError(f"No generator combination found for {point!r} in {cone!r}.")
    on_boundary = point.is_zero() or any(f.dot(point) == 0 for f in cone.facets)
    verdict = Verdict.BOUNDARY if on_boundary else Verdict.INTERIOR
    return MembershipCert(verdict, coefficients=tuple(Fraction(c) for c in coefficients))


def equal(a, b):
    if a.ambient_dim != b.ambient_dim:
        return False
    return all(b.contains(g) for g in a.generators) and all(a.contains(g) for g in b.generators)


def is_subcone(inner, outer):
    if inner.ambient_dim != outer.ambient_dim:
        raise DimensionMismatchError(f"Cones live in dimensions {inner.ambient_dim} and {outer.ambient_dim}.")
    return all(outer.contains(g) for g in inner.generators)
