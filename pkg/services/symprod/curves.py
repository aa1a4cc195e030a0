# services/symprod/curves.py
from enum import Enum
from typing import NamedTuple

from core.errors import DimensionMismatchError, InvalidCurveError
from exactmath import RatVec
from .classes import sym_l0, sym_theta


class SymCurveName(str, Enum):
    SMALL_DIAGONAL = "delta"
    SHIFTED_POINT = "delta_prime"
    GONAL_LINE = "l_prime"
    EXTREMAL = "gamma"


class SymCurveClass(NamedTuple):
    """A 1-cycle on C^(d), stored as its pairings against the canonical basis {[x], [theta_d]}."""
    name: SymCurveName
    pairing: RatVec
    label: str = ""

    def as_dict(self):
        return {"name": self.name.value, "label": self.label or self.name.value,
                "pairing": self.pairing.to_strings()}


def small_diagonal(params):
    """delta: the curve {d.p}; [x] -> d, [theta_d] -> d^2 g."""
    d, g = params.d, params.g
    if params.sym_rank == 1:
        return SymCurveClass(SymCurveName.SMALL_DIAGONAL, RatVec([d]), "δ")
    return SymCurveClass(SymCurveName.SMALL_DIAGONAL, RatVec([d, d * d * g]), "δ")


def shifted_point(params):
    """delta': the curve {p + D0} for a fixed D0; [x] -> 1, [theta_d] -> g."""
    if params.sym_rank == 1:
        return SymCurveClass(SymCurveName.SHIFTED_POINT, RatVec([1]), "δ′")
    return SymCurveClass(SymCurveName.SHIFTED_POINT, RatVec([1, params.g]), "δ′")


def gonal_line(params):
    """l': a line in C^(d) swept by a gonal pencil plus a fixed divisor; theta_d is constant on it."""
    if params.d < params.gonality:
        raise InvalidCurveError(f"l' needs d >= gon(C) = {params.gonality}, got d={params.d}.")
    if params.sym_rank == 1:
        return SymCurveClass(SymCurveName.GONAL_LINE, RatVec([1]), "l′")
    return SymCurveClass(SymCurveName.GONAL_LINE, RatVec([1, 0]), "l′")


def extremal_dual(params, ray, label="γ"):
    """
    The ray of the closed curve cone of C^(d) orthogonal to a nef ray of a
    two-ray nef cone, oriented to pair positively with [L_0].
    """
    if params.sym_rank != 2:
        raise InvalidCurveError("Extremal curve classes need a two-dimensional N^1(C^(d)).")
    rx, rt = ray.canonical()
    functional = RatVec([-rt, rx])
    reference = sym_l0(params).canonical()
    if functional.dot(reference) == 0:
        reference = sym_theta(params).canonical()
    if functional.dot(reference) < 0:
        functional = -functional
    return SymCurveClass(SymCurveName.EXTREMAL, functional.primitive(), label)


def pair(c, curve):
    """Intersection number of a divisor class on C^(d) with a curve class."""
    vec = c.canonical()
    if vec.dim != curve.pairing.dim:
        raise DimensionMismatchError(f"Class of dim {vec.dim} paired with curve of dim {curve.pairing.dim}.")
    return vec.dot(curve.pairing)
