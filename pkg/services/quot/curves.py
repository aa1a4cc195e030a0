# services/quot/curves.py
from enum import Enum
from typing import NamedTuple

from core.errors import DimensionMismatchError, InvalidCurveError
from exactmath import RatVec
from services.symprod import (
    SymCurveName, gonal_line, pair, shifted_point, small_diagonal, sym_half_delta,
)


class QuotCurveName(str, Enum):
    FIBER_LINE = "l"
    SECTION_GONAL = "eta_*l_prime"
    SECTION_SMALL_DIAG = "eta_*delta"
    SECTION_SHIFTED = "eta_*delta_prime"
    SECTION_EXTREMAL = "eta_*gamma"
    TILDE_DELTA = "tilde_delta"


_SECTION_NAMES = {
    SymCurveName.GONAL_LINE: QuotCurveName.SECTION_GONAL,
    SymCurveName.SMALL_DIAGONAL: QuotCurveName.SECTION_SMALL_DIAG,
    SymCurveName.SHIFTED_POINT: QuotCurveName.SECTION_SHIFTED,
    SymCurveName.EXTREMAL: QuotCurveName.SECTION_EXTREMAL,
}


class QuotCurveClass(NamedTuple):
    """A curve class on Q stored as its pairing functional on canonical N^1(Q) coordinates (a; b_x, b_theta)."""
    name: QuotCurveName
    pairing: RatVec
    label: str = ""

    def as_dict(self):
        return {"name": self.name.value, "label": self.label or self.name.value,
                "pairing": self.pairing.to_strings()}


def fiber_line(params):
    """l: a line in a fiber of the Hilbert-Chow map; only O_Q(1) sees it."""
    return QuotCurveClass(QuotCurveName.FIBER_LINE, RatVec.unit(params.quot_dim, 0), "l")


def section(params, sym_curve):
    """
    eta_* of a curve on C^(d). By the projection formula and eta^*[O_Q(1)] = [-Delta_d/2],
    a[O_Q(1)] + beta pairs as (beta - a Delta_d/2) . gamma.
    """
    half_delta = pair(sym_half_delta(params), sym_curve)
    return QuotCurveClass(_SECTION_NAMES[sym_curve.name],
                          RatVec((-half_delta,) + sym_curve.pairing.entries),
                          f"η_*{sym_curve.label}")


def section_gonal(params):
    return section(params, gonal_line(params))


def section_small_diagonal(params):
    return section(params, small_diagonal(params))


def section_shifted_point(params):
    return section(params, shifted_point(params))


def has_tilde_delta(params):
    return params.rank is not None and params.rank >= params.d


def tilde_delta(params):
    """The curve built from a fixed surjection k^n -> k^d over the small diagonal; O_Q(1) is trivial on it."""
    if not has_tilde_delta(params):
        raise InvalidCurveError(f"The curve tilde-delta needs n >= d (n={params.rank}, d={params.d}).")
    delta = small_diagonal(params)
    return QuotCurveClass(QuotCurveName.TILDE_DELTA, RatVec((0,) + delta.pairing.entries), "δ̃")


def pair_quot(c, curve):
    vec = c.canonical()
    if vec.dim != curve.pairing.dim:
        raise DimensionMismatchError(f"Class of dim {vec.dim} paired with curve of dim {curve.pairing.dim}.")
    return vec.dot(curve.pairing)
