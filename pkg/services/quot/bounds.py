# services/quot/bounds.py
from functools import lru_cache
from typing import NamedTuple

from cones import Cone, dual
from core.errors import InvalidParamsError, NoUpperBoundError
from core.logging_setup import logger
from .classes import kappa1, kappa2, quot_l0, quot_theta
from .curves import (
    fiber_line, has_tilde_delta, section_gonal, section_shifted_point, section_small_diagonal, tilde_delta,
)

FLAG_WEAK_NO_TILDE_DELTA = "weak-upper-no-tilde-delta"
FLAG_WEAK_NO_GONAL_LINE = "weak-upper-no-gonal-line"


class UpperBound(NamedTuple):
    cone: Cone
    curves: tuple
    flags: tuple


def upper_bound_curves(params):
    """Test curves whose dual cone bounds Nef(Q) from above, plus flags for weakened branches."""
    if params.g == 0:
        raise NoUpperBoundError("No curve-class upper bound in genus 0; the exact cone is given by genus0_cone.")
    l = fiber_line(params)

    if params.d == 1:
        return (l, section_small_diagonal(params)), ()

    if params.d >= params.gonality:
        if has_tilde_delta(params):
            return (l, section_gonal(params), tilde_delta(params)), ()
        if params.g == 1:
            # eta_*delta and tilde-delta pair identically in genus 1.
            return (l, section_gonal(params), section_small_diagonal(params)), ()
        logger.info(f"n={params.rank} < d={params.d}: upper bound for g={params.g} uses eta_*delta instead of tilde-delta.")
        return (l, section_gonal(params), section_small_diagonal(params)), (FLAG_WEAK_NO_TILDE_DELTA,)

    diagonal_curve = tilde_delta(params) if has_tilde_delta(params) else section_small_diagonal(params)
    logger.info(f"d={params.d} < gon={params.gonality}: upper bound for g={params.g} drops the gonal line.")
    return (l, diagonal_curve, section_shifted_point(params)), (FLAG_WEAK_NO_GONAL_LINE,)


@lru_cache(maxsize=256)
def upper_bound(params):
    curves, flags = upper_bound_curves(params)
    cone = dual(Cone([c.pairing for c in curves]))
    return UpperBound(cone=cone, curves=curves, flags=flags)


def upper_bound_cone(params):
    """Dual of the cone spanned by the test-curve pairing functionals."""
    return upper_bound(params).cone


@lru_cache(maxsize=256)
def lower_bound_cone(params):
    """<kappa_1, kappa_2, theta_d, L_0>; zero classes (L_0 on the degree line) are dropped."""
    if params.g == 0:
        raise InvalidParamsError("The kappa lower bound needs a curve of positive genus.")
    generators = [c.canonical() for c in (kappa1(params), kappa2(params), quot_theta(params), quot_l0(params))]
    return Cone([g for g in generators if not g.is_zero()])
