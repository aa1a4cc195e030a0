# services/symprod/nef_cone.py
from functools import lru_cache
from typing import NamedTuple

from cones import Cone, dual
from core.logging_setup import logger
from .classes import sym_alpha, sym_g_class, sym_l0, sym_point, sym_theta
from .curves import shifted_point, small_diagonal

SOURCE_DEGREE = "degree line: nef iff nonnegative degree"
SOURCE_GONALITY = "Nef(C^(d)) = <L_0, theta_d> for d >= gon(C)"
SOURCE_NAGATA = "Nef(C^(2)) = <L_0, alpha_t>"
SOURCE_EVEN_GENUS = "Nef(C^(k)) = <L_0, theta_k - 2x> for very general genus 2k"
SOURCE_BOUNDS = "bounds: <L_0, theta_d> inside the dual of <delta, delta'>"


class SymNefCone(NamedTuple):
    lower: Cone
    upper: Cone
    exact: bool
    source: str


def _exact(cone, source):
    return SymNefCone(lower=cone, upper=cone, exact=True, source=source)


@lru_cache(maxsize=256)
def nef_cone_sym(params):
    """
    Bounds on Nef(C^(d)) in canonical coordinates, with exact=True only when
    the cone is proven: the degree line, d >= gon(C), d = 2 with a proven t,
    or very general genus 2k with d = k.
    """
    if params.sym_rank == 1:
        return _exact(Cone([sym_point(params).canonical()]), SOURCE_DEGREE)

    l0 = sym_l0(params).canonical()
    theta = sym_theta(params).canonical()

    if params.d >= params.gonality:
        return _exact(Cone([l0, theta]), SOURCE_GONALITY)

    if params.d == 2 and params.t is not None and params.t.proven:
        return _exact(Cone([l0, sym_alpha(params).canonical()]), SOURCE_NAGATA)

    if params.g % 2 == 0 and params.d == params.g // 2:
        g_class = sym_g_class(params, 3 * (params.d - 1)).canonical()
        return _exact(Cone([l0, g_class]), SOURCE_EVEN_GENUS)

    if params.d == 2 and params.t is not None:
        logger.debug(f"t={params.t.value} for g={params.g} is {params.t.provenance.value}; not used for Nef(C^(2)).")

    test_curves = Cone([small_diagonal(params).pairing, shifted_point(params).pairing])
    return SymNefCone(lower=Cone([l0, theta]), upper=dual(test_curves), exact=False, source=SOURCE_BOUNDS)

