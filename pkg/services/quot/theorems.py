# services/quot/theorems.py
from fractions import Fraction
from typing import NamedTuple, Optional

from cones import Cone
from core.errors import HypothesisError, InvalidParamsError
from core.logging_setup import logger
from exactmath import RatVec
from services.symprod import TProvenance, sym_alpha
from .classes import from_sym, o1, o1_plus_l0, quot_half_delta, quot_l0, quot_theta

THEOREM_GENUS0 = "Nef(Q(E,d)) over P^1 for E = sum O(a_i): <O(1) + (d-1-a_1)H, H>"
THEOREM_GENUS1 = "Nef(Q(n,d)) for g = 1: <O(1) + Delta_d/2, theta_d, Delta_d/2>"
THEOREM_D2 = "Nef(Q(n,2)) for very general C: <O(1) + (t+1)/(g+t) L_0, L_0, alpha_t>"
THEOREM_D3 = "Nef(Q(n,3)) for very general C of genus 2 <= g <= 4, n >= 3: <O(1) + mu_0 L_0, theta_3, L_0>"
THEOREM_D1 = "Nef(Q(n,1)) = Nef(C x P^(n-1)) = <O(1), x>"

FLAG_CONJECTURAL_T = "conjectural-t"
FLAG_USER_SUPPLIED_T = "user-supplied-t"


class ExactCone(NamedTuple):
    cone: Cone
    theorem: str
    conditional: bool = False
    flags: tuple = ()


def genus0_cone(splitting, d):
    """Nef cone of Q(E,d) over P^1 with E = sum O(a_i), in coordinates (a; b_H)."""
    splitting = sorted(int(a) for a in splitting)
    if not splitting:
        raise InvalidParamsError("Splitting type must be nonempty.")
    if d < 1:
        raise InvalidParamsError(f"Quotient length d must be >= 1, got {d}.")
    a1 = splitting[0]
    return Cone([RatVec([1, -a1 + d - 1]), RatVec([0, 1])])


def d2_coefficient(g, t):
    return (t + 1) / (g + t)


def _cone_of(classes):
    vectors = [c.canonical() for c in classes]
    return Cone([v for v in vectors if not v.is_zero()])


def _t_row(params, allow_conjectural_t):
    t = params.t
    if t.proven:
        return (), False
    if not allow_conjectural_t:
        raise HypothesisError(
            f"Nef(Q(n,2)) for g={params.g} needs t, but t={t.value} is {t.provenance.value}; "
            f"pass --allow-conjectural-t to use it.")
    flag = FLAG_CONJECTURAL_T if t.provenance is TProvenance.CONJECTURAL else FLAG_USER_SUPPLIED_T
    logger.warning(f"Using {t.provenance.value} t={t.value} for g={params.g}; the d=2 cone is conditional.")
    return (flag,), True


def exact_cone(params, allow_conjectural_t=False) -> Optional[ExactCone]:
    """Looks (g, d, n, t) up in the database of proven nef cones; None when no row matches."""
    g, d = params.g, params.d

    if g == 0:
        splitting = params.splitting or ((0,) * params.rank if params.rank else None)
        if splitting is None:
            raise InvalidParamsError("Genus 0 needs a splitting type or a rank n.")
        return ExactCone(genus0_cone(splitting, d), THEOREM_GENUS0)

    if g == 1:
        half_delta = quot_half_delta(params)
        return ExactCone(_cone_of([o1(params) + half_delta, quot_theta(params), half_delta]), THEOREM_GENUS1)

    if d == 1:
        return ExactCone(_cone_of([o1(params), quot_theta(params)]), THEOREM_D1)

    if d == 2 and params.t is not None:
        flags, conditional = _t_row(params, allow_conjectural_t)
        coefficient = d2_coefficient(g, params.t.value)
        cone = _cone_of([o1_plus_l0(params, coefficient), quot_l0(params), from_sym(sym_alpha(params))])
        return ExactCone(cone, THEOREM_D2, conditional=conditional, flags=flags)

    if d == 3 and 2 <= g <= 4 and params.rank is not None and params.rank >= 3:
        mu = Fraction(g + 2, 3 * g)
        return ExactCone(_cone_of([o1_plus_l0(params, mu), quot_theta(params), quot_l0(params)]), THEOREM_D3)

    logger.debug(f"No exact nef cone known for g={g}, d={d}, n={params.rank}.")
    return None
