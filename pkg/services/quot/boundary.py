# services/quot/boundary.py
from fractions import Fraction
from typing import NamedTuple

from core.errors import HypothesisError
from core.logging_setup import logger
from exactmath import format_rat
from services.symprod import extremal_dual, gonal_line, mu0, sym_alpha, sym_g_class
from .classes import b_class, o1_plus_l0
from .curves import has_tilde_delta, pair_quot, section, section_small_diagonal, tilde_delta
from .theorems import THEOREM_D2, d2_coefficient, exact_cone

SOURCE_B_L_NOT_AMPLE = "O(1) + (d+g-1)x is nef but not ample: eta^* of it is theta_d"
SOURCE_KAPPA2_NOT_AMPLE = "O(1) + mu_0^(2) L_0 is nef but not ample"
SOURCE_EVEN_GENUS = "B_L is nef and not ample for deg(L) = 3(k-1) on a very general curve of genus 2k"
NEF_FROM_LOWER_BOUND = "lower bound <kappa_1, kappa_2, theta_d, L_0>"
NEF_FROM_EVEN_GENUS = "B_L nef when deg(L) >= 3(k-1), genus 2k, d = k"


class BoundaryCertificate(NamedTuple):
    divisor: object  # DivClassQuot
    curve: object  # QuotCurveClass
    source: str
    pairing: Fraction
    nef_source: str

    @property
    def verified(self):
        return self.pairing == 0

    def as_dict(self):
        return {"class": self.divisor.as_dict(), "curve": self.curve.as_dict(), "source": self.source,
                "pairing": format_rat(self.pairing), "nef_source": self.nef_source}


def _certificate(divisor, curve, source, nef_source):
    value = pair_quot(divisor, curve)
    if value != 0:
        logger.error(f"Boundary certificate from '{source}' pairs to {value}, not 0.")
    return BoundaryCertificate(divisor, curve, source, value, nef_source)


def even_genus_threshold(params):
    """3(k-1) when g = 2k and d = k, else None."""
    if params.g >= 2 and params.g % 2 == 0 and params.d == params.g // 2:
        return 3 * (params.d - 1)
    return None


def boundary_certificates(params, allow_conjectural_t=False):
    """Nef classes on the boundary of Nef(Q), each with a curve class it annihilates."""
    if params.g == 0:
        return []
    g, d = params.g, params.d
    certificates = []

    if d >= 2 and d >= params.gonality:
        certificates.append(_certificate(
            b_class(params, d + g - 1), section(params, gonal_line(params)),
            SOURCE_B_L_NOT_AMPLE, NEF_FROM_LOWER_BOUND))

    if d >= 2 and has_tilde_delta(params):
        certificates.append(_certificate(
            o1_plus_l0(params, mu0(2, g)), tilde_delta(params), SOURCE_KAPPA2_NOT_AMPLE, NEF_FROM_LOWER_BOUND))

    threshold = even_genus_threshold(params)
    if threshold is not None:
        divisor = b_class(params, threshold)
        if d == 1:
            curve = section_small_diagonal(params)
        else:
            curve = section(params, extremal_dual(params, sym_g_class(params, threshold), label="γ_G"))
        certificates.append(_certificate(divisor, curve, SOURCE_EVEN_GENUS, NEF_FROM_EVEN_GENUS))

    if d == 2 and g >= 2 and params.t is not None:
        try:
            exact = exact_cone(params, allow_conjectural_t=allow_conjectural_t)
        except HypothesisError:
            exact = None
        if exact is not None:
            divisor = o1_plus_l0(params, d2_coefficient(g, params.t.value))
            curves = []
            if has_tilde_delta(params):
                curves.append(tilde_delta(params))
            curves.append(section(params, extremal_dual(params, sym_alpha(params), label="γ_t")))
            for curve in curves:
                certificates.append(_certificate(divisor, curve, THEOREM_D2, THEOREM_D2))

    unique = []
    seen = set()
    for cert in certificates:
        key = (cert.divisor, cert.curve.pairing.primitive())
        if key not in seen:
            seen.add(key)
            unique.append(cert)
    return unique
