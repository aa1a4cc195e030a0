# services/symprod/nagata.py
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import NamedTuple

from core.logging_setup import logger


class TProvenance(str, Enum):
    KNOWN = "known"
    CONJECTURAL = "conjectural"
    USER_SUPPLIED = "user-supplied"


class NagataValue(NamedTuple):
    value: Fraction
    provenance: TProvenance

    @property
    def proven(self):
        return self.provenance is TProvenance.KNOWN

    def as_dict(self):
        from exactmath import format_rat
        return {"value": format_rat(self.value), "provenance": self.provenance.value}


# Values of t known unconditionally for a very general curve.
KNOWN_T_VALUES = {
    1: Fraction(1),
    2: Fraction(2),
    3: Fraction(9, 5),
}

# Beyond this genus the Nagata conjecture predicts t = sqrt(g).
CONJECTURAL_SQRT_FROM_GENUS = 9


def known_t(g):
    if g in KNOWN_T_VALUES:
        return KNOWN_T_VALUES[g]
    root = isqrt(g)
    if g >= 1 and root * root == g:
        return Fraction(root)
    return None


def lookup_t(g, overrides=None, allow_conjectural=False):
    """
    Resolves the Nagata parameter t for genus g.

    overrides maps genus -> object with .value and .provenance (see core.config.TOverride).
    Returns a NagataValue or None when no exact rational value is available.
    """
    if g < 1:
        return None

    override = (overrides or {}).get(g)
    if override is not None:
        provenance = TProvenance(override.provenance)
        if provenance is TProvenance.CONJECTURAL and not allow_conjectural:
            logger.warning(f"Refusing conjectural t={override.value} for g={g} without opt-in.")
            return None
        logger.debug(f"Using configured t={override.value} ({provenance.value}) for g={g}.")
        return NagataValue(Fraction(override.value), provenance)

    value = known_t(g)
    if value is not None:
        return NagataValue(value, TProvenance.KNOWN)

    if g >= CONJECTURAL_SQRT_FROM_GENUS and allow_conjectural:
        logger.warning(f"Conjectural t = sqrt({g}) is irrational and cannot be used exactly; "
                       f"supply a rational override for g={g} in the config file.")
    else:
        logger.debug(f"No value of t available for g={g}.")
    return None
