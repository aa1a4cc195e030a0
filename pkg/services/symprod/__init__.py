# services/symprod/__init__.py
from .nagata import TProvenance, NagataValue, lookup_t, known_t
from .params import CurveParams, build_params, gonality, mu0
from .classes import (
    SymBasis, DivClassSym, convert, basis_matrix,
    sym_point, sym_theta, sym_half_delta, sym_l0, sym_alpha, sym_g_class,
)
from .curves import SymCurveName, SymCurveClass, small_diagonal, shifted_point, gonal_line, extremal_dual, pair
from .nef_cone import SymNefCone, nef_cone_sym

__all__ = [
    "TProvenance", "NagataValue", "lookup_t", "known_t",
    "CurveParams", "build_params", "gonality", "mu0",
    "SymBasis", "DivClassSym", "convert", "basis_matrix",
    "sym_point", "sym_theta", "sym_half_delta", "sym_l0", "sym_alpha", "sym_g_class",
    "SymCurveName", "SymCurveClass", "small_diagonal", "shifted_point", "gonal_line", "extremal_dual", "pair",
    "SymNefCone", "nef_cone_sym",
]
