# services/quot/__init__.py
from .classes import (
    DivClassQuot, from_sym, o1, b_class, quot_point, quot_theta, quot_l0, quot_half_delta,
    o1_plus_l0, class_a, kappa1, kappa2, parse_class_spec,
)
from .curves import (
    QuotCurveName, QuotCurveClass, fiber_line, section, section_gonal, section_small_diagonal,
    section_shifted_point, tilde_delta, has_tilde_delta, pair_quot,
)
from .bounds import UpperBound, upper_bound, upper_bound_cone, upper_bound_curves, lower_bound_cone
from .theorems import ExactCone, exact_cone, genus0_cone
from .partitions import Partition, partitions_leq, part_sizes
from .criterion import Nefness, NefVerdict, Certificate, CertificateKind, check_nef_sufficient, check_nef_necessary, decide_nef
from .boundary import BoundaryCertificate, boundary_certificates
from .picture import Picture, PicturePoint, picture_points
from .quot_analyzer import QuotAnalyzer, HYPOTHESIS_FLAGS

__all__ = [
    "DivClassQuot", "from_sym", "o1", "b_class", "quot_point", "quot_theta", "quot_l0", "quot_half_delta",
    "o1_plus_l0", "class_a", "kappa1", "kappa2", "parse_class_spec",
    "QuotCurveName", "QuotCurveClass", "fiber_line", "section", "section_gonal", "section_small_diagonal",
    "section_shifted_point", "tilde_delta", "has_tilde_delta", "pair_quot",
    "UpperBound", "upper_bound", "upper_bound_cone", "upper_bound_curves", "lower_bound_cone",
    "ExactCone", "exact_cone", "genus0_cone",
    "Partition", "partitions_leq", "part_sizes",
    "Nefness", "NefVerdict", "Certificate", "CertificateKind", "check_nef_sufficient", "check_nef_necessary",
    "decide_nef",
    "BoundaryCertificate", "boundary_certificates",
    "Picture", "PicturePoint", "picture_points",
    "QuotAnalyzer", "HYPOTHESIS_FLAGS",
]
