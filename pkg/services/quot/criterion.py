# services/quot/criterion.py
"""
One-sided nefness certificates on Q(n,d).

check_nef_sufficient only ever proves nefness (apart from the trivial
fiber-line and a = 0 cases), check_nef_necessary only ever disproves it, and
decide_nef chains them with the theorem database and the cone bounds.
"""
from enum import Enum
from typing import NamedTuple

from cones import membership, nonnegative_combination
from core.errors import HypothesisError, NoUpperBoundError
from core.logging_setup import logger
from exactmath import format_rat
from services.symprod import SymBasis, convert, nef_cone_sym, sym_g_class, sym_half_delta
from .bounds import lower_bound_cone, upper_bound
from .curves import fiber_line, pair_quot
from .partitions import Partition, part_sizes, partitions_leq
from .theorems import exact_cone


class Nefness(str, Enum):
    NEF = "Nef"
    NOT_NEF = "NotNef"
    UNKNOWN = "Unknown"


class CertificateKind(str, Enum):
    THEOREM = "theorem"
    LOWER_BOUND = "lower-bound-membership"
    PARTITION_SUFFICIENT = "partition-threshold"
    PARTITION_VIOLATION = "partition-violation"
    CURVE_SEPARATION = "curve-separation"
    SYM_CONE = "symmetric-product-cone"


class Certificate(NamedTuple):
    kind: CertificateKind
    source: str
    details: dict

    def as_dict(self):
        return {"kind": self.kind.value, "source": self.source, "details": self.details}


class NefVerdict(NamedTuple):
    verdict: Nefness
    certificate: Certificate = None

    @property
    def is_nef(self):
        return self.verdict is Nefness.NEF

    @property
    def is_not_nef(self):
        return self.verdict is Nefness.NOT_NEF

    def as_dict(self):
        return {"verdict": self.verdict.value,
                "certificate": self.certificate.as_dict() if self.certificate else None}


UNKNOWN = NefVerdict(Nefness.UNKNOWN)


def _fiber_line_violation(c):
    curve = fiber_line(c.params)
    return NefVerdict(Nefness.NOT_NEF, Certificate(
        CertificateKind.CURVE_SEPARATION, "fiber line of the Hilbert-Chow map",
        {"curve": curve.as_dict(), "pairing": format_rat(pair_quot(c, curve))}))


def _sym_cone_verdict(c, allow_not_nef):
    """a = 0: Phi is surjective, so Phi^*beta is nef iff beta is nef on C^(d)."""
    sym = nef_cone_sym(c.params)
    point = c.beta.canonical()
    lower_cert = membership(sym.lower, point)
    if lower_cert.inside:
        return NefVerdict(Nefness.NEF, Certificate(
            CertificateKind.SYM_CONE, sym.source, {"membership": lower_cert.as_dict()}))
    upper_cert = membership(sym.upper, point)
    if allow_not_nef and not upper_cert.inside:
        return NefVerdict(Nefness.NOT_NEF, Certificate(
            CertificateKind.SYM_CONE, sym.source, {"membership": upper_cert.as_dict()}))
    return UNKNOWN


def sufficient_threshold(params):
    """Largest mu_0^(m) over part sizes m >= 2 of partitions in P^{<=n}_d; 0 when there are none."""
    n = params.rank if params.rank is not None else params.d
    sizes = [m for m in part_sizes(params.d, n) if m >= 2]
    if not sizes:
        return 0, sizes
    return max(params.mu0_at(m) for m in sizes), sizes


def check_nef_sufficient(c):
    params = c.params
    if params.g == 0:
        return UNKNOWN
    if c.a < 0:
        return _fiber_line_violation(c)
    if c.a == 0:
        return _sym_cone_verdict(c, allow_not_nef=True)

    c = c.normalized()
    threshold, sizes = sufficient_threshold(params)

    if params.sym_rank == 1:
        b_x = c.beta.canonical()[0]
        if b_x >= 0:
            return NefVerdict(Nefness.NEF, Certificate(
                CertificateKind.PARTITION_SUFFICIENT, "criterion for nefness on the degree line",
                {"b_x": format_rat(b_x), "threshold": "0"}))
        return UNKNOWN

    b_theta, b_l = convert(c.beta, SymBasis.THETA_L0).coords
    if b_theta >= 0 and b_l >= 0 and b_l >= threshold:
        return NefVerdict(Nefness.NEF, Certificate(
            CertificateKind.PARTITION_SUFFICIENT, "criterion for nefness with the L_0 comparison",
            {"b_theta": format_rat(b_theta), "b_L": format_rat(b_l), "threshold": format_rat(threshold),
             "part_sizes": sizes}))
    logger.debug(f"Sufficient check inconclusive: b_theta={b_theta}, b_L={b_l}, threshold={threshold}.")
    return UNKNOWN


def _violation(partition, part, sym_class, cert, source):
    return NefVerdict(Nefness.NOT_NEF, Certificate(
        CertificateKind.PARTITION_VIOLATION, source,
        {"partition": list(partition), "part": part,
         "class": sym_class.as_dict(), "separating": cert.separating.to_strings()}))


def check_nef_necessary(c):
    params = c.params
    if params.g == 0:
        return UNKNOWN
    if c.a < 0:
        return _fiber_line_violation(c)
    if c.a == 0:
        verdict = _sym_cone_verdict(c, allow_not_nef=True)
        return verdict if verdict.is_not_nef else UNKNOWN

    c = c.normalized()
    # Trivial partition: eta^*(O(1) + beta) = beta - Delta_d/2.
    pulled_back = c.beta - sym_half_delta(params)
    cert = membership(nef_cone_sym(params).upper, pulled_back.canonical())
    if not cert.inside:
        return _violation(Partition((params.d,)), params.d, pulled_back, cert, "pullback along the section eta")

    beta = c.beta.canonical()
    if params.sym_rank == 2 and beta[1] != 0:
        return UNKNOWN

    # beta = b_x[x] pulls back to b_x[x] on every factor, so each factor must be nef.
    b_x = beta[0]
    n = params.rank if params.rank is not None else 1
    for partition in partitions_leq(params.d, n):
        for part in sorted(set(partition), reverse=True):
            sub = params.with_length(part)
            factor_class = sym_g_class(sub, b_x)
            cert = membership(nef_cone_sym(sub).upper, factor_class.canonical())
            if not cert.inside:
                return _violation(partition, part, factor_class, cert, "pullback along eta for a partition of d")
    return UNKNOWN


def _upper_bound_separation(c):
    try:
        bound = upper_bound(c.params)
    except NoUpperBoundError as e:
        logger.debug(f"No upper bound for separation: {e}")
        return UNKNOWN
    point = c.canonical()
    cert = membership(bound.cone, point)
    if cert.inside:
        return UNKNOWN
    weights = nonnegative_combination(cert.separating, [curve.pairing for curve in bound.curves],
                                      bound.cone.ambient_dim)
    details = {"separating": cert.separating.to_strings(), "pairing": format_rat(cert.separating.dot(point)),
               "curves": [curve.as_dict() for curve in bound.curves]}
    if weights is not None:
        details["weights"] = [format_rat(w) for w in weights]
    return NefVerdict(Nefness.NOT_NEF, Certificate(CertificateKind.CURVE_SEPARATION, "upper bound test curves", details))


def decide_nef(c, allow_conjectural_t=False):
    """Theorem database, then sufficient checks, lower bound, necessary checks and upper-bound separation."""
    params = c.params
    point = c.canonical()

    try:
        exact = exact_cone(params, allow_conjectural_t=allow_conjectural_t)
    except HypothesisError as e:
        logger.info(f"Theorem database skipped: {e}")
        exact = None
    if exact is not None:
        cert = membership(exact.cone, point)
        verdict = Nefness.NEF if cert.inside else Nefness.NOT_NEF
        return NefVerdict(verdict, Certificate(
            CertificateKind.THEOREM, exact.theorem,
            {"membership": cert.as_dict(), "conditional": exact.conditional, "flags": list(exact.flags)}))

    if c.a > 0:
        verdict = check_nef_sufficient(c)
        if verdict.is_nef:
            return verdict

    lower_cert = membership(lower_bound_cone(params), point)
    if lower_cert.inside:
        return NefVerdict(Nefness.NEF, Certificate(
            CertificateKind.LOWER_BOUND, "lower bound <kappa_1, kappa_2, theta_d, L_0>",
            {"membership": lower_cert.as_dict()}))

    if c.a <= 0:
        verdict = check_nef_sufficient(c)
        if verdict.verdict is not Nefness.UNKNOWN:
            return verdict

    verdict = check_nef_necessary(c)
    if verdict.is_not_nef:
        return verdict
    return _upper_bound_separation(c)
