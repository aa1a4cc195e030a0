# services/quot/picture.py
from dataclasses import dataclass, field
from fractions import Fraction

from core.errors import InvalidParamsError
from exactmath import RatMat, format_rat, solve
from services.symprod import mu0
from .classes import class_a, kappa1, kappa2, quot_l0, quot_theta

FLAG_TAU_RHO_DISCREPANCY = "tau-rho-discrepancy"
NOTE_D_PRINTED = "D is printed as tau(O(1)/2 + mu_0 L_0); drawn here as tau * kappa_1"
NOTE_GENUS1 = "Δ_d/2 = L₀"

LABELS = ("A", "B", "C", "D", "E")


@dataclass(frozen=True)
class PicturePoint:
    label: str
    divisor: object  # DivClassQuot
    weights: tuple  # affine weights on the (A, B, C) frame, summing to 1

    def as_dict(self):
        return {"class": self.divisor.as_dict(), "weights": [format_rat(w) for w in self.weights]}


@dataclass
class Picture:
    params: object
    points: dict
    tau: Fraction
    tau_printed: Fraction
    rho: Fraction
    rho_printed: Fraction
    flags: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def as_dict(self):
        return {
            "points": {label: self.points[label].as_dict() for label in LABELS},
            "tau": format_rat(self.tau), "tau_printed": format_rat(self.tau_printed),
            "rho": format_rat(self.rho), "rho_printed": format_rat(self.rho_printed),
            "flags": list(self.flags), "notes": list(self.notes),
        }


def printed_tau(g, d):
    return 1 / (1 + Fraction(d + g - 2, d * g))


def printed_rho(g, d):
    return 1 / (1 + mu0(2, g) - Fraction(d + g - 2, d * g))


def picture_points(params):
    """Points A..E of the affine cross-section of Nef(Q) through the frame A, B = theta_d, C = L_0."""
    if params.g < 1 or params.d < 2:
        raise InvalidParamsError(f"The cross-section picture needs g >= 1 and d >= 2 (g={params.g}, d={params.d}).")
    g, d = params.g, params.d

    frame = [class_a(params), quot_theta(params), quot_l0(params)]
    frame_matrix = RatMat.from_columns([c.canonical() for c in frame])

    def affine_weights(divisor):
        weights = solve(frame_matrix, divisor.canonical())
        total = sum(weights, Fraction(0))
        return tuple(w / total for w in weights), total

    k1_weights, k1_total = affine_weights(kappa1(params))
    k2_weights, k2_total = affine_weights(kappa2(params))
    tau, rho = 1 / k1_total, 1 / k2_total

    points = {}
    for label, divisor in zip("ABC", frame):
        points[label] = PicturePoint(label, divisor, affine_weights(divisor)[0])
    points["D"] = PicturePoint("D", kappa1(params).scale(tau), k1_weights)
    points["E"] = PicturePoint("E", kappa2(params).scale(rho), k2_weights)

    picture = Picture(params=params, points=points, tau=tau, tau_printed=printed_tau(g, d),
                      rho=rho, rho_printed=printed_rho(g, d))
    picture.notes.append(NOTE_D_PRINTED)
    if g == 1:
        picture.notes.append(NOTE_GENUS1)
    e_is_a = points["E"].weights == points["A"].weights
    if not e_is_a and picture.rho_printed != picture.rho:
        picture.flags.append(FLAG_TAU_RHO_DISCREPANCY)
    if picture.tau_printed != picture.tau:
        picture.flags.append(FLAG_TAU_RHO_DISCREPANCY)
    picture.flags = sorted(set(picture.flags))
    return picture
