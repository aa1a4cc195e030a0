# services/quot/classes.py
from dataclasses import dataclass
from fractions import Fraction

from core.errors import ClassParseError, DimensionMismatchError, InvalidBasisError, InvalidParamsError
from exactmath import RatVec, format_rat, parse_rat, to_rat
from services.symprod import (
    CurveParams, DivClassSym, mu0, sym_half_delta, sym_l0, sym_point, sym_theta,
)


@dataclass(frozen=True, eq=False)
class DivClassQuot:
    """a[O_Q(1)] + Phi^*(beta) in N^1(Q) = Phi^*N^1(C^(d)) + R[O_Q(1)]."""
    params: CurveParams
    a: Fraction
    beta: DivClassSym

    def __post_init__(self):
        object.__setattr__(self, "a", to_rat(self.a))
        if self.beta.params != self.params:
            raise DimensionMismatchError("Pulled-back class belongs to different curve parameters.")

    @classmethod
    def from_canonical(cls, params, vec):
        vec = RatVec(vec)
        if vec.dim != params.quot_dim:
            raise DimensionMismatchError(f"N^1(Q) has dimension {params.quot_dim}, got {vec.dim} coordinates.")
        return cls(params, vec[0], DivClassSym.from_canonical(params, vec.entries[1:]))

    def canonical(self):
        return RatVec((self.a,) + self.beta.canonical().entries)

    def __eq__(self, other):
        if not isinstance(other, DivClassQuot):
            return NotImplemented
        return self.params == other.params and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.params, self.canonical()))

    def __add__(self, other):
        return DivClassQuot(self.params, self.a + other.a, self.beta + other.beta)

    def __sub__(self, other):
        return DivClassQuot(self.params, self.a - other.a, self.beta - other.beta)

    def scale(self, factor):
        factor = to_rat(factor)
        return DivClassQuot(self.params, self.a * factor, self.beta.scale(factor))

    def __rmul__(self, factor):
        return self.scale(factor)

    def normalized(self):
        """Positive rescaling with a = 1; classes with a <= 0 are returned unchanged."""
        if self.a <= 0:
            return self
        return self.scale(1 / self.a)

    def __repr__(self):
        return f"DivClassQuot({format_rat(self.a)}; {self.beta.canonical().to_strings()})"

    def as_dict(self):
        return {"a": format_rat(self.a), "beta": self.beta.as_dict(), "coords": self.canonical().to_strings()}


def _require_positive_genus(params):
    if params.g == 0:
        raise InvalidParamsError("This class is only defined for curves of positive genus.")


def from_sym(beta, a=0):
    return DivClassQuot(beta.params, a, beta)


def o1(params):
    return DivClassQuot(params, 1, sym_point(params).scale(0))


def b_class(params, degree):
    """[B_{L,Q}] = [O_Q(1)] + deg(L)[x]."""
    return DivClassQuot(params, 1, sym_point(params).scale(degree))


def quot_point(params):
    return from_sym(sym_point(params))


def quot_theta(params):
    return from_sym(sym_theta(params))


def quot_l0(params):
    return from_sym(sym_l0(params))


def quot_half_delta(params):
    return from_sym(sym_half_delta(params))


def o1_plus_l0(params, coefficient):
    return o1(params) + quot_l0(params).scale(coefficient)


def class_a(params):
    """[O_Q(1)] + mu_0[L_0], the apex of the generic upper bound."""
    _require_positive_genus(params)
    return o1_plus_l0(params, params.mu0)


def kappa1(params):
    """[O_Q(1)] + mu_0[L_0] + (d+g-2)/(dg)[theta_d]."""
    _require_positive_genus(params)
    g, d = params.g, params.d
    return class_a(params) + quot_theta(params).scale(Fraction(d + g - 2, d * g))


def kappa2(params):
    """[O_Q(1)] + mu_0^(2)[L_0]."""
    _require_positive_genus(params)
    return o1_plus_l0(params, mu0(2, params.g))


def parse_class_spec(text, params, basis="X_THETA"):
    """Parses "a;c1,c2" (or "a;c1" on the degree line) with c1, c2 coordinates in `basis`."""
    if text is None or ";" not in text:
        raise ClassParseError(f"Class {text!r} must look like 'a;bx,btheta'.")
    head, _, tail = text.partition(";")
    try:
        a = parse_rat(head)
        coords = [parse_rat(part) for part in tail.split(",")]
    except ValueError as e:
        raise ClassParseError(f"Cannot parse class {text!r}: {e}")
    if len(coords) != params.sym_rank:
        raise ClassParseError(f"Class {text!r} needs {params.sym_rank} coordinate(s) after ';' for these parameters.")
    try:
        beta = DivClassSym(params, basis, coords)
    except (InvalidBasisError, ValueError) as e:
        raise ClassParseError(f"Cannot read class {text!r} in basis {basis}: {e}")
    return DivClassQuot(params, a, beta)
