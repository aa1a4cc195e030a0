# services/symprod/classes.py
from dataclasses import dataclass
from enum import Enum

from core.errors import DimensionMismatchError, InvalidBasisError
from exactmath import RatMat, RatVec, solve, to_rat
from .params import CurveParams


class SymBasis(str, Enum):
    X_THETA = "X_THETA"
    X_DELTA = "X_DELTA"
    THETA_L0 = "THETA_L0"
    X_L0 = "X_L0"
    ALPHA_L0 = "ALPHA_L0"


CANONICAL_BASIS = SymBasis.X_THETA


# Canonical coordinates over {[x], [theta_d]}; on the degree line everything is a multiple of [x].
def _x(params):
    return RatVec([1, 0]) if params.sym_rank == 2 else RatVec([1])


def _theta(params):
    return RatVec([0, 1]) if params.sym_rank == 2 else RatVec([params.g])


def _half_delta(params):
    if params.sym_rank == 1:
        return RatVec([params.d - 1])
    return RatVec([params.d + params.g - 1, -1])


def _l0(params):
    if params.sym_rank == 1:
        return RatVec([(params.d - 1) * params.g])
    return RatVec([params.d * params.g, -1])


def _alpha(params):
    if params.d != 2 or params.t is None:
        raise InvalidBasisError(f"alpha_t needs d=2 and a value of t (got d={params.d}, t={params.t}).")
    return RatVec([params.t.value - params.g, 1])


def basis_matrix(params, basis):
    """Columns are the basis vectors written in canonical coordinates."""
    basis = SymBasis(basis)
    if basis is SymBasis.ALPHA_L0:
        columns = [_alpha(params), _l0(params)]
        return RatMat.from_columns(columns)
    if params.sym_rank == 1:
        return RatMat([[1]])
    columns = {
        SymBasis.X_THETA: [_x(params), _theta(params)],
        SymBasis.X_DELTA: [_x(params), _half_delta(params)],
        SymBasis.THETA_L0: [_theta(params), _l0(params)],
        SymBasis.X_L0: [_x(params), _l0(params)],
    }[basis]
    return RatMat.from_columns(columns)


def _to_canonical(params, basis, coords):
    return basis_matrix(params, basis).apply(coords)


@dataclass(frozen=True, eq=False)
class DivClassSym:
    """A class in N^1(C^(d)) with coordinates in a chosen basis."""
    params: CurveParams
    basis: SymBasis
    coords: RatVec

    def __post_init__(self):
        coords = self.coords if isinstance(self.coords, RatVec) else RatVec(to_rat(c) for c in self.coords)
        if coords.dim != self.params.sym_rank:
            raise DimensionMismatchError(
                f"N^1(C^({self.params.d})) has dimension {self.params.sym_rank}, got {coords.dim} coordinates.")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "basis", SymBasis(self.basis))
        basis_matrix(self.params, self.basis)  # raises InvalidBasisError early

    @classmethod
    def from_canonical(cls, params, vec):
        return cls(params, CANONICAL_BASIS, RatVec(vec))

    def canonical(self):
        return _to_canonical(self.params, self.basis, self.coords)

    def convert(self, to):
        return convert(self, to)

    def __eq__(self, other):
        if not isinstance(other, DivClassSym):
            return NotImplemented
        return self.params == other.params and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self.params, self.canonical()))

    def __add__(self, other):
        return DivClassSym.from_canonical(self.params, self.canonical() + other.canonical())

    def __sub__(self, other):
        return DivClassSym.from_canonical(self.params, self.canonical() - other.canonical())

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor):
        return DivClassSym(self.params, self.basis, self.coords.scale(factor))

    def __rmul__(self, factor):
        return self.scale(factor)

    def __repr__(self):
        return f"DivClassSym({self.basis.value}, {self.coords.to_strings()})"

    def as_dict(self):
        return {"basis": self.basis.value, "coords": self.coords.to_strings()}


def convert(c, to):
    """Same numerical class written in the basis `to`."""
    to = SymBasis(to)
    target = basis_matrix(c.params, to)
    coords = solve(target, c.canonical())
    if coords is None:
        raise InvalidBasisError(f"Basis {to.value} is degenerate for {c.params}.")
    return DivClassSym(c.params, to, coords)


def sym_point(params):
    return DivClassSym.from_canonical(params, _x(params))


def sym_theta(params):
    return DivClassSym.from_canonical(params, _theta(params))


def sym_half_delta(params):
    return DivClassSym.from_canonical(params, _half_delta(params))


def sym_l0(params):
    return DivClassSym.from_canonical(params, _l0(params))


def sym_alpha(params):
    return DivClassSym.from_canonical(params, _alpha(params))


def sym_g_class(params, degree):
    """deg(L)[x] - [Delta_d/2], the class of L^{(d)} twisted by O(-Delta_d/2)."""
    return sym_point(params).scale(degree) - sym_half_delta(params)
