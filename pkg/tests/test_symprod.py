# tests/test_symprod.py
from fractions import Fraction

import pytest

from cones import Cone, equal, is_subcone
from core.config import TOverride
from core.errors import InvalidBasisError, InvalidCurveError, InvalidParamsError
from exactmath import RatVec
from services.symprod import (
    CurveParams, DivClassSym, SymBasis, TProvenance, build_params, convert, extremal_dual, gonal_line, gonality,
    lookup_t, mu0, nef_cone_sym, pair, shifted_point, small_diagonal, sym_alpha, sym_g_class, sym_half_delta,
    sym_l0, sym_point, sym_theta,
)

GRID = [(g, d) for g in range(1, 13) for d in range(2, 13)]


def test_gonality_of_very_general_curves():
    assert [gonality(g) for g in range(0, 8)] == [1, 2, 2, 3, 3, 4, 4, 5]


def test_theta_in_diagonal_basis():
    params = CurveParams(g=3, d=2)
    theta = convert(sym_theta(params), SymBasis.X_DELTA)
    assert theta.coords == RatVec([4, -1])


def test_l0_in_canonical_basis():
    params = CurveParams(g=2, d=2)
    assert sym_l0(params).convert(SymBasis.X_THETA).coords == RatVec([4, -1])


@pytest.mark.parametrize("g,d", GRID)
def test_basis_identities(g, d):
    params = CurveParams(g=g, d=d)
    x, theta, half_delta, l0 = sym_point(params), sym_theta(params), sym_half_delta(params), sym_l0(params)
    m = mu0(d, g)
    assert l0 == x.scale(d * g) - theta
    assert theta == x.scale(d + g - 1) - half_delta
    assert l0 == theta.scale(1 / m - 1) + half_delta.scale(1 / m)


def test_round_trip_between_bases(rng):
    params = CurveParams(g=4, d=3)
    for _ in range(30):
        coords = [Fraction(rng.randint(-30, 30), rng.randint(1, 9)) for _ in range(2)]
        c = DivClassSym(params, SymBasis.X_THETA, coords)
        back = c.convert(SymBasis.THETA_L0).convert(SymBasis.X_THETA)
        assert back.coords == RatVec(coords)
        assert c.convert(SymBasis.X_L0) == c


def test_alpha_basis_needs_t():
    params = CurveParams(g=5, d=2)
    with pytest.raises(InvalidBasisError):
        DivClassSym(params, SymBasis.ALPHA_L0, [1, 0])
    with_t = build_params(2, 2, n=2)
    alpha = sym_alpha(with_t)
    assert DivClassSym(with_t, SymBasis.ALPHA_L0, [1, 0]) == alpha


@pytest.mark.parametrize("g,d", GRID)
def test_pairing_table(g, d):
    params = CurveParams(g=g, d=d)
    delta, delta_prime = small_diagonal(params), shifted_point(params)
    assert pair(sym_point(params), delta) == d
    assert pair(sym_theta(params), delta) == d * d * g
    assert pair(sym_point(params), delta_prime) == 1
    assert pair(sym_theta(params), delta_prime) == g
    assert pair(sym_l0(params), delta) == 0
    assert pair(sym_l0(params), delta_prime) == (d - 1) * g


def test_pairing_examples():
    assert pair(sym_theta(CurveParams(g=1, d=3)), small_diagonal(CurveParams(g=1, d=3))) == 9
    assert pair(sym_l0(CurveParams(g=4, d=3)), shifted_point(CurveParams(g=4, d=3))) == 8
    params = CurveParams(g=2, d=3)
    assert pair(sym_point(params), gonal_line(params)) == 1
    assert pair(sym_theta(params), gonal_line(params)) == 0


def test_gonal_line_needs_gonality():
    with pytest.raises(InvalidCurveError):
        gonal_line(CurveParams(g=5, d=3))


def test_extremal_dual_is_orthogonal():
    params = build_params(3, 2, n=2)
    alpha = sym_alpha(params)
    gamma = extremal_dual(params, alpha)
    assert pair(alpha, gamma) == 0
    assert pair(sym_l0(params), gamma) > 0


def test_nef_cone_above_gonality():
    params = CurveParams(g=2, d=3)
    sym = nef_cone_sym(params)
    assert sym.exact
    assert equal(sym.upper, Cone([sym_l0(params).canonical(), sym_theta(params).canonical()]))


def test_nef_cone_with_perfect_square_t():
    params = build_params(16, 2, n=2)
    assert params.t.value == 4 and params.t.proven
    sym = nef_cone_sym(params)
    assert sym.exact
    assert sym_alpha(params).canonical() == RatVec([-12, 1])
    assert equal(sym.lower, Cone([sym_l0(params).canonical(), sym_alpha(params).canonical()]))


def test_nef_cone_without_t_is_a_strict_sandwich():
    params = build_params(5, 2, n=2)
    assert params.t is None
    sym = nef_cone_sym(params)
    assert not sym.exact
    assert is_subcone(sym.lower, sym.upper)
    assert not equal(sym.lower, sym.upper)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_even_genus_cone(k):
    params = CurveParams(g=2 * k, d=k)
    sym = nef_cone_sym(params)
    assert sym.exact
    g_class = sym_g_class(params, 3 * (k - 1))
    assert g_class.canonical() == RatVec([-2, 1])
    assert sym.upper.contains(g_class.canonical())


def test_degree_line():
    params = CurveParams(g=3, d=1)
    sym = nef_cone_sym(params)
    assert sym.exact and sym.upper.ambient_dim == 1
    assert sym_theta(params).canonical() == RatVec([3])
    assert sym_half_delta(params).canonical().is_zero()


@pytest.mark.parametrize("g,expected", [(1, 1), (2, 2), (3, Fraction(9, 5)), (4, 2), (9, 3), (16, 4)])
def test_t_table(g, expected):
    value = lookup_t(g)
    assert value.value == expected
    assert value.provenance is TProvenance.KNOWN


def test_t_unknown_and_conjectural_overrides():
    assert lookup_t(7) is None
    assert lookup_t(10, allow_conjectural=True) is None
    overrides = {10: TOverride(10, Fraction(16, 5), "conjectural")}
    assert lookup_t(10, overrides=overrides) is None
    value = lookup_t(10, overrides=overrides, allow_conjectural=True)
    assert value.value == Fraction(16, 5)
    assert not value.proven
    supplied = lookup_t(7, overrides={7: TOverride(7, Fraction(7, 3), "user-supplied")})
    assert supplied.provenance is TProvenance.USER_SUPPLIED


def test_invalid_params():
    with pytest.raises(InvalidParamsError):
        CurveParams(g=3, d=2, very_general=False)
    with pytest.raises(InvalidParamsError):
        CurveParams(g=1, d=2, splitting=(0, 1))
    with pytest.raises(InvalidParamsError):
        CurveParams(g=2, d=0)
    assert CurveParams(g=0, d=3, splitting=(2, -1)).splitting == (-1, 2)
    assert build_params(0, 3, n=2).splitting == (0, 0)
