# tests/test_quot_cones.py
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from cones import Cone, equal, is_subcone
from core.config import TOverride
from core.errors import HypothesisError, InvalidCurveError, NoUpperBoundError
from services.quot import (
    b_class, class_a, exact_cone, from_sym, fiber_line, genus0_cone, kappa1, kappa2, lower_bound_cone, o1, o1_plus_l0,
    pair_quot, partitions_leq, quot_half_delta, quot_l0, quot_theta, section_gonal, section_shifted_point,
    section_small_diagonal, tilde_delta, upper_bound, upper_bound_cone,
)
from services.quot.bounds import FLAG_WEAK_NO_GONAL_LINE, FLAG_WEAK_NO_TILDE_DELTA
from services.quot.theorems import FLAG_USER_SUPPLIED_T, THEOREM_D2, THEOREM_GENUS1
from services.symprod import CurveParams, build_params, gonality, sym_alpha


def _cone(*classes):
    return Cone([c.canonical() for c in classes])


def test_pairings_against_quot_curves(params_factory):
    params = params_factory(2, 3, n=3)
    a = class_a(params)
    assert pair_quot(o1(params), fiber_line(params)) == 1
    assert pair_quot(quot_l0(params), fiber_line(params)) == 0
    assert pair_quot(a, fiber_line(params)) == 1
    assert pair_quot(a, tilde_delta(params)) == 0
    assert pair_quot(a, section_gonal(params)) == 0


@pytest.mark.parametrize("d", range(1, 7))
def test_o1_is_trivial_on_diagonal_section_in_genus_one(params_factory, d):
    params = params_factory(1, d, n=2)
    assert pair_quot(o1(params), section_small_diagonal(params)) == 0


def test_b_class_with_trivial_line_bundle_is_o1(params_factory):
    for g, d in [(1, 1), (2, 2), (3, 5)]:
        params = params_factory(g, d, n=2)
        assert b_class(params, 0) == o1(params)


def test_pairing_is_linear(params_factory, rng):
    params = params_factory(3, 3, n=3)
    curves = [fiber_line(params), section_gonal(params), section_small_diagonal(params),
              section_shifted_point(params), tilde_delta(params)]
    basis = [o1(params), quot_theta(params), quot_l0(params), quot_half_delta(params)]
    for _ in range(20):
        c1, c2 = rng.choice(basis), rng.choice(basis)
        s, t = Fraction(rng.randint(-9, 9), rng.randint(1, 4)), Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        combined = c1.scale(s) + c2.scale(t)
        for curve in curves:
            assert pair_quot(combined, curve) == s * pair_quot(c1, curve) + t * pair_quot(c2, curve)


def test_tilde_delta_needs_rank_at_least_d(params_factory):
    with pytest.raises(InvalidCurveError):
        tilde_delta(params_factory(2, 3, n=2))


def test_upper_bound_examples(params_factory):
    params = params_factory(2, 2, n=2)
    assert params.mu0 == Fraction(3, 4)
    expected = _cone(o1_plus_l0(params, Fraction(3, 4)), quot_theta(params), quot_l0(params))
    assert equal(upper_bound_cone(params), expected)

    params = params_factory(1, 4, n=2)
    expected = _cone(o1(params) + quot_l0(params), quot_theta(params), quot_l0(params))
    assert equal(upper_bound_cone(params), expected)
    assert upper_bound(params).flags == ()

    params = params_factory(3, 3, n=3)
    assert params.mu0 == Fraction(5, 9)
    expected = _cone(o1_plus_l0(params, Fraction(5, 9)), quot_theta(params), quot_l0(params))
    assert equal(upper_bound_cone(params), expected)


@pytest.mark.parametrize("g", range(1, 11))
def test_dual_cone_reproduction(params_factory, g):
    for d in range(gonality(g), 11):
        params = params_factory(g, d, n=d)
        bound = upper_bound(params)
        assert [c.name.value for c in bound.curves] == ["l", "eta_*l_prime", "tilde_delta"]
        expected = _cone(class_a(params), quot_theta(params), quot_l0(params))
        assert equal(bound.cone, expected)


def test_weak_upper_bounds_are_flagged(params_factory):
    assert upper_bound(params_factory(2, 3, n=2)).flags == (FLAG_WEAK_NO_TILDE_DELTA,)
    assert upper_bound(params_factory(3, 2, n=2)).flags == (FLAG_WEAK_NO_GONAL_LINE,)


def test_no_upper_bound_in_genus_zero(params_factory):
    with pytest.raises(NoUpperBoundError):
        upper_bound_cone(params_factory(0, 3, n=2))


def test_kappa_classes(params_factory):
    params = params_factory(2, 5, n=2)
    expected = o1(params) + quot_l0(params).scale(Fraction(6, 10)) + quot_theta(params).scale(Fraction(5, 10))
    assert kappa1(params) == expected
    assert kappa2(params) == o1_plus_l0(params, Fraction(3, 4))
    lower = lower_bound_cone(params)
    assert lower.membership(kappa2(params).canonical()).inside
    assert lower.contains(kappa1(params).canonical())


@pytest.mark.parametrize("g", range(1, 9))
def test_kappa1_lies_in_lower_bound(params_factory, g):
    for d in range(1, 9):
        for n in range(1, 9):
            params = params_factory(g, d, n=n)
            assert lower_bound_cone(params).membership(kappa1(params).canonical()).inside


def test_exact_cone_rows(params_factory):
    params = params_factory(2, 2, n=2)
    exact = exact_cone(params)
    assert exact.theorem == THEOREM_D2 and not exact.conditional
    expected = _cone(o1_plus_l0(params, Fraction(3, 4)), quot_l0(params), from_sym(sym_alpha(params)))
    assert equal(exact.cone, expected)

    params = params_factory(4, 3, n=5)
    expected = _cone(o1_plus_l0(params, Fraction(6, 12)), quot_theta(params), quot_l0(params))
    assert equal(exact_cone(params).cone, expected)

    params = params_factory(1, 2, n=1)
    exact = exact_cone(params)
    assert exact.theorem == THEOREM_GENUS1
    half_delta = quot_half_delta(params)
    assert equal(exact.cone, _cone(o1(params) + half_delta, quot_theta(params), half_delta))

    assert exact_cone(params_factory(5, 2, n=2)) is None
    assert exact_cone(params_factory(4, 3, n=2)) is None


@pytest.mark.parametrize("g,t", [(1, 1), (2, 2), (3, Fraction(9, 5)), (4, 2), (9, 3), (16, 4)])
def test_exact_d2_uses_t_table(params_factory, g, t):
    params = params_factory(g, 2, n=2)
    exact = exact_cone(params)
    assert exact is not None
    if g >= 2:
        coefficient = (t + 1) / (g + t)
        assert exact.cone.contains(o1_plus_l0(params, coefficient).canonical())
        assert exact.cone.contains(from_sym(sym_alpha(params)).canonical())


def test_unproven_t_needs_opt_in():
    overrides = {7: TOverride(7, Fraction(7, 3), "user-supplied")}
    params = build_params(7, 2, n=3, t_overrides=overrides)
    with pytest.raises(HypothesisError):
        exact_cone(params)
    exact = exact_cone(params, allow_conjectural_t=True)
    assert exact.conditional
    assert exact.flags == (FLAG_USER_SUPPLIED_T,)


def test_genus0_cone_examples():
    assert equal(genus0_cone((0, 0, 0, 0), 4), Cone([[1, 3], [0, 1]]))
    assert equal(genus0_cone((-1, 2), 3), Cone([[1, 3], [0, 1]]))
    assert equal(genus0_cone((5,), 1), Cone([[1, -5], [0, 1]]))


def test_genus0_cone_random_splittings(rng):
    for _ in range(20):
        splitting = [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))]
        d = rng.randint(1, 6)
        cone = genus0_cone(splitting, d)
        assert equal(cone, Cone([[1, d - 1 - min(splitting)], [0, 1]]))
        assert exact_cone(CurveParams(g=0, d=d, splitting=tuple(splitting))).cone == cone


@pytest.mark.parametrize("g", range(1, 6))
def test_sandwich(params_factory, g):
    for d in range(1, 6):
        for n in range(1, 6):
            params = params_factory(g, d, n=n)
            lower, upper = lower_bound_cone(params), upper_bound_cone(params)
            assert is_subcone(lower, upper)
            exact = exact_cone(params)
            if exact is not None:
                assert is_subcone(lower, exact.cone)
                assert is_subcone(exact.cone, upper)


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("n", [1, 2, 6])
def test_genus_one_collapse(params_factory, d, n):
    params = params_factory(1, d, n=n)
    assert quot_half_delta(params) == quot_l0(params) or d == 1
    exact = exact_cone(params).cone
    assert equal(exact, upper_bound_cone(params))
    assert equal(exact, lower_bound_cone(params))


def test_partition_examples():
    assert partitions_leq(3, 2) == [(3,), (2, 1)]
    assert partitions_leq(4, 2) == [(4,), (3, 1), (2, 2)]
    assert partitions_leq(5, 1) == [(5,)]
    with pytest.raises(ValueError):
        partitions_leq(0, 2)


def _count_partitions(d, n):
    # Partitions of d into at most n parts: use n parts or fewer.
    if d == 0:
        return 1
    if n == 0:
        return 0
    return _count_partitions(d, n - 1) + (_count_partitions(d - n, n) if d >= n else 0)


@pytest.mark.parametrize("d", range(1, 13))
def test_partition_counts(d):
    for n in range(1, 13):
        parts = partitions_leq(d, n)
        assert len(parts) == len(set(parts)) == _count_partitions(d, n)
        assert parts == sorted(parts, reverse=True)
        assert all(sum(p) == d and len(p) <= n for p in parts)


@pytest.mark.parametrize("d", range(1, 7))
def test_partitions_match_brute_force(d):
    for n in range(1, 7):
        brute = {tuple(sorted(combo, reverse=True))
                 for k in range(1, n + 1)
                 for combo in combinations_with_replacement(range(1, d + 1), k) if sum(combo) == d}
        assert set(partitions_leq(d, n)) == brute
