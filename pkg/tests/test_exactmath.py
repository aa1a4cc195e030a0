# tests/test_exactmath.py
from fractions import Fraction

import pytest

from core.errors import DimensionMismatchError
from exactmath import RatMat, RatVec, format_rat, identity, null_space, parse_rat, rank, solve, to_rat


def test_solve_identity_and_diagonal():
    assert solve(identity(2), RatVec([3, Fraction(1, 2)])) == RatVec([3, Fraction(1, 2)])
    assert solve(RatMat([[2, 0], [0, 4]]), RatVec([1, 1])) == RatVec([Fraction(1, 2), Fraction(1, 4)])


@pytest.mark.parametrize("g", range(1, 13))
@pytest.mark.parametrize("d", range(2, 13))
def test_solve_theta_pairing_system(g, d):
    # a * d^2 g + b * d = 0 and a * g + b = (d - 1) g
    matrix = RatMat([[d * d * g, d], [g, 1]])
    assert solve(matrix, RatVec([0, (d - 1) * g])) == RatVec([-1, d * g])


def test_solve_singular_and_inconsistent():
    singular = RatMat([[1, 2], [2, 4]])
    assert solve(singular, RatVec([1, 2])) is None
    assert solve(singular, RatVec([1, 3])) is None


def test_rank_examples():
    assert rank(identity(3)) == 3
    assert rank(RatMat([[0, 0], [0, 0]])) == 0
    # Pairing functionals of l, eta_*l' and tilde-delta at g=2, d=2.
    assert rank(RatMat([[1, 0, 0], [-3, 1, 0], [0, 2, 8]])) == 3


def test_random_invertible_solve(rng):
    checked = 0
    while checked < 50:
        matrix = RatMat([[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3)] for _ in range(3)])
        if rank(matrix) < 3:
            continue
        expected = RatVec(Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(3))
        assert solve(matrix, matrix.apply(expected)) == expected
        checked += 1


def test_null_space_annihilates_rows():
    matrix = RatMat([[1, 2, 3], [2, 4, 6]])
    basis = null_space(matrix)
    assert len(basis) == 2
    for vec in basis:
        assert matrix.apply(vec).is_zero()


def test_matmul_and_transpose():
    a = RatMat([[1, 2], [3, 4]])
    assert a.matmul(identity(2)) == a
    assert a.transpose() == RatMat([[1, 3], [2, 4]])
    assert a.matmul(a.transpose()) == RatMat([[5, 11], [11, 25]])


def test_vector_arithmetic_and_primitive():
    v = RatVec([Fraction(1, 2), Fraction(3, 4)])
    assert v.primitive() == RatVec([2, 3])
    assert (-v).primitive() == RatVec([-2, -3])
    assert v + v == v.scale(2)
    assert v.dot(RatVec([4, 4])) == 5
    with pytest.raises(DimensionMismatchError):
        v + RatVec([1, 2, 3])
    with pytest.raises(DimensionMismatchError):
        RatVec([1, 2], dim=3)


def test_rational_parsing():
    assert parse_rat("3/4") == Fraction(3, 4)
    assert parse_rat(" -7 ") == -7
    assert format_rat(Fraction(6, 8)) == "3/4"
    assert format_rat(5) == "5"
    for bad in ("", "1/0", "x", "1.5", "1//2"):
        with pytest.raises(ValueError):
            parse_rat(bad)
    with pytest.raises(TypeError):
        to_rat(0.5)
    with pytest.raises(TypeError):
        to_rat(True)


def _random_rat(rng):
    return Fraction(rng.randint(-50, 50), rng.randint(1, 30))


def test_rational_field_laws(rng):
    for _ in range(500):
        a, b, c = _random_rat(rng), _random_rat(rng), _random_rat(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_reduced_form_is_idempotent(rng):
    for _ in range(500):
        value = to_rat(f"{rng.randint(-200, 200) * 6}/{rng.randint(1, 40) * 6}")
        assert to_rat(value) == value
        assert parse_rat(format_rat(value)) == value
        assert format_rat(parse_rat(format_rat(value))) == format_rat(value)
        assert value.denominator > 0
