import math
from fractions import Fraction as F
from itertools import product

import pytest

from contyoung import simplex as sx
from contyoung.errors import DomainError
from contyoung.polynomial import RationalPolynomial


def test_simplex_volume_examples():
    assert sx.simplex_volume(0, 5) == 1
    assert sx.simplex_volume(2, 3) == F(9, 2)
    assert sx.simplex_volume(3, 1) == F(1, 6)
    assert sx.simplex_volume_coeff(4) == F(1, 24)


def test_affine_cartesian_round_trip():
    xs, x = sx.affine_to_cartesian((F(1, 2), F(3, 10), F(1, 5)))
    assert xs == (F(1, 2), F(4, 5)) and x == 1
    assert sx.affine_to_cartesian((1, 0, 0)) == ((1, 1), 1)
    assert sx.cartesian_to_affine((F(1, 2), F(4, 5)), 1) == (F(1, 2), F(3, 10), F(1, 5))
    assert sx.cartesian_to_affine((), 2) == (2,)
    with pytest.raises(DomainError):
        sx.cartesian_to_affine((3, 1), 5)
    with pytest.raises(DomainError):
        sx.affine_to_cartesian((1, -1))


def test_monomial_coefficient_examples():
    assert sx.monomial_integral_coeff((1, 1)) == F(1, 8)
    assert sx.monomial_integral_coeff((0, 0, 0)) == F(1, 6)
    assert sx.monomial_integral_coeff((2,)) == F(1, 3)
    assert sx.monomial_integral_coeff((2, 3)) == F(1, 21)
    with pytest.raises(DomainError):
        sx.monomial_integral_coeff(())


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_monomial_coefficient_matches_iterated_integration(k):
    for a in product(range(7), repeat=k):
        if sum(a) <= 6:
            assert sx.monomial_integral_coeff(a) == sx.monomial_integral_oracle(a), a


def test_divided_power_examples_and_consistency():
    assert sx.divided_power_integral_coeff((5,)) == 1
    assert sx.divided_power_integral_coeff((1, 1)) == 3
    assert sx.divided_power_integral_coeff((0, 0, 0, 0)) == 1
    for a in product(range(4), repeat=3):
        lhs = F(sx.divided_power_integral_coeff(a), math.factorial(sum(a) + 3))
        rhs = sx.monomial_integral_coeff(a) / math.prod(math.factorial(v) for v in a)
        assert lhs == rhs


def test_gap_coefficient():
    assert sx.gap_integral_coeff((1, 1)) == F(1, 6)
    assert sx.gap_integral_coeff((0, 0, 0)) == F(1, 2)
    assert sx.gap_integral_coeff((1, 1, 1)) == F(1, 120)
    for a in product(range(4), repeat=3):
        assert sx.gap_integral_coeff(a) == sx.gap_integral_oracle(a)


def test_t_numbers():
    assert sx.t_number(1, 5) == 10
    assert sx.t_number(2, 4) == 11
    assert sx.t_number(2, 3) == 2
    for k in range(1, 6):
        for n in range(k + 1, 13):
            assert sx.t_number(k, n) == sx.t_number_oracle(k, n)
    with pytest.raises(DomainError):
        sx.t_number(3, 3)


def test_u_numbers():
    assert sx.u_number(1, 3) == 4
    assert sx.u_number(2, 4) == 6
    assert sx.u_number(1, 2) == 1
    for k in range(1, 6):
        for n in range(k + 1, 13):
            assert sx.u_number(k, n) == sx.u_number_oracle(k, n)
    with pytest.raises(DomainError):
        sx.u_number(2, 1)


def test_v_polynomials():
    assert sx.v_polynomial(1) == RationalPolynomial.monomial(3, F(1, 6))
    assert sx.v_polynomial(2) == RationalPolynomial.monomial(5, F(1, 120))
    for k in range(1, 7):
        assert sx.v_recursion_step(sx.v_polynomial(k)) == sx.v_polynomial(k + 1)


def test_compositions():
    assert sx.composition_count(4, 2) == 3
    assert sx.composition_count(4) == 8
    assert sx.composition_count(1, 1) == 1
    assert sx.composition_count(3, 5) == 0
    assert list(sx.compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    for n in range(1, 31):
        assert sum(sx.composition_count(n, p) for p in range(1, n + 1)) == 2 ** (n - 1)
    for n in range(1, 9):
        for p in range(1, n + 1):
            assert sx.composition_count(n, p) == sx.composition_count_oracle(n, p)


def test_composition_egf_is_half_kappa():
    # sum c(n) x**n / n! at x = 1 equals kappa(2)/2
    egf = math.fsum(sx.composition_count(n) / math.factorial(n) for n in range(1, 40))
    assert egf == pytest.approx(sx.kappa(2.0).value / 2, rel=1e-14)


def test_kappa():
    v = sx.kappa(1.0)
    assert abs(v.value - math.expm1(1.0)) <= v.error_bound + 1e-16
    assert sx.kappa(1e-12).value == pytest.approx(1e-12, rel=1e-9)
    # matches the sum of simplex volumes
    total = math.fsum(float(sx.simplex_volume(k, 1.5)) for k in range(1, 40))
    assert sx.kappa(1.5).value == pytest.approx(total, rel=1e-15)


def test_composition_volume_partial_sums():
    partial = math.fsum(float(sx.monomial_integral_coeff((1,) * k)) for k in range(1, 21))
    assert abs(partial - math.expm1(0.5)) < 1e-12
