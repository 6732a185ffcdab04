from fractions import Fraction as F

from contyoung.polynomial import IntegerPolynomial, RationalPolynomial


def test_arithmetic():
    p = IntegerPolynomial([1, 1])
    assert p * p == IntegerPolynomial([1, 2, 1])
    assert p**3 == IntegerPolynomial([1, 3, 3, 1])
    assert p - p == IntegerPolynomial()
    assert (p + 1).coeffs == (2, 1)
    assert p.shift(2) == IntegerPolynomial([0, 0, 1, 1])
    assert IntegerPolynomial.monomial(3).low_degree == 3
    assert p(2) == 3


def test_integration_is_exact():
    x2 = RationalPolynomial.monomial(2)
    assert x2.integral() == RationalPolynomial.monomial(3, F(1, 3))
    assert x2.integral().derivative() == x2
    # int_0^t s**2 (t - s) ds = t**4 / 12
    assert x2.integrate_gap(1) == RationalPolynomial.monomial(4, F(1, 12))


def test_json_round_trip():
    p = IntegerPolynomial([0, 0, 3, 10**30])
    data = p.to_json()
    assert data == ["0", "0", "3", str(10**30)]
    assert IntegerPolynomial.from_json(data) == p
