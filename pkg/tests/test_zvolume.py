import math
from fractions import Fraction as F

import pytest

from contyoung import zvolume as zv
from contyoung.errors import DomainError, RangeError, ResourceError
from contyoung.quadrature import integrate
from contyoung.volume import bessel_i, rho, vol_dn


def test_d_coeff_examples():
    assert zv.d_coeff(2, 1) == F(1, 2)
    assert zv.d_coeff(1, 5) == F(1, 6)
    assert zv.d_coeff(3, 0) == F(1, 6)
    with pytest.raises(DomainError):
        zv.d_coeff(0, 1)


def test_d_coeff_oracle_bound_closed_form():
    for n in range(1, 7):
        for l in range(9):
            assert zv.d_coeff(n, l) == zv.d_coeff_direct(n, l)
    for n in range(1, 15):
        for l in range(15):
            assert zv.d_coeff(n, l) <= zv.d_bound(n, l)
    for n in range(1, 13):
        assert zv.d_coeff(n, 1) == F(n, 2 * math.factorial(n))
    with pytest.raises(ResourceError):
        zv.d_coeff_direct(12, 40)


def test_table_growth_is_consistent():
    t = zv.DCoeffTable()
    first = t.get(3, 2)
    assert t.get(9, 30) == zv.d_coeff(9, 30)
    assert t.get(3, 2) == first


def test_vol_z_dn_at_zero_is_vol_dn():
    for n in range(1, 12):
        for x, y in [(0.5, 0.5), (1.0, 2.0), (3.0, 0.7)]:
            a, b = zv.vol_z_dn(n, x, y, 0.0).value, vol_dn(n, x, y)
            assert abs(a - b) <= math.ulp(b)


def test_vol_z_dn_values():
    assert zv.vol_z_dn(1, 1.0, 1.0, 1.0).value == pytest.approx(math.exp(-1), rel=1e-15)
    # n = 2 on the unit square: area = x1 y1 + (1 - y1); integrate x1 in closed form
    z = 1.0

    def inner(y1):
        if y1 == 0.0:
            return math.exp(-z)
        return math.exp(-z * (1 - y1)) * -math.expm1(-z * y1) / (z * y1)

    exact = integrate(inner, 0.0, 1.0, tol=1e-14)
    assert zv.vol_z_dn(2, 1.0, 1.0, z).value == pytest.approx(exact, rel=1e-12)
    with pytest.raises(RangeError):
        zv.vol_z_dn(3, 100.0, 10.0, 1.0)


def test_vol_z_dn_alternating_terms():
    for n in range(2, 7):
        x = y = 1.0
        z = 0.8
        u = x * y * z
        terms = [float((l + n) * zv.d_coeff(n, l) / math.factorial(l + n - 1)) * u**l for l in range(25)]
        l0 = math.ceil(u)
        assert all(terms[l + 1] <= terms[l] for l in range(l0, 24))
        part = math.fsum((-1) ** l * terms[l] for l in range(3))
        assert abs(zv.vol_z_dn(n, x, y, z).value - part) <= terms[3]


def test_vol_z_d():
    total = math.fsum(zv.vol_z_dn(n, 1.0, 1.0, 1.0).value for n in range(1, 26))
    assert abs(zv.vol_z_d(1.0, 1.0, 1.0).value - total) < 1e-10
    for x, y in [(0.5, 0.5), (1.0, 2.0), (2.0, 2.0)]:
        assert abs(zv.vol_z_d(x, y, 0.0).value - rho(x, y).value) < 1e-12
        vals = [zv.vol_z_d(x, y, z).value for z in (0.0, 0.5, 1.0, 2.0)]
        assert all(a >= b for a, b in zip(vals, vals[1:]))
        i0 = bessel_i(0, 2 * math.sqrt(x * y)).value
        assert all(v <= i0 * (1 + 1e-15) for v in vals)
    with pytest.raises(DomainError):
        zv.vol_z_d(1.0, 1.0, -1.0)


def test_vol_z_d_coefficients_lowering_factorial_form():
    # regrouped by powers of z: coefficient of (xy)**(n+l) (-z)**l is
    # (l+n+1) d_{n+1,l} / ((l+n)_(n) l!) with the lowering factorial (l+n)_(n)
    coeffs = zv.vol_z_d_coefficients(6)
    assert len(coeffs) == sum(range(1, 7))
    for (k, l), c in coeffs.items():
        n = k - l
        alt = F((l + n + 1), math.perm(l + n, n) * math.factorial(l)) * zv.d_coeff(n + 1, l)
        assert c == alt


def test_mean_area():
    assert zv.mean_area_coeff(1) == 1
    assert zv.mean_area_coeff(2) == F(3, 4)
    assert zv.mean_area_coeff(10) == F(11, 20)
    for n in range(1, 15):
        assert zv.mean_area_coeff(n) == F(n + 1, 2 * n)
    assert zv.mean_area(2, 2, 3) == F(9, 2)
    assert zv.mean_area(10, 1.0, 1.0) == pytest.approx(0.55)
