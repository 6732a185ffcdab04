"""Volumes of spaces of continuous diagrams and the Bessel-type series behind them.

The total volume of diagrams of width ``x`` and height ``y`` is

    rho(x, y) = sum_n (x y)**n / (n! n!) = I_0(2 sqrt(x y)),

and its derivatives and antiderivatives are the shifted series
``sum x**(n+k) y**n / ((n+k)! n!)``.  Every series evaluation returns a
:class:`~contyoung.series.SeriesValue`; exact coefficient sequences are
tuples of :class:`~fractions.Fraction` in the variable ``u = x y``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .quadrature import adaptive_simpson
from .series import SeriesValue, positive_series
from .simplex import compositions, monomial_integral_coeff, weak_compositions

__all__ = [
    "bessel_i",
    "rho",
    "rho_dx",
    "vol_dn",
    "f_shift",
    "f_shift_bessel",
    "vol_region",
    "pde_residual",
    "integral_rep",
    "asymptote",
    "rho_coeffs",
    "power_series_coeffs",
    "power_series_coeffs_oracle",
    "reciprocal_series_coeffs",
    "reciprocal_series_oracle",
    "multinomial",
    "cont_binomial",
    "composition_volume_sum",
]

CoeffSeq = tuple  # tuple[Fraction, ...], index n is the coefficient of u**n

REGION_KINDS = ("D", "D1", "D2", "D3")


def _nonneg(name, v):
    if v < 0 or v != v:
        raise DomainError(f"{name} must be >= 0, got {v}")
    return float(v)


def bessel_i(k: int, t: float) -> SeriesValue:
    """Modified Bessel function ``I_k(t)`` for integer ``k >= 0`` and ``t >= 0``."""
    if k < 0 or int(k) != k:
        raise DomainError(f"order must be a nonnegative integer, got {k}")
    t = _nonneg("t", t)
    k = int(k)
    h2 = (0.5 * t) ** 2
    first = (0.5 * t) ** k / math.factorial(k) if t > 0 or k == 0 else 0.0
    return positive_series(
        first, lambda m: h2 / ((m + 1) * (k + m + 1)), ops_per_term=3, first_ops=k + 2
    )


def rho(x: float, y: float) -> SeriesValue:
    """Total diagram-space volume ``sum (xy)**n / (n!)**2``."""
    u = _nonneg("x", x) * _nonneg("y", y)
    return positive_series(1.0, lambda m: u / ((m + 1) * (m + 1)))


def f_shift(k: int, x: float, y: float) -> SeriesValue:
    """``sum_n x**(n+k) y**n / ((n+k)! n!)``.

    This is the k-th ``y``-derivative of ``rho`` and also its k-fold
    antiderivative in ``x``.
    """
    if k < 0:
        raise DomainError(f"k must be >= 0, got {k}")
    x, y = _nonneg("x", x), _nonneg("y", y)
    u = x * y
    first = x**k / math.factorial(k)
    return positive_series(first, lambda m: u / ((m + 1) * (m + k + 1)), first_ops=k + 2)


def rho_dx(k: int, x: float, y: float) -> SeriesValue:
    """k-th partial derivative of ``rho`` in ``x``."""
    return f_shift(k, y, x)


def f_shift_bessel(k: int, x: float, y: float) -> float:
    """``(x/y)**(k/2) I_k(2 sqrt(xy))``, the Bessel form of :func:`f_shift` (``y > 0``)."""
    if y <= 0:
        raise DomainError("Bessel form needs y > 0; use f_shift")
    return (x / y) ** (0.5 * k) * bessel_i(k, 2.0 * math.sqrt(x * y)).value


def vol_dn(n: int, x, y):
    """Volume ``x**(n-1) y**(n-1) / ((n-1)!)**2`` of the diagrams with ``n`` blocks.

    Exact for int/Fraction arguments.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if x < 0 or y < 0:
        raise DomainError("x and y must be >= 0")
    c = Fraction(1, math.factorial(n - 1) ** 2)
    if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
        return Fraction(x) ** (n - 1) * Fraction(y) ** (n - 1) * c
    return (float(x) ** (n - 1) * float(y) ** (n - 1)) * float(c)


def _scaled(sv: SeriesValue, factor: float, extra_ops: int = 2) -> SeriesValue:
    value = sv.value * factor
    rnd = sv.round_bound * factor + extra_ops * 2.0**-53 * abs(value)
    return SeriesValue(value, sv.terms_used, sv.tail_bound * factor, rnd)


def vol_region(kind: str, x: float, y: float) -> SeriesValue:
    """Volume of ``D`` (all diagrams), ``D1`` (width <= x), ``D2`` (height <= y), ``D3`` (both)."""
    if kind not in REGION_KINDS:
        raise DomainError(f"kind must be one of {REGION_KINDS}, got {kind!r}")
    if x <= 0 or y <= 0:
        raise DomainError("vol_region needs x > 0 and y > 0")
    x, y = float(x), float(y)
    if kind == "D":
        return rho(x, y)
    if kind == "D3":
        r = rho(x, y)
        return SeriesValue(r.value - 1.0, r.terms_used, r.tail_bound, r.round_bound + 2.0**-53)
    i1 = bessel_i(1, 2.0 * math.sqrt(x * y))
    factor = math.sqrt(x / y) if kind == "D1" else math.sqrt(y / x)
    return _scaled(i1, factor, extra_ops=4)


def pde_residual(x: float, y: float, h: float) -> tuple[float, float]:
    """Central-difference residuals of ``(x d/dx - y d/dy) rho`` and ``(d/dx d/dy - 1) rho``."""
    if not (h > 0) or h >= min(x, y):
        raise DomainError(f"step h={h} must satisfy 0 < h < min(x, y)")

    def r(a, b):
        return rho(a, b).value

    dx = (r(x + h, y) - r(x - h, y)) / (2 * h)
    dy = (r(x, y + h) - r(x, y - h)) / (2 * h)
    dxy = (r(x + h, y + h) - r(x + h, y - h) - r(x - h, y + h) + r(x - h, y - h)) / (4 * h * h)
    return x * dx - y * dy, dxy - r(x, y)


def integral_rep(k: int, x: float, y: float, tol: float = 1e-13) -> float:
    """k-th ``x``-derivative of ``rho`` from its cosine integral representation.

    ``(1/pi) (y/x)**(k/2) int_0^pi exp(2 sqrt(xy) cos t) cos(k t) dt``; ``tol``
    is relative to the size of the integral.
    """
    if x <= 0 or y <= 0:
        raise DomainError("integral_rep needs x > 0 and y > 0")
    a = 2.0 * math.sqrt(x * y)
    # scale out exp(a) to keep the integrand O(1)
    val, _ = adaptive_simpson(
        lambda t: math.exp(a * (math.cos(t) - 1.0)) * math.cos(k * t),
        0.0,
        math.pi,
        tol=tol * 1e-3,
        rel_tol=tol,
    )
    return (y / x) ** (0.5 * k) * math.exp(a) * val / math.pi


def asymptote(k: int, x: float, y: float) -> float:
    """Leading large-``xy`` behaviour of the k-th ``x``-derivative of ``rho``.

    ``x**(-k/2 - 1/4) y**(k/2 - 1/4) exp(2 sqrt(xy)) / (2 sqrt(pi))``; the
    rational prefactor is 1 for every ``k``.
    """
    if x <= 0 or y <= 0:
        raise DomainError("asymptote needs x > 0 and y > 0")
    return (
        x ** (-0.5 * k - 0.25)
        * y ** (0.5 * k - 0.25)
        * math.exp(2.0 * math.sqrt(x * y))
        / (2.0 * math.sqrt(math.pi))
    )


@lru_cache(maxsize=None)
def rho_coeffs(N: int) -> CoeffSeq:
    """``(1/(n!)**2 for n in 0..N)``."""
    return tuple(Fraction(1, math.factorial(n) ** 2) for n in range(N + 1))


def _convolve(a: CoeffSeq, b: CoeffSeq, N: int) -> CoeffSeq:
    return tuple(sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(N + 1))


def power_series_coeffs(k: int, N: int) -> CoeffSeq:
    """Coefficients of ``rho**k`` in ``u = xy`` through degree ``N``."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if N < 0:
        raise DomainError(f"N must be >= 0, got {N}")
    base = rho_coeffs(N)
    out = base
    for _ in range(k - 1):
        out = _convolve(out, base, N)
    return out


def multinomial(parts) -> int:
    n = sum(parts)
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def power_series_coeffs_oracle(k: int, N: int) -> CoeffSeq:
    """``(1/n!**2) sum_{n_1+..+n_k=n} multinomial(n; n_1..n_k)**2``."""
    return tuple(
        Fraction(sum(multinomial(c) ** 2 for c in weak_compositions(n, k)), math.factorial(n) ** 2)
        for n in range(N + 1)
    )


def reciprocal_series_coeffs(N: int) -> CoeffSeq:
    """Coefficients of ``1/rho`` by exact series inversion."""
    if N < 0:
        raise DomainError(f"N must be >= 0, got {N}")
    c = rho_coeffs(N)
    b = [Fraction(1)]
    for n in range(1, N + 1):
        b.append(-sum(c[i] * b[n - i] for i in range(1, n + 1)))
    return tuple(b)


def reciprocal_series_oracle(N: int) -> CoeffSeq:
    """Signed sum over compositions ``(n_1..n_k)`` of ``n`` with ``n_i >= 1``."""
    out = [Fraction(1)]
    for n in range(1, N + 1):
        s = sum((-1) ** len(c) * multinomial(c) ** 2 for c in compositions(n))
        out.append(Fraction(s, math.factorial(n) ** 2))
    return tuple(out)


def _binom_tail(s: float, b: float) -> SeriesValue:
    # sum (s b)**n / ((n+1)! n!)  -- equals d(rho)/dx(s, b) / b
    u = s * b
    return positive_series(1.0, lambda m: u / ((m + 2) * (m + 1)))


def cont_binomial(x: float, s: float) -> float:
    """Continuous binomial bracket ``{x brace s}`` for ``0 <= s <= x``.

    ``2 rho(s, x-s) + (x/(x-s)) d(rho)/dx(s, x-s)``.  The quotient is
    evaluated as ``x * sum (s(x-s))**n / ((n+1)! n!)``, which is the same
    series with the factor ``x - s`` cancelled, so ``s = x`` gives the limit
    ``2 + x`` directly.
    """
    if not (0 <= s <= x):
        raise DomainError(f"need 0 <= s <= x, got s={s}, x={x}")
    b = x - s
    return 2.0 * rho(s, b).value + x * _binom_tail(s, b).value


def composition_volume_sum(x: float) -> SeriesValue:
    """``sum_k int_{simplex_k} x_1...x_k``, which equals ``exp(x**2/2) - 1``."""
    x = _nonneg("x", x)
    x2 = x * x

    def ratio(m):
        # c_{m+2} / c_{m+1} with c_k = monomial coefficient of (1,)*k
        q = monomial_integral_coeff((1,) * (m + 2)) / monomial_integral_coeff((1,) * (m + 1))
        return float(q) * x2

    first = float(monomial_integral_coeff((1,))) * x2
    return positive_series(first, ratio)
