"""Exact computation on the simplex ``0 <= x_1 <= ... <= x_k <= x``.

Coefficient functions return :class:`~fractions.Fraction` values; the power
of ``x`` they multiply is implied by the operation (``|a| + k`` for the
monomial families).  Functions suffixed ``_oracle`` compute the same
quantity by an independent route (enumeration or iterated polynomial
integration) and are used by the verification suites.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import accumulate, combinations
from typing import Sequence

from .errors import DomainError
from .polynomial import RationalPolynomial
from .series import SeriesValue, positive_series

__all__ = [
    "simplex_volume",
    "simplex_volume_coeff",
    "affine_to_cartesian",
    "cartesian_to_affine",
    "partial_sums",
    "monomial_integral_coeff",
    "monomial_integral_oracle",
    "divided_power_integral_coeff",
    "gap_integral_coeff",
    "gap_integral_oracle",
    "t_number",
    "t_number_oracle",
    "u_number",
    "u_number_oracle",
    "v_polynomial",
    "v_recursion_step",
    "composition_count",
    "composition_count_oracle",
    "compositions",
    "weak_compositions",
    "kappa",
]


def simplex_volume_coeff(k: int) -> Fraction:
    """Coefficient ``1/k!`` of ``x**k`` in the volume of the k-simplex."""
    if k < 0:
        raise DomainError(f"dimension must be nonnegative, got {k}")
    return Fraction(1, math.factorial(k))


def simplex_volume(k: int, x):
    """Volume ``x**k / k!``.

    Exact when ``x`` is an int or Fraction, a float otherwise.
    """
    if x < 0:
        raise DomainError(f"edge must be nonnegative, got {x}")
    coeff = simplex_volume_coeff(k)
    if isinstance(x, (int, Fraction)):
        return Fraction(x) ** k * coeff
    return x**k / math.factorial(k)


def affine_to_cartesian(z: Sequence) -> tuple[tuple, object]:
    """Map affine coordinates ``(z_0..z_k)`` to ``((x_1..x_k), x)``."""
    for i, zi in enumerate(z):
        if zi < 0:
            raise DomainError(f"affine coordinate z_{i} = {zi} is negative")
    if not z:
        raise DomainError("need at least one affine coordinate")
    sums = list(accumulate(z))
    return tuple(sums[:-1]), sums[-1]


def cartesian_to_affine(xs: Sequence, x) -> tuple:
    """Inverse of :func:`affine_to_cartesian`."""
    prev = 0
    for i, xi in enumerate(xs, start=1):
        if xi < prev:
            raise DomainError(f"coordinate x_{i} = {xi} breaks monotonicity")
        prev = xi
    if x < prev:
        raise DomainError(f"last coordinate {prev} exceeds edge {x}")
    pts = [0, *xs, x]
    return tuple(b - a for a, b in zip(pts, pts[1:]))


def partial_sums(a: Sequence[int]) -> list[int]:
    """``[|a|_1, ..., |a|_k]``."""
    return list(accumulate(a))


def _check_index(a: Sequence[int], min_len: int = 1) -> tuple[int, ...]:
    a = tuple(a)
    if len(a) < min_len:
        raise DomainError(f"multi-index needs length >= {min_len}")
    for ai in a:
        if int(ai) != ai or ai < 0:
            raise DomainError(f"multi-index entries must be nonnegative ints: {a}")
    return tuple(int(ai) for ai in a)


def monomial_integral_coeff(a: Sequence[int]) -> Fraction:
    """Coefficient of ``x**(|a|+k)`` in the integral of ``x^a`` over the simplex.

    Equals ``1 / prod_i (|a|_i + i)``.
    """
    a = _check_index(a)
    den = 1
    for i, s in enumerate(partial_sums(a), start=1):
        den *= s + i
    return Fraction(1, den)


def monomial_integral_oracle(a: Sequence[int]) -> Fraction:
    """Same coefficient by iterated exact integration, innermost ``x_1`` first."""
    a = _check_index(a)
    f = RationalPolynomial([1])
    for ai in a:
        f = (f * RationalPolynomial.monomial(ai)).integral()
    return f.coeff(sum(a) + len(a))


def divided_power_integral_coeff(a: Sequence[int]) -> int:
    """Coefficient of ``x^{(|a|+k)}`` when integrating ``x^{(a)}``.

    ``prod_{i=2..k} C(|a|_i + i - 1, a_i)``; always an integer.
    """
    a = _check_index(a)
    out = 1
    for i, (s, ai) in enumerate(zip(partial_sums(a), a), start=1):
        if i >= 2:
            out *= math.comb(s + i - 1, ai)
    return out


def gap_integral_coeff(a: Sequence[int]) -> Fraction:
    """Coefficient of ``x**(|a|+k)`` for ``x_1^a1 (x_2-x_1)^a2 ... (x-x_k)^a_{k+1}``.

    ``a`` has length ``k + 1``.
    """
    a = _check_index(a)
    num = 1
    for ai in a:
        num *= math.factorial(ai)
    return Fraction(num, math.factorial(sum(a) + len(a) - 1))


def gap_integral_oracle(a: Sequence[int]) -> Fraction:
    """Gap-monomial coefficient by iterated binomial-expanded integration."""
    a = _check_index(a)
    f = RationalPolynomial.monomial(a[0])
    for ai in a[1:]:
        f = f.integrate_gap(ai)
    return f.coeff(sum(a) + len(a) - 1)


def _check_kn(k: int, n: int) -> None:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if n <= k:
        raise DomainError(f"need n >= k + 1, got k={k}, n={n}")


@lru_cache(maxsize=None)
def _t_row(k: int, nmax: int) -> tuple[int, ...]:
    # row[n] = T_{k,n}; zeros for n <= k
    if k == 1:
        return tuple(n * (n - 1) // 2 if n >= 2 else 0 for n in range(nmax + 1))
    prev = _t_row(k - 1, nmax)
    row, acc = [0] * (nmax + 1), 0
    for n in range(k + 1, nmax + 1):
        acc += (n - 1) * prev[n - 1]
        row[n] = acc
    return tuple(row)


def t_number(k: int, n: int) -> int:
    """``T_{k,n} = sum_{0<n_1<...<n_k<n} n_1...n_k`` via the recursion."""
    _check_kn(k, n)
    return _t_row(k, n)[n]


def t_number_oracle(k: int, n: int) -> int:
    _check_kn(k, n)
    return sum(math.prod(c) for c in combinations(range(1, n), k))


@lru_cache(maxsize=None)
def _u_row(k: int, nmax: int) -> tuple[int, ...]:
    if k == 1:
        return tuple((n - 1) * n * (n + 1) // 6 if n >= 2 else 0 for n in range(nmax + 1))
    prev = _u_row(k - 1, nmax)
    row = [0] * (nmax + 1)
    for n in range(k + 1, nmax + 1):
        # conditioning on the last chosen point n_{k-1} = i
        row[n] = sum((n - i) * prev[i] for i in range(k, n))
    return tuple(row)


def u_number(k: int, n: int) -> int:
    """``U_{k,n} = sum n_1 (n_2-n_1) ... (n-n_k)`` via the recursion.

    The recursion sums ``(n - i) U_{k,i}``, not ``(n - i) T_{k,i}``.
    """
    _check_kn(k, n)
    return _u_row(k, n)[n]


def u_number_oracle(k: int, n: int) -> int:
    _check_kn(k, n)
    total = 0
    for c in combinations(range(1, n), k):
        pts = (0, *c, n)
        total += math.prod(b - a for a, b in zip(pts, pts[1:]))
    return total


def v_polynomial(k: int) -> RationalPolynomial:
    """Closed form ``x**(2k+1) / (2k+1)!``."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return RationalPolynomial.monomial(2 * k + 1, Fraction(1, math.factorial(2 * k + 1)))


def v_recursion_step(v: RationalPolynomial) -> RationalPolynomial:
    """``x -> integral_0^x (x - t) v(t) dt`` by exact integration."""
    return v.integrate_gap(1)


def composition_count(n: int, parts: int | None = None) -> int:
    """Number of compositions of ``n`` into ``parts`` positive parts.

    With ``parts=None`` returns the total ``2**(n-1)``.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if parts is None:
        return sum(composition_count(n, p) for p in range(1, n + 1))
    if parts < 1:
        raise DomainError(f"parts must be positive, got {parts}")
    if parts > n:
        return 0
    return math.comb(n - 1, parts - 1)


def compositions(n: int, parts: int | None = None):
    """Yield compositions of ``n`` (tuples of positive ints) in lexicographic order."""
    if n == 0:
        if parts in (None, 0):
            yield ()
        return
    if parts == 0:
        return
    for first in range(1, n + 1):
        rest = None if parts is None else parts - 1
        for tail in compositions(n - first, rest):
            yield (first, *tail)


def weak_compositions(total: int, parts: int):
    """Yield tuples of ``parts`` nonnegative ints summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for tail in weak_compositions(total - first, parts - 1):
            yield (first, *tail)


def composition_count_oracle(n: int, parts: int) -> int:
    return sum(1 for _ in compositions(n, parts))


def kappa(x: float) -> SeriesValue:
    """``sum_{k>=1} x**k / k!`` (that is ``e**x - 1``) with a tail bound."""
    if x < 0:
        raise DomainError(f"kappa needs x >= 0, got {x}")
    x = float(x)
    return positive_series(x, lambda k: x / (k + 2), ratio_bound=lambda k: x / (k + 2))
