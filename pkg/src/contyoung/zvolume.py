"""z-volumes ``int exp(-z * area)`` of spaces of continuous diagrams.

Everything rests on the exact rationals

    d_{n,l} = sum over weak compositions (l_1..l_n) of l of 1 / prod_i (|l|_i + i),

tabulated by their recursion in :class:`DCoeffTable`.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .errors import DomainError, RangeError, ResourceError
from .series import UNIT_ROUNDOFF, SeriesValue
from .simplex import weak_compositions

__all__ = [
    "DCoeffTable",
    "d_coeff",
    "d_coeff_direct",
    "d_bound",
    "vol_z_dn",
    "vol_z_d",
    "vol_z_d_coefficients",
    "mean_area",
    "mean_area_coeff",
]

OVERFLOW_GUARD = 700.0
DIRECT_GUARD = 10**7
MAX_TERMS = 5000


class DCoeffTable:
    """Memoized ``d_{n,l}``; rows grow on demand under a lock.

    ``d_{1,l} = 1/(l+1)`` and ``d_{n+1,l} = (d_{n,0} + ... + d_{n,l}) / (n+l+1)``.
    """

    def __init__(self):
        self._rows: list[list[Fraction]] = []
        self._width = 0
        self._lock = threading.Lock()

    def _grow(self, n: int, l: int) -> None:
        width = max(l + 1, self._width, 8)
        if width > self._width:
            # recompute every row to the new width
            rows = []
            for k in range(len(self._rows) or 1):
                rows.append(self._build_row(rows[-1] if rows else None, k + 1, width))
            self._rows, self._width = rows, width
        while len(self._rows) < n:
            self._rows.append(self._build_row(self._rows[-1], len(self._rows) + 1, self._width))

    @staticmethod
    def _build_row(prev, n: int, width: int) -> list[Fraction]:
        if prev is None:
            return [Fraction(1, l + 1) for l in range(width)]
        row, acc = [], Fraction(0)
        for l in range(width):
            acc += prev[l]
            row.append(acc / (n + l))
        return row

    def get(self, n: int, l: int) -> Fraction:
        if n < 1 or l < 0:
            raise DomainError(f"d_coeff needs n >= 1 and l >= 0, got ({n}, {l})")
        rows, width = self._rows, self._width
        if n <= len(rows) and l < width:
            return rows[n - 1][l]
        with self._lock:
            if not (n <= len(self._rows) and l < self._width):
                self._grow(n, l)
            return self._rows[n - 1][l]


_TABLE = DCoeffTable()


def d_coeff(n: int, l: int) -> Fraction:
    """``d_{n,l}`` from the recursion (shared table)."""
    return _TABLE.get(n, l)


def d_bound(n: int, l: int) -> Fraction:
    """Upper bound ``C(l+n-1, n-1) / n!`` on ``d_{n,l}``."""
    return Fraction(math.comb(l + n - 1, n - 1), math.factorial(n))


def d_coeff_direct(n: int, l: int) -> Fraction:
    """``d_{n,l}`` summed directly over the weak compositions of ``l``."""
    if n < 1 or l < 0:
        raise DomainError(f"d_coeff needs n >= 1 and l >= 0, got ({n}, {l})")
    if n * math.comb(l + n - 1, n - 1) > DIRECT_GUARD:
        raise ResourceError(f"direct sum for d_({n},{l}) exceeds the enumeration guard")
    total = Fraction(0)
    for comp in weak_compositions(l, n):
        den, s = 1, 0
        for i, li in enumerate(comp, start=1):
            s += li
            den *= s + i
        total += Fraction(1, den)
    return total


def vol_z_dn(n: int, x: float, y: float, z: float) -> SeriesValue:
    """z-volume of the diagrams with ``n`` blocks, width ``x`` and height ``y``.

    ``exp(-xyz)`` for ``n = 1``; otherwise
    ``(xy)**(n-1) sum_l (l+n) d_{n,l} / (l+n-1)! * (-xyz)**l``.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if x < 0 or y < 0:
        raise DomainError("x and y must be >= 0")
    x, y, z = float(x), float(y), float(z)
    u = x * y * z
    if abs(u) > OVERFLOW_GUARD:
        raise RangeError(f"|xyz| = {abs(u)} exceeds the overflow guard {OVERFLOW_GUARD}")
    if n == 1:
        v = math.exp(-(x * y) * z)
        return SeriesValue(v, 1, 0.0, 2 * UNIT_ROUNDOFF * v)

    prefactor = x ** (n - 1) * y ** (n - 1)
    fact = math.factorial(n - 1)
    terms = [float(n * d_coeff(n, 0) / fact)]
    tail = 0.0
    if z != 0.0:
        au = abs(u)
        bound_coeff = Fraction(1, math.factorial(n - 1) * math.factorial(n))
        l = 0
        while True:
            l += 1
            if l > MAX_TERMS:
                raise RangeError("vol_z_dn series did not converge")
            c = (l + n) * d_coeff(n, l) / math.factorial(l + n - 1)
            terms.append(float(c) * (-u) ** l)
            # |term_{l+1}| <= (l+n+1) / ((n-1)! n! (l+1)!) |u|**(l+1)
            nxt = float((l + n + 1) * bound_coeff / math.factorial(l + 1)) * au ** (l + 1)
            r = au * (l + n + 2) / ((l + n + 1) * (l + 2))
            if r < 1.0:
                tail = nxt / (1.0 - r)
                if tail <= UNIT_ROUNDOFF * abs(math.fsum(terms)):
                    break
    s = math.fsum(terms)
    abs_sum = math.fsum(abs(t) for t in terms)
    rounding = (len(terms) + 3) * UNIT_ROUNDOFF * abs_sum * prefactor
    return SeriesValue(prefactor * s, len(terms), prefactor * tail, rounding)


def vol_z_d(x: float, y: float, z: float) -> SeriesValue:
    """z-volume of all diagrams of width ``x`` and height ``y``.

    ``exp(-xyz) + sum_{k>=1} (k+1) (sum_{l<k} d_{k-l+1,l} (-z)**l) (xy)**k / k!``.
    """
    if x <= 0 or y <= 0:
        raise DomainError("vol_z_d needs x > 0 and y > 0")
    if z < 0:
        raise DomainError(f"vol_z_d needs z >= 0, got {z}")
    x, y, z = float(x), float(y), float(z)
    w = x * y
    if w * z > OVERFLOW_GUARD:
        raise RangeError(f"xyz = {w * z} exceeds the overflow guard {OVERFLOW_GUARD}")
    terms = [math.exp(-w * z)]
    v = w * (1.0 + z)
    k = 0
    tail = 0.0
    while True:
        k += 1
        if k > MAX_TERMS:
            raise RangeError("vol_z_d series did not converge")
        scale = w**k
        for l in range(k):
            c = (k + 1) * d_coeff(k - l + 1, l) / math.factorial(k)
            terms.append(float(c) * scale * (-z) ** l)
        # d_{k-l+1,l} <= C(k,l), so the k-th group is at most (k+1) v**k / k!
        nxt = (k + 2) * v ** (k + 1) / math.factorial(k + 1)
        r = v * (k + 3) / ((k + 2) ** 2)
        if r < 1.0:
            tail = nxt / (1.0 - r)
            if tail <= UNIT_ROUNDOFF * abs(math.fsum(terms)):
                break
    s = math.fsum(terms)
    abs_sum = math.fsum(abs(t) for t in terms)
    return SeriesValue(s, k, tail, (k + 4) * UNIT_ROUNDOFF * abs_sum)


def vol_z_d_coefficients(K: int) -> dict[tuple[int, int], Fraction]:
    """Exact coefficient of ``(xy)**k (-z)**l`` for ``1 <= k <= K`` (excluding ``exp(-xyz)``)."""
    return {
        (k, l): (k + 1) * d_coeff(k - l + 1, l) / math.factorial(k)
        for k in range(1, K + 1)
        for l in range(k)
    }


def mean_area_coeff(n: int) -> Fraction:
    """Mean area over ``D_n(x, y)`` divided by ``xy``, from the first-order z-coefficient."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n == 1:
        return Fraction(1)
    first_moment = (n + 1) * d_coeff(n, 1) / math.factorial(n)
    return first_moment * math.factorial(n - 1) ** 2


def mean_area(n: int, x, y):
    """Mean area ``xy (n+1) / (2n)`` of a uniform diagram with ``n`` blocks."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    c = Fraction(n + 1, 2 * n)
    if isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction)):
        return c * x * y
    return float(c) * float(x) * float(y)

