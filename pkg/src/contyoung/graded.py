"""q- and z-cardinalities of N-graded finite sets.

The q-cardinality of a graded set is ``sum q**weight``, an
:class:`~contyoung.polynomial.IntegerPolynomial`; its z-cardinality is the
same polynomial evaluated at ``q = exp(-z)``.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from itertools import permutations
from typing import Iterable

from .diagrams import enumerate_young
from .errors import DomainError, ResourceError
from .polynomial import IntegerPolynomial

__all__ = [
    "q_cardinality",
    "q_integer",
    "q_factorial",
    "inversions",
    "perm_inv_qcard",
    "young_qcard",
    "young_qcard_oracle",
    "z_cardinality",
    "power_sum_coeffs",
    "z_cardinality_taylor",
    "q_card_multiples_ratio",
]

PERM_ENUM_MAX = 8
YOUNG_ENUM_MAX = 8


def q_cardinality(weights: Iterable[int]) -> IntegerPolynomial:
    """``sum_i q**w(i)`` for a finite multiset of nonnegative integer weights."""
    hist = Counter()
    for w in weights:
        if w < 0 or int(w) != w:
            raise DomainError(f"weights must be nonnegative integers, got {w}")
        hist[int(w)] += 1
    if not hist:
        return IntegerPolynomial()
    return IntegerPolynomial(hist.get(d, 0) for d in range(max(hist) + 1))


def q_integer(n: int) -> IntegerPolynomial:
    """``[n]_q = 1 + q + ... + q**(n-1)``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return IntegerPolynomial([1] * n)


def q_factorial(n: int) -> IntegerPolynomial:
    """``[n]_q! = [1]_q [2]_q ... [n]_q``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    out = IntegerPolynomial([1])
    for k in range(2, n + 1):
        out = out * q_integer(k)
    return out


def inversions(perm) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def perm_inv_qcard(n: int) -> IntegerPolynomial:
    """``sum_{alpha in S_n} q**inv(alpha)`` by enumerating all permutations."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if n > PERM_ENUM_MAX:
        raise ResourceError(f"permutation enumeration limited to n <= {PERM_ENUM_MAX}, got {n}")
    return q_cardinality(inversions(p) for p in permutations(range(n)))


@lru_cache(maxsize=None)
def young_qcard(m: int, n: int) -> IntegerPolynomial:
    """Area generating polynomial of Young diagrams with ``n`` rows, longest row ``m``.

    Recursion on the number of rows: a new longest row of length ``m`` sits
    on top of any diagram whose longest row is at most ``m``.
    """
    if m < 1 or n < 1:
        raise DomainError(f"m and n must be >= 1, got ({m}, {n})")
    top = IntegerPolynomial.monomial(m)
    if n == 1:
        return top
    acc = IntegerPolynomial()
    for l in range(1, m + 1):
        acc = acc + young_qcard(l, n - 1)
    return acc.shift(m)


def young_qcard_oracle(m: int, n: int) -> IntegerPolynomial:
    """Histogram of areas over the explicit enumeration of ``Y(m, n)``."""
    if max(m, n) > YOUNG_ENUM_MAX:
        raise ResourceError(f"Young enumeration limited to m, n <= {YOUNG_ENUM_MAX}")
    return q_cardinality(sum(lam) for lam in enumerate_young(m, n))


def z_cardinality(P: IntegerPolynomial, z: float) -> float:
    """``P(exp(-z))``, written as ``sum_a c_a exp(-a z)``."""
    terms = [c * math.exp(-a * z) for a, c in enumerate(P.coeffs) if c]
    return math.fsum(terms)


def power_sum_coeffs(P: IntegerPolynomial, K: int) -> list[int]:
    """``s_k = sum_a c_a a**k`` for ``k = 0..K`` (``0**0 = 1``)."""
    if K < 0:
        raise DomainError(f"K must be >= 0, got {K}")
    return [sum(c * a**k for a, c in enumerate(P.coeffs)) for k in range(K + 1)]


def z_cardinality_taylor(P: IntegerPolynomial, z: float, K: int) -> tuple[float, float]:
    """Partial Taylor sum ``sum_{k<=K} s_k (-z)**k / k!`` and a bound on its remainder.

    The remainder is at most ``sum_a c_a (a|z|)**(K+1)/(K+1)! * exp(a|z|)``.
    """
    s = power_sum_coeffs(P, K)
    value = math.fsum(sk * (-z) ** k / math.factorial(k) for k, sk in enumerate(s))
    az = abs(z)
    bound = math.fsum(
        c * (a * az) ** (K + 1) / math.factorial(K + 1) * math.exp(a * az)
        for a, c in enumerate(P.coeffs)
        if c
    )
    return value, bound


def q_card_multiples_ratio(l: int, q: float) -> float:
    """``|lN|_q / |N|_q = (1 - q) / (1 - q**l)``, which equals ``1/[l]_q``."""
    if l < 1:
        raise DomainError(f"l must be >= 1, got {l}")
    if not (0 < q < 1):
        raise DomainError(f"q must lie in (0, 1), got {q}")
    return (1.0 - q) / (1.0 - q**l)
