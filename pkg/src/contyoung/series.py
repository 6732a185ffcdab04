"""Summation of convergent positive-term series with explicit error bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import NumericError

UNIT_ROUNDOFF = 2.0**-53
# stop once the next term falls below this fraction of the running sum
STOP_RATIO = 2.0**-60
MAX_TERMS = 200_000


@dataclass(frozen=True)
class SeriesValue:
    """A truncated series evaluation.

    ``tail_bound`` bounds the omitted tail of the series.  ``round_bound``
    is an a priori bound on the floating point error of the retained
    partial sum; ``error_bound`` is their sum.
    """

    value: float
    terms_used: int
    tail_bound: float
    round_bound: float = 0.0

    @property
    def error_bound(self) -> float:
        return self.tail_bound + self.round_bound

    def __float__(self) -> float:
        return float(self.value)

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "tail_bound": self.tail_bound,
            "round_bound": self.round_bound,
            "terms": self.terms_used,
        }


def positive_series(
    first: float,
    ratio: Callable[[int], float],
    ratio_bound: Callable[[int], float] | None = None,
    ops_per_term: int = 3,
    first_ops: int = 0,
) -> SeriesValue:
    """Sum ``t_0 + t_1 + ...`` where ``t_{m+1} = t_m * ratio(m)`` and all ``t_m >= 0``.

    ``ratio_bound(m)`` must bound ``ratio(j)`` for every ``j >= m``; for the
    factorial-type series used here the ratios decrease, so ``ratio`` itself
    qualifies and is the default.  Summation stops when the next term is
    below ``2**-60`` times the partial sum and the ratio bound is below 1;
    the remaining tail is bounded by the geometric series
    ``next / (1 - ratio_bound)``.

    The rounding bound charges ``ops_per_term`` roundings per recurrence
    step plus ``first_ops`` for the first term and one for the final
    ``math.fsum``.
    """
    if ratio_bound is None:
        ratio_bound = ratio
    if first < 0 or not math.isfinite(first):
        raise NumericError(f"series first term must be finite and >= 0, got {first}")
    if first == 0.0:
        return SeriesValue(0.0, 1, 0.0, 0.0)
    terms = [first]
    term = first
    partial = first
    m = 0
    while True:
        nxt = term * ratio(m)
        rb = ratio_bound(m + 1)
        if nxt <= STOP_RATIO * partial and rb < 1.0:
            tail = nxt / (1.0 - rb)
            break
        m += 1
        if m >= MAX_TERMS:
            raise NumericError(f"series did not converge within {MAX_TERMS} terms")
        terms.append(nxt)
        term = nxt
        partial += nxt
        if not math.isfinite(partial):
            raise NumericError("series partial sum overflowed")
    value = math.fsum(terms)
    n = len(terms)
    rounding = (ops_per_term * (n - 1) + first_ops + 2) * UNIT_ROUNDOFF * value * 1.01
    return SeriesValue(value, n, tail, rounding)
