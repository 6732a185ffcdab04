"""Adaptive Simpson quadrature with an explicit failure mode."""

from __future__ import annotations

import math
from typing import Callable

from .errors import NumericError

DEFAULT_TOL = 1e-11
MAX_DEPTH = 50
MAX_INTERVALS = 200_000


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = DEFAULT_TOL,
    rel_tol: float = 0.0,
    max_intervals: int = MAX_INTERVALS,
) -> tuple[float, float]:
    """Integrate ``f`` over ``[a, b]``; return ``(value, error_estimate)``.

    A panel is accepted when ``|S2 - S1| <= 15 * local_tol``, where the
    local tolerance is its share of ``max(tol, rel_tol * |I|)`` and ``I`` is
    a coarse estimate of the whole integral.  The Richardson-corrected
    panel value ``S2 + (S2 - S1)/15`` is summed.

    Raises :class:`NumericError` with the achieved error when the panel
    budget is exhausted.
    """
    if a == b:
        return 0.0, 0.0
    fa, fb, fm = f(a), f(b), f(0.5 * (a + b))
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    target = max(tol, rel_tol * abs(whole))

    values: list[float] = []
    errors: list[float] = []
    # explicit stack: (a, b, fa, fm, fb, whole, tol, depth)
    stack = [(a, b, fa, fm, fb, whole, target, 0)]
    panels = 0
    worst_failed = 0.0
    while stack:
        lo, hi, flo, fmid, fhi, s, eps, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        s2 = left + right
        diff = s2 - s
        panels += 1
        if abs(diff) <= 15.0 * eps or depth >= MAX_DEPTH or panels >= max_intervals:
            if abs(diff) > 15.0 * eps:
                worst_failed = max(worst_failed, abs(diff) / 15.0)
            values.append(s2 + diff / 15.0)
            errors.append(abs(diff) / 15.0)
            continue
        stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * eps, depth + 1))
        stack.append((lo, mid, flo, flm, fmid, left, 0.5 * eps, depth + 1))
    value = math.fsum(values)
    err = math.fsum(errors)
    if worst_failed:
        raise NumericError(
            f"adaptive Simpson did not converge on [{a}, {b}]: "
            f"achieved error {err:.3e}, requested {target:.3e}"
        )
    return value, err


def integrate(f, a, b, tol=DEFAULT_TOL, rel_tol=0.0) -> float:
    """Convenience wrapper returning only the value."""
    return adaptive_simpson(f, a, b, tol=tol, rel_tol=rel_tol)[0]


def integrate_2d(f, ax, bx, ay, by, tol=DEFAULT_TOL, rel_tol=0.0) -> float:
    """Iterated integral ``int_ax^bx int_ay^by f(s, t) dt ds``."""

    def inner(s):
        return adaptive_simpson(lambda t: f(s, t), ay, by, tol=tol / 4, rel_tol=rel_tol / 4)[0]

    return adaptive_simpson(inner, ax, bx, tol=tol, rel_tol=rel_tol)[0]
