"""Batch kernels for the Monte Carlo estimators.

Each kernel has a numba ``@njit`` implementation and a pure-numpy one.
The numba path is used when numba imports and the environment variable
``CONTYOUNG_DISABLE_NUMBA`` is unset or ``0``; :func:`use_backend` switches
at runtime (the benchmark and tests exercise both).
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAS_NUMBA = False

_DISABLED = os.environ.get("CONTYOUNG_DISABLE_NUMBA", "0").strip().lower() not in ("", "0", "false", "no")


# --- numpy -----------------------------------------------------------------


def path_areas_numpy(xs: np.ndarray, ys: np.ndarray, x: float, y: float) -> np.ndarray:
    n_rows, m = xs.shape
    if m == 0:
        return np.full(n_rows, x * y)
    widths = np.empty((n_rows, m + 1))
    widths[:, :m] = xs
    widths[:, m] = x
    levels = np.empty((n_rows, m + 2))
    levels[:, 0] = 0.0
    levels[:, 1 : m + 1] = ys
    levels[:, m + 1] = y
    return (widths * np.diff(levels, axis=1)).sum(axis=1)


def monomial_values_numpy(pts: np.ndarray, a: np.ndarray) -> np.ndarray:
    return np.prod(pts ** a[None, :], axis=1)


def moments_numpy(values: np.ndarray) -> tuple[float, float]:
    mean = values.mean()
    dev = values - mean
    return float(mean), float(dev @ dev)


# --- numba -----------------------------------------------------------------

if HAS_NUMBA:

    @numba.njit(cache=True, nogil=True)
    def path_areas_numba(xs, ys, x, y):
        n_rows, m = xs.shape
        out = np.empty(n_rows)
        for i in range(n_rows):
            total = 0.0
            prev = 0.0
            for j in range(m):
                total += xs[i, j] * (ys[i, j] - prev)
                prev = ys[i, j]
            out[i] = total + x * (y - prev)
        return out

    @numba.njit(cache=True, nogil=True)
    def monomial_values_numba(pts, a):
        n_rows, k = pts.shape
        out = np.empty(n_rows)
        for i in range(n_rows):
            v = 1.0
            for j in range(k):
                # exponents are small nonnegative ints
                for _ in range(a[j]):
                    v *= pts[i, j]
            out[i] = v
        return out

    @numba.njit(cache=True, nogil=True)
    def moments_numba(values):
        n = values.shape[0]
        s = 0.0
        for i in range(n):
            s += values[i]
        mean = s / n
        m2 = 0.0
        for i in range(n):
            d = values[i] - mean
            m2 += d * d
        return mean, m2


_BACKENDS = {
    "numpy": (path_areas_numpy, monomial_values_numpy, moments_numpy),
}
if HAS_NUMBA:
    _BACKENDS["numba"] = (path_areas_numba, monomial_values_numba, moments_numba)

_active = "numba" if HAS_NUMBA and not _DISABLED else "numpy"


def backend() -> str:
    """Name of the active backend."""
    return _active


def use_backend(name: str) -> None:
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"unknown or unavailable backend {name!r}")
    _active = name


def path_areas(xs, ys, x, y):
    """Area of each sampled diagram; rows of ``xs``/``ys`` hold the interior corners."""
    return _BACKENDS[_active][0](xs, ys, float(x), float(y))


def monomial_values(pts, a):
    return _BACKENDS[_active][1](pts, np.asarray(a, dtype=np.int64))


def moments(values) -> tuple[float, float]:
    """``(mean, sum of squared deviations)`` of a 1-D chunk."""
    mean, m2 = _BACKENDS[_active][2](values)
    return float(mean), float(m2)
