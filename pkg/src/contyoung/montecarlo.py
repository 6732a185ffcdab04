"""Monte Carlo oracles for the analytic volume and integral formulas.

Uniform points of the simplex ``0 <= x_1 <= ... <= x_k <= x`` are drawn as
sorted independent uniforms (order statistics), and a uniform diagram with
``n`` blocks is an independent pair of such points for the ``x`` and ``y``
coordinates.

Random numbers come from numpy's PCG64 seeded through ``SeedSequence``
with ``spawn_key = (stream, substream)``.  An estimate over ``S`` streams
splits the sample count deterministically, draws each stream in fixed
chunks of :data:`CHUNK` samples, and merges per-stream moments in
ascending stream order, so results do not depend on the worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import _kernels
from .diagrams import DirectedPath, path_new
from .errors import DomainError
from .quadrature import adaptive_simpson
from .volume import vol_dn

__all__ = [
    "GENERATOR",
    "CHUNK",
    "MIN_SAMPLES",
    "Estimate",
    "RngStream",
    "sample_simplex",
    "sample_path",
    "mc_monomial_integral",
    "mc_vol_z",
    "mc_vol_hat",
    "mc_mean_area",
    "vhat_reference",
]

GENERATOR = "numpy.random.PCG64 via SeedSequence(seed, spawn_key=(stream, substream))"
CHUNK = 1 << 16
MIN_SAMPLES = 1000
_U64 = 1 << 64


@dataclass(frozen=True)
class RngStream:
    """Reproducible random stream identified by ``(seed, stream)``."""

    seed: int
    stream: int = 0

    def __post_init__(self):
        if not (0 <= self.seed < _U64):
            raise DomainError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.stream < 0:
            raise DomainError(f"stream index must be >= 0, got {self.stream}")

    def generator(self, substream: int | None = None) -> np.random.Generator:
        key = (self.stream,) if substream is None else (self.stream, substream)
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(self.seed, spawn_key=key)))


@dataclass(frozen=True)
class Estimate:
    mean: float
    std_error: float
    samples: int
    seed: int

    def to_json(self) -> dict:
        return {"mean": self.mean, "std_error": self.std_error, "samples": self.samples, "seed": self.seed}

    def z_score(self, reference: float) -> float:
        """``|mean - reference| / std_error`` (0 when both coincide exactly)."""
        diff = abs(self.mean - reference)
        if diff == 0.0:
            return 0.0
        return diff / self.std_error if self.std_error > 0 else math.inf


def _as_rng(rng) -> RngStream:
    if isinstance(rng, RngStream):
        return rng
    if isinstance(rng, (int, np.integer)):
        return RngStream(int(rng))
    raise DomainError(f"expected an RngStream or integer seed, got {rng!r}")


def _generator(rng) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return _as_rng(rng).generator()


def _sorted_uniforms(gen: np.random.Generator, size: int, k: int, scale: float) -> np.ndarray:
    u = gen.random((size, k))
    u.sort(axis=1)
    u *= scale
    return u


def sample_simplex(k: int, x: float, rng, size: int | None = None):
    """Uniform point(s) of the k-simplex of edge ``x``.

    Returns a tuple for ``size=None``, otherwise an array of shape ``(size, k)``.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if not x > 0:
        raise DomainError(f"x must be > 0, got {x}")
    gen = _generator(rng)
    pts = _sorted_uniforms(gen, 1 if size is None else size, k, float(x))
    return tuple(pts[0].tolist()) if size is None else pts


def _path_arrays(gen, size, n, x, y):
    m = n - 1
    return _sorted_uniforms(gen, size, m, x), _sorted_uniforms(gen, size, m, y)


def sample_path(n: int, x: float, y: float, rng) -> DirectedPath:
    """Uniform random diagram with ``n`` blocks, width ``x`` and height ``y``."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not (x > 0 and y > 0):
        raise DomainError("x and y must be > 0")
    gen = _generator(rng)
    xs, ys = _path_arrays(gen, 1, n, float(x), float(y))
    return path_new(float(x), float(y), xs[0].tolist(), ys[0].tolist())


def _merge(a: tuple[int, float, float], b: tuple[int, float, float]) -> tuple[int, float, float]:
    # Chan et al. pairwise update of (count, mean, M2)
    na, ma, sa = a
    nb, mb, sb = b
    if na == 0:
        return b
    n = na + nb
    delta = mb - ma
    return n, ma + delta * nb / n, sa + sb + delta * delta * na * nb / n


def _stream_moments(sampler, rng: RngStream, index: int, count: int) -> tuple[int, float, float]:
    gen = rng.generator(index)
    acc = (0, 0.0, 0.0)
    remaining = count
    while remaining > 0:
        size = min(CHUNK, remaining)
        vals = np.ascontiguousarray(sampler(gen, size), dtype=np.float64)
        mean, m2 = _kernels.moments(vals)
        acc = _merge(acc, (size, mean, m2))
        remaining -= size
    return acc


def _estimate(
    sampler: Callable[[np.random.Generator, int], np.ndarray],
    n_samples: int,
    rng,
    scale: float,
    streams: int,
    workers: int,
) -> Estimate:
    rng = _as_rng(rng)
    if n_samples < MIN_SAMPLES:
        raise DomainError(f"need at least {MIN_SAMPLES} samples, got {n_samples}")
    if streams < 1 or workers < 1:
        raise DomainError("streams and workers must be >= 1")
    base, extra = divmod(n_samples, streams)
    counts = [base + (1 if s < extra else 0) for s in range(streams)]
    jobs = [(s, c) for s, c in enumerate(counts) if c > 0]
    if workers == 1 or len(jobs) == 1:
        parts = [_stream_moments(sampler, rng, s, c) for s, c in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda job: _stream_moments(sampler, rng, *job), jobs))
    total = (0, 0.0, 0.0)
    for part in parts:
        total = _merge(total, part)
    n, mean, m2 = total
    sd = math.sqrt(m2 / (n - 1)) if n > 1 else 0.0
    return Estimate(mean * scale, sd / math.sqrt(n) * scale, n, rng.seed)


def mc_monomial_integral(
    a: Sequence[int], x: float, n_samples: int, rng, streams: int = 1, workers: int = 1
) -> Estimate:
    """Estimate ``int_{simplex_k(x)} x_1**a_1 ... x_k**a_k``."""
    a = np.asarray(a, dtype=np.int64)
    k = a.shape[0]
    if k < 1 or (a < 0).any():
        raise DomainError(f"invalid multi-index {a.tolist()}")
    if not x > 0:
        raise DomainError(f"x must be > 0, got {x}")
    x = float(x)

    def sampler(gen, size):
        return _kernels.monomial_values(_sorted_uniforms(gen, size, k, x), a)

    vol = x**k / math.factorial(k)
    return _estimate(sampler, n_samples, rng, vol, streams, workers)


def _check_nxy(n, x, y):
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not (x > 0 and y > 0):
        raise DomainError("x and y must be > 0")
    return float(x), float(y)


def _area_sampler(n, x, y):
    def sampler(gen, size):
        xs, ys = _path_arrays(gen, size, n, x, y)
        return _kernels.path_areas(xs, ys, x, y)

    return sampler


def mc_vol_z(
    n: int, x: float, y: float, z: float, n_samples: int, rng, streams: int = 1, workers: int = 1
) -> Estimate:
    """Estimate the z-volume ``vol_dn(n, x, y) * E[exp(-z * area)]``."""
    x, y = _check_nxy(n, x, y)
    z = float(z)
    if n == 1:
        # the space is a single diagram of area xy
        if n_samples < MIN_SAMPLES:
            raise DomainError(f"need at least {MIN_SAMPLES} samples, got {n_samples}")
        return Estimate(math.exp(-(x * y) * z), 0.0, n_samples, _as_rng(rng).seed)
    areas = _area_sampler(n, x, y)

    def sampler(gen, size):
        return np.exp(-z * areas(gen, size))

    return _estimate(sampler, n_samples, rng, vol_dn(n, x, y), streams, workers)


def mc_vol_hat(
    n: int, x: float, y: float, w: float, n_samples: int, rng, streams: int = 1, workers: int = 1
) -> Estimate:
    """Estimate the volume of the diagrams in ``D_n(x, y)`` with area at most ``w``."""
    x, y = _check_nxy(n, x, y)
    w = float(w)
    if not (0 < w <= x * y):
        raise DomainError(f"w must lie in (0, xy] = (0, {x * y}], got {w}")
    areas = _area_sampler(n, x, y)
    everything = w >= x * y

    def sampler(gen, size):
        a = areas(gen, size)
        if everything:
            return np.ones_like(a)
        return (a <= w).astype(np.float64)

    return _estimate(sampler, n_samples, rng, vol_dn(n, x, y), streams, workers)


def mc_mean_area(
    n: int, x: float, y: float, n_samples: int, rng, streams: int = 1, workers: int = 1
) -> Estimate:
    """Sample mean of the area of a uniform diagram in ``D_n(x, y)``."""
    x, y = _check_nxy(n, x, y)
    return _estimate(_area_sampler(n, x, y), n_samples, rng, 1.0, streams, workers)


def vhat_reference(n: int, x: float, y: float, w: float) -> float | None:
    """Deterministic value of the truncated volume where one is available.

    Exact for ``n = 1`` and for ``w >= xy``; for ``n = 2`` the probability
    is integrated over ``y_1`` with the admissible ``x_1``-length computed
    exactly, so only a 1-D quadrature remains.  ``None`` otherwise.
    """
    x, y = _check_nxy(n, x, y)
    if w >= x * y:
        return vol_dn(n, x, y)
    if n == 1:
        return 0.0
    if n != 2:
        return None
    # x_1 y_1 + x (y - y_1) <= w  <=>  x_1 <= x - (xy - w) / y_1
    y_lo = y - w / x

    def length(y1):
        return max(0.0, x - (x * y - w) / y1) if y1 > 0 else 0.0

    prob, _ = adaptive_simpson(length, y_lo, y, tol=1e-13)
    return prob  # vol_dn(2, x, y) = xy cancels the 1/(xy) of the uniform law
