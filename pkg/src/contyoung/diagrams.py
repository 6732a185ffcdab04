"""Continuous diagrams as east-north directed paths.

A path with ``n`` blocks from ``(0, 0)`` to ``(x, y)`` is stored in
Cartesian coordinates: the interior corner abscissas ``xs`` and ordinates
``ys`` (``n - 1`` each), weakly increasing and bounded by ``x`` and ``y``.
Block ``i`` of the diagram is the rectangle ``[0, x_i] x [y_{i-1}, y_i]``
with ``x_n = x``, ``y_0 = 0`` and ``y_n = y``.

Coordinates may be ints, floats or Fractions; every operation keeps the
arithmetic of its inputs, so Fraction paths give exact results.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import DomainError

__all__ = [
    "DirectedPath",
    "Diamond",
    "DIAMOND",
    "path_new",
    "one_block",
    "path_points",
    "path_from_points",
    "area",
    "area_vertical",
    "stair_points",
    "dual",
    "dual_linear_matrix",
    "integer_determinant",
    "concat",
    "convex_combine",
    "leq",
    "canonicalize",
    "area_gradient",
    "area_from_coords",
    "young_path",
    "conjugate",
    "enumerate_young",
    "path_to_json",
    "path_from_json",
    "points_to_json",
]


@dataclass(frozen=True)
class DirectedPath:
    """East-north directed path in Cartesian coordinates (validated by :func:`path_new`)."""

    x: object
    y: object
    xs: tuple
    ys: tuple

    @property
    def n(self) -> int:
        return len(self.xs) + 1

    @property
    def widths(self) -> tuple:
        """Block widths ``(x_1, ..., x_n)``."""
        return (*self.xs, self.x)

    @property
    def levels(self) -> tuple:
        """Block boundaries ``(y_0, ..., y_n)``."""
        return (0, *self.ys, self.y)


class Diamond:
    """The length-zero path; unit of concatenation and minimum of the order."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "DIAMOND"


DIAMOND = Diamond()
AnyPath = Union[DirectedPath, Diamond]


def _check_number(name, v):
    if isinstance(v, bool) or not isinstance(v, (int, float, Fraction)):
        raise DomainError(f"{name} must be a real number, got {v!r}")
    if v != v:
        raise DomainError(f"{name} is NaN")


def _check_chain(name: str, coords: Sequence, bound) -> None:
    prev = 0
    for i, c in enumerate(coords, start=1):
        _check_number(f"{name}_{i}", c)
        if c < prev:
            raise DomainError(f"{name}_{i} = {c} is below the previous coordinate {prev}")
        prev = c
    if prev > bound:
        raise DomainError(f"{name}_{len(coords)} = {prev} exceeds the bound {bound}")


def path_new(x, y, xs: Sequence = (), ys: Sequence = ()) -> DirectedPath:
    """Validate coordinates and build a :class:`DirectedPath`."""
    _check_number("x", x)
    _check_number("y", y)
    if x < 0 or y < 0:
        raise DomainError(f"width and height must be >= 0, got ({x}, {y})")
    xs, ys = tuple(xs), tuple(ys)
    if len(xs) != len(ys):
        raise DomainError(f"xs and ys must have equal length, got {len(xs)} and {len(ys)}")
    _check_chain("x", xs, x)
    _check_chain("y", ys, y)
    return DirectedPath(x, y, xs, ys)


def one_block(x, y) -> DirectedPath:
    return path_new(x, y)


def path_points(p: DirectedPath) -> list[tuple]:
    """The ``2n + 1`` corner points ``p_0 .. p_{2n}``."""
    pts = [(0, 0)]
    lv, wd = p.levels, p.widths
    for i in range(1, p.n + 1):
        pts.append((wd[i - 1], lv[i - 1]))
        pts.append((wd[i - 1], lv[i]))
    return pts


def path_from_points(pts: Sequence[Sequence]) -> DirectedPath:
    """Inverse of :func:`path_points`; checks alternating east/north steps."""
    pts = [tuple(pt) for pt in pts]
    if len(pts) < 3 or len(pts) % 2 == 0:
        raise DomainError(f"need an odd number >= 3 of points, got {len(pts)}")
    if pts[0] != (0, 0):
        raise DomainError(f"path must start at the origin, got {pts[0]}")
    for k in range(1, len(pts)):
        (ax, ay), (bx, by) = pts[k - 1], pts[k]
        east = k % 2 == 1
        if east and (by != ay or bx < ax):
            raise DomainError(f"step {k} from {pts[k - 1]} to {pts[k]} is not an east step")
        if not east and (bx != ax or by < ay):
            raise DomainError(f"step {k} from {pts[k - 1]} to {pts[k]} is not a north step")
    n = (len(pts) - 1) // 2
    xs = tuple(pts[2 * i - 1][0] for i in range(1, n))
    ys = tuple(pts[2 * i][1] for i in range(1, n))
    x, y = pts[-1]
    return path_new(x, y, xs, ys)


def area_from_coords(xs: Sequence, ys: Sequence, x, y):
    """Unvalidated horizontal-tessellation area ``sum x_i (y_i - y_{i-1})``."""
    total = 0
    prev = 0
    for xi, yi in zip(xs, ys):
        total += xi * (yi - prev)
        prev = yi
    return total + x * (y - prev)


def area(p: AnyPath):
    """Area of the diagram from the horizontal tessellation."""
    if p is DIAMOND:
        return 0
    return area_from_coords(p.xs, p.ys, p.x, p.y)


def area_vertical(p: DirectedPath):
    """Area from the vertical tessellation ``sum (x_i - x_{i-1})(y - y_{i-1})``."""
    wd = (0, *p.widths)
    lv = p.levels
    return sum((wd[i] - wd[i - 1]) * (p.y - lv[i - 1]) for i in range(1, p.n + 1))


def stair_points(p: DirectedPath) -> list[tuple]:
    """East-south stair form: each point ``(s, t)`` becomes ``(s, y - t)``."""
    return [(s, p.y - t) for s, t in path_points(p)]


def dual(p: AnyPath) -> AnyPath:
    """Dual diagram: ``x_i' = y - y_{n-i}``, ``y_i' = x - x_{n-i}``, in ``P_n(y, x)``."""
    if p is DIAMOND:
        return DIAMOND
    xs = tuple(p.y - yi for yi in reversed(p.ys))
    ys = tuple(p.x - xi for xi in reversed(p.xs))
    return DirectedPath(p.y, p.x, xs, ys)


def dual_linear_matrix(n: int) -> list[list[int]]:
    """Integer matrix of the linear part of :func:`dual` on ``(xs; ys)``."""
    m = n - 1
    mat = [[0] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        # new x_i depends on -y_{m-1-i}; new y_i on -x_{m-1-i}
        mat[i][m + (m - 1 - i)] = -1
        mat[m + i][m - 1 - i] = -1
    return mat


def integer_determinant(mat: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def concat(p: AnyPath, q: AnyPath) -> AnyPath:
    """Join ``q`` to the end of ``p``; the result lies in ``P_{n+m}(x+w, y+z)``."""
    if p is DIAMOND:
        return q
    if q is DIAMOND:
        return p
    xs = (*p.xs, p.x, *(p.x + w for w in q.xs))
    ys = (*p.ys, p.y, *(p.y + z for z in q.ys))
    return DirectedPath(p.x + q.x, p.y + q.y, xs, ys)


def convex_combine(p: DirectedPath, p2: DirectedPath, t) -> DirectedPath:
    """Coordinate-wise ``t p + (1 - t) p2`` (widths and heights included)."""
    if p.n != p2.n:
        raise DomainError(f"block counts differ: {p.n} and {p2.n}")
    if not (0 <= t <= 1):
        raise DomainError(f"t must lie in [0, 1], got {t}")
    s = 1 - t

    def mix(a, b):
        return t * a + s * b

    return DirectedPath(
        mix(p.x, p2.x),
        mix(p.y, p2.y),
        tuple(map(mix, p.xs, p2.xs)),
        tuple(map(mix, p.ys, p2.ys)),
    )


_LINEAR_SCAN_MAX = 8


def leq(p: AnyPath, q: AnyPath) -> bool:
    """Partial order: ``p`` shifted up to ``q``'s top-left corner fits inside ``q``.

    Checks that every lower-right block corner ``(x_i, y_{i-1} + z - y)`` of
    the shifted ``p`` lies in some block ``j`` of ``q``.
    """
    if p is DIAMOND:
        return True
    if q is DIAMOND:
        return False
    shift = q.y - p.y
    if shift < 0:
        return False
    qlv, qwd = q.levels, q.widths
    lower = qlv[:-1]  # z_0 .. z_{m-1}
    m = q.n
    plv = p.levels
    for i, xi in enumerate(p.widths):
        t = plv[i] + shift
        # widths grow with height, so the highest block starting at or
        # below t is the best candidate
        if m <= _LINEAR_SCAN_MAX:
            j = 0
            while j < m and lower[j] <= t:
                j += 1
        else:
            j = bisect.bisect_right(lower, t)
        if j == 0 or t > qlv[j] or xi > qwd[j - 1]:
            return False
    return True


def canonicalize(p: DirectedPath) -> DirectedPath:
    """Merge empty steps so region-equal paths get equal coordinates.

    Drops interior blocks of zero height and merges neighbouring blocks of
    equal width.  The region, and hence the area, is unchanged.
    """
    blocks = [(w, top) for w, top in zip(p.widths, p.levels[1:])]
    changed = True
    while changed and len(blocks) > 1:
        changed = False
        out = []
        bottom = 0
        for idx, (w, top) in enumerate(blocks):
            last = idx == len(blocks) - 1
            if not last and top == bottom:
                changed = True
                continue
            if out and out[-1][0] == w:
                out[-1] = (w, top)
                changed = True
            else:
                out.append((w, top))
            bottom = top
        blocks = out
    xs = tuple(w for w, _ in blocks[:-1])
    ys = tuple(top for _, top in blocks[:-1])
    return DirectedPath(p.x, p.y, xs, ys)


def area_gradient(p: DirectedPath) -> list:
    """Partial derivatives of area in ``(x_1..x_{n-1}; y_1..y_{n-1})``."""
    if p.n < 2:
        return []
    lv, wd = p.levels, p.widths
    m = p.n - 1
    gx = [lv[i + 1] - lv[i] for i in range(m)]
    gy = [wd[i] - wd[i + 1] for i in range(m)]
    return gx + gy


def _check_partition(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if not lam:
        raise DomainError("partition must be nonempty")
    for a, b in zip(lam, lam[1:]):
        if b > a:
            raise DomainError(f"partition must be nonincreasing, got {lam}")
    if lam[-1] <= 0 or any(int(v) != v for v in lam):
        raise DomainError(f"partition parts must be positive integers, got {lam}")
    return tuple(int(v) for v in lam)


def young_path(lam: Sequence[int]) -> DirectedPath:
    """Directed path bounding the Young diagram of ``lam`` (largest part first).

    Rows are stacked with the shortest at the bottom and equal rows merged,
    so the path has one block per distinct part.
    """
    lam = _check_partition(lam)
    blocks: list[list[int]] = []
    for part in reversed(lam):
        if blocks and blocks[-1][0] == part:
            blocks[-1][1] += 1
        else:
            blocks.append([part, 1])
    widths = [b[0] for b in blocks]
    tops, acc = [], 0
    for _, count in blocks:
        acc += count
        tops.append(acc)
    return DirectedPath(widths[-1], tops[-1], tuple(widths[:-1]), tuple(tops[:-1]))


def conjugate(lam: Sequence[int]) -> tuple[int, ...]:
    lam = _check_partition(lam)
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


def enumerate_young(m: int, n: int) -> list[tuple[int, ...]]:
    """Partitions with exactly ``n`` parts whose largest part is ``m``."""
    if m < 1 or n < 1:
        raise DomainError(f"m and n must be >= 1, got ({m}, {n})")
    out = []

    def extend(prefix, cap, remaining):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for v in range(cap, 0, -1):
            prefix.append(v)
            extend(prefix, v, remaining - 1)
            prefix.pop()

    extend([m], m, n - 1)
    return sorted(out)


def _num_json(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def _num_parse(v):
    if isinstance(v, str):
        return Fraction(v)
    return v


def path_to_json(p: DirectedPath) -> dict:
    return {
        "n": p.n,
        "x": _num_json(p.x),
        "y": _num_json(p.y),
        "xs": [_num_json(v) for v in p.xs],
        "ys": [_num_json(v) for v in p.ys],
    }


def path_from_json(obj: dict) -> DirectedPath:
    p = path_new(
        _num_parse(obj["x"]),
        _num_parse(obj["y"]),
        [_num_parse(v) for v in obj.get("xs", [])],
        [_num_parse(v) for v in obj.get("ys", [])],
    )
    if "n" in obj and obj["n"] != p.n:
        raise DomainError(f"declared n={obj['n']} does not match {p.n} blocks")
    return p


def points_to_json(pts: Sequence[Sequence]) -> list[list]:
    return [[_num_json(a), _num_json(b)] for a, b in pts]
