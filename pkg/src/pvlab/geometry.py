"""Planar convex hull and diameter (rotating calipers) for prefix walks.

Prefix walks accumulate rounding drift, so the same lattice point can show up
as a cloud of coordinates a few ulps apart.  Hull and calipers therefore run
on coordinates snapped to a dyadic grid and held as Python integers, which
makes every orientation test exact.  Distances are reported from the original
float coordinates.
"""
from __future__ import annotations

import math

import numpy as np

_MAX_BITS = 50
_MAX_RESOLUTION_BITS = 40


def _snap(xy: np.ndarray) -> np.ndarray:
    m = float(np.abs(xy).max()) if xy.size else 0.0
    k = min(_MAX_RESOLUTION_BITS, _MAX_BITS - math.ceil(math.log2(m + 1.0)))
    return np.rint(np.ldexp(xy, k)).astype(np.int64)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


_DIRECTIONS = 16
_UNIT = np.stack(
    [np.cos(2 * np.pi * np.arange(_DIRECTIONS) / _DIRECTIONS),
     np.sin(2 * np.pi * np.arange(_DIRECTIONS) / _DIRECTIONS)]
)


def _prefilter(xy: np.ndarray) -> np.ndarray:
    """Indices of points that can still be hull vertices (Akl-Toussaint).

    The extremes in sixteen directions span a convex polygon; points well
    inside it are dropped, anything within a relative 1e-9 of its boundary is
    kept.
    """
    extremes = np.argmax(xy @ _UNIT, axis=0)
    poly = [int(i) for k, i in enumerate(extremes) if k == 0 or i != extremes[k - 1]]
    if len(poly) > 1 and poly[0] == poly[-1]:
        poly.pop()
    if len(poly) < 3:
        return np.arange(len(xy))
    a = xy[poly]
    b = np.roll(a, -1, axis=0)
    scale = float(np.abs(xy).max()) + 1.0
    cr = (b[:, 0] - a[:, 0])[None, :] * (xy[:, 1:2] - a[None, :, 1]) - (b[:, 1] - a[:, 1])[None, :] * (
        xy[:, 0:1] - a[None, :, 0]
    )
    inside = (cr > 1e-9 * scale * scale).all(axis=1)
    inside[poly] = False
    return np.flatnonzero(~inside)


def _hull_int(pts: list[tuple[int, int]]) -> list[int]:
    """Monotone chain on distinct, lexicographically sorted integer points."""
    n = len(pts)
    if n < 3:
        return list(range(n))

    def chain(seq):
        out: list[int] = []
        for k in seq:
            while len(out) >= 2 and _cross(pts[out[-2]], pts[out[-1]], pts[k]) <= 0:
                out.pop()
            out.append(k)
        return out

    lower = chain(range(n))
    upper = chain(range(n - 1, -1, -1))
    return lower[:-1] + upper[:-1]


def _snapped_hull(xy: np.ndarray) -> tuple[np.ndarray, list[tuple[int, int]]]:
    """Hull vertex indices (counter-clockwise) and their snapped coordinates."""
    grid = _snap(xy)
    cand = _prefilter(grid.astype(float))
    order = cand[np.lexsort((grid[cand, 1], grid[cand, 0]))]
    pts: list[tuple[int, int]] = []
    idx: list[int] = []
    for i, (gx, gy) in zip(order.tolist(), grid[order].tolist()):
        if not pts or pts[-1] != (gx, gy):
            pts.append((gx, gy))
            idx.append(i)
    hull = _hull_int(pts)
    return np.array([idx[k] for k in hull], dtype=np.intp), [pts[k] for k in hull]


def convex_hull(xy: np.ndarray) -> np.ndarray:
    """Indices of the hull vertices of an (n, 2) array, counter-clockwise.

    Collinear boundary points and duplicates (after snapping) are dropped.
    """
    xy = np.asarray(xy, dtype=float)
    if len(xy) == 0:
        return np.zeros(0, dtype=np.intp)
    return _snapped_hull(xy)[0]


def diameter(xy: np.ndarray) -> tuple[float, int, int]:
    """Largest pairwise distance and a pair of indices attaining it.

    Hull plus rotating calipers, O(n log n) overall.
    """
    xy = np.asarray(xy, dtype=float)
    if len(xy) == 0:
        raise ValueError("empty point set")
    hull, P = _snapped_hull(xy)
    h = len(hull)
    if h == 1:
        return 0.0, int(hull[0]), int(hull[0])

    def area(i, j, k):
        return abs(_cross(P[i], P[j], P[k]))

    def d2(i, j):
        dx, dy = P[i][0] - P[j][0], P[i][1] - P[j][1]
        return dx * dx + dy * dy

    if h <= 3:
        pairs = [(a, b) for a in range(h) for b in range(a + 1, h)]
    else:
        pairs = []
        j = 1
        for i in range(h):
            i1 = (i + 1) % h
            while area(i, i1, (j + 1) % h) > area(i, i1, j):
                j = (j + 1) % h
            pairs += [(i, j), (i1, j)]
            if area(i, i1, (j + 1) % h) == area(i, i1, j):
                # parallel edges: the next vertex is antipodal as well
                pairs += [(i, (j + 1) % h), (i1, (j + 1) % h)]
    a, b = max(pairs, key=lambda ab: d2(*ab))
    s, t = int(hull[a]), int(hull[b])
    return float(np.hypot(*(xy[s] - xy[t]))), s, t


def brute_force_diameter(xy: np.ndarray) -> float:
    """O(n^2) reference: largest pairwise distance."""
    xy = np.asarray(xy, dtype=float)
    z = xy[:, 0] + 1j * xy[:, 1]
    return float(max(np.abs(z - z[i]).max() for i in range(len(z))))
