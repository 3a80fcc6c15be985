"""Interpolation point families: Newman, squared Newman, Chebyshev, power grids."""

import math

import numpy as np


def _finalize(points, minimum=2):
    out = np.unique(np.asarray(points, dtype=float))
    if len(out) < minimum:
        raise ValueError("fewer than two distinct points after deduplication")
    return out


def newman_points(n):
    """The 2n+1 Newman points (-1, -eta, ..., -eta^{n-1}, 0, eta^{n-1}, ..., 1)
    with eta = exp(-1/sqrt(n)), sorted ascending."""
    if n < 1:
        raise ValueError("n must be >= 1")
    eta = math.exp(-1.0 / math.sqrt(n))
    pos = eta ** np.arange(n - 1, -1, -1, dtype=float)
    return _finalize(np.concatenate((-pos[::-1], [0.0], pos)))


def squared_newman_points(n):
    """The n+1 points (0, eta^{2(n-1)}, ..., 1): squares of the nonnegative
    Newman points, clustering even faster at the origin."""
    if n < 1:
        raise ValueError("n must be >= 1")
    eta = math.exp(-1.0 / math.sqrt(n))
    pos = eta ** np.arange(2 * (n - 1), -1, -2, dtype=float)
    return _finalize(np.concatenate(([0.0], pos)))


def chebyshev1(m, a, b):
    """m Chebyshev points of the first kind mapped from [-1, 1] to [a, b]."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if not a < b:
        raise ValueError("need a < b")
    k = np.arange(1, m + 1, dtype=float)
    t = np.cos((2.0 * k - 1.0) * math.pi / (2.0 * m))
    return _finalize(0.5 * (a + b) + 0.5 * (b - a) * t, minimum=1)


def power_grid(m, p, a, b, drop_endpoints=False):
    """m linearly spaced points on [a, b] pushed through t -> t**p in the
    unit parameter, deduplicated; optionally with the two extreme points
    removed."""
    if m < 1 or (drop_endpoints and m < 3):
        raise ValueError("m too small for the requested grid")
    t = np.linspace(0.0, 1.0, m) ** float(p)
    pts = _finalize(a + (b - a) * t)
    if drop_endpoints:
        pts = pts[1:-1]
        if len(pts) < 2:
            raise ValueError("fewer than two points remain after dropping endpoints")
    return pts
