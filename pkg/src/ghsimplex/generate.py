"""Deterministic sample space generators for the CLI and the test corpus."""

from __future__ import annotations

import math

import numpy as np

from .errors import BadParamsError
from .metric import FiniteMetricSpace, simplex


def random_metric(n: int, seed: int) -> FiniteMetricSpace:
    """Random metric on n points: symmetric noise repaired by shortest paths.

    Entries start uniform in [0.5, 3.0]; running all-pairs shortest paths
    afterwards restores the triangle inequality while keeping positivity and
    symmetry, so the result always validates.
    """
    if n < 1:
        raise BadParamsError(f"need at least one point, got n={n}")
    rng = np.random.default_rng(seed)
    w = rng.uniform(0.5, 3.0, size=(n, n))
    w = (w + w.T) / 2.0
    np.fill_diagonal(w, 0.0)
    for k in range(n):
        w = np.minimum(w, w[:, k, None] + w[None, k, :])
    np.fill_diagonal(w, 0.0)
    return FiniteMetricSpace(w)


def lp_points(n: int, dim: int, p: float, seed: int) -> FiniteMetricSpace:
    """n random points in the unit cube of R^dim under the l_p metric."""
    if n < 1 or dim < 1:
        raise BadParamsError(f"need n >= 1 and dim >= 1, got n={n}, dim={dim}")
    if not p >= 1:
        raise BadParamsError(f"l_p metrics need p >= 1, got p={p}")
    rng = np.random.default_rng(seed)
    pts = rng.uniform(size=(n, dim))
    diff = np.abs(pts[:, None, :] - pts[None, :, :])
    dist = (diff**p).sum(axis=2) ** (1.0 / p)
    np.fill_diagonal(dist, 0.0)
    return FiniteMetricSpace(dist)


def circle_sample(n: int, *, geodesic: bool = False) -> FiniteMetricSpace:
    """n equally spaced points of the unit circle.

    Chordal (plane) distances by default, arc lengths with geodesic=True.
    A finite sample is not the circle itself: its best two-block spacing and
    smallest distance shrink only as n grows.
    """
    if n < 1:
        raise BadParamsError(f"need at least one point, got n={n}")
    by_gap = [0.0] * n
    for g in range(1, n):
        arc = min(g, n - g)
        if geodesic:
            by_gap[g] = 2.0 * math.pi * arc / n
        else:
            by_gap[g] = 2.0 * math.sin(math.pi * arc / n)
    m = [[by_gap[abs(i - j)] for j in range(n)] for i in range(n)]
    return FiniteMetricSpace(m)


def generate_space(
    kind: str,
    *,
    n: int | None = None,
    side: float | None = None,
    dim: int | None = None,
    p: float | None = None,
    seed: int | None = None,
    geodesic: bool = False,
) -> FiniteMetricSpace:
    """Dispatch on kind; missing parameters raise BadParamsError."""

    def need(value, name):
        if value is None:
            raise BadParamsError(f"generator {kind!r} needs --{name}")
        return value

    if kind == "simplex":
        return simplex(need(n, "n"), need(side, "lambda"))
    if kind == "random-metric":
        return random_metric(need(n, "n"), need(seed, "seed"))
    if kind == "lp-points":
        return lp_points(need(n, "n"), need(dim, "dim"), need(p, "p"), need(seed, "seed"))
    if kind == "circle-sample":
        return circle_sample(need(n, "n"), geodesic=geodesic)
    raise BadParamsError(
        f"unknown generator kind {kind!r}; "
        "choose from simplex, random-metric, lp-points, circle-sample"
    )
