"""Finite metric spaces given by explicit distance matrices.

A space is a label list plus a symmetric matrix of pairwise distances with
zero diagonal and strictly positive off-diagonal entries. Validation happens
once, at construction; after that the matrix is frozen and every consumer may
assume the axioms hold. The triangle inequality check can be skipped for
semimetric inputs.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AsymmetricMatrixError,
    EmptySetError,
    NegativeDistanceError,
    NonFiniteEntryError,
    NonPositiveLambdaError,
    NonPositiveScaleError,
    NonZeroDiagonalError,
    TriangleViolationError,
    ZeroOffDiagonalError,
    ZeroPointsError,
)
from .tolerance import resolve_tol


class FiniteMetricSpace:
    """Immutable finite metric space.

    Attributes:
        labels: one display name per point.
        dist: read-only float64 matrix of pairwise distances.
    """

    def __init__(
        self,
        matrix,
        labels: Sequence[str] | None = None,
        *,
        strict_triangle: bool = True,
        tol: float | None = None,
    ):
        dist = np.array(matrix, dtype=float)
        if dist.ndim != 2 or dist.shape[0] != dist.shape[1]:
            raise AsymmetricMatrixError(
                f"expected a square matrix, got shape {dist.shape}"
            )
        n = dist.shape[0]
        if n == 0:
            raise ZeroPointsError("a metric space needs at least one point")
        if labels is None:
            labels = tuple(f"p{i}" for i in range(n))
        else:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ZeroPointsError(
                    f"{len(labels)} labels for a {n}-point matrix"
                )
        _check_axioms(dist, strict_triangle=strict_triangle, tol=tol)
        # symmetrize away sub-tolerance asymmetry so downstream code may rely
        # on exact symmetry; exact inputs are unchanged by (a + a) / 2
        dist = (dist + dist.T) / 2.0
        np.fill_diagonal(dist, 0.0)
        dist.setflags(write=False)
        self.labels = labels
        self.dist = dist
        self.n = n

    def distance(self, i: int, j: int) -> float:
        return float(self.dist[i, j])

    @cached_property
    def diam(self) -> float:
        """Largest pairwise distance (0 for a single point)."""
        if self.n == 1:
            return 0.0
        return float(self.dist.max())

    @cached_property
    def eps(self) -> float:
        """Smallest non-zero distance.

        For a single point there are no non-zero distances; this returns 0 so
        that every one-point space counts as a (degenerate) simplex.
        """
        if self.n == 1:
            return 0.0
        iu = np.triu_indices(self.n, k=1)
        return float(self.dist[iu].min())

    def is_simplex(self, tol: float | None = None) -> bool:
        """True when all non-zero distances coincide (eps == diam)."""
        from .tolerance import close

        return close(self.eps, self.diam, tol)

    def scale(self, factor: float) -> "FiniteMetricSpace":
        """Return a copy with every distance multiplied by factor > 0."""
        if not factor > 0:
            raise NonPositiveScaleError(f"scale factor must be positive, got {factor}")
        scaled = self.dist * float(factor)
        out = object.__new__(FiniteMetricSpace)
        np.fill_diagonal(scaled, 0.0)
        scaled.setflags(write=False)
        out.labels = self.labels
        out.dist = scaled
        out.n = self.n
        return out

    def __repr__(self) -> str:
        return f"FiniteMetricSpace(n={self.n}, diam={self.diam})"


def _check_axioms(dist: np.ndarray, *, strict_triangle: bool, tol: float | None) -> None:
    t = resolve_tol(tol)
    n = dist.shape[0]
    if not np.isfinite(dist).all():
        raise NonFiniteEntryError("distance matrix contains NaN or infinite entries")
    for i in range(n):
        if abs(dist[i, i]) > t:
            raise NonZeroDiagonalError(f"d[{i}][{i}] = {dist[i, i]} is not zero")
    for i in range(n):
        for j in range(i + 1, n):
            a, b = dist[i, j], dist[j, i]
            if abs(a - b) > t + t * max(abs(a), abs(b)):
                raise AsymmetricMatrixError(
                    f"d[{i}][{j}] = {a} differs from d[{j}][{i}] = {b}"
                )
            if a < 0:
                raise NegativeDistanceError(f"d[{i}][{j}] = {a} is negative")
            if a == 0:
                raise ZeroOffDiagonalError(
                    f"d[{i}][{j}] = 0 but points {i} and {j} are distinct"
                )
    if strict_triangle:
        for i in range(n):
            for j in range(n):
                if j == i:
                    continue
                for k in range(n):
                    if k == i or k == j:
                        continue
                    slack = t + t * abs(dist[i, k])
                    if dist[i, k] > dist[i, j] + dist[j, k] + slack:
                        raise TriangleViolationError(
                            i, j, k,
                            float(dist[i, k]), float(dist[i, j]), float(dist[j, k]),
                        )


def validate(
    matrix,
    labels: Sequence[str] | None = None,
    *,
    strict_triangle: bool = True,
    tol: float | None = None,
) -> FiniteMetricSpace:
    """Check the metric axioms and wrap the matrix in a FiniteMetricSpace."""
    return FiniteMetricSpace(matrix, labels, strict_triangle=strict_triangle, tol=tol)


def simplex(n: int, side: float, labels: Sequence[str] | None = None) -> FiniteMetricSpace:
    """n-point space whose non-zero distances all equal side > 0."""
    if n < 1:
        raise ZeroPointsError(f"simplex needs at least one point, got n={n}")
    if not side > 0:
        raise NonPositiveLambdaError(f"simplex side must be positive, got {side}")
    m = np.full((n, n), float(side))
    np.fill_diagonal(m, 0.0)
    if labels is None:
        labels = tuple(f"z{i}" for i in range(n))
    return FiniteMetricSpace(m, labels)


def _as_index_tuple(space: FiniteMetricSpace, points: Iterable[int], name: str) -> tuple[int, ...]:
    ids = tuple(int(i) for i in points)
    if not ids:
        raise EmptySetError(f"point set {name} is empty")
    for i in ids:
        if i < 0 or i >= space.n:
            raise IndexError(f"point index {i} out of range for n={space.n}")
    return ids


def set_dist_inf(space: FiniteMetricSpace, a: Iterable[int], b: Iterable[int]) -> float:
    """Smallest distance between a point of A and a point of B."""
    ia = _as_index_tuple(space, a, "A")
    ib = _as_index_tuple(space, b, "B")
    return float(space.dist[np.ix_(ia, ib)].min())


def set_dist_sup(space: FiniteMetricSpace, a: Iterable[int], b: Iterable[int]) -> float:
    """Largest distance between a point of A and a point of B."""
    ia = _as_index_tuple(space, a, "A")
    ib = _as_index_tuple(space, b, "B")
    return float(space.dist[np.ix_(ia, ib)].max())


def hausdorff(space: FiniteMetricSpace, a: Iterable[int], b: Iterable[int]) -> float:
    """Hausdorff distance between two non-empty subsets of the space.

    max of the two directed deviations: sup over a in A of dist(a, B) and
    sup over b in B of dist(A, b).
    """
    ia = _as_index_tuple(space, a, "A")
    ib = _as_index_tuple(space, b, "B")
    block = space.dist[np.ix_(ia, ib)]
    a_to_b = block.min(axis=1).max()
    b_to_a = block.min(axis=0).max()
    return float(max(a_to_b, b_to_a))
