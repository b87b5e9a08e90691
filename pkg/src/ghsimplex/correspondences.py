"""Correspondences between finite metric spaces and their distortion.

A correspondence is a relation with full projections onto both spaces.
The inclusion-minimal ("irreducible") ones have a rigid shape: a pair of
partitions with equally many blocks and a block bijection under which no two
multi-point blocks are matched. Minimizing distortion over the irreducible
correspondences is enough, because distortion only grows when pairs are
added, so this module's brute-force minimizer enumerates exactly that family.

Enumeration order is deterministic: block counts ascending, both partitions
in restricted-growth order, block bijections in lexicographic order. The
family size is computed exactly up front and compared against a cap
(default 10^7) before any work is done.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator

from .errors import (
    BadCardinalityError,
    EmptyRelationError,
    NonPositiveLambdaError,
    SizeThresholdExceededError,
)
from .metric import FiniteMetricSpace
from .partitions import (
    Partition,
    alpha,
    beta,
    diam_of,
    enumerate_partitions,
    lam_minus_alpha,
)

DEFAULT_CORRESPONDENCE_CAP = 10_000_000


@dataclass(frozen=True)
class Correspondence:
    """A relation between point indices of two spaces, stored as sorted pairs."""

    pairs: tuple[tuple[int, int], ...]

    def projects_onto(self, nx: int, ny: int) -> bool:
        return (
            {p[0] for p in self.pairs} == set(range(nx))
            and {p[1] for p in self.pairs} == set(range(ny))
        )


def distortion(
    pairs: Iterable[tuple[int, int]],
    space_x: FiniteMetricSpace,
    space_y: FiniteMetricSpace,
) -> float:
    """Largest discrepancy |d_X(x, x') - d_Y(y, y')| over pairs of pairs."""
    ps = list(pairs)
    if not ps:
        raise EmptyRelationError("distortion of an empty relation is undefined")
    dx = space_x.dist
    dy = space_y.dist
    for x, y in ps:
        if not (0 <= x < space_x.n and 0 <= y < space_y.n):
            raise IndexError(f"pair ({x}, {y}) out of range")
    worst = 0.0
    for a in range(len(ps)):
        xa, ya = ps[a]
        for b in range(a + 1, len(ps)):
            xb, yb = ps[b]
            v = abs(float(dx[xa, xb]) - float(dy[ya, yb]))
            if v > worst:
                worst = v
    return worst


@lru_cache(maxsize=None)
def _no_singleton_partition_count(n: int, p: int) -> int:
    """Partitions of an n-set into exactly p blocks, every block of size >= 2."""
    if n == 0 and p == 0:
        return 1
    if p <= 0 or n < 2 * p:
        return 0
    return p * _no_singleton_partition_count(n - 1, p) + (n - 1) * _no_singleton_partition_count(n - 2, p - 1)


@lru_cache(maxsize=None)
def _partitions_by_profile(n: int, k: int, p: int) -> int:
    """Partitions of an n-set into k blocks of which exactly p are multi-point."""
    singles = k - p
    if singles < 0 or singles > n:
        return 0
    return math.comb(n, singles) * _no_singleton_partition_count(n - singles, p)


def _valid_bijections(k: int, p: int, q: int) -> int:
    """Bijections of k blocks mapping p multi-point blocks into k - q singletons."""
    if p + q > k:
        return 0
    return math.perm(k - q, p) * math.factorial(k - p)


def irreducible_count(nx: int, ny: int) -> int:
    """Exact number of irreducible correspondences between spaces of given sizes."""
    if nx < 1 or ny < 1:
        raise BadCardinalityError("spaces must be non-empty")
    total = 0
    for k in range(1, min(nx, ny) + 1):
        for p in range(0, k + 1):
            ax = _partitions_by_profile(nx, k, p)
            if ax == 0:
                continue
            for q in range(0, k - p + 1):
                ay = _partitions_by_profile(ny, k, q)
                if ay == 0:
                    continue
                total += ax * ay * _valid_bijections(k, p, q)
    return total


def enumerate_irreducible(
    space_x: FiniteMetricSpace,
    space_y: FiniteMetricSpace,
    *,
    cap: int | None = None,
) -> Iterator[Correspondence]:
    """Yield every irreducible correspondence between the two spaces.

    Deterministic order: block count k ascending, then both partitions in
    restricted-growth order, then block bijections lexicographically,
    skipping bijections that match two multi-point blocks.
    """
    limit = DEFAULT_CORRESPONDENCE_CAP if cap is None else cap
    total = irreducible_count(space_x.n, space_y.n)
    if total > limit:
        raise SizeThresholdExceededError(
            f"{total} irreducible correspondences exceed the cap of {limit}"
        )
    for k in range(1, min(space_x.n, space_y.n) + 1):
        for part_x in enumerate_partitions(space_x.n, k):
            sizes_x = [len(b) for b in part_x.blocks]
            for part_y in enumerate_partitions(space_y.n, k):
                sizes_y = [len(b) for b in part_y.blocks]
                for perm in permutations(range(k)):
                    if any(sizes_x[i] > 1 and sizes_y[perm[i]] > 1 for i in range(k)):
                        continue
                    pairs = sorted(
                        (x, y)
                        for i in range(k)
                        for x in part_x.blocks[i]
                        for y in part_y.blocks[perm[i]]
                    )
                    yield Correspondence(tuple(pairs))


def dis_rd(partition: Partition, lam: float, space: FiniteMetricSpace) -> float:
    """Distortion of the block correspondence against an m-point simplex.

    The correspondence matches simplex vertex i with block i; its distortion
    has the closed form
        max(largest block diameter, lam - alpha, beta - lam)
    where alpha and beta are the smallest and largest between-block distances.
    """
    if not lam > 0:
        raise NonPositiveLambdaError(f"simplex side must be positive, got {lam}")
    return max(
        diam_of(partition, space),
        lam_minus_alpha(lam, alpha(partition, space)),
        beta(partition, space) - lam,
    )


def rd_correspondence(partition: Partition) -> Correspondence:
    """Materialized block correspondence: pairs (block index, point index)."""
    pairs = sorted(
        (i, x) for i, block in enumerate(partition.blocks) for x in block
    )
    return Correspondence(tuple(pairs))


def _block_tables(d: list[list[float]], blocks) -> tuple[list[int], list[list[float]], list[list[float]]]:
    """Per-block-pair distance ranges.

    Entry [i][j] holds the min/max distance between blocks i and j; the
    diagonal range is [0, block diameter] because a relation pair may repeat
    a point.
    """
    k = len(blocks)
    lo = [[0.0] * k for _ in range(k)]
    hi = [[0.0] * k for _ in range(k)]
    for i in range(k):
        bi = blocks[i]
        worst = 0.0
        for a in range(len(bi)):
            ra = d[bi[a]]
            for b in range(a + 1, len(bi)):
                v = ra[bi[b]]
                if v > worst:
                    worst = v
        hi[i][i] = worst
        for j in range(i + 1, k):
            bj = blocks[j]
            mn = math.inf
            mx = 0.0
            for a in bi:
                ra = d[a]
                for b in bj:
                    v = ra[b]
                    if v < mn:
                        mn = v
                    if v > mx:
                        mx = v
            lo[i][j] = lo[j][i] = mn
            hi[i][j] = hi[j][i] = mx
    return [len(b) for b in blocks], lo, hi


def _seed_distortion(dx: list[list[float]], dy: list[list[float]]) -> float:
    """Distortion of a simple correspondence, used as the initial incumbent."""
    nx, ny = len(dx), len(dy)
    pairs = [(min(i, nx - 1), min(i, ny - 1)) for i in range(max(nx, ny))]
    worst = 0.0
    for a in range(len(pairs)):
        xa, ya = pairs[a]
        for b in range(a + 1, len(pairs)):
            xb, yb = pairs[b]
            v = abs(dx[xa][xb] - dy[ya][yb])
            if v > worst:
                worst = v
    return worst


def gh_bruteforce(
    space_x: FiniteMetricSpace,
    space_y: FiniteMetricSpace,
    *,
    cap: int | None = None,
) -> float:
    """Gromov-Hausdorff distance by exhaustive correspondence search.

    Minimizes distortion over every irreducible correspondence and returns
    half the minimum. Distortion per correspondence is evaluated through
    block-pair distance ranges, and a branch-and-bound over block bijections
    abandons any assignment whose partial distortion already reaches the
    incumbent; both shortcuts are exact.
    """
    limit = DEFAULT_CORRESPONDENCE_CAP if cap is None else cap
    total = irreducible_count(space_x.n, space_y.n)
    if total > limit:
        raise SizeThresholdExceededError(
            f"{total} irreducible correspondences exceed the cap of {limit}"
        )
    dx = [[float(v) for v in row] for row in space_x.dist]
    dy = [[float(v) for v in row] for row in space_y.dist]
    best = _seed_distortion(dx, dy)
    # larger block counts usually host the low-distortion correspondences;
    # scanning them first tightens the incumbent early
    for k in range(min(space_x.n, space_y.n), 0, -1):
        tables_x = [
            _block_tables(dx, part.blocks)
            for part in enumerate_partitions(space_x.n, k)
        ]
        tables_y = [
            _block_tables(dy, part.blocks)
            for part in enumerate_partitions(space_y.n, k)
        ]
        for sx, lox, hix in tables_x:
            multi_x = sum(1 for s in sx if s > 1)
            for sy, loy, hiy in tables_y:
                multi_y = sum(1 for s in sy if s > 1)
                if multi_x + multi_y > k:
                    continue
                # every block must be matched, so the best conceivable
                # diagonal contribution bounds the distortion from below
                bound = 0.0
                for i in range(k):
                    hxi = hix[i][i]
                    big_i = sx[i] > 1
                    row_min = math.inf
                    for q in range(k):
                        if big_i and sy[q] > 1:
                            continue
                        c = hxi if hxi > hiy[q][q] else hiy[q][q]
                        if c < row_min:
                            row_min = c
                    if row_min > bound:
                        bound = row_min
                if bound >= best:
                    continue
                best = _min_over_bijections(k, sx, lox, hix, sy, loy, hiy, best)
    return best / 2.0


def _min_over_bijections(k, sx, lox, hix, sy, loy, hiy, best):
    assigned = [0] * k

    def rec(i: int, used: int, cur: float) -> None:
        nonlocal best
        if i == k:
            if cur < best:
                best = cur
            return
        hxi = hix[i][i]
        big_i = sx[i] > 1
        row_lo = lox[i]
        row_hi = hix[i]
        for q in range(k):
            bit = 1 << q
            if used & bit:
                continue
            if big_i and sy[q] > 1:
                continue
            c = cur
            v = hxi if hxi > hiy[q][q] else hiy[q][q]
            if v > c:
                c = v
            if c >= best:
                continue
            feasible = True
            for j in range(i):
                qj = assigned[j]
                a = row_hi[j] - loy[q][qj]
                b = hiy[q][qj] - row_lo[j]
                if b > a:
                    a = b
                if a > c:
                    c = a
                    if c >= best:
                        feasible = False
                        break
            if not feasible:
                continue
            assigned[i] = q
            rec(i + 1, used | bit, c)

    rec(0, 0, 0.0)
    return best


def min_distortion_naive(
    space_x: FiniteMetricSpace,
    space_y: FiniteMetricSpace,
    *,
    cap: int | None = None,
) -> float:
    """Reference minimizer: naive distortion over the enumerated family."""
    best = math.inf
    for corr in enumerate_irreducible(space_x, space_y, cap=cap):
        v = distortion(corr.pairs, space_x, space_y)
        if v < best:
            best = v
    return best
