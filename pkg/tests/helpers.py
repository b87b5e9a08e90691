"""Independent reference implementations and fixture corpora for the tests.

Everything here recomputes results the slow, literal way (exhaustive
enumeration straight from the definitions) so the fast library code has
something honest to be compared against.
"""

from __future__ import annotations

import itertools
import math

from ghsimplex import (
    FiniteMetricSpace,
    dis_rd,
    distortion,
    enumerate_partitions,
    random_metric,
)

# ---------------------------------------------------------------------------
# correspondences, the literal way


def all_correspondences(nx: int, ny: int) -> list[tuple[tuple[int, int], ...]]:
    """Every relation between {0..nx-1} and {0..ny-1} with full projections.

    Exponential in nx*ny; keep nx*ny small (<= 12 or so).
    """
    cells = [(i, q) for i in range(nx) for q in range(ny)]
    out = []
    for mask in range(1, 1 << len(cells)):
        pairs = tuple(c for k, c in enumerate(cells) if mask >> k & 1)
        if len({i for i, _ in pairs}) == nx and len({q for _, q in pairs}) == ny:
            out.append(pairs)
    return out


def inclusion_minimal(corrs: list[tuple[tuple[int, int], ...]]):
    """Filter a correspondence list down to its inclusion-minimal members."""
    sets = [frozenset(c) for c in corrs]
    return [
        corrs[i]
        for i, s in enumerate(sets)
        if not any(t < s for t in sets)
    ]


def brute_min_distortion_all(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> float:
    """Minimum distortion over ALL correspondences (not only minimal ones)."""
    return min(
        distortion(pairs, X, Y) for pairs in all_correspondences(X.n, Y.n)
    )


# ---------------------------------------------------------------------------
# partitions, the literal way


def naive_min_dis(space: FiniteMetricSpace, m: int, lam: float):
    """(value, partition) minimizing dis_rd by plain full enumeration."""
    best = math.inf
    arg = None
    for part in enumerate_partitions(space.n, m):
        v = dis_rd(part, lam, space)
        if v < best:
            best, arg = v, part
    return best, arg


def enumerated_alpha_plus(space: FiniteMetricSpace, m: int) -> float:
    """Largest between-block minimum over all m-block partitions."""
    from ghsimplex import alpha

    return max(alpha(part, space) for part in enumerate_partitions(space.n, m))


def set_partitions_reference(n: int, m: int):
    """All partitions of range(n) into m blocks, built by direct placement."""
    if m < 1 or m > n:
        return
    if n == 0:
        return

    def rec(i, blocks):
        if i == n:
            if len(blocks) == m:
                yield tuple(tuple(b) for b in blocks)
            return
        remaining = n - i
        for k in range(len(blocks)):
            if len(blocks) + remaining - 1 >= m:
                blocks[k].append(i)
                yield from rec(i + 1, blocks)
                blocks[k].pop()
        if len(blocks) < m:
            blocks.append([i])
            yield from rec(i + 1, blocks)
            blocks.pop()

    yield from rec(0, [])


# ---------------------------------------------------------------------------
# fixture corpora


def integer_spaces_n2() -> list[FiniteMetricSpace]:
    return [FiniteMetricSpace([[0, d], [d, 0]]) for d in (1, 2, 3, 4)]


def integer_spaces_n3() -> list[FiniteMetricSpace]:
    """All 3-point metrics with side lengths in {1, 2, 3, 4}."""
    spaces = []
    for a, b, c in itertools.product(range(1, 5), repeat=3):
        if a <= b + c and b <= a + c and c <= a + b:
            spaces.append(FiniteMetricSpace([[0, a, b], [a, 0, c], [b, c, 0]]))
    return spaces


def integer_spaces_n4() -> list[FiniteMetricSpace]:
    """All 4-point metrics with side lengths in {1, 2} (every choice is one)."""
    spaces = []
    for sides in itertools.product((1, 2), repeat=6):
        d01, d02, d03, d12, d13, d23 = sides
        spaces.append(
            FiniteMetricSpace(
                [
                    [0, d01, d02, d03],
                    [d01, 0, d12, d13],
                    [d02, d12, 0, d23],
                    [d03, d13, d23, 0],
                ]
            )
        )
    return spaces


def integer_corpus() -> list[FiniteMetricSpace]:
    """Fixed fixture set: every integer metric on <= 4 points (bounded sides)."""
    return (
        [FiniteMetricSpace([[0.0]])]
        + integer_spaces_n2()
        + integer_spaces_n3()
        + integer_spaces_n4()
    )


def random_corpus() -> list[FiniteMetricSpace]:
    """Seeded random spaces with n <= 5; deterministic across runs."""
    spaces = []
    for n, count in ((2, 30), (3, 30), (4, 25), (5, 15)):
        for seed in range(count):
            spaces.append(random_metric(n, seed=1000 * n + seed))
    return spaces


def acceptance_corpus() -> list[FiniteMetricSpace]:
    return integer_corpus() + random_corpus()


def lambda_grid(space: FiniteMetricSpace, points: int = 8) -> list[float]:
    """Evenly spaced grid spanning (0, 2*diam]; falls back when diam == 0."""
    top = 2.0 * space.diam
    if top <= 0.0:
        top = 2.0
    return [top * (k + 1) / points for k in range(points)]


def is_integer_space(space: FiniteMetricSpace) -> bool:
    return all(
        float(space.distance(i, j)).is_integer()
        for i in range(space.n)
        for j in range(i + 1, space.n)
    )
