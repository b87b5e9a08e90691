"""Partitions of point index sets into a fixed number of blocks.

Partitions are enumerated through restricted growth strings: point 0 goes to
block 0, and each later point goes either to an existing block or to the
first unused block index. Enumerating the strings in lexicographic order
yields every partition of {0..n-1} into exactly m non-empty blocks once.
Blocks inherit the first-occurrence numbering, which also orders them by
their smallest member.

Counts follow the two-parameter recurrence
    count(n, m) = m * count(n-1, m) + count(n-1, m-1)
with count(0, 0) = 1. Python integers do not overflow, so counts are always
exact; callers guard enumeration size by comparing against a cap.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import BadCardinalityError
from .metric import FiniteMetricSpace

#: Sentinel for the smallest between-block distance of a one-block partition:
#: there are no between-block pairs, so the infimum is vacuously infinite.
#: Subtractions against it are short-circuited (see lam_minus_alpha) so the
#: term can never win a max.
ALPHA_INF = math.inf


def lam_minus_alpha(lam: float, alpha_value: float) -> float:
    """lam - alpha with the infinite sentinel short-circuited to -inf."""
    if math.isinf(alpha_value):
        return -math.inf
    return lam - alpha_value


@dataclass(frozen=True)
class Partition:
    """A partition of {0..n-1} into non-empty, disjoint blocks.

    Blocks are tuples of ascending indices, ordered by smallest member.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.blocks:
            raise BadCardinalityError("a partition needs at least one block")
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise BadCardinalityError("partition blocks must be non-empty")
            for i in block:
                if i in seen:
                    raise BadCardinalityError(f"point {i} appears in two blocks")
                seen.add(i)
        n = len(seen)
        if seen != set(range(n)):
            raise BadCardinalityError("blocks must cover 0..n-1 exactly")
        # canonical form: ascending within blocks, blocks by smallest member,
        # so equal partitions compare and hash equal however they were built
        canon = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        if canon != self.blocks:
            object.__setattr__(self, "blocks", canon)

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @classmethod
    def from_rgs(cls, rgs: list[int] | tuple[int, ...]) -> "Partition":
        m = max(rgs) + 1 if rgs else 0
        blocks: list[list[int]] = [[] for _ in range(m)]
        for point, b in enumerate(rgs):
            blocks[b].append(point)
        return cls(tuple(tuple(b) for b in blocks))

    def label_blocks(self, labels) -> list[list[str]]:
        return [[labels[i] for i in block] for block in self.blocks]

    def to_json(self, labels=None) -> str:
        """Debug form: JSON array of arrays, blocks ordered by smallest member."""
        if labels is None:
            return json.dumps([list(b) for b in self.blocks])
        return json.dumps(self.label_blocks(labels))

    def format(self, labels=None) -> str:
        """Compact display form like {{a,b},{c}}."""
        if labels is None:
            labels = [str(i) for i in range(self.n)]
        inner = ",".join(
            "{" + ",".join(labels[i] for i in block) + "}" for block in self.blocks
        )
        return "{" + inner + "}"


@lru_cache(maxsize=None)
def partition_count(n: int, m: int) -> int:
    """Number of partitions of an n-set into exactly m non-empty blocks."""
    if n < 0 or m < 0:
        raise BadCardinalityError(f"negative arguments: n={n}, m={m}")
    if n == 0 and m == 0:
        return 1
    if n == 0 or m == 0 or m > n:
        return 0
    return m * partition_count(n - 1, m) + partition_count(n - 1, m - 1)


def iter_rgs(n: int, m: int) -> Iterator[list[int]]:
    """Yield restricted growth strings for n points and exactly m blocks.

    Strings come out in lexicographic order. The yielded list is reused
    between steps; callers that keep a string must copy it.
    """
    if n < 1:
        raise BadCardinalityError(f"need at least one point, got n={n}")
    if m < 1 or m > n:
        raise BadCardinalityError(f"m must satisfy 1 <= m <= n, got m={m}, n={n}")
    rgs = [0] * n

    def rec(i: int, used: int) -> Iterator[list[int]]:
        if i == n:
            if used == m:
                yield rgs
            return
        # a new block index is allowed only while blocks can still fill up to m;
        # remaining points must be able to open the blocks still missing
        hi = min(used, m - 1)
        for b in range(hi + 1):
            opened = used + (1 if b == used else 0)
            if opened + (n - i - 1) >= m:
                rgs[i] = b
                yield from rec(i + 1, opened)

    yield from rec(1, 1) if n > 0 else iter(())


def enumerate_partitions(n: int, m: int) -> Iterator[Partition]:
    """All partitions of {0..n-1} into exactly m blocks, in RGS order.

    Infeasible requests (m < 1 or m > n) yield nothing, matching
    partition_count's zero.

    >>> [p.blocks for p in enumerate_partitions(3, 2)]
    [((0, 1), (2,)), ((0, 2), (1,)), ((0,), (1, 2))]
    """
    if n < 1 or m < 1 or m > n:
        return
    for rgs in iter_rgs(n, m):
        yield Partition.from_rgs(rgs)


def _check_partition_of(partition: Partition, space: FiniteMetricSpace) -> None:
    if partition.n != space.n:
        raise BadCardinalityError(
            f"partition covers {partition.n} points but the space has {space.n}"
        )


def diam_of(partition: Partition, space: FiniteMetricSpace) -> float:
    """Largest within-block distance over all blocks (0 if all singletons)."""
    _check_partition_of(partition, space)
    best = 0.0
    d = space.dist
    for block in partition.blocks:
        for a in range(len(block)):
            for b in range(a + 1, len(block)):
                v = d[block[a], block[b]]
                if v > best:
                    best = float(v)
    return best


def alpha(partition: Partition, space: FiniteMetricSpace) -> float:
    """Smallest between-block distance; the infinite sentinel when m = 1."""
    _check_partition_of(partition, space)
    if partition.m == 1:
        return ALPHA_INF
    best = math.inf
    d = space.dist
    blocks = partition.blocks
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            for a in blocks[i]:
                for b in blocks[j]:
                    v = d[a, b]
                    if v < best:
                        best = float(v)
    return best


def beta(partition: Partition, space: FiniteMetricSpace) -> float:
    """Largest between-block distance; 0 when m = 1 (no such pairs)."""
    _check_partition_of(partition, space)
    if partition.m == 1:
        return 0.0
    best = 0.0
    d = space.dist
    blocks = partition.blocks
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            for a in blocks[i]:
                for b in blocks[j]:
                    v = d[a, b]
                    if v > best:
                        best = float(v)
    return best
