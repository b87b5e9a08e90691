"""Doubled Gromov-Hausdorff distance from a finite space to a simplex.

Everything here works with the doubled distance g(lam) = 2 * d_GH(lam
simplex with m vertices, X); callers wanting the distance itself halve the
result. The doubled value obeys closed forms split by cardinality:

  * m > n: g = max(lam, diam - lam)
  * m = n: g = max(lam - eps, diam - lam), eps the smallest non-zero distance
  * m <= n: g = min over partitions of X into m blocks of
        max(largest block diameter, lam - alpha(D), diam - lam)

The partition minimum is found by branch-and-bound: assigning points one at
a time can only grow the block diameters and shrink alpha, so a partial
assignment whose objective already reaches the incumbent is abandoned. The
partition-free term diam - lam also floors the objective, and the search
stops outright once a partition attains that floor.

Four summary numbers of an m-block partition family (the extremes of alpha
and of the block diameter) determine two-sided bounds on g at every lam, and
on most of the axis the bounds collapse to exact values. The classification
into formula cases compares the gap diam - alpha against the strip
[d_minus, d_plus] as described in classify_case.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import (
    BadCardinalityError,
    EnumerationTooLargeError,
    BadParamsError,
    InvalidCharacteristicsError,
    NonPositiveLambdaError,
)
from .metric import FiniteMetricSpace
from .partitions import ALPHA_INF, Partition, lam_minus_alpha, partition_count
from .tolerance import leq

DEFAULT_PARTITION_CAP = 10_000_000


def _resolve_cap(cap: int | None) -> int:
    return DEFAULT_PARTITION_CAP if cap is None else cap


class CaseTag(str, Enum):
    """Which closed form produced a bound."""

    BIGGER_SIMPLEX = "bigger-simplex"
    EQUAL_CARDINALITY = "equal-cardinality"
    ALPHA_ZERO = "alpha-zero"
    DM_EQUALS_DIAM = "dm-equals-diam"
    CASE_1 = "1"
    CASE_2 = "2"
    CASE_3_1 = "3.1"
    CASE_3_2 = "3.2"

    def __str__(self) -> str:  # keep CSV cells free of the enum repr
        return self.value


@dataclass(frozen=True)
class Characteristics:
    """Partition-family summary of a space at block count m.

    alpha_minus/alpha_plus are the smallest and largest achievable
    between-block minimum distance; d_minus/d_plus the extremes of the block
    diameter. For m = 1 the alphas are the infinite sentinel. eps is the
    smallest non-zero distance of the underlying space when known.
    """

    m: int
    diam: float
    alpha_minus: float
    alpha_plus: float
    d_minus: float
    d_plus: float
    eps: float | None = None

    def __post_init__(self):
        if self.m < 1:
            raise InvalidCharacteristicsError(f"m must be at least 1, got {self.m}")
        checks = [
            (self.diam >= 0, "diam must be nonnegative"),
            (self.alpha_minus >= 0, "alpha_minus must be nonnegative"),
            (self.d_minus >= 0, "d_minus must be nonnegative"),
            (leq(self.alpha_minus, self.alpha_plus), "alpha_minus must not exceed alpha_plus"),
            (leq(self.d_minus, self.d_plus), "d_minus must not exceed d_plus"),
            (leq(self.d_plus, self.diam), "d_plus must not exceed diam"),
        ]
        if self.eps is not None:
            checks.append((0 <= self.eps, "eps must be nonnegative"))
            checks.append((leq(self.eps, self.diam), "eps must not exceed diam"))
        for ok, msg in checks:
            if not ok:
                raise InvalidCharacteristicsError(msg)


@dataclass(frozen=True)
class GhBound:
    """Two-sided bound on the doubled distance at one lam.

    exact means the bound was produced by an exact formula or collapsed to a
    single value; lo <= hi always holds.
    """

    lo: float
    hi: float
    case: CaseTag
    region: str
    exact: bool

    @staticmethod
    def exact_value(value: float, case: CaseTag, region: str) -> "GhBound":
        return GhBound(value, value, case, region, True)

    @staticmethod
    def interval(lo: float, hi: float, case: CaseTag, region: str) -> "GhBound":
        return GhBound(lo, hi, case, region, lo == hi)


@dataclass(frozen=True)
class SimplexGhResult:
    """Doubled distance plus how it was obtained."""

    value: float
    branch: str
    argmin: Partition | None

    @property
    def half(self) -> float:
        return self.value / 2.0


def _check_lambda(lam: float) -> float:
    lam = float(lam)
    if not lam > 0:
        raise NonPositiveLambdaError(f"simplex side must be positive, got {lam}")
    return lam


def _partition_budget(n: int, m: int, cap: int) -> int | None:
    """None when full enumeration fits the cap, else a node budget."""
    if partition_count(n, m) <= cap:
        return None
    return cap


def _min_dis_over_partitions(
    space: FiniteMetricSpace, m: int, lam: float, cap: int
) -> tuple[float, Partition]:
    """Branch-and-bound minimum of the block objective over m-block partitions."""
    n = space.n
    d = [[float(v) for v in row] for row in space.dist]
    diam_x = space.diam
    base = diam_x - lam
    if m == 1:
        floor = max(base, 0.0)
    else:
        # alpha never exceeds the diameter, so lam - diam floors the middle term
        floor = max(base, lam - diam_x, 0.0)
    budget = _partition_budget(n, m, cap)
    nodes = 0
    best = math.inf
    best_rgs: list[int] | None = None
    rgs = [0] * n

    def rec(i: int, used: int, alpha_cur: float, diam_cur: float, val_cur: float) -> bool:
        # returns True when the floor was reached and the search may stop
        nonlocal best, best_rgs, nodes
        if i == n:
            if used == m and val_cur < best:
                best = val_cur
                best_rgs = rgs.copy()
                if best <= floor:
                    return True
            return False
        nodes += 1
        if budget is not None and nodes > budget:
            raise EnumerationTooLargeError(
                f"{partition_count(n, m)} partitions exceed the cap of {budget}"
            )
        row = d[i]
        hi = used if used < m else m - 1
        for b in range(hi + 1):
            opened = used + 1 if b == used else used
            if opened + (n - i - 1) < m:
                continue
            new_alpha = alpha_cur
            new_diam = diam_cur
            for j in range(i):
                v = row[j]
                if rgs[j] == b:
                    if v > new_diam:
                        new_diam = v
                else:
                    if v < new_alpha:
                        new_alpha = v
            val = new_diam if new_diam > base else base
            if not math.isinf(new_alpha):
                t = lam - new_alpha
                if t > val:
                    val = t
            if val >= best:
                continue
            rgs[i] = b
            if rec(i + 1, opened, new_alpha, new_diam, val):
                return True
        return False

    rec(1, 1, ALPHA_INF, 0.0, max(base, 0.0))
    if best_rgs is None:
        # pruning can only skip non-improving partitions, so this is unreachable
        raise EnumerationTooLargeError("partition search terminated without a result")
    return best, Partition.from_rgs(best_rgs)


def gh_to_simplex_detail(
    space: FiniteMetricSpace, m: int, lam: float, *, cap: int | None = None
) -> SimplexGhResult:
    """Doubled distance to the m-vertex simplex of side lam, with provenance."""
    lam = _check_lambda(lam)
    if m < 1:
        raise BadCardinalityError(f"m must be at least 1, got {m}")
    n = space.n
    if m == 1 or m < n:
        value, argmin = _min_dis_over_partitions(space, m, lam, _resolve_cap(cap))
        return SimplexGhResult(value, "partition-enum", argmin)
    if m > n:
        return SimplexGhResult(max(lam, space.diam - lam), "bigger-simplex", None)
    # m == n >= 2: the only partitions are all-singletons, leaving a formula
    return SimplexGhResult(
        max(lam - space.eps, space.diam - lam), "equal-cardinality", None
    )


def gh_to_simplex(
    space: FiniteMetricSpace, m: int, lam: float, *, cap: int | None = None
) -> float:
    """Doubled Gromov-Hausdorff distance 2 * d_GH(simplex(m, lam), X)."""
    return gh_to_simplex_detail(space, m, lam, cap=cap).value


def gh_to_simplex_half(
    space: FiniteMetricSpace, m: int, lam: float, *, cap: int | None = None
) -> float:
    """The distance itself, half the doubled value."""
    return gh_to_simplex(space, m, lam, cap=cap) / 2.0


def characteristics(
    space: FiniteMetricSpace, m: int, *, cap: int | None = None
) -> Characteristics:
    """Exact partition-family summary by full enumeration.

    Scans every partition of the space into m blocks and records the extreme
    values of alpha and of the largest block diameter.
    """
    n = space.n
    if m < 1 or m > n:
        raise BadCardinalityError(f"m must satisfy 1 <= m <= n, got m={m}, n={n}")
    limit = _resolve_cap(cap)
    total = partition_count(n, m)
    if total > limit:
        raise EnumerationTooLargeError(f"{total} partitions exceed the cap of {limit}")
    d = [[float(v) for v in row] for row in space.dist]
    alpha_min = math.inf
    alpha_max = -math.inf
    diam_min = math.inf
    diam_max = -math.inf
    rgs = [0] * n

    def rec(i: int, used: int, alpha_cur: float, diam_cur: float) -> None:
        nonlocal alpha_min, alpha_max, diam_min, diam_max
        if i == n:
            if used != m:
                return
            if alpha_cur < alpha_min:
                alpha_min = alpha_cur
            if alpha_cur > alpha_max:
                alpha_max = alpha_cur
            if diam_cur < diam_min:
                diam_min = diam_cur
            if diam_cur > diam_max:
                diam_max = diam_cur
            return
        row = d[i]
        hi = used if used < m else m - 1
        for b in range(hi + 1):
            opened = used + 1 if b == used else used
            if opened + (n - i - 1) < m:
                continue
            new_alpha = alpha_cur
            new_diam = diam_cur
            for j in range(i):
                v = row[j]
                if rgs[j] == b:
                    if v > new_diam:
                        new_diam = v
                else:
                    if v < new_alpha:
                        new_alpha = v
            rgs[i] = b
            rec(i + 1, opened, new_alpha, new_diam)

    rec(1, 1, ALPHA_INF, 0.0)
    return Characteristics(
        m=m,
        diam=space.diam,
        alpha_minus=float(alpha_min),
        alpha_plus=float(alpha_max),
        d_minus=float(diam_min),
        d_plus=float(diam_max),
        eps=space.eps,
    )


def mst(space: FiniteMetricSpace) -> list[tuple[int, int, float]]:
    """Minimum spanning tree edges, deterministically tie-broken.

    Candidate edges are taken in ascending (weight, i, j) order with i < j,
    so equal-weight choices always resolve the same way. Returns the n - 1
    selected edges in selection order.
    """
    n = space.n
    d = space.dist
    edges = sorted(
        (float(d[i, j]), i, j) for i in range(n) for j in range(i + 1, n)
    )
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    out: list[tuple[int, int, float]] = []
    for w, i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            out.append((i, j, w))
            if len(out) == n - 1:
                break
    return out


def alpha_plus_via_mst(space: FiniteMetricSpace, m: int) -> float:
    """Largest achievable between-block minimum distance, via the tree.

    Cutting the m - 1 heaviest tree edges gives the best possible spacing,
    so the answer is the (m - 1)-th largest tree edge weight. For m = 1
    there is nothing to cut and the infinite sentinel comes back.
    """
    n = space.n
    if m < 1 or m > n:
        raise BadCardinalityError(f"m must satisfy 1 <= m <= n, got m={m}, n={n}")
    if m == 1:
        return ALPHA_INF
    weights = sorted((w for _, _, w in mst(space)), reverse=True)
    return weights[m - 2]


def classify_case(chars: Characteristics) -> CaseTag:
    """Pick the bound formula family for a characteristics record.

    Special shapes come first: alpha_plus = 0 (the space cannot be split with
    positive spacing) and d_minus = diam (every m-block partition keeps a
    diameter-realizing pair together). Otherwise the midpoint height
    (diam - alpha) / 2 is compared against the strip [d_minus, d_plus], and
    boundary overlaps resolve to the earliest matching case.
    """
    if chars.alpha_plus == 0:
        return CaseTag.ALPHA_ZERO
    if chars.d_minus == chars.diam:
        return CaseTag.DM_EQUALS_DIAM
    if chars.diam - chars.alpha_minus <= 2 * chars.d_minus:
        return CaseTag.CASE_1
    if chars.diam - chars.alpha_minus <= 2 * chars.d_plus:
        return CaseTag.CASE_2
    if chars.diam - chars.alpha_plus <= 2 * chars.d_plus:
        return CaseTag.CASE_3_1
    return CaseTag.CASE_3_2


def _two_piece_region(lam: float, split: float) -> str:
    return "left" if lam <= split else "right"


def _case_bound(chars: Characteristics, lam: float, case: CaseTag) -> GhBound:
    """Evaluate one case's piecewise formula; no reclassification."""
    diam = chars.diam
    a_lo = chars.alpha_minus
    a_hi = chars.alpha_plus
    d_lo = chars.d_minus
    d_hi = chars.d_plus

    if case is CaseTag.ALPHA_ZERO:
        value = max(d_lo, lam, diam - lam)
        t_left = min(diam - d_lo, diam / 2)
        t_right = max(d_lo, diam / 2)
        if lam <= t_left:
            region = "left"
        elif lam <= t_right:
            region = "middle"
        else:
            region = "right"
        return GhBound.exact_value(value, case, region)

    if case is CaseTag.DM_EQUALS_DIAM:
        value = max(diam, lam_minus_alpha(lam, a_hi))
        split = diam + a_hi  # never crossed when the sentinel is infinite
        return GhBound.exact_value(value, case, _two_piece_region(lam, split))

    if case is CaseTag.CASE_3_2:
        value = max(diam - lam, lam_minus_alpha(lam, a_hi))
        split = (diam + a_hi) / 2
        return GhBound.exact_value(value, case, _two_piece_region(lam, split))

    if case is CaseTag.CASE_1:
        t1 = a_lo + d_lo
        t2 = a_hi + d_hi
        if lam <= t1:
            return GhBound.exact_value(max(diam - lam, d_lo), case, "left")
        if lam <= t2:
            lo = max(lam_minus_alpha(lam, a_hi), d_lo)
            hi = min(lam - a_lo, d_hi)
            return GhBound.interval(lo, hi, case, "middle")
        return GhBound.exact_value(lam - a_hi, case, "right")

    if case is CaseTag.CASE_2:
        t1 = (a_lo + diam) / 2
        t2 = a_hi + d_hi
        if lam <= t1:
            return GhBound.exact_value(diam - lam, case, "left")
        if lam <= t2:
            lo = max(diam - lam, lam_minus_alpha(lam, a_hi), d_lo)
            hi = min(lam - a_lo, d_hi)
            return GhBound.interval(lo, hi, case, "middle")
        return GhBound.exact_value(lam - a_hi, case, "right")

    if case is CaseTag.CASE_3_1:
        t1 = diam - d_hi
        t2 = a_hi + d_hi
        if lam <= t1:
            return GhBound.exact_value(diam - lam, case, "left")
        if lam <= t2:
            lo = max(diam - lam, lam_minus_alpha(lam, a_hi), d_lo)
            return GhBound.interval(lo, d_hi, case, "middle")
        return GhBound.exact_value(lam - a_hi, case, "right")

    raise BadParamsError(f"case {case} has no characteristics-only formula")


def bounds_from_characteristics(chars: Characteristics, lam: float) -> GhBound:
    """Two-sided bound on the doubled distance at lam from summary data alone."""
    lam = _check_lambda(lam)
    return _case_bound(chars, lam, classify_case(chars))


@dataclass(frozen=True)
class SweepRow:
    """One evaluated grid point of the curve lam -> g(lam)."""

    lam: float
    bound: GhBound
    enumerated: float | None = None


def _check_grid(grid: Sequence[float]) -> list[float]:
    values = [float(v) for v in grid]
    if not values:
        raise BadParamsError("lambda grid is empty")
    prev = 0.0
    for v in values:
        if not v > 0:
            raise BadParamsError(f"lambda grid values must be positive, got {v}")
        if v <= prev:
            raise BadParamsError("lambda grid must be strictly increasing")
        prev = v
    return values


def sweep(
    target: FiniteMetricSpace | Characteristics,
    grid: Iterable[float],
    *,
    m: int | None = None,
    cap: int | None = None,
    cross_check: bool = True,
) -> list[SweepRow]:
    """Evaluate the bound formulas across a lam grid.

    With a Characteristics record the rows carry bounds only. With a finite
    space (m required) the exact enumerated value is attached to each row as
    well, unless enumeration would exceed the cap or cross_check is False.
    """
    values = _check_grid(list(grid))
    if isinstance(target, Characteristics):
        return [
            SweepRow(lam, bounds_from_characteristics(target, lam)) for lam in values
        ]
    space = target
    if m is None:
        raise BadParamsError("m is required when sweeping a finite space")
    if m < 1:
        raise BadCardinalityError(f"m must be at least 1, got {m}")
    n = space.n
    rows: list[SweepRow] = []
    if m > n:
        for lam in values:
            v = max(lam, space.diam - lam)
            bound = GhBound.exact_value(
                v, CaseTag.BIGGER_SIMPLEX, _two_piece_region(lam, space.diam / 2)
            )
            rows.append(SweepRow(lam, bound, v))
        return rows
    if m == n and n >= 2:
        split = (space.diam + space.eps) / 2
        for lam in values:
            v = max(lam - space.eps, space.diam - lam)
            bound = GhBound.exact_value(
                v, CaseTag.EQUAL_CARDINALITY, _two_piece_region(lam, split)
            )
            rows.append(SweepRow(lam, bound, v))
        return rows
    chars = characteristics(space, m, cap=cap)
    for lam in values:
        bound = bounds_from_characteristics(chars, lam)
        enumerated = None
        if cross_check:
            try:
                enumerated = gh_to_simplex(space, m, lam, cap=cap)
            except EnumerationTooLargeError:
                enumerated = None
        rows.append(SweepRow(lam, bound, enumerated))
    return rows


def max_abs_bound(a: float, b: float) -> float:
    """Upper bound for max(a, abs(b - a)) over nonnegative a, b: max(a, b)."""
    return a if a >= b else b


def sup_abs_over_set(values: Iterable[float], lam: float) -> float:
    """max over v of abs(lam - v), evaluated from the extremes only."""
    vs = list(values)
    if not vs:
        raise BadParamsError("sup_abs_over_set needs a non-empty set")
    return max(lam - min(vs), max(vs) - lam)


def sup_max_over_set(values: Iterable[float], lam: float) -> float:
    """max over v of max(lam, abs(lam - v)) for nonnegative v."""
    vs = list(values)
    if not vs:
        raise BadParamsError("sup_max_over_set needs a non-empty set")
    if min(vs) < 0:
        raise BadParamsError("sup_max_over_set expects nonnegative values")
    top = max(vs) - lam
    return lam if lam >= top else top
