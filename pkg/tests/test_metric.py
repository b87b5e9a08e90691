import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ghsimplex import (
    AsymmetricMatrixError,
    EmptySetError,
    FiniteMetricSpace,
    NegativeDistanceError,
    NonFiniteEntryError,
    NonPositiveLambdaError,
    NonPositiveScaleError,
    NonZeroDiagonalError,
    TriangleViolationError,
    ZeroOffDiagonalError,
    ZeroPointsError,
    hausdorff,
    set_dist_inf,
    set_dist_sup,
    simplex,
    validate,
)


class TestValidation:
    def test_valid_space(self, e1):
        assert e1.n == 3
        assert e1.labels == ("a", "b", "c")
        assert e1.distance(0, 1) == 1.0
        assert e1.distance(2, 0) == 2.0

    def test_zero_points(self):
        with pytest.raises(ZeroPointsError):
            FiniteMetricSpace(np.zeros((0, 0)))

    def test_non_square(self):
        with pytest.raises(AsymmetricMatrixError):
            FiniteMetricSpace([[0, 1]])

    def test_nonzero_diagonal(self):
        with pytest.raises(NonZeroDiagonalError):
            FiniteMetricSpace([[0, 1], [1, 0.5]])

    def test_asymmetry(self):
        with pytest.raises(AsymmetricMatrixError):
            FiniteMetricSpace([[0, 1], [2, 0]])

    def test_negative(self):
        with pytest.raises(NegativeDistanceError):
            FiniteMetricSpace([[0, -1], [-1, 0]])

    def test_zero_off_diagonal(self):
        with pytest.raises(ZeroOffDiagonalError):
            FiniteMetricSpace([[0, 0], [0, 0]])

    def test_non_finite(self):
        with pytest.raises(NonFiniteEntryError):
            FiniteMetricSpace([[0, math.inf], [math.inf, 0]])
        with pytest.raises(NonFiniteEntryError):
            FiniteMetricSpace([[0, math.nan], [math.nan, 0]])

    def test_triangle_violation_reports_triple(self):
        with pytest.raises(TriangleViolationError) as exc:
            FiniteMetricSpace([[0, 1, 9], [1, 0, 1], [9, 1, 0]])
        msg = str(exc.value)
        assert "d[0][2]" in msg and "9" in msg

    def test_triangle_check_can_be_skipped(self):
        space = FiniteMetricSpace(
            [[0, 1, 9], [1, 0, 1], [9, 1, 0]], strict_triangle=False
        )
        assert space.diam == 9.0

    def test_small_asymmetry_within_tolerance_is_averaged(self):
        d = 1.0 + 1e-12
        space = FiniteMetricSpace([[0, 1.0], [d, 0]])
        assert space.distance(0, 1) == space.distance(1, 0)
        assert space.distance(0, 1) == pytest.approx((1.0 + d) / 2, abs=0)

    def test_validate_wrapper(self):
        space = validate([[0, 2], [2, 0]])
        assert isinstance(space, FiniteMetricSpace)

    def test_matrix_is_read_only(self, e1):
        with pytest.raises(ValueError):
            e1.dist[0, 1] = 5.0


class TestDerivedQuantities:
    def test_diam_eps(self, e1):
        assert e1.diam == 2.0
        assert e1.eps == 1.0

    def test_single_point(self):
        p = FiniteMetricSpace([[0.0]])
        assert p.n == 1
        assert p.diam == 0.0
        assert p.eps == 0.0

    def test_default_labels(self):
        space = FiniteMetricSpace([[0, 1], [1, 0]])
        assert space.labels == ("p0", "p1")

    def test_is_simplex(self, e1):
        assert not e1.is_simplex()
        assert simplex(4, 2.5).is_simplex()
        assert FiniteMetricSpace([[0.0]]).is_simplex()

    def test_simplex_constructor(self):
        s = simplex(3, 1.5)
        assert s.n == 3
        assert s.diam == s.eps == 1.5
        assert s.labels == ("z0", "z1", "z2")
        with pytest.raises(ZeroPointsError):
            simplex(0, 1.0)

    def test_simplex_side_must_be_positive(self):
        with pytest.raises(NonPositiveLambdaError):
            simplex(3, 0.0)

    def test_scale(self, e1):
        doubled = e1.scale(2.0)
        assert doubled.diam == 4.0
        assert doubled.eps == 2.0
        assert doubled.labels == e1.labels
        with pytest.raises(NonPositiveScaleError):
            e1.scale(0.0)
        with pytest.raises(NonPositiveScaleError):
            e1.scale(-1.0)

    def test_scale_composes_within_one_ulp(self, e1):
        a, b = 0.3, 7.1
        twice = e1.scale(a).scale(b)
        once = e1.scale(a * b)
        assert np.allclose(twice.dist, once.dist, rtol=2e-16, atol=0.0)

    def test_simplex_iff_eps_equals_diam(self):
        s = simplex(4, 2.0)
        assert s.is_simplex()
        perturbed = np.array(s.dist)
        perturbed[0, 1] = perturbed[1, 0] = 2.5
        assert not FiniteMetricSpace(perturbed).is_simplex()


class TestSetDistances:
    def test_inf_sup(self, e1):
        assert set_dist_inf(e1, (0,), (1, 2)) == 1.0
        assert set_dist_sup(e1, (0,), (1, 2)) == 2.0
        assert set_dist_inf(e1, (0, 1), (0, 1)) == 0.0

    def test_empty_set_raises(self, e1):
        with pytest.raises(EmptySetError):
            set_dist_inf(e1, (), (0,))
        with pytest.raises(EmptySetError):
            hausdorff(e1, (0,), ())

    def test_out_of_range(self, e1):
        with pytest.raises(IndexError):
            set_dist_inf(e1, (0,), (7,))

    def test_hausdorff_frozen_values(self, e1):
        # farthest point of {b,c} from {a} is c at distance 2
        assert hausdorff(e1, (0,), (1, 2)) == 2.0
        # both directed deviations are driven by d(b,c) = d(a,c) = 2
        assert hausdorff(e1, (0, 1), (0, 2)) == 2.0
        assert hausdorff(e1, (0, 1, 2), (0, 1, 2)) == 0.0

    def test_hausdorff_is_a_metric_on_subsets(self):
        # symmetry, identity of indiscernibles, triangle inequality over
        # every subset pair of a 5-point space
        import itertools

        from ghsimplex import random_metric

        space = random_metric(5, seed=314)
        subsets = [
            s
            for r in range(1, 6)
            for s in itertools.combinations(range(5), r)
        ]
        values = {
            (A, B): hausdorff(space, A, B) for A in subsets for B in subsets
        }
        for A in subsets:
            for B in subsets:
                assert values[A, B] == values[B, A]
                assert (values[A, B] == 0.0) == (A == B)
                assert values[A, B] <= space.diam + 1e-12
                assert set_dist_inf(space, A, B) <= set_dist_sup(space, A, B)
                assert set_dist_sup(space, A, B) <= space.diam + 1e-12
        for A in subsets:
            for B in subsets:
                for C in subsets:
                    assert values[A, C] <= values[A, B] + values[B, C] + 1e-12

    def test_hausdorff_definition_agreement(self, e1):
        # recompute from the definition for every subset pair
        import itertools

        idx = range(e1.n)
        subsets = [
            s for r in (1, 2, 3) for s in itertools.combinations(idx, r)
        ]
        for A in subsets:
            for B in subsets:
                direct = max(
                    max(min(e1.distance(a, b) for b in B) for a in A),
                    max(min(e1.distance(a, b) for a in A) for b in B),
                )
                assert hausdorff(e1, A, B) == direct


def _matrix_strategy(n):
    return st.lists(
        st.floats(0.1, 10.0, allow_nan=False, allow_infinity=False),
        min_size=n * (n - 1) // 2,
        max_size=n * (n - 1) // 2,
    )


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(st.just(n), _matrix_strategy(n))))
def test_semimetric_construction_and_scale_equivariance(args):
    n, sides = args
    d = np.zeros((n, n))
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            d[i, j] = d[j, i] = sides[k]
            k += 1
    space = FiniteMetricSpace(d, strict_triangle=False)
    assert space.diam == max(sides)
    assert space.eps == min(sides)
    scaled = space.scale(3.0)
    assert scaled.diam == pytest.approx(3.0 * space.diam, rel=1e-15)
    assert scaled.eps == pytest.approx(3.0 * space.eps, rel=1e-15)
