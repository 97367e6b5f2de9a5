import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pofda.core import Grid, PartialCurve, build_sample
from pofda.poifd import poifd_all
from pofda.trimming import (
    ordinary_mean,
    resolved_keep_count,
    select_trim,
    trimmed_mean,
)

from conftest import constant_sample, random_masked_sample


class TestSelectTrim:
    def test_hand_example(self):
        t = select_trim([0.2, 0.4, 0.6, 0.4, 0.2], alpha=0.4)
        assert t.keep_count == 3
        np.testing.assert_array_equal(t.kept, [1, 2, 3])
        assert t.beta == 0.4

    def test_alpha_zero_keeps_all(self):
        depths = [0.5, 0.1, 0.9]
        t = select_trim(depths, alpha=0.0)
        np.testing.assert_array_equal(t.kept, [0, 1, 2])
        assert t.beta == 0.1

    def test_all_equal_tie_break_by_index(self):
        t = select_trim([0.7] * 5, alpha=0.4)
        np.testing.assert_array_equal(t.kept, [0, 1, 2])

    def test_kept_dominate_dropped(self, rng):
        for _ in range(20):
            depths = np.round(rng.random(rng.integers(1, 12)), 1)
            t = select_trim(depths, alpha=float(rng.choice([0.0, 0.2, 0.5, 0.8])))
            dropped = np.setdiff1d(np.arange(depths.size), t.kept)
            if dropped.size:
                assert depths[t.kept].min() >= depths[dropped].max()
            assert depths[t.kept].min() == t.beta
            share = np.mean(depths >= t.beta)
            assert share >= 1.0 - t.alpha - 1e-12

    def test_empty_depths(self):
        with pytest.raises(ValueError):
            select_trim([], alpha=0.1)

    def test_alpha_out_of_range(self):
        with pytest.raises(ValueError):
            select_trim([0.5], alpha=1.0)
        with pytest.raises(ValueError):
            select_trim([0.5], alpha=-0.1)

    def test_keep_count_matches_decimal_floor(self):
        # float 30 * 0.7 is slightly below 21; the snap keeps the
        # decimal-arithmetic answer
        for n in range(1, 31):
            for tenth in range(10):
                alpha = tenth / 10
                expected = n - math.floor(Fraction(tenth, 10) * n)
                assert resolved_keep_count(n, alpha) == expected, (n, alpha)


class TestTrimmedMean:
    def test_constant_curves_hand_example(self):
        s = constant_sample([0.0, 1.0, 2.0, 3.0, 4.0], grid_size=4)
        depths = poifd_all(s, kind="tukey").poifd
        np.testing.assert_allclose(depths, [0.2, 0.4, 0.6, 0.4, 0.2], atol=1e-15)
        est = trimmed_mean(s, select_trim(depths, alpha=0.4))
        np.testing.assert_allclose(est.values, 2.0, atol=1e-15)
        assert est.defined_mask.all()
        assert not est.fallback_mask.any()

    def test_alpha_zero_equals_ordinary_mean_exactly(self, rng):
        for _ in range(5):
            s = random_masked_sample(rng, 6, 9)
            depths = poifd_all(s).poifd
            est_t = trimmed_mean(s, select_trim(depths, alpha=0.0))
            est_o = ordinary_mean(s)
            np.testing.assert_array_equal(est_t.values, est_o.values)
            np.testing.assert_array_equal(est_t.defined_mask, est_o.defined_mask)
            assert not est_t.fallback_mask.any()

    def test_fallback_at_point_covered_only_by_dropped(self):
        grid = Grid.uniform(3)
        curves = [
            PartialCurve(np.array([0.0, 0.0, 0.0]), np.array([True, True, False])),
            PartialCurve(np.array([1.0, 1.0, 0.0]), np.array([True, True, False])),
            PartialCurve(np.array([9.0, 9.0, 9.0]), np.array([True, True, True])),
        ]
        s = build_sample(grid, curves)
        trim = select_trim([0.9, 0.8, 0.1], alpha=1 / 3)
        np.testing.assert_array_equal(trim.kept, [0, 1])
        est = trimmed_mean(s, trim)
        assert est.fallback_mask[2]
        assert est.values[2] == 9.0  # all-curve mean there
        assert est.defined_mask.all()
        np.testing.assert_allclose(est.values[:2], 0.5)

    def test_undefined_where_nothing_observed(self):
        grid = Grid.uniform(3)
        curves = [
            PartialCurve(np.array([1.0, 0.0, 1.0]), np.array([True, False, True])),
            PartialCurve(np.array([3.0, 0.0, 3.0]), np.array([True, False, True])),
        ]
        s = build_sample(grid, curves)
        est = trimmed_mean(s, select_trim([0.5, 0.4], alpha=0.0))
        assert not est.defined_mask[1]
        assert np.isnan(est.values[1])

    def test_bounds_within_retained_range(self, rng):
        for _ in range(10):
            s = random_masked_sample(rng, 8, 7)
            trim = select_trim(poifd_all(s).poifd, alpha=0.25)
            est = trimmed_mean(s, trim)
            kept_vals = s.values[trim.kept]
            kept_mask = s.mask[trim.kept]
            for ell in range(7):
                if est.defined_mask[ell] and not est.fallback_mask[ell]:
                    col = kept_vals[kept_mask[:, ell], ell]
                    assert col.min() - 1e-12 <= est.values[ell] <= col.max() + 1e-12

    def test_translation_equivariance(self, rng):
        s = random_masked_sample(rng, 7, 8)
        base_depths = poifd_all(s).poifd
        base_trim = select_trim(base_depths, alpha=0.3)
        base_est = trimmed_mean(s, base_trim)
        for c in (-10.0, 0.5, 1e3):
            shifted = build_sample(
                s.grid, [PartialCurve(cv.values + c, cv.mask) for cv in s.curves]
            )
            depths = poifd_all(shifted).poifd
            np.testing.assert_array_equal(depths, base_depths)
            trim = select_trim(depths, alpha=0.3)
            np.testing.assert_array_equal(trim.kept, base_trim.kept)
            est = trimmed_mean(shifted, trim)
            defined = est.defined_mask
            np.testing.assert_allclose(
                est.values[defined], base_est.values[defined] + c, atol=1e-9
            )

    def test_outlier_rejected(self):
        s = constant_sample([0.0] * 9 + [100.0], grid_size=5)
        for kind in ("tukey", "simplicial", "fm"):
            depths = poifd_all(s, kind=kind).poifd
            trim = select_trim(depths, alpha=0.2)
            assert 9 not in trim.kept
            est = trimmed_mean(s, trim)
            np.testing.assert_allclose(est.values, 0.0, atol=1e-15)

    def test_invalid_trim_spec(self, rng):
        s = random_masked_sample(rng, 3, 4)
        trim = select_trim([0.1, 0.2, 0.3, 0.4], alpha=0.0)
        with pytest.raises(ValueError):
            trimmed_mean(s, trim)


class TestOrdinaryMean:
    def test_identical_curves(self):
        grid = Grid.uniform(4)
        mask = np.array([True, False, True, True])
        vals = np.array([1.0, 0.0, 3.0, 4.0])
        s = build_sample(grid, [PartialCurve(vals, mask)] * 3)
        est = ordinary_mean(s)
        np.testing.assert_array_equal(est.defined_mask, mask)
        np.testing.assert_allclose(est.values[mask], vals[mask])

    def test_two_observed(self):
        grid = Grid.uniform(2)
        s = build_sample(
            grid,
            [
                PartialCurve.fully_observed([0.0, 0.0]),
                PartialCurve.fully_observed([4.0, 4.0]),
            ],
        )
        assert ordinary_mean(s).values[0] == 2.0

    def test_skips_unobserved_curve(self):
        grid = Grid.uniform(2)
        curves = [
            PartialCurve.fully_observed([1.0, 1.0]),
            PartialCurve.fully_observed([3.0, 3.0]),
            PartialCurve(np.array([0.0, 5.0]), np.array([False, True])),
        ]
        s = build_sample(grid, curves)
        assert ordinary_mean(s).values[0] == 2.0
        assert ordinary_mean(s).values[1] == 3.0


@given(
    n=st.integers(1, 40),
    tenth=st.integers(0, 9),
)
@settings(max_examples=80, deadline=None)
def test_keep_count_property(n, tenth):
    alpha = tenth / 10
    expected = n - math.floor(Fraction(tenth, 10) * n)
    assert resolved_keep_count(n, alpha) == expected
    depths = np.linspace(0.0, 1.0, n)
    assert select_trim(depths, alpha).kept.size == expected
