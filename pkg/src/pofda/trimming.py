"""Depth-trimmed and ordinary missing-aware location estimators.

The trimmed mean keeps the m = n - floor(n * alpha) deepest curves and
averages their observed values per grid point. The realized depth
threshold beta is the smallest kept depth; ties at beta are broken by
lowest curve index so the kept set is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import FunctionalSample, _frozen

__all__ = [
    "TrimSpec",
    "LocationEstimate",
    "resolved_keep_count",
    "select_trim",
    "trimmed_mean",
    "ordinary_mean",
]

# Absorbs binary representation error of decimal alphas (0.3 * 10 is a
# hair below 3.0 in float64) so floor(n * alpha) matches the decimal
# arithmetic it stands for.
_FLOOR_SNAP = 1e-9


def resolved_keep_count(n: int, alpha: float) -> int:
    """Number of curves kept by an alpha-trim of an n-curve sample."""
    if n < 1:
        raise ValueError("need at least one curve")
    if not 0.0 <= alpha < 1.0:
        raise ValueError("alpha must lie in [0, 1)")
    trimmed = min(math.floor(n * alpha + _FLOOR_SNAP), n - 1)
    return n - trimmed


@dataclass(frozen=True)
class TrimSpec:
    """Resolved trimming decision: kept indices and realized threshold."""

    alpha: float
    keep_count: int
    beta: float
    kept: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "kept", _frozen(np.asarray(self.kept, dtype=int)))


@dataclass(frozen=True)
class LocationEstimate:
    """Pointwise location estimate with definedness bookkeeping.

    `values` is NaN wherever `defined_mask` is false (no curve observed
    there at all); `fallback_mask` marks points where no retained curve
    was observed and the all-curve mean was used instead.
    """

    values: np.ndarray
    defined_mask: np.ndarray
    fallback_mask: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _frozen(np.asarray(self.values, float)))
        object.__setattr__(self, "defined_mask", _frozen(np.asarray(self.defined_mask, bool)))
        object.__setattr__(self, "fallback_mask", _frozen(np.asarray(self.fallback_mask, bool)))


def select_trim(depths, alpha: float) -> TrimSpec:
    """Pick the keep_count deepest curves, lowest index first among ties."""
    depths = np.asarray(depths, dtype=float)
    if depths.ndim != 1 or depths.size == 0:
        raise ValueError("depths must be a nonempty 1-d array")
    n = depths.size
    m = resolved_keep_count(n, alpha)
    # Stable argsort of the negated depths orders ties by curve index.
    order = np.argsort(-depths, kind="stable")
    kept = np.sort(order[:m])
    beta = float(depths[order[m - 1]])
    return TrimSpec(alpha=float(alpha), keep_count=m, beta=beta, kept=kept)


def _pointwise_mean(values: np.ndarray, mask: np.ndarray):
    counts = mask.sum(axis=0)
    sums = np.where(mask, values, 0.0).sum(axis=0)
    out = np.full(counts.shape, np.nan)
    has = counts > 0
    out[has] = sums[has] / counts[has]
    return out, has


def trimmed_mean(sample: FunctionalSample, trim: TrimSpec) -> LocationEstimate:
    """Pointwise mean of the retained curves' observed values.

    Where some curve is observed but no retained one, the estimate falls
    back to the mean over all observing curves and the point is flagged;
    where nothing is observed the estimate is undefined.
    """
    if trim.kept.size == 0:
        raise ValueError("trim keeps no curves")
    if trim.kept.min() < 0 or trim.kept.max() >= sample.n_curves:
        raise ValueError("kept indices out of range for this sample")

    kept_mean, kept_has = _pointwise_mean(
        sample.values[trim.kept], sample.mask[trim.kept]
    )
    all_mean, any_has = _pointwise_mean(sample.values, sample.mask)

    fallback = any_has & ~kept_has
    values = np.where(fallback, all_mean, kept_mean)
    return LocationEstimate(values=values, defined_mask=any_has, fallback_mask=fallback)


def ordinary_mean(sample: FunctionalSample) -> LocationEstimate:
    """Pointwise mean over all observing curves; undefined at coverage gaps."""
    values, has = _pointwise_mean(sample.values, sample.mask)
    return LocationEstimate(
        values=values,
        defined_mask=has,
        fallback_mask=np.zeros(has.shape, dtype=bool),
    )
