"""Pointwise univariate depths built from empirical distribution counts.

Each sample depth is one integer-count formula with a single final
division, so the returned float is the correctly rounded value of the
exact rational it represents. All three depths depend on the data only
through ECDF counts, hence are invariant under common strictly
increasing transformations of the values and the query point.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .core import PointwiseEcdf

__all__ = [
    "DepthKind",
    "tukey_depth",
    "simplicial_depth",
    "fm_depth",
    "pointwise_depth",
    "depth_from_counts",
    "depth_from_cdf",
]


class DepthKind(str, Enum):
    """Univariate depth plugged into the integrated functional depths."""

    TUKEY = "tukey"
    SIMPLICIAL = "simplicial"
    FRAIMAN_MUNIZ = "fm"


def _tukey_counts(c_le, c_lt, k):
    # min(F(x), 1 - F(x-)) = min(c_le, k - c_lt) / k
    return np.minimum(c_le, k - c_lt) / k


def _simplicial_counts(c_le, c_lt, k):
    # 2 F(x) (1 - F(x-)) = 2 c_le (k - c_lt) / k^2
    return (2 * c_le * (k - c_lt)) / (k * k)


def _fm_counts(c_le, c_lt, k):
    # 1 - |1/2 - F(x)| = (2k - |k - 2 c_le|) / (2k)
    return (2 * k - np.abs(k - 2 * c_le)) / (2 * k)


_COUNT_KERNELS = {
    DepthKind.TUKEY: _tukey_counts,
    DepthKind.SIMPLICIAL: _simplicial_counts,
    DepthKind.FRAIMAN_MUNIZ: _fm_counts,
}


def depth_from_counts(kind: DepthKind, c_le, c_lt, k):
    """Sample depth from the counts (#<= x, #< x) out of k observations."""
    return _COUNT_KERNELS[DepthKind(kind)](c_le, c_lt, k)


def tukey_depth(ecdf: PointwiseEcdf, x: float) -> float:
    """Halfspace depth min(F(x), 1 - F(x-)) of x under the sample ECDF."""
    return float(_tukey_counts(ecdf.count_le(x), ecdf.count_lt(x), ecdf.size))


def simplicial_depth(ecdf: PointwiseEcdf, x: float) -> float:
    """Probability 2 F(x)(1 - F(x-)) that a random data interval covers x."""
    return float(_simplicial_counts(ecdf.count_le(x), ecdf.count_lt(x), ecdf.size))


def fm_depth(ecdf: PointwiseEcdf, x: float) -> float:
    """CDF centrality 1 - |1/2 - F(x)|; ranges over [1/2, 1]."""
    return float(_fm_counts(ecdf.count_le(x), ecdf.count_lt(x), ecdf.size))


def pointwise_depth(ecdf: PointwiseEcdf, x: float, kind: DepthKind) -> float:
    """Dispatch to one of the univariate sample depths."""
    return float(depth_from_counts(kind, ecdf.count_le(x), ecdf.count_lt(x), ecdf.size))


def depth_from_cdf(kind: DepthKind, cdf_values):
    """Population depth for an atomless marginal, where F(x-) = F(x)."""
    F = np.asarray(cdf_values, dtype=float)
    kind = DepthKind(kind)
    if kind is DepthKind.TUKEY:
        return np.minimum(F, 1.0 - F)
    if kind is DepthKind.SIMPLICIAL:
        return 2.0 * F * (1.0 - F)
    return 1.0 - np.abs(0.5 - F)
