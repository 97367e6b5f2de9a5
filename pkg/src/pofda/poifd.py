"""Integrated functional depth for fully and partially observed curves.

The sample depth of a pair (curve, observation set) against a sample is
the coverage-weighted average of pointwise univariate depths over the
curve's observed grid points:

    sum_{t in O} D(x(t), P_{t,n}) phi(q_n(t)) / sum_{t in O} phi(q_n(t))

with q_n the per-point fraction of observing curves and phi a bounded
continuous weight shaping function on [0, 1] (identity by default).
When every curve is fully observed this reduces exactly to the
integrated depth with uniform point weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from .core import FunctionalSample, PartialCurve, _frozen
from .depths import DepthKind, depth_from_counts

__all__ = [
    "PhiLike",
    "NAMED_PHI",
    "resolve_phi",
    "DepthResult",
    "ifd",
    "poifd_sample",
    "poifd_of",
    "poifd_all",
    "k_functional",
    "pointwise_depth_field",
]

PhiLike = Union[str, Callable[[np.ndarray], np.ndarray]]

NAMED_PHI: dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "identity": lambda q: np.asarray(q, dtype=float),
    "sqrt": lambda q: np.sqrt(q),
    "square": lambda q: np.square(q),
    "constant": lambda q: np.ones_like(np.asarray(q, dtype=float)),
}


def resolve_phi(phi: PhiLike) -> Callable[[np.ndarray], np.ndarray]:
    """Turn a named option or callable into a coverage-weight function."""
    if callable(phi):
        return phi
    try:
        return NAMED_PHI[phi]
    except KeyError:
        raise ValueError(
            f"unknown phi {phi!r}; named options: {sorted(NAMED_PHI)}"
        ) from None


def _phi_of_coverage(phi: PhiLike, coverage: np.ndarray) -> np.ndarray:
    out = np.asarray(resolve_phi(phi)(coverage), dtype=float)
    if out.shape != coverage.shape:
        raise ValueError("phi must map the coverage array elementwise")
    if not np.all(np.isfinite(out)) or np.any(out < 0.0):
        raise ValueError("phi must be finite and nonnegative on [0, 1]")
    return out


def _point_base_weights(
    sample: FunctionalSample, phi: PhiLike, weighting: str
) -> np.ndarray:
    """Unnormalized per-point weights phi(q_n), optionally trapezoid-scaled."""
    base = _phi_of_coverage(phi, sample.coverage)
    if weighting == "trapezoid":
        base = base * sample.grid.trapezoid_weights()
    elif weighting != "points":
        raise ValueError("weighting must be 'points' or 'trapezoid'")
    return base


def pointwise_depth_field(sample: FunctionalSample, kind: DepthKind) -> np.ndarray:
    """Per-curve per-point sample depths, NaN where a curve is unobserved.

    Each curve's own value participates in the pointwise empirical
    distribution it is evaluated against (plug-in convention).
    """
    kind = DepthKind(kind)
    n, T = sample.values.shape
    out = np.full((n, T), np.nan)
    for ell in range(T):
        col_mask = sample.mask[:, ell]
        if not col_mask.any():
            continue
        vals = sample.values[col_mask, ell]
        sorted_vals = np.sort(vals)
        k = sorted_vals.size
        c_le = np.searchsorted(sorted_vals, vals, side="right")
        c_lt = np.searchsorted(sorted_vals, vals, side="left")
        out[col_mask, ell] = depth_from_counts(kind, c_le, c_lt, k)
    return out


@dataclass(frozen=True)
class DepthResult:
    """Depths of every curve in a sample plus their building blocks.

    `contributions` holds the pointwise depth field D(x_i(t), P_{t,n}) and
    `weights` the per-curve normalized coverage weights; both are NaN at
    unobserved slots, and per curve the weights sum to 1 over its
    observed points, so `poifd` can be re-checked as the weighted sum of
    the contributions.
    """

    poifd: np.ndarray
    contributions: np.ndarray
    weights: np.ndarray
    kind: DepthKind

    def __post_init__(self) -> None:
        object.__setattr__(self, "poifd", _frozen(np.asarray(self.poifd, float)))
        object.__setattr__(self, "contributions", _frozen(self.contributions))
        object.__setattr__(self, "weights", _frozen(self.weights))

    @property
    def n_curves(self) -> int:
        return int(self.poifd.size)


def poifd_all(
    sample: FunctionalSample,
    kind: DepthKind = DepthKind.FRAIMAN_MUNIZ,
    phi: PhiLike = "identity",
    weighting: str = "points",
) -> DepthResult:
    """Integrated depth of every curve in the sample.

    Parameters
    ----------
    sample : FunctionalSample
        Curves plus masks on a shared grid.
    kind : DepthKind
        Univariate depth used pointwise.
    phi : str or callable
        Coverage-weight shaping function on [0, 1].
    weighting : {'points', 'trapezoid'}
        'points' matches the plain sum over observed grid points;
        'trapezoid' additionally scales by trapezoid cell widths.
    """
    contributions = pointwise_depth_field(sample, kind)
    base = _point_base_weights(sample, phi, weighting)

    raw = np.where(sample.mask, base[None, :], 0.0)
    norms = raw.sum(axis=1)
    if np.any(norms <= 0.0):
        bad = int(np.nonzero(norms <= 0.0)[0][0])
        raise ValueError(
            f"degenerate phi: weights of curve {bad} sum to zero over its observed points"
        )
    normalized = raw / norms[:, None]
    depths = (normalized * np.where(sample.mask, contributions, 0.0)).sum(axis=1)
    weights = np.where(sample.mask, normalized, np.nan)
    return DepthResult(depths, contributions, weights, DepthKind(kind))


def poifd_of(
    sample: FunctionalSample,
    curve: PartialCurve,
    kind: DepthKind = DepthKind.FRAIMAN_MUNIZ,
    phi: PhiLike = "identity",
    weighting: str = "points",
) -> float:
    """Integrated depth of an arbitrary (curve, mask) pair against a sample.

    Grid points of the curve's observation set where no sample curve is
    observed carry no empirical information and are skipped. For a curve
    belonging to the sample this never happens and the result matches
    `poifd_sample`.
    """
    kind = DepthKind(kind)
    if len(curve) != sample.grid.size:
        raise ValueError("curve length does not match the sample grid")
    usable = curve.mask & (sample.counts > 0)
    if not usable.any():
        raise ValueError("no sample curve observed on the curve's observation set")

    base = _point_base_weights(sample, phi, weighting)
    points = np.nonzero(usable)[0]
    depth_vals = np.empty(points.size)
    for j, ell in enumerate(points):
        obs = sample.observed_at(ell)
        sorted_vals = np.sort(obs)
        k = sorted_vals.size
        x = curve.values[ell]
        c_le = np.searchsorted(sorted_vals, x, side="right")
        c_lt = np.searchsorted(sorted_vals, x, side="left")
        depth_vals[j] = depth_from_counts(kind, c_le, c_lt, k)
    w = base[points]
    norm = w.sum()
    if norm <= 0.0:
        raise ValueError("degenerate phi: weights sum to zero over the observed points")
    return float((depth_vals * w).sum() / norm)


def poifd_sample(
    sample: FunctionalSample,
    curve_index: int,
    kind: DepthKind = DepthKind.FRAIMAN_MUNIZ,
    phi: PhiLike = "identity",
    weighting: str = "points",
) -> float:
    """Integrated depth of one sample curve (coverage positive by construction)."""
    if not 0 <= curve_index < sample.n_curves:
        raise ValueError(f"curve index {curve_index} out of range")
    return poifd_of(sample, sample.curves[curve_index], kind, phi, weighting)


def _resolve_fixed_weights(sample: FunctionalSample, w) -> np.ndarray:
    if w is None or (isinstance(w, str) and w == "uniform"):
        return sample.grid.uniform_weights()
    if isinstance(w, str):
        if w == "trapezoid":
            return sample.grid.trapezoid_weights()
        raise ValueError(f"unknown weight name {w!r}")
    w = np.asarray(w, dtype=float)
    if w.shape != (sample.grid.size,):
        raise ValueError("weight vector length does not match the grid")
    if np.any(w < 0.0) or not np.all(np.isfinite(w)):
        raise ValueError("weights must be finite and nonnegative")
    if abs(w.sum() - 1.0) > 1e-9:
        raise ValueError("weights must sum to 1")
    return w


def ifd(
    sample: FunctionalSample,
    curve: PartialCurve,
    kind: DepthKind = DepthKind.FRAIMAN_MUNIZ,
    w=None,
) -> float:
    """Integrated depth of a fully observed curve in a fully observed sample.

    `w` is a normalized weight vector over the grid ('uniform' default,
    'trapezoid', or an explicit array summing to 1).
    """
    kind = DepthKind(kind)
    if not bool(sample.mask.all()):
        raise ValueError("ifd requires a fully observed sample")
    if not curve.is_fully_observed:
        raise ValueError("ifd requires a fully observed curve")
    if len(curve) != sample.grid.size:
        raise ValueError("curve length does not match the sample grid")
    weights = _resolve_fixed_weights(sample, w)

    T = sample.grid.size
    depth_vals = np.empty(T)
    for ell in range(T):
        sorted_vals = np.sort(sample.values[:, ell])
        k = sorted_vals.size
        x = curve.values[ell]
        c_le = np.searchsorted(sorted_vals, x, side="right")
        c_lt = np.searchsorted(sorted_vals, x, side="left")
        depth_vals[ell] = depth_from_counts(kind, c_le, c_lt, k)
    return float((depth_vals * weights).sum())


def k_functional(
    sample: FunctionalSample,
    curve: PartialCurve,
    w=None,
    phi: PhiLike | None = None,
) -> float:
    """Weighted average of the raw ECDF values F_{n,t}(x(t)) along a curve.

    Diagnostic companion of the integrated depths: identical weighting
    machinery but integrating the plain ECDF height instead of a depth.
    Exactly one weighting mode applies: a fixed weight vector `w`
    (restricted to the curve's usable points and renormalized), or
    coverage weights phi(q_n) when `phi` is given. Defaults to
    phi='identity' when neither is supplied.
    """
    if w is not None and phi is not None:
        raise ValueError("pass either fixed weights w or phi, not both")
    if len(curve) != sample.grid.size:
        raise ValueError("curve length does not match the sample grid")
    usable = curve.mask & (sample.counts > 0)
    if not usable.any():
        raise ValueError("no sample curve observed on the curve's observation set")

    if phi is None and w is None:
        phi = "identity"
    if phi is not None:
        base = _phi_of_coverage(phi, sample.coverage)
    else:
        base = _resolve_fixed_weights(sample, w)

    points = np.nonzero(usable)[0]
    F = np.empty(points.size)
    for j, ell in enumerate(points):
        obs = sample.observed_at(ell)
        sorted_vals = np.sort(obs)
        F[j] = np.searchsorted(sorted_vals, curve.values[ell], side="right") / sorted_vals.size
    weights = base[points]
    norm = weights.sum()
    if norm <= 0.0:
        raise ValueError("weights sum to zero over the curve's observed points")
    return float((F * weights).sum() / norm)
