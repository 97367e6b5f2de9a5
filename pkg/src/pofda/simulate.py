"""Synthetic curve generation: Gaussian process draws, contamination, masking.

Curves follow trend(t) plus a zero-mean Gaussian process with covariance
0.5 ** (|t - s| * theta). Contamination adds magnitude shifts to a
random fraction of curves (symmetric or one-sided sign, full path or
only beyond a random onset). Observation mechanisms then mask each
curve to a random union of grid intervals.

Every draw is keyed to (seed, curve index) through spawned seed
sequences, so generating curves serially or in parallel yields
bit-identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np
from numpy.random import Generator, SeedSequence, default_rng

from .core import FunctionalSample, Grid, PartialCurve, build_sample

__all__ = [
    "GpModel",
    "ContaminationKind",
    "ContaminationSpec",
    "ObservationKind",
    "ObservationSpec",
    "sample_gp",
    "apply_contamination",
    "contaminate",
    "observe",
    "default_trend",
]

_MAX_MASK_RETRIES = 1000


def seed_sequence(seed) -> SeedSequence:
    """Normalize int / tuple / SeedSequence seeds to a SeedSequence."""
    if isinstance(seed, SeedSequence):
        return seed
    return SeedSequence(seed)


def default_trend(t: np.ndarray) -> np.ndarray:
    """Linear trend 4t used by the uncontaminated base model."""
    return 4.0 * np.asarray(t, dtype=float)


@dataclass(frozen=True)
class GpModel:
    """Gaussian process curve model: trend plus exponential-decay noise.

    The noise covariance is C(s, t) = 0.5 ** (|t - s| * theta) with unit
    marginal variance; larger theta decorrelates faster.
    """

    grid: Grid
    theta: float
    trend: Callable[[np.ndarray], np.ndarray] = default_trend

    def __post_init__(self) -> None:
        if not (np.isfinite(self.theta) and self.theta > 0.0):
            raise ValueError("theta must be a positive finite rate")

    def trend_values(self) -> np.ndarray:
        vals = np.asarray(self.trend(self.grid.points), dtype=float)
        vals = np.broadcast_to(vals, self.grid.points.shape).copy()
        if not np.all(np.isfinite(vals)):
            raise ValueError("trend must be finite on the grid")
        return vals

    def covariance(self) -> np.ndarray:
        """Covariance matrix on the grid, before any jitter."""
        pts = self.grid.points
        dist = np.abs(pts[:, None] - pts[None, :])
        return 0.5 ** (dist * self.theta)


def _factor_covariance(cov: np.ndarray) -> np.ndarray:
    """Cholesky factor with escalating diagonal jitter 1e-10 .. 1e-6."""
    try:
        return np.linalg.cholesky(cov)
    except np.linalg.LinAlgError:
        pass
    eye = np.eye(cov.shape[0])
    for exponent in range(-10, -5):
        try:
            return np.linalg.cholesky(cov + (10.0**exponent) * eye)
        except np.linalg.LinAlgError:
            continue
    raise np.linalg.LinAlgError(
        "covariance factorization failed after jitter up to 1e-6; "
        "the model covariance is ill-conditioned on this grid"
    )


def sample_gp(model: GpModel, n: int, seed) -> list[PartialCurve]:
    """Draw n fully observed curves trend + L z with i.i.d. normal z.

    Curve i is produced from the i-th spawned child of the seed, so the
    result does not depend on generation order.
    """
    if n < 1:
        raise ValueError("need at least one curve")
    L = _factor_covariance(model.covariance())
    g = model.trend_values()
    T = model.grid.size
    children = seed_sequence(seed).spawn(n)
    curves = []
    for child in children:
        z = default_rng(child).standard_normal(T)
        curves.append(PartialCurve.fully_observed(g + L @ z))
    return curves


class ContaminationKind(str, Enum):
    NONE = "none"
    SYMMETRIC = "sym"
    ASYMMETRIC = "asym"
    PARTIAL = "partial"


@dataclass(frozen=True)
class ContaminationSpec:
    """Shift contamination: probability q, magnitude, and shape kind."""

    kind: ContaminationKind
    q: float = 0.0
    magnitude: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", ContaminationKind(self.kind))
        if not (np.isfinite(self.q) and 0.0 <= self.q <= 1.0):
            raise ValueError("q must lie in [0, 1]")
        if not (np.isfinite(self.magnitude) and self.magnitude >= 0.0):
            raise ValueError("magnitude must be finite and nonnegative")


def apply_contamination(
    grid: Grid,
    curves: Sequence[PartialCurve],
    kind: ContaminationKind,
    magnitude: float,
    flags,
    signs,
    onsets,
) -> list[PartialCurve]:
    """Apply shift contamination with explicitly supplied draws.

    flags (0/1 per curve) select contaminated curves, signs (+-1) the
    direction for the symmetric kinds, onsets the per-curve threshold
    beyond which the partial kind shifts. Curves must be fully observed:
    contamination happens before masking.
    """
    kind = ContaminationKind(kind)
    flags = np.asarray(flags, dtype=float)
    signs = np.asarray(signs, dtype=float)
    onsets = np.asarray(onsets, dtype=float)
    n = len(curves)
    if flags.shape != (n,) or signs.shape != (n,) or onsets.shape != (n,):
        raise ValueError("flags, signs, and onsets must have one entry per curve")
    if not all(c.is_fully_observed for c in curves):
        raise ValueError("contamination applies to fully observed curves")

    if kind is ContaminationKind.NONE:
        return list(curves)

    out = []
    for i, curve in enumerate(curves):
        if kind is ContaminationKind.SYMMETRIC:
            shift = flags[i] * signs[i] * magnitude
        elif kind is ContaminationKind.ASYMMETRIC:
            shift = flags[i] * magnitude
        else:  # PARTIAL: shift only where t >= onset
            shift = np.where(
                grid.points >= onsets[i], flags[i] * signs[i] * magnitude, 0.0
            )
        out.append(PartialCurve.fully_observed(curve.values + shift))
    return out


def contaminate(
    grid: Grid, curves: Sequence[PartialCurve], spec: ContaminationSpec, seed
) -> list[PartialCurve]:
    """Draw contamination indicators per curve and apply the shifts.

    All three draws (flag, sign, onset) are consumed for every curve
    regardless of kind, so the same seed contaminates the same curves
    under each kind.
    """
    if spec.kind is ContaminationKind.NONE:
        return list(curves)
    n = len(curves)
    children = seed_sequence(seed).spawn(n)
    flags = np.empty(n)
    signs = np.empty(n)
    onsets = np.empty(n)
    for i, child in enumerate(children):
        rng = default_rng(child)
        flags[i] = 1.0 if rng.random() < spec.q else 0.0
        signs[i] = 1.0 if rng.random() < 0.5 else -1.0
        onsets[i] = rng.random()
    return apply_contamination(
        grid, curves, spec.kind, spec.magnitude, flags, signs, onsets
    )


class ObservationKind(str, Enum):
    FULL = "full"
    RANDOM_INTERVALS = "intervals"
    CENTERED_INTERVAL = "centered"


@dataclass(frozen=True)
class ObservationSpec:
    """Masking mechanism and its expected observation proportion."""

    kind: ObservationKind
    p_obs: float = 1.0
    n_intervals: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", ObservationKind(self.kind))
        if not (np.isfinite(self.p_obs) and 0.0 < self.p_obs <= 1.0):
            raise ValueError("p_obs must lie in (0, 1]")
        if self.kind is ObservationKind.RANDOM_INTERVALS:
            if self.n_intervals < 1:
                raise ValueError("need at least one interval")
            cells = self._n_cells()
            if cells < 2 * self.n_intervals - 1:
                raise ValueError(
                    f"cannot place {self.n_intervals} disjoint intervals with "
                    f"expected proportion {self.p_obs}; reduce n_intervals"
                )

    def _n_cells(self) -> int:
        # floor((m - p) / p) uniform draws partition [0, 1] into that + 1 cells.
        return math.floor((self.n_intervals - self.p_obs) / self.p_obs) + 1


def _centered_bounds(p: float, rng: Generator) -> tuple[float, float]:
    # start in [mid - p, mid) and end in (mid, mid + p] for p <= 1/2;
    # start in [0, 1 - p) and end in (p, 1] otherwise.
    if p <= 0.5:
        start = (0.5 - p) + p * rng.random()
        end = 0.5 + p * (1.0 - rng.random())
    else:
        start = (1.0 - p) * rng.random()
        end = p + (1.0 - p) * (1.0 - rng.random())
    return start, end


def _centered_mask(pts: np.ndarray, p: float, rng: Generator) -> np.ndarray:
    if p == 1.0:
        return np.ones(pts.shape, dtype=bool)
    for _ in range(_MAX_MASK_RETRIES):
        start, end = _centered_bounds(p, rng)
        mask = (pts >= start) & (pts <= end)
        if mask.any():
            return mask
    raise RuntimeError("observation mask stayed empty after maximum retries")


def _intervals_mask(
    pts: np.ndarray, m: int, p: float, cells: int, rng: Generator
) -> np.ndarray:
    for _ in range(_MAX_MASK_RETRIES):
        cuts = np.sort(rng.random(cells - 1))
        edges = np.concatenate(([0.0], cuts, [1.0]))
        # m non-adjacent cells, uniform over all such subsets: pick
        # combinations from cells - m + 1 slots and re-spread.
        picks = np.sort(rng.choice(cells - m + 1, size=m, replace=False)) + np.arange(m)
        lengths = edges[picks + 1] - edges[picks]
        total = lengths.sum()
        if abs(total - p) > 0.25 * p:
            continue
        mask = np.zeros(pts.shape, dtype=bool)
        for j in picks:
            mask |= (pts >= edges[j]) & (pts <= edges[j + 1])
        if mask.any():
            return mask
    raise RuntimeError("observation mask stayed empty after maximum retries")


def _draw_mask(pts: np.ndarray, spec: ObservationSpec, rng: Generator) -> np.ndarray:
    if spec.kind is ObservationKind.FULL:
        return np.ones(pts.shape, dtype=bool)
    if spec.kind is ObservationKind.CENTERED_INTERVAL:
        return _centered_mask(pts, spec.p_obs, rng)
    return _intervals_mask(pts, spec.n_intervals, spec.p_obs, spec._n_cells(), rng)


def observe(
    grid: Grid, curves: Sequence[PartialCurve], spec: ObservationSpec, seed
) -> FunctionalSample:
    """Mask each curve with an independently drawn observation set.

    Masks intersect any preexisting curve masks; a draw leaving a curve
    with no observed grid point is redrawn up to a bounded retry count.
    """
    pts = grid.points
    children = seed_sequence(seed).spawn(len(curves))
    masked = []
    for curve, child in zip(curves, children):
        if len(curve) != grid.size:
            raise ValueError("curve length does not match the grid")
        rng = default_rng(child)
        for _ in range(_MAX_MASK_RETRIES):
            mask = _draw_mask(pts, spec, rng) & curve.mask
            if mask.any():
                break
        else:
            raise RuntimeError("observation mask stayed empty after maximum retries")
        masked.append(PartialCurve(curve.values, mask))
    return build_sample(grid, masked)
