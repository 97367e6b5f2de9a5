"""CSV formats for curves, masks, depths, and location estimates.

Curve files carry the grid in a `t` column and one column per curve;
unobserved entries are empty cells. Floats are written with shortest
round-trip precision, so read(write(sample)) reproduces the sample
exactly for finite values.
"""

from __future__ import annotations

import csv
from typing import Sequence

import numpy as np

from .core import FunctionalSample, Grid, PartialCurve, build_sample
from .trimming import LocationEstimate

__all__ = [
    "curve_names",
    "write_curves_csv",
    "read_curves_csv",
    "write_mask_csv",
    "write_coverage_csv",
    "write_depth_csv",
    "write_estimate_csv",
]


def _fmt(x: float) -> str:
    return repr(float(x))


def curve_names(n: int) -> list[str]:
    return [f"curve_{i + 1}" for i in range(n)]


def _open_writer(path):
    handle = open(path, "w", newline="")
    return handle, csv.writer(handle, lineterminator="\n")


def write_curves_csv(
    path, sample: FunctionalSample, names: Sequence[str] | None = None
) -> None:
    """Write `t,curve_1,...` rows with empty cells at unobserved points."""
    names = list(names) if names is not None else curve_names(sample.n_curves)
    if len(names) != sample.n_curves:
        raise ValueError("one name per curve required")
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(["t", *names])
        for ell, t in enumerate(sample.grid.points):
            row = [_fmt(t)]
            for i in range(sample.n_curves):
                row.append(_fmt(sample.values[i, ell]) if sample.mask[i, ell] else "")
            writer.writerow(row)


def read_curves_csv(path) -> tuple[FunctionalSample, list[str]]:
    """Parse a curve CSV back into a sample plus the curve column names."""
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if not header or header[0] != "t" or len(header) < 2:
            raise ValueError(f"{path}: expected header 't,curve_1,...'")
        names = header[1:]
        ts: list[float] = []
        cols: list[list[float]] = [[] for _ in names]
        masks: list[list[bool]] = [[] for _ in names]
        for row in reader:
            if not row:
                continue
            if len(row) != len(header):
                raise ValueError(f"{path}: ragged row with {len(row)} cells")
            ts.append(float(row[0]))
            for j, cell in enumerate(row[1:]):
                observed = cell.strip() != ""
                masks[j].append(observed)
                cols[j].append(float(cell) if observed else np.nan)
    grid = Grid(np.array(ts))
    curves = [PartialCurve(np.array(c), np.array(m)) for c, m in zip(cols, masks)]
    return build_sample(grid, curves), names


def write_mask_csv(
    path, sample: FunctionalSample, names: Sequence[str] | None = None
) -> None:
    """Write the observation masks as 0/1 cells, same shape as the curve CSV."""
    names = list(names) if names is not None else curve_names(sample.n_curves)
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(["t", *names])
        for ell, t in enumerate(sample.grid.points):
            writer.writerow(
                [_fmt(t), *("1" if sample.mask[i, ell] else "0" for i in range(sample.n_curves))]
            )


def write_coverage_csv(path, sample: FunctionalSample) -> None:
    """Write per-point coverage `t,q_n`."""
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(["t", "q_n"])
        for t, q in zip(sample.grid.points, sample.coverage):
            writer.writerow([_fmt(t), _fmt(q)])


def write_depth_csv(path, names: Sequence[str], depths) -> None:
    """Write `curve_id,poifd` sorted by depth descending (stable in input order)."""
    depths = np.asarray(depths, dtype=float)
    if len(names) != depths.size:
        raise ValueError("one name per depth required")
    order = np.argsort(-depths, kind="stable")
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(["curve_id", "poifd"])
        for i in order:
            writer.writerow([names[i], _fmt(depths[i])])


def write_estimate_csv(path, grid: Grid, estimate: LocationEstimate) -> None:
    """Write `t,estimate,defined,fallback`; undefined points get empty cells."""
    handle, writer = _open_writer(path)
    with handle:
        writer.writerow(["t", "estimate", "defined", "fallback"])
        for ell, t in enumerate(grid.points):
            defined = bool(estimate.defined_mask[ell])
            writer.writerow(
                [
                    _fmt(t),
                    _fmt(estimate.values[ell]) if defined else "",
                    "1" if defined else "0",
                    "1" if estimate.fallback_mask[ell] else "0",
                ]
            )


def read_table_csv(path) -> tuple[list[str], list[list[str]]]:
    """Generic CSV read returning (header, rows of raw strings)."""
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        rows = [row for row in reader if row]
    return header, rows
