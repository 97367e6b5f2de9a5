"""Scenario orchestration: run contamination scenarios, emit result tables.

A scenario is one row of the benchmark grid: curve count, grid length,
contamination settings, observation proportion, trimming level, and
replication count. Each replication simulates, contaminates, masks,
computes depths, forms both location estimates, and scores them against
the clean trend; the scenario row aggregates the replication errors.

Replication seeds derive from (base seed, scenario index, replication
index), so serial and parallel runs produce identical tables.
"""

from __future__ import annotations

import csv
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Sequence

from .core import Grid
from .depths import DepthKind
from .metrics import aggregate, integrated_error
from .poifd import poifd_all
from .simulate import (
    ContaminationKind,
    ContaminationSpec,
    GpModel,
    ObservationKind,
    ObservationSpec,
    contaminate,
    observe,
    sample_gp,
    seed_sequence,
)
from .trimming import ordinary_mean, select_trim, trimmed_mean

__all__ = [
    "ScenarioConfig",
    "ScenarioResult",
    "run_scenario",
    "run_replication",
    "table_configs",
    "reproduce_tables",
    "write_results_csv",
    "read_results_csv",
    "RESULT_COLUMNS",
]

_POLLUTION_LABEL = {
    ContaminationKind.NONE: "none",
    ContaminationKind.SYMMETRIC: "symmetric",
    ContaminationKind.ASYMMETRIC: "asymmetric",
    ContaminationKind.PARTIAL: "partial",
}
_POLLUTION_FROM_LABEL = {v: k for k, v in _POLLUTION_LABEL.items()}

RESULT_COLUMNS = [
    "len",
    "p",
    "q",
    "M",
    "alpha",
    "pollution_type",
    "observability",
    "E",
    "E_trim",
    "sd",
    "sd_trim",
    "Med",
    "Med_trim",
]


@dataclass(frozen=True)
class ScenarioConfig:
    """One benchmark scenario; defaults mirror the standard grid row."""

    grid_len: int = 200
    n_curves: int = 50
    q: float = 0.1
    magnitude: float = 25.0
    alpha: float = 0.2
    contamination: ContaminationKind = ContaminationKind.SYMMETRIC
    observation: ObservationKind = ObservationKind.CENTERED_INTERVAL
    p_obs: float = 0.5
    n_intervals: int = 3
    depth: DepthKind = DepthKind.FRAIMAN_MUNIZ
    phi: str = "identity"
    theta: float | None = None
    n_reps: int = 10
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "contamination", ContaminationKind(self.contamination))
        object.__setattr__(self, "observation", ObservationKind(self.observation))
        object.__setattr__(self, "depth", DepthKind(self.depth))
        if self.grid_len < 2:
            raise ValueError("grid_len must be at least 2")
        if self.n_curves < 1:
            raise ValueError("n_curves must be at least 1")
        if self.n_reps < 1:
            raise ValueError("n_reps must be at least 1")

    @property
    def resolved_theta(self) -> float:
        # Covariance decay rate defaults to the curve count.
        return float(self.n_curves if self.theta is None else self.theta)

    @classmethod
    def from_dict(cls, data: dict) -> "ScenarioConfig":
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown scenario keys: {sorted(unknown)}")
        return cls(**data)


@dataclass(frozen=True)
class ScenarioResult:
    """One table row: scenario echo plus error summaries for both estimators."""

    grid_len: int
    n_curves: int
    q: float
    magnitude: float
    alpha: float
    pollution_type: str
    observability: float
    e_mean: float
    e_trim: float
    s_dev: float
    s_trim: float
    med: float
    med_trim: float

    def to_row(self) -> list[str]:
        return [
            str(self.grid_len),
            str(self.n_curves),
            repr(float(self.q)),
            repr(float(self.magnitude)),
            repr(float(self.alpha)),
            self.pollution_type,
            repr(float(self.observability)),
            repr(float(self.e_mean)),
            repr(float(self.e_trim)),
            repr(float(self.s_dev)),
            repr(float(self.s_trim)),
            repr(float(self.med)),
            repr(float(self.med_trim)),
        ]

    @classmethod
    def from_row(cls, row: Sequence[str]) -> "ScenarioResult":
        if len(row) != len(RESULT_COLUMNS):
            raise ValueError(f"expected {len(RESULT_COLUMNS)} columns, got {len(row)}")
        return cls(
            grid_len=int(row[0]),
            n_curves=int(row[1]),
            q=float(row[2]),
            magnitude=float(row[3]),
            alpha=float(row[4]),
            pollution_type=row[5],
            observability=float(row[6]),
            e_mean=float(row[7]),
            e_trim=float(row[8]),
            s_dev=float(row[9]),
            s_trim=float(row[10]),
            med=float(row[11]),
            med_trim=float(row[12]),
        )


def run_replication(config: ScenarioConfig, scenario_index: int, rep_index: int):
    """Simulate one replication; returns (sample, depth result, trim spec)."""
    grid = Grid.uniform(config.grid_len)
    model = GpModel(grid=grid, theta=config.resolved_theta)
    cont = ContaminationSpec(config.contamination, q=config.q, magnitude=config.magnitude)
    obs = ObservationSpec(
        config.observation, p_obs=config.p_obs, n_intervals=config.n_intervals
    )
    root = seed_sequence((config.seed, scenario_index, rep_index))
    gp_seed, cont_seed, obs_seed = root.spawn(3)
    curves = sample_gp(model, config.n_curves, gp_seed)
    curves = contaminate(grid, curves, cont, cont_seed)
    sample = observe(grid, curves, obs, obs_seed)
    result = poifd_all(sample, kind=config.depth, phi=config.phi)
    trim = select_trim(result.poifd, config.alpha)
    return sample, result, trim


def run_scenario(config: ScenarioConfig, scenario_index: int = 0) -> ScenarioResult:
    """Run all replications of one scenario and aggregate both estimators."""
    grid = Grid.uniform(config.grid_len)
    truth = GpModel(grid=grid, theta=config.resolved_theta).trend_values()
    plain_errors = []
    trim_errors = []
    for rep in range(config.n_reps):
        sample, result, trim = run_replication(config, scenario_index, rep)
        plain_errors.append(integrated_error(ordinary_mean(sample), truth))
        trim_errors.append(integrated_error(trimmed_mean(sample, trim), truth))
    plain = aggregate(plain_errors)
    trimmed = aggregate(trim_errors)
    return ScenarioResult(
        grid_len=config.grid_len,
        n_curves=config.n_curves,
        q=config.q,
        magnitude=config.magnitude,
        alpha=config.alpha,
        pollution_type=_POLLUTION_LABEL[config.contamination],
        observability=config.p_obs,
        e_mean=plain.e_mean,
        e_trim=trimmed.e_mean,
        s_dev=plain.s_dev,
        s_trim=trimmed.s_dev,
        med=plain.m_median,
        med_trim=trimmed.m_median,
    )


# (alpha, observation proportion) per output table, in file order.
TABLE_SETTINGS = [(0.2, 0.5), (0.3, 0.5), (0.2, 0.9), (0.3, 0.9)]


def table_configs(seed: int, n_reps: int = 10, grid_len: int = 200) -> list[list[ScenarioConfig]]:
    """The 4 x 12 scenario grid behind the benchmark tables."""
    tables = []
    for alpha, p_obs in TABLE_SETTINGS:
        rows = []
        for n_curves in (50, 80):
            for magnitude in (25.0, 5.0):
                for kind in (
                    ContaminationKind.SYMMETRIC,
                    ContaminationKind.ASYMMETRIC,
                    ContaminationKind.PARTIAL,
                ):
                    rows.append(
                        ScenarioConfig(
                            grid_len=grid_len,
                            n_curves=n_curves,
                            magnitude=magnitude,
                            alpha=alpha,
                            contamination=kind,
                            p_obs=p_obs,
                            n_reps=n_reps,
                            seed=seed,
                        )
                    )
        tables.append(rows)
    return tables


def _run_indexed(task: tuple[ScenarioConfig, int]) -> ScenarioResult:
    config, index = task
    return run_scenario(config, index)


def _run_many(tasks: list[tuple[ScenarioConfig, int]], jobs: int) -> list[ScenarioResult]:
    if jobs <= 1:
        return [_run_indexed(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_indexed, tasks))


def write_results_csv(path, results: Sequence[ScenarioResult]) -> None:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(RESULT_COLUMNS)
        for res in results:
            writer.writerow(res.to_row())


def read_results_csv(path) -> list[ScenarioResult]:
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        if header != RESULT_COLUMNS:
            raise ValueError(f"{path}: unexpected result columns {header}")
        return [ScenarioResult.from_row(row) for row in reader if row]


def reproduce_tables(
    out_dir, seed: int, jobs: int = 1, n_reps: int = 10, grid_len: int = 200
) -> list[Path]:
    """Run the full scenario grid and write table1.csv .. table4.csv.

    Output is deterministic in `seed` and independent of `jobs`.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    tables = table_configs(seed, n_reps=n_reps, grid_len=grid_len)
    tasks = []
    index = 0
    for rows in tables:
        for config in rows:
            tasks.append((config, index))
            index += 1
    results = _run_many(tasks, jobs)
    paths = []
    cursor = 0
    for tnum, rows in enumerate(tables, start=1):
        path = out_dir / f"table{tnum}.csv"
        write_results_csv(path, results[cursor : cursor + len(rows)])
        cursor += len(rows)
        paths.append(path)
    return paths


def load_scenarios(path) -> list[ScenarioConfig]:
    """Read scenario configs from a JSON file: one object or a list of them."""
    with open(path) as handle:
        data = json.load(handle)
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise ValueError("scenario file must hold an object or a list of objects")
    return [ScenarioConfig.from_dict(item) for item in data]


def apply_overrides(config: ScenarioConfig, overrides: dict) -> ScenarioConfig:
    """Non-None overrides replace the corresponding config fields."""
    updates = {k: v for k, v in overrides.items() if v is not None}
    return replace(config, **updates) if updates else config
