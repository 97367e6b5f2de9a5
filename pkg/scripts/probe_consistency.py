#!/usr/bin/env python3
"""Measure how fast the sample integrated depth approaches its
population value as the sample grows, for straight-line probe curves
under the Gaussian model with centered-interval masking.
"""

import argparse

import numpy as np

from pofda.consistency import convergence_probe, default_probe_curves
from pofda.core import Grid
from pofda.simulate import GpModel, ObservationSpec


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--len", type=int, default=101, dest="grid_len")
    parser.add_argument("--theta", type=float, default=1.0)
    parser.add_argument("--p-obs", type=float, default=0.5, dest="p_obs")
    parser.add_argument("--sizes", type=int, nargs="+", default=[50, 200, 1000])
    parser.add_argument("--seeds", type=int, default=10)
    args = parser.parse_args()

    grid = Grid.uniform(args.grid_len)
    model = GpModel(grid=grid, theta=args.theta)
    probes = default_probe_curves(grid)
    spec = ObservationSpec("centered", p_obs=args.p_obs)

    rows = {n: [] for n in args.sizes}
    for seed in range(args.seeds):
        table = convergence_probe(model, args.sizes, probes, spec, seed=seed)
        for n, disc in table.items():
            rows[n].append(disc)

    print(f"{'n':>6}  {'median':>10}  {'min':>10}  {'max':>10}")
    for n in args.sizes:
        vals = np.array(rows[n])
        print(f"{n:>6}  {np.median(vals):>10.4f}  {vals.min():>10.4f}  {vals.max():>10.4f}")


if __name__ == "__main__":
    main()
