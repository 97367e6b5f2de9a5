#!/usr/bin/env python3
"""Export curve/coverage plot data for the three contamination kinds.

For each kind this writes the full partially observed sample, its
coverage profile, the retained subset after trimming, and SVG panels,
mirroring the before/after trimming displays.
"""

import argparse
from pathlib import Path

from pofda.harness import ScenarioConfig
from pofda.plots import plot_data


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="results/figures")
    parser.add_argument("--n", type=int, default=50)
    parser.add_argument("--len", type=int, default=200, dest="grid_len")
    parser.add_argument("--q", type=float, default=0.1)
    parser.add_argument("--M", type=float, default=25.0, dest="magnitude")
    parser.add_argument("--alpha", type=float, default=0.3)
    parser.add_argument("--p-obs", type=float, default=0.5, dest="p_obs")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    for kind in ("sym", "asym", "partial"):
        config = ScenarioConfig(
            grid_len=args.grid_len,
            n_curves=args.n,
            q=args.q,
            magnitude=args.magnitude,
            alpha=args.alpha,
            contamination=kind,
            p_obs=args.p_obs,
            seed=args.seed,
        )
        out = Path(args.out_dir) / kind
        for path in plot_data(config, out).values():
            print(f"wrote {path}")


if __name__ == "__main__":
    main()
