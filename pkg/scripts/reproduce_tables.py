#!/usr/bin/env python3
"""Run the full benchmark grid and write the four result tables.

Each table holds 12 scenario rows (curve count x magnitude x
contamination kind) at one (alpha, observation proportion) setting.
"""

import argparse
import time

from pofda.harness import reproduce_tables


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="results/tables")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--reps", type=int, default=10)
    parser.add_argument("--len", type=int, default=200, dest="grid_len")
    args = parser.parse_args()

    start = time.time()
    paths = reproduce_tables(
        args.out_dir,
        seed=args.seed,
        jobs=args.jobs,
        n_reps=args.reps,
        grid_len=args.grid_len,
    )
    for path in paths:
        print(f"wrote {path}")
    print(f"finished in {time.time() - start:.1f}s")


if __name__ == "__main__":
    main()
