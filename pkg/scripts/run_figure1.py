#!/usr/bin/env python3
"""End-to-end benchmark figure: battery, bound curves, and the SVG chart.

Runs the naive and hybrid strategies over random chordal instances whose
realized clique number clusters around 100, writes results.csv and
curves.csv, and (if the plotgen package has been built) renders the chart.

Usage:
    python scripts/run_figure1.py [--n 1000] [--k 10] [--trials 10]
                                  [--outdir figure1-out] [--jobs 1]

The density default is calibrated so the realized clique number lands in
the 90-110 bucket at n=1000; pass --density-grid to sweep other ranges.
"""

import argparse
import shutil
import subprocess
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from chordalint.bench import (
    BatteryConfig,
    bound_curves,
    run_battery,
    write_curves,
    write_results,
)

DEFAULT_DENSITY = {1000: [0.9, 1.0, 1.1], 2000: [0.7, 0.75, 0.8]}


def parse_args() -> argparse.Namespace:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=1000)
    parser.add_argument("--k", type=int, default=10)
    parser.add_argument("--trials", type=int, default=10, help="trials per density")
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument(
        "--density-grid",
        type=float,
        nargs="+",
        default=None,
        help="densities to sweep (default: calibrated for the chosen n)",
    )
    parser.add_argument("--outdir", type=Path, default=Path("figure1-out"))
    return parser.parse_args()


def main() -> int:
    args = parse_args()
    densities = args.density_grid or DEFAULT_DENSITY.get(args.n, [1.0])
    args.outdir.mkdir(parents=True, exist_ok=True)

    config = BatteryConfig(
        n=args.n,
        k=args.k,
        strategies=["naive", "hybrid"],
        trials=args.trials,
        density_grid=densities,
        seed=args.seed,
        jobs=args.jobs,
    )
    print(f"running battery: n={args.n} k={args.k} densities={densities} "
          f"trials={args.trials} per density")
    records = run_battery(config)

    results_path = args.outdir / "results.csv"
    with open(results_path, "w") as fh:
        write_results(records, fh)
    print(f"wrote {results_path} ({len(records)} rows)")

    chi_values = sorted({r.chi for r in records} | set(range(10, 201, 10)))
    curves_path = args.outdir / "curves.csv"
    with open(curves_path, "w") as fh:
        write_curves(bound_curves(chi_values, args.n, args.k), fh)
    print(f"wrote {curves_path}")

    per_strategy = {}
    for r in records:
        per_strategy.setdefault(r.strategy, []).append(r.interventions_used)
    for name, counts in sorted(per_strategy.items()):
        mean = sum(counts) / len(counts)
        print(f"{name}: mean {mean:.1f}, max {max(counts)} over {len(counts)} trials")

    plotgen_bin = Path(__file__).resolve().parent.parent / "plotgen" / "dist" / "bin.js"
    node = shutil.which("node")
    if plotgen_bin.exists() and node:
        figure_path = args.outdir / "figure.svg"
        subprocess.run(
            [node, str(plotgen_bin), str(results_path), str(curves_path),
             "-o", str(figure_path)],
            check=True,
        )
    else:
        print("plotgen not built; skipping chart (run: cd plotgen && npm install && npm run build)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
