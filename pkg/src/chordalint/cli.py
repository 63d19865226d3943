"""Command-line front end: bench, bounds, gen, and sepsys subcommands."""

from __future__ import annotations

import argparse
import sys

from .bench import (
    BatteryConfig,
    VerificationError,
    bound_curves,
    run_battery,
    write_curves,
    write_results,
)
from .graphs import write_graph
from .instances import complete_dag, line_of_cliques, random_chordal, split_graph_instance
from .graphs import Ordering
from .sepsys import build_separating_system


def _parse_grid(spec: str) -> list:
    """"lo:hi:step" -> inclusive float grid; a single number is a 1-point grid."""
    parts = spec.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid must be 'lo:hi:step' or a number")
    lo, hi, step = (float(p) for p in parts)
    if step <= 0:
        raise argparse.ArgumentTypeError("grid step must be positive")
    out = []
    x = lo
    while x <= hi + 1e-9:
        out.append(round(x, 9))
        x += step
    return out


def _parse_int_range(spec: str) -> list:
    """"lo:hi[:step]" -> inclusive int range."""
    parts = [int(p) for p in spec.split(":")]
    if len(parts) == 1:
        return parts
    step = parts[2] if len(parts) == 3 else 1
    return list(range(parts[0], parts[1] + 1, step))


def cmd_bench(args) -> int:
    config = BatteryConfig(
        n=args.n,
        k=args.k,
        strategies=args.strategies.split(","),
        trials=args.trials,
        density_grid=args.density_grid,
        seed=args.seed,
        jobs=args.jobs,
    )
    try:
        records = run_battery(config)
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    with open(args.out, "w") as fh:
        write_results(records, fh)
    print(f"wrote {len(records)} rows to {args.out}")
    return 0


def cmd_bounds(args) -> int:
    rows = bound_curves(_parse_int_range(args.chi), args.n, args.k)
    with open(args.out, "w") as fh:
        write_curves(rows, fh)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_gen(args) -> int:
    if args.family == "chordal":
        dag, _ = random_chordal(args.n, args.density, args.seed)
    elif args.family == "complete":
        import random

        perm = list(range(args.n))
        random.Random(args.seed).shuffle(perm)
        dag = complete_dag(args.n, Ordering(tuple(perm)))
    elif args.family == "split":
        dag = split_graph_instance(args.chi, args.alpha, args.seed)
    elif args.family == "line":
        dag = line_of_cliques(args.alpha, args.chi, args.seed)
    else:
        raise ValueError(args.family)
    write_graph(dag.skeleton, args.out + ".graph")
    with open(args.out + ".orient", "w") as fh:
        for u, v in sorted(dag.arcs()):
            fh.write(f"{u} {v}\n")
    print(f"wrote {args.out}.graph and {args.out}.orient")
    return 0


def cmd_sepsys(args) -> int:
    system = build_separating_system(args.n, args.k)
    lines = [" ".join(str(e) for e in sorted(s)) for s in system.sets]
    for line in lines:
        print(line)
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordalint",
        description="Bounded-size intervention strategies on chordal skeletons",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bench", help="run a strategy battery, emit CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--strategies", default="naive,hybrid")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--density-grid", type=_parse_grid, default="2.0")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("bounds", help="emit reference bound curves CSV")
    p.add_argument("--chi", required=True, help="lo:hi[:step]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gen", help="generate a ground-truth instance")
    p.add_argument("--family", choices=["chordal", "complete", "split", "line"], required=True)
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--density", type=float, default=2.0)
    p.add_argument("--chi", type=int, default=5)
    p.add_argument("--alpha", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sepsys", help="print a separating system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit", default=None)
    p.set_defaults(func=cmd_sepsys)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
