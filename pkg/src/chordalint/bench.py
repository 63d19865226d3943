"""Experiment harness: strategy batteries over generated instances, CSV out."""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

from .graphs import graph_stats, mcs_peo
from .instances import random_chordal
from .oracle import GroundTruth
from .sepsys import (
    build_separating_system,
    build_separating_system_capped,
    chromatic_lower_bound,
    info_lower_bound,
    katona_lower_bound,
    reference_size,
)
from .strategies import hybrid_adaptive, naive_nonadaptive, randomized_block, tree_adaptive

RESULT_COLUMNS = [
    "instance",
    "n",
    "k",
    "chi",
    "alpha",
    "strategy",
    "interventions_used",
    "node_accesses",
    "info_lb",
    "chromatic_lb",
    "katona_lb_n",
    "sepsys_size_chi",
    "sepsys_size_n",
    "wall_time",
]

CURVE_COLUMNS = [
    "chi",
    "info_lb",
    "chromatic_lb",
    "achievable_chi_sepsys",
    "construction_chi_sepsys",
    "sepsys_ub_n",
]


class VerificationError(RuntimeError):
    """A strategy terminated with an orientation differing from ground truth."""

    def __init__(self, instance: str, strategy: str):
        super().__init__(f"strategy {strategy} failed verification on {instance}")
        self.instance = instance
        self.strategy = strategy


@dataclass(frozen=True)
class TrialRecord:
    instance: str
    n: int
    k: int
    chi: int
    alpha: int
    strategy: str
    interventions_used: int
    node_accesses: int
    info_lb: float
    chromatic_lb: Optional[float]
    katona_lb_n: float
    sepsys_size_chi: int
    sepsys_size_n: int
    wall_time: float

    def row(self) -> list:
        chrom = "" if self.chromatic_lb is None else f"{self.chromatic_lb:.6f}"
        return [
            self.instance,
            self.n,
            self.k,
            self.chi,
            self.alpha,
            self.strategy,
            self.interventions_used,
            self.node_accesses,
            f"{self.info_lb:.6f}",
            chrom,
            f"{self.katona_lb_n:.6f}",
            self.sepsys_size_chi,
            self.sepsys_size_n,
            f"{self.wall_time:.6f}",
        ]


@dataclass
class BatteryConfig:
    n: int
    k: int
    strategies: list
    trials: int
    density_grid: list
    seed: int
    jobs: int = 1


STRATEGIES = ("naive", "hybrid", "tree", "randblock")


def _run_strategy(name: str, dag, k: int, seed: int):
    gt = GroundTruth(dag, k_cap=k)
    responder = gt.responder()
    skeleton = dag.skeleton
    if name == "naive":
        result = naive_nonadaptive(skeleton, k, responder)
    elif name == "hybrid":
        result = hybrid_adaptive(skeleton, k, responder)
    elif name == "tree":
        result = tree_adaptive(skeleton, responder)
    elif name == "randblock":
        result = randomized_block(skeleton, k, responder, seed)
    else:
        raise ValueError(f"unknown strategy {name!r}")
    return gt, result


def run_trial(config: BatteryConfig, density: float, trial_seed: int) -> list:
    """One instance, all requested strategies. Raises on any mismatch."""
    dag, _sigma = random_chordal(config.n, density, trial_seed)
    skeleton = dag.skeleton
    stats = graph_stats(skeleton, mcs_peo(skeleton))
    instance = f"rc-n{config.n}-d{density:g}-s{trial_seed}"
    try:
        chrom = chromatic_lower_bound(stats.chi, config.k)
    except ValueError:
        chrom = None
    sep_chi = len(build_separating_system_capped(stats.chi, config.k))
    sep_n = len(build_separating_system(config.n, config.k))
    records = []
    for name in config.strategies:
        start = time.perf_counter()
        gt, result = _run_strategy(name, dag, config.k, trial_seed)
        elapsed = time.perf_counter() - start
        if not result.final.fully_directed() or not gt.matches(result.final.to_dag()):
            raise VerificationError(instance, name)
        if result.interventions_used != gt.experiments:
            raise VerificationError(instance, name)
        records.append(
            TrialRecord(
                instance=instance,
                n=config.n,
                k=config.k,
                chi=stats.chi,
                alpha=stats.alpha,
                strategy=name,
                interventions_used=result.interventions_used,
                node_accesses=gt.node_accesses,
                info_lb=stats.chi / (2 * config.k),
                chromatic_lb=chrom,
                katona_lb_n=katona_lower_bound(config.n, config.k),
                sepsys_size_chi=sep_chi,
                sepsys_size_n=sep_n,
                wall_time=elapsed,
            )
        )
    return records


def _trial_args(config: BatteryConfig) -> list:
    args = []
    for di, density in enumerate(config.density_grid):
        for t in range(config.trials):
            trial_seed = config.seed * 1_000_003 + di * 1_009 + t
            args.append((config, density, trial_seed))
    return args


def run_battery(config: BatteryConfig) -> list:
    """All trials of the battery, in deterministic (instance, strategy) order."""
    args = _trial_args(config)
    if config.jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(config.jobs) as pool:
            chunks = pool.starmap(run_trial, args)
    else:
        chunks = [run_trial(*a) for a in args]
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=lambda r: (r.instance, r.strategy))
    return records


def write_results(records: Iterable, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(RESULT_COLUMNS)
    for r in records:
        writer.writerow(r.row())


def bound_curves(chi_values: Iterable, n: int, k: int) -> list:
    """Reference-series rows per chi; domain errors become blank cells."""
    rows = []
    sep_n = len(build_separating_system(n, k))
    for chi in chi_values:
        try:
            chrom = f"{chromatic_lower_bound(chi, k):.6f}"
        except ValueError:
            chrom = ""
        if 2 * k < chi:
            achievable = reference_size(chi, k)
            construction = len(build_separating_system(chi, k))
        else:
            achievable = ""
            construction = ""
        rows.append(
            [
                chi,
                f"{info_lower_bound(chi, k):.6f}",
                chrom,
                achievable,
                construction,
                sep_n,
            ]
        )
    return rows


def write_curves(rows: Iterable, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CURVE_COLUMNS)
    for row in rows:
        writer.writerow(row)
