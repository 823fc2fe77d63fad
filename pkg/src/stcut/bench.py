"""Benchmark suites: generate random instances, solve, score against a reference.

The reference value ``obju`` is either the exact optimum from enumeration
(``obju_mode="exact"``, n <= 24) or the total edge weight, a trivial upper
bound on any cut (``obju_mode="trivial"``).
"""

from __future__ import annotations

import csv
import io
import statistics
import time
from dataclasses import dataclass, field

from .annealing import solve
from .barrier import BarrierConfig
from .errors import ExactTooLarge
from .graph import DEFAULT_ALPHA, generate_random
from .oracle import MAX_EXACT_N, brute_force_cut

CSV_COLUMNS = ("test_id", "n", "seed", "ni", "objm", "obju", "ratio", "stalled_stages", "wall_ms")
OBJU_MODES = ("exact", "trivial")


@dataclass(frozen=True)
class BenchRecord:
    test_id: int
    n: int
    seed: int
    ni: int
    objm: float
    obju: float
    ratio: float
    wall_ms: float
    stalled_stages: int


@dataclass(frozen=True)
class SuiteConfig:
    sizes: tuple
    seeds: int = 5
    weight_max: int = 50
    solver: BarrierConfig = field(default_factory=BarrierConfig)
    obju_mode: str = "exact"
    alpha: float = DEFAULT_ALPHA

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(sorted(int(n) for n in self.sizes)))
        if not self.sizes:
            raise ValueError("at least one size is required")
        if self.seeds < 1:
            raise ValueError(f"seeds must be >= 1, got {self.seeds}")
        if self.obju_mode not in OBJU_MODES:
            raise ValueError(f"obju_mode must be one of {OBJU_MODES}, got {self.obju_mode!r}")
        if self.obju_mode == "exact" and max(self.sizes) > MAX_EXACT_N:
            raise ExactTooLarge(f"exact mode needs every n <= {MAX_EXACT_N}, got {max(self.sizes)}")


def gap_ratio(obju: float, objm: float) -> float:
    """(obju - objm) / obju, defined as 0 when the reference is 0."""
    return (obju - objm) / obju if obju > 0 else 0.0


def run_suite(config: SuiteConfig) -> list[BenchRecord]:
    """One record per (n, seed), ordered by n then seed.

    Instance ``seed`` both generates the graph and seeds the solver's
    starting point, so a suite is fully determined by its config.
    """
    records = []
    test_id = 0
    for n in config.sizes:
        for seed in range(config.seeds):
            test_id += 1
            problem = generate_random(n, seed, config.weight_max, alpha=config.alpha)
            start = time.perf_counter()
            report = solve(problem, config.solver, seed)
            wall_ms = 1e3 * (time.perf_counter() - start)
            if config.obju_mode == "exact":
                obju = brute_force_cut(problem).best_cut
            else:
                obju = problem.total_weight
            records.append(
                BenchRecord(
                    test_id=test_id,
                    n=n,
                    seed=seed,
                    ni=report.total_inner_iters,
                    objm=report.objm,
                    obju=obju,
                    ratio=gap_ratio(obju, report.objm),
                    wall_ms=wall_ms,
                    stalled_stages=report.stalled_stages,
                )
            )
    return records


def summarize(records: list[BenchRecord]) -> dict:
    ratios = [r.ratio for r in records]
    return {
        "runs": len(records),
        "mean_ratio": statistics.fmean(ratios),
        "median_ratio": statistics.median(ratios),
        "max_ratio": max(ratios),
        "optimal_runs": sum(r.ratio == 0 for r in records),
        "total_ni": sum(r.ni for r in records),
    }


def write_csv(records: list[BenchRecord], fh) -> None:
    """Per-run rows, then ``mean`` and ``median`` aggregate rows.

    ``wall_ms`` is the last column and the only nondeterministic one.
    """
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow([r.test_id, r.n, r.seed, r.ni, r.objm, r.obju, r.ratio, r.stalled_stages, f"{r.wall_ms:.3f}"])
    for label, agg in (("mean", statistics.fmean), ("median", statistics.median)):
        writer.writerow(
            [
                label,
                "",
                "",
                agg([r.ni for r in records]),
                agg([r.objm for r in records]),
                agg([r.obju for r in records]),
                agg([r.ratio for r in records]),
                agg([r.stalled_stages for r in records]),
                "",
            ]
        )


def records_to_csv(records: list[BenchRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()
