"""Benchmark sweeps over randomly generated affine-fractional instances.

Each size gets its own seeded batch (seed + size index), every instance
is solved from the box center, and a solve counts as a success when the
residual at the best iterate falls below the success tolerance.  Wall
time is measured around the solve call only.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, replace

from .generator import GeneratorConfig, generate_instances
from .oracles import AffineFractionalOracle
from .solver import SolverConfig, normal_subgradient_solve


@dataclass(frozen=True)
class BenchmarkRow:
    n: int
    n_prob: int
    n_success: int
    mean_time_seconds: float
    mean_error: float


@dataclass(frozen=True)
class BenchmarkReport:
    variant: str
    schedule_scale: float
    seed: int
    rows: tuple[BenchmarkRow, ...]


def run_benchmark(
    sizes,
    count: int,
    seed: int,
    variant: str = "ng2",
    config: SolverConfig | None = None,
    require_paramonotone: bool = False,
) -> BenchmarkReport:
    """Solve ``count`` seeded instances per size and aggregate results.

    ``config`` supplies the schedule and tolerances; its variant field is
    overridden by ``variant`` and tracing is disabled (the best residual
    is tracked online).  Individual solve failures are recorded as
    non-successes and never abort the sweep.
    """
    sizes = sorted(set(int(n) for n in sizes))
    if not sizes:
        raise ValueError("sizes must be nonempty")
    if count < 1:
        raise ValueError("count must be at least 1")
    base = config if config is not None else SolverConfig()
    solver_config = replace(base, variant=variant, trace_keep=0)

    rows = []
    for size_index, n in enumerate(sizes):
        instances = generate_instances(GeneratorConfig(
            n=n, count=count, seed=seed + size_index,
            require_paramonotone=require_paramonotone,
        ))
        successes = 0
        errors: list[float] = []
        times: list[float] = []
        for inst in instances:
            oracle = AffineFractionalOracle(inst)
            try:
                t0 = time.perf_counter()
                report = normal_subgradient_solve(oracle, inst.box, solver_config)
                times.append(time.perf_counter() - t0)
            except Exception:
                continue  # counted in n_prob, not in the means
            error = report.best_residual
            if error is not None:
                errors.append(error)
                if error < solver_config.tol_success:
                    successes += 1
        rows.append(BenchmarkRow(
            n=n,
            n_prob=count,
            n_success=successes,
            mean_time_seconds=math.fsum(times) / len(times) if times else 0.0,
            mean_error=math.fsum(errors) / len(errors) if errors else 0.0,
        ))
    return BenchmarkReport(
        variant=variant,
        schedule_scale=solver_config.schedule.scale,
        seed=seed,
        rows=tuple(rows),
    )


def format_benchmark_table(report: BenchmarkReport) -> str:
    header = (
        f"variant={report.variant}  "
        f"alpha_k={report.schedule_scale:g}/(k+1)  seed={report.seed}"
    )
    lines = [
        header,
        f"{'n':>5} {'n_prob':>7} {'n_success':>10} "
        f"{'mean_time_s':>12} {'mean_error':>12}",
    ]
    for row in report.rows:
        lines.append(
            f"{row.n:>5} {row.n_prob:>7} {row.n_success:>10} "
            f"{row.mean_time_seconds:>12.6f} {row.mean_error:>12.6g}"
        )
    return "\n".join(lines)
