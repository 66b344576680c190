"""Trace the ng2 residual along one solve of a seeded random instance.

Prints residual vs. iteration (thinned for long runs) and can dump the
full per-iteration trace as CSV.

Example:
    python scripts/residual_trace.py --n 5 --seed 777
    python scripts/residual_trace.py --n 20 --seed 4100 --csv trace.csv
"""

import argparse

from quasieq.generator import GeneratorConfig, generate_instances
from quasieq.oracles import AffineFractionalOracle
from quasieq.serialize import write_trace_csv
from quasieq.solver import SolverConfig, StepSchedule, normal_subgradient_solve


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=5)
    parser.add_argument("--seed", type=int, default=777)
    parser.add_argument("--index", type=int, default=0,
                        help="which instance of the seeded batch to solve")
    parser.add_argument("--scale", type=float, default=100.0)
    parser.add_argument("--max-iter", type=int, default=2000)
    parser.add_argument("--csv", help="write the full trace here")
    args = parser.parse_args()

    batch = generate_instances(
        GeneratorConfig(n=args.n, count=args.index + 1, seed=args.seed)
    )
    inst = batch[args.index]
    config = SolverConfig(
        variant="ng2", schedule=StepSchedule(args.scale),
        max_iter=args.max_iter, trace_keep=None,
    )
    report = normal_subgradient_solve(
        AffineFractionalOracle(inst), inst.box, config
    )

    records = report.trace
    stride = max(1, len(records) // 20)
    print(f"{'k':>6} {'alpha':>12} {'step_norm':>12} {'residual':>12}")
    for rec in records[::stride]:
        print(f"{rec.k:>6} {rec.alpha:>12.4g} {rec.step_norm:>12.4g} "
              f"{rec.residual:>12.4g}")
    print(f"status: {report.status.value} after {report.iterations} iterations")
    print(f"final residual: {report.final_residual:.6g}")
    if args.csv:
        write_trace_csv(report, args.csv)
        print(f"trace written to {args.csv}")


if __name__ == "__main__":
    main()
