"""Run the ng1/ng2 benchmark sweep and print one table per variant.

Example:
    python scripts/benchmark_sweep.py --sizes 5,10,20 --count 20 --seed 12345
    python scripts/benchmark_sweep.py --variants ng2 --csv-prefix out/sweep
"""

import argparse
from pathlib import Path

from quasieq.bench import format_benchmark_table, run_benchmark
from quasieq.serialize import write_benchmark_csv
from quasieq.solver import SolverConfig, StepSchedule


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="5,10,20")
    parser.add_argument("--count", type=int, default=20)
    parser.add_argument("--seed", type=int, default=12345)
    parser.add_argument("--scale", type=float, default=100.0)
    parser.add_argument("--variants", default="ng1,ng2")
    parser.add_argument("--csv-prefix",
                        help="write <prefix>_<variant>.csv per variant")
    args = parser.parse_args()

    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    config = SolverConfig(schedule=StepSchedule(args.scale))
    for variant in args.variants.split(","):
        variant = variant.strip()
        report = run_benchmark(
            sizes=sizes, count=args.count, seed=args.seed,
            variant=variant, config=config,
        )
        print(format_benchmark_table(report))
        print()
        if args.csv_prefix:
            path = Path(f"{args.csv_prefix}_{variant}.csv")
            path.parent.mkdir(parents=True, exist_ok=True)
            write_benchmark_csv(report, path)
            print(f"rows written to {path}")


if __name__ == "__main__":
    main()
