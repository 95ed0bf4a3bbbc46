#!/usr/bin/env python3
"""Compare the four solver variants on one instance over many seeded runs.

Prints per-algorithm solve percentages with Wilson confidence intervals,
the view used to judge whether belief-guided restarts help on instances
that need many tries.
"""

import argparse
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from betasat.bench import AlgorithmParams, SuiteConfig, run_suite, solve_percentage, tries_flips_summary


def wilson_interval(successes: int, n: int, z: float = 1.96) -> tuple[float, float]:
    if n == 0:
        return 0.0, 1.0
    phat = successes / n
    denom = 1 + z * z / n
    center = (phat + z * z / (2 * n)) / denom
    margin = z * math.sqrt(phat * (1 - phat) / n + z * z / (4 * n * n)) / denom
    return center - margin, center + margin


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("instance", help="DIMACS CNF path")
    parser.add_argument("--reps", type=int, default=200)
    parser.add_argument("--p", type=float, default=0.5)
    parser.add_argument("--max-tries", type=int, default=25)
    parser.add_argument("--max-flips", type=int, default=4000)
    parser.add_argument("--delta", type=float, default=1.0)
    parser.add_argument("--k", type=int, default=5)
    parser.add_argument("--base-seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    params = AlgorithmParams(p=args.p, max_tries=args.max_tries,
                             max_flips=args.max_flips, delta=args.delta, k=args.k)
    algorithms = ["WalkSAT", "BetaWalkSAT", "KBestWalkSAT", "AllWalkSAT"]
    cfg = SuiteConfig(
        algorithms=algorithms,
        params={name: params for name in algorithms},
        repetitions=args.reps,
        base_seed=args.base_seed,
        instance_paths=[args.instance],
    )
    records = run_suite(cfg, jobs=args.jobs)
    percentages = solve_percentage(records, args.instance)
    summary = tries_flips_summary(records)

    print(f"{args.instance}: {args.reps} runs per algorithm, "
          f"max_tries={args.max_tries}, max_flips={args.max_flips}, p={args.p}")
    for name in algorithms:
        solved = sum(1 for r in records if r.algorithm == name and r.solved)
        low, high = wilson_interval(solved, args.reps)
        row = summary[name]
        tries = f"{row.mean_tries:.2f}" if row.mean_tries is not None else "-"
        print(f"  {name:<14} {percentages[name]:6.1f}%  "
              f"[{100 * low:5.1f}%, {100 * high:5.1f}%]  mean tries {tries}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
