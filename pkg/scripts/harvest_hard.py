#!/usr/bin/env python3
"""Harvest hard satisfiable instances from the random 3-SAT phase transition.

Generates instances, keeps the ones the DPLL oracle proves satisfiable but a
budget-limited uniform-WalkSAT probe fails on most seeds, and writes them as
DIMACS files. Prints a per-kept-instance probe summary so the hardest one can
be picked by eye.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from betasat.bench import GeneratorSpec, harvest_hard_instances
from betasat.cnf import emit_dimacs
from betasat.restart import UniformPolicy
from betasat.walksat import SolverConfig, solve


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--vars", type=int, default=50)
    parser.add_argument("--clauses", type=int, default=None,
                        help="default: round(4.26 * vars)")
    parser.add_argument("--count", type=int, default=40)
    parser.add_argument("--gen-seed", type=int, default=0)
    parser.add_argument("--oracle-budget", type=int, default=200_000)
    parser.add_argument("--probe-tries", type=int, default=10)
    parser.add_argument("--probe-flips", type=int, default=2000)
    parser.add_argument("--probe-seed", type=int, default=0)
    parser.add_argument("--probe-runs", type=int, default=10)
    parser.add_argument("--threshold", type=float, default=0.7,
                        help="minimum probe failure fraction to keep")
    parser.add_argument("--out-dir", default="hard-instances")
    args = parser.parse_args()

    clauses = args.clauses if args.clauses is not None else round(4.26 * args.vars)
    generator = GeneratorSpec(count=args.count, num_vars=args.vars,
                              num_clauses=clauses, k=3, seed=args.gen_seed)
    probe = SolverConfig(max_tries=args.probe_tries, max_flips=args.probe_flips,
                         seed=args.probe_seed)
    hard = harvest_hard_instances(
        generator, probe,
        oracle_budget=args.oracle_budget,
        probe_runs=args.probe_runs,
        fail_threshold=args.threshold,
    )
    print(f"{len(hard)} hard instance(s) out of {args.count} generated")

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for formula in hard:
        failures = 0
        for j in range(args.probe_runs):
            cfg = SolverConfig(max_tries=probe.max_tries, max_flips=probe.max_flips,
                               seed=probe.seed + j)
            if not solve(formula, cfg, UniformPolicy(formula.num_vars)).solved:
                failures += 1
        path = out_dir / f"{formula.name}.cnf"
        path.write_text(emit_dimacs(formula))
        print(f"  {path}  probe failures {failures}/{args.probe_runs}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
