#!/usr/bin/env python3
"""Run the four solver variants over an oracle-verified easy suite.

Generates random 3-SAT instances near the phase transition, keeps the ones
DPLL proves satisfiable, runs every variant on each, and prints the cactus
series, the tries/flips summary, and per-instance solve percentages.
"""

import argparse
import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from betasat.bench import (
    AlgorithmParams,
    SuiteConfig,
    cactus_data,
    run_suite,
    solve_percentage,
    tries_flips_summary,
)
from betasat.cnf import emit_dimacs, generate_random_ksat
from betasat.dpll import dpll_solve


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--vars", type=int, default=20)
    parser.add_argument("--clauses", type=int, default=85)
    parser.add_argument("--instances", type=int, default=30)
    parser.add_argument("--gen-seed", type=int, default=0)
    parser.add_argument("--reps", type=int, default=5)
    parser.add_argument("--max-tries", type=int, default=100)
    parser.add_argument("--max-flips", type=int, default=10_000)
    parser.add_argument("--base-seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--out", default=None, help="record CSV path")
    args = parser.parse_args()

    satisfiable = []
    seed = args.gen_seed
    while len(satisfiable) < args.instances:
        formula = generate_random_ksat(args.vars, args.clauses, 3, seed)
        seed += 1
        if dpll_solve(formula).satisfiable:
            satisfiable.append(formula)
    print(f"kept {len(satisfiable)} satisfiable instances "
          f"(scanned seeds {args.gen_seed}..{seed - 1})")

    with tempfile.TemporaryDirectory(prefix="easy-suite-") as tmp:
        paths = []
        for formula in satisfiable:
            path = Path(tmp) / f"{formula.name}.cnf"
            path.write_text(emit_dimacs(formula))
            paths.append(str(path))

        params = AlgorithmParams(max_tries=args.max_tries, max_flips=args.max_flips)
        algorithms = ["WalkSAT", "BetaWalkSAT", "KBestWalkSAT", "AllWalkSAT"]
        cfg = SuiteConfig(
            algorithms=algorithms,
            params={name: params for name in algorithms},
            repetitions=args.reps,
            base_seed=args.base_seed,
            instance_paths=paths,
        )
        records = run_suite(cfg, out_path=args.out, jobs=args.jobs)

    print("\nCactus series (cumulative solved, time bound):")
    for name, series in cactus_data(records).items():
        tail = series[-1] if series else None
        preview = " ".join(f"({c}, {t:.4f})" for c, t in series[:5])
        print(f"  {name:<14} {len(series)} solved; first points {preview}"
              + (f" ... last ({tail[0]}, {tail[1]:.4f})" if len(series) > 5 else ""))

    print("\nTries/flips per solution:")
    for name, row in tries_flips_summary(records).items():
        print(f"  {name:<14} rate {row.solve_rate:6.1%}  "
              f"mean tries {row.mean_tries:.2f}  mean flips {row.mean_flips:.1f}")

    print("\nSolve percentage per instance (first 10):")
    for instance in list(dict.fromkeys(r.instance for r in records))[:10]:
        cells = "  ".join(f"{name}={pct:.0f}%" for name, pct
                          in solve_percentage(records, instance).items())
        print(f"  {Path(instance).name}: {cells}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
