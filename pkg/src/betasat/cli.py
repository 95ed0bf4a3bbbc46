"""Command-line interface: solve, gen, oracle, and bench subcommands.

Output follows SAT-solver conventions: an ``s`` status line, a ``v`` line of
signed literals terminated by 0 when a witness exists, diagnostics on stderr.
Exit codes: 10 satisfiable, 20 unsatisfiable (oracle only), 0 unknown or
normal completion, 1 on input errors. The local-search path never claims
unsatisfiability, so ``solve`` exits 0 with ``s UNKNOWN`` when the budget
runs out.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .bench import cactus_data, load_suite_config, run_suite, solve_percentage, tries_flips_summary
from .cnf import Assignment, DimacsError, emit_dimacs, generate_random_ksat, parse_dimacs
from .dpll import BudgetExceeded, dpll_solve
from .restart import ALGORITHM_IDS, make_policy
from .walksat import SolverConfig, solve

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_SAT = 10
EXIT_UNSAT = 20


def _witness_line(assignment: Assignment) -> str:
    literals = [
        str(v if assignment[v] else -v) for v in range(1, len(assignment))
    ]
    return "v " + " ".join(literals + ["0"])


def cmd_solve(args: argparse.Namespace) -> int:
    formula = parse_dimacs(Path(args.path).read_text(), name=args.path)
    cfg = SolverConfig(p=args.p, max_tries=args.max_tries,
                       max_flips=args.max_flips, seed=args.seed)
    policy = make_policy(args.algo, formula.num_vars, delta=args.delta, k=args.k)
    result = solve(formula, cfg, policy)
    if result.solved:
        print("s SATISFIABLE")
        print(_witness_line(result.assignment))
        return EXIT_SAT
    print("s UNKNOWN")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    formula = generate_random_ksat(args.vars, args.clauses, args.k, args.seed)
    text = emit_dimacs(formula)
    if args.out is None:
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text)
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    formula = parse_dimacs(
        Path(args.path).read_text(), name=args.path, allow_empty_clauses=True
    )
    try:
        result = dpll_solve(formula, args.budget)
    except BudgetExceeded:
        print("s UNKNOWN")
        return EXIT_OK
    if result.satisfiable:
        print("s SATISFIABLE")
        print(_witness_line(result.witness))
        return EXIT_SAT
    print("s UNSATISFIABLE")
    return EXIT_UNSAT


def _print_tables(records) -> None:
    print("Cactus series (cumulative solved, wall time bound in seconds):")
    for algorithm, series in cactus_data(records).items():
        points = " ".join(f"({count}, {t:.4f})" for count, t in series)
        print(f"  {algorithm}: {points if points else '(no solved runs)'}")
    print()
    print("Tries/flips per solution:")
    print(f"  {'algorithm':<14} {'runs':>5} {'solved':>7} {'rate':>7} "
          f"{'mean tries':>11} {'mean flips':>11}")
    for algorithm, row in tries_flips_summary(records).items():
        mean_tries = f"{row.mean_tries:.2f}" if row.mean_tries is not None else "-"
        mean_flips = f"{row.mean_flips:.1f}" if row.mean_flips is not None else "-"
        print(f"  {algorithm:<14} {row.runs:>5} {row.solved:>7} "
              f"{row.solve_rate:>6.1%} {mean_tries:>11} {mean_flips:>11}")
    print()
    print("Solve percentage per instance:")
    for instance in dict.fromkeys(record.instance for record in records):
        percentages = solve_percentage(records, instance)
        cells = "  ".join(f"{algo}={pct:.1f}%" for algo, pct in percentages.items())
        print(f"  {instance}: {cells}")


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = load_suite_config(args.config)
    records = run_suite(cfg, out_path=args.out, jobs=args.jobs)
    if not records:
        print("no runnable instances in suite", file=sys.stderr)
        return EXIT_ERROR
    _print_tables(records)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betasat",
        description="WalkSAT variants with belief-guided restarts, plus a DPLL oracle",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="local search on a DIMACS CNF file")
    p_solve.add_argument("path", help="DIMACS CNF input")
    p_solve.add_argument("--algo", choices=sorted(ALGORITHM_IDS), default="walksat",
                         help="restart policy variant (default: walksat)")
    p_solve.add_argument("--p", type=float, default=0.5,
                         help="random-walk probability (default: 0.5)")
    p_solve.add_argument("--max-tries", type=int, default=100)
    p_solve.add_argument("--max-flips", type=int, default=10_000)
    p_solve.add_argument("--delta", type=float, default=1.0,
                         help="belief pseudo-count per failed try (beta only)")
    p_solve.add_argument("--k", type=int, default=5,
                         help="history size (kbest only)")
    p_solve.add_argument("--seed", type=int, default=0)
    p_solve.set_defaults(func=cmd_solve)

    p_gen = sub.add_parser("gen", help="generate a random k-SAT instance")
    p_gen.add_argument("--vars", type=int, required=True)
    p_gen.add_argument("--clauses", type=int, required=True)
    p_gen.add_argument("--k", type=int, default=3)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", default=None, help="output path (default: stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_oracle = sub.add_parser("oracle", help="complete DPLL solve")
    p_oracle.add_argument("path", help="DIMACS CNF input (empty clauses allowed)")
    p_oracle.add_argument("--budget", type=int, default=None,
                          help="decision limit; exceeding it reports UNKNOWN")
    p_oracle.set_defaults(func=cmd_oracle)

    p_bench = sub.add_parser("bench", help="run a benchmark suite")
    p_bench.add_argument("--config", required=True, help="suite configuration file")
    p_bench.add_argument("--out", default=None, help="record CSV output path")
    p_bench.add_argument("--jobs", type=int, default=1,
                         help="parallel worker processes (default: 1)")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DimacsError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
