"""Stochastic local-search SAT solving with belief-guided restarts.

The package bundles a WalkSAT engine whose restart assignments come from
pluggable policies (uniform coins, per-variable Beta beliefs, best-of-history
frequencies), a DIMACS CNF toolkit with a random k-SAT generator, a complete
DPLL oracle for ground truth at small scale, and a benchmark harness that
compares the four solver variants.
"""

from .cnf import (
    DimacsError,
    EmptyClauseError,
    Formula,
    emit_dimacs,
    evaluate,
    generate_random_ksat,
    parse_dimacs,
)
from .dpll import BudgetExceeded, OracleResult, dpll_solve, filter_satisfiable
from .restart import (
    ALGORITHM_IDS,
    AllHistoryPolicy,
    BeliefState,
    BetaPolicy,
    HistoryEntry,
    KBestPolicy,
    RestartPolicy,
    UniformPolicy,
    beta_sample,
    make_policy,
)
from .walksat import SearchState, SolveResult, SolverConfig, TrialOutcome, run_try, solve

__all__ = [
    "ALGORITHM_IDS",
    "AllHistoryPolicy",
    "BeliefState",
    "BetaPolicy",
    "BudgetExceeded",
    "DimacsError",
    "EmptyClauseError",
    "Formula",
    "HistoryEntry",
    "KBestPolicy",
    "OracleResult",
    "RestartPolicy",
    "SearchState",
    "SolveResult",
    "SolverConfig",
    "TrialOutcome",
    "UniformPolicy",
    "beta_sample",
    "dpll_solve",
    "emit_dimacs",
    "evaluate",
    "filter_satisfiable",
    "generate_random_ksat",
    "make_policy",
    "parse_dimacs",
    "run_try",
    "solve",
]
