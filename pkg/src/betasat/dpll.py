"""Complete DPLL solver, used as ground truth at small scale.

Plain backtracking with unit propagation and pure-literal elimination, no
clause learning. Branching is deterministic (lowest-index variable occurring
in the active clauses, true first) so decision counts are reproducible.
Unlike the local-search path, this solver accepts formulas with empty
clauses and reports them unsatisfiable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cnf import Assignment, Formula, evaluate


class BudgetExceeded(Exception):
    """Decision limit hit: the instance is too hard for the oracle budget.

    Says nothing about satisfiability.
    """


@dataclass
class OracleResult:
    """Definitive verdict: satisfiable (with verified witness) or not."""

    satisfiable: bool
    witness: Assignment | None
    decisions: int
    unit_propagations: int


class _Stats:
    __slots__ = ("decisions", "unit_propagations")

    def __init__(self) -> None:
        self.decisions = 0
        self.unit_propagations = 0


def _reduce(clauses: list[tuple[int, ...]], lit: int) -> list[tuple[int, ...]]:
    """Assign ``lit`` true: drop satisfied clauses, strip falsified literals."""
    out = []
    for clause in clauses:
        if lit in clause:
            continue
        if -lit in clause:
            out.append(tuple(x for x in clause if x != -lit))
        else:
            out.append(clause)
    return out


def _search(
    clauses: list[tuple[int, ...]],
    assignment: dict[int, bool],
    stats: _Stats,
    budget: int | None,
) -> dict[int, bool] | None:
    assignment = dict(assignment)
    while True:
        if not clauses:
            return assignment
        if any(not clause for clause in clauses):
            return None
        unit = next((clause[0] for clause in clauses if len(clause) == 1), None)
        if unit is not None:
            stats.unit_propagations += 1
            assignment[abs(unit)] = unit > 0
            clauses = _reduce(clauses, unit)
            continue
        literals = {lit for clause in clauses for lit in clause}
        pure = min((lit for lit in literals if -lit not in literals), key=abs, default=None)
        if pure is not None:
            assignment[abs(pure)] = pure > 0
            clauses = _reduce(clauses, pure)
            continue
        break
    stats.decisions += 1
    if budget is not None and stats.decisions > budget:
        raise BudgetExceeded(f"decision limit {budget} reached")
    var = min(abs(lit) for clause in clauses for lit in clause)
    for value in (True, False):
        result = _search(
            _reduce(clauses, var if value else -var),
            {**assignment, var: value},
            stats,
            budget,
        )
        if result is not None:
            return result
    return None


def dpll_solve(formula: Formula, budget: int | None = None) -> OracleResult:
    """Decide satisfiability completely, within an optional decision budget.

    Raises :class:`BudgetExceeded` when the limit is hit. Variables left
    unassigned by the search (their clauses all got satisfied) default to
    true in the witness; the witness is checked before being returned.
    """
    stats = _Stats()
    model = _search(list(formula.clauses), {}, stats, budget)
    if model is None:
        return OracleResult(False, None, stats.decisions, stats.unit_propagations)
    witness = [True] * (formula.num_vars + 1)
    witness[0] = False
    for var, value in model.items():
        witness[var] = value
    ok, _ = evaluate(formula, witness)
    if not ok:
        raise RuntimeError("internal error: DPLL witness failed verification")
    return OracleResult(True, witness, stats.decisions, stats.unit_propagations)


def filter_satisfiable(
    instances: list[Formula], budget: int | None = None
) -> tuple[list[Formula], list[Formula], list[Formula]]:
    """Partition instances into (satisfiable, unsatisfiable, undecided).

    Undecided collects the instances whose oracle run hit the budget; with
    no budget it stays empty.
    """
    satisfiable: list[Formula] = []
    unsatisfiable: list[Formula] = []
    undecided: list[Formula] = []
    for formula in instances:
        try:
            result = dpll_solve(formula, budget)
        except BudgetExceeded:
            undecided.append(formula)
            continue
        (satisfiable if result.satisfiable else unsatisfiable).append(formula)
    return satisfiable, unsatisfiable, undecided
