"""Independent reference implementations used to cross-check the package.

Everything here is deliberately written in a different style from the
package internals (set-based model checks, brute-force enumeration) so the
tests do not share code paths with what they verify.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from betasat.cnf import Formula


def naive_evaluate(formula: Formula, assignment: list[bool]) -> tuple[bool, list[int]]:
    """Set-based model check: a clause holds iff it intersects the true literals."""
    model = {v if assignment[v] else -v for v in range(1, formula.num_vars + 1)}
    violated = [
        i for i, clause in enumerate(formula.clauses) if not model.intersection(clause)
    ]
    return (not violated, violated)


def recount(formula: Formula, assignment: list[bool]) -> tuple[list[int], set[int]]:
    """Full from-scratch recount of per-clause satisfier counts."""
    counts = []
    for clause in formula.clauses:
        satisfied = 0
        for lit in clause:
            value = assignment[abs(lit)]
            if (lit > 0 and value) or (lit < 0 and not value):
                satisfied += 1
        counts.append(satisfied)
    return counts, {i for i, c in enumerate(counts) if c == 0}


def brute_break_count(formula: Formula, assignment: list[bool], v: int) -> int:
    """Count satisfied clauses that a flip of v would violate, by re-evaluating."""
    flipped = list(assignment)
    flipped[v] = not flipped[v]
    _, before = naive_evaluate(formula, assignment)
    _, after = naive_evaluate(formula, flipped)
    return len(set(after) - set(before))


def truth_table_satisfiable(formula: Formula) -> tuple[bool, list[bool] | None]:
    """Exhaustive enumeration over all assignments. Only for tiny formulas."""
    for bits in itertools.product([False, True], repeat=formula.num_vars):
        assignment = [False, *bits]
        ok, _ = naive_evaluate(formula, assignment)
        if ok:
            return True, assignment
    return False, None


@st.composite
def formulas(draw, max_vars: int = 8, max_clauses: int = 10, max_width: int = 4):
    """Random canonical formulas: distinct variables within each clause."""
    n = draw(st.integers(1, max_vars))
    num_clauses = draw(st.integers(0, max_clauses))
    clauses = []
    for _ in range(num_clauses):
        width = draw(st.integers(1, min(max_width, n)))
        variables = draw(st.permutations(range(1, n + 1)))[:width]
        clauses.append(
            tuple(v if draw(st.booleans()) else -v for v in variables)
        )
    return Formula(num_vars=n, clauses=tuple(clauses))


@st.composite
def formulas_with_assignment(draw, max_vars: int = 8, max_clauses: int = 10,
                             max_width: int = 4):
    formula = draw(formulas(max_vars, max_clauses, max_width))
    values = draw(
        st.lists(st.booleans(), min_size=formula.num_vars, max_size=formula.num_vars)
    )
    return formula, [False, *values]
