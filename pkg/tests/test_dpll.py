import itertools

import pytest
from hypothesis import given, settings

from betasat.cnf import Formula, evaluate, generate_random_ksat, parse_dimacs
from betasat.dpll import BudgetExceeded, dpll_solve, filter_satisfiable

from oracles import formulas, truth_table_satisfiable

# Needs a real branch: no unit clauses and every variable occurs both ways.
BRANCHING_FORMULA = Formula(num_vars=2, clauses=((1, 2), (-1, -2)))


class TestDpllSolve:
    def test_unsat_contradiction(self):
        f = Formula(num_vars=2, clauses=((1, 2), (-1,), (-2,)))
        result = dpll_solve(f)
        assert not result.satisfiable
        assert result.witness is None

    def test_unit_clause(self):
        f = Formula(num_vars=1, clauses=((1,),))
        result = dpll_solve(f)
        assert result.satisfiable
        assert result.witness[1] is True
        assert evaluate(f, result.witness) == (True, [])

    def test_empty_clause_means_unsat(self):
        f = parse_dimacs("p cnf 2 2\n1 2 0\n0\n", allow_empty_clauses=True)
        assert not dpll_solve(f).satisfiable

    def test_empty_formula_is_sat(self):
        f = Formula(num_vars=3, clauses=())
        result = dpll_solve(f)
        assert result.satisfiable
        assert evaluate(f, result.witness) == (True, [])

    def test_budget_exceeded(self):
        with pytest.raises(BudgetExceeded):
            dpll_solve(BRANCHING_FORMULA, budget=0)

    def test_generous_budget_not_hit(self):
        assert dpll_solve(BRANCHING_FORMULA, budget=10).satisfiable

    def test_deterministic_counters(self):
        f = generate_random_ksat(12, 50, 3, seed=4)
        a = dpll_solve(f)
        b = dpll_solve(f)
        assert (a.decisions, a.unit_propagations) == (b.decisions, b.unit_propagations)

    def test_unit_propagation_counted(self):
        f = Formula(num_vars=2, clauses=((1,), (-1, 2)))
        result = dpll_solve(f)
        assert result.decisions == 0
        assert result.unit_propagations == 2

    def test_exhaustive_two_variable_formulas(self):
        # every formula over 2 variables with up to two clauses drawn from
        # all distinct-variable clauses, tautologies and empty clause included
        pool = [
            (), (1,), (-1,), (2,), (-2,),
            (1, 2), (1, -2), (-1, 2), (-1, -2), (1, -1), (2, -2),
        ]
        formulas_checked = 0
        for count in (0, 1, 2):
            for combo in itertools.product(pool, repeat=count):
                f = Formula(num_vars=2, clauses=combo)
                expected, _ = truth_table_satisfiable(f)
                result = dpll_solve(f)
                assert result.satisfiable == expected
                if result.satisfiable:
                    assert evaluate(f, result.witness) == (True, [])
                formulas_checked += 1
        assert formulas_checked == 1 + 11 + 121

    @given(formulas(max_vars=4, max_clauses=8, max_width=3))
    @settings(max_examples=300)
    def test_agrees_with_truth_table(self, f):
        expected, _ = truth_table_satisfiable(f)
        result = dpll_solve(f)
        assert result.satisfiable == expected
        if result.satisfiable:
            assert evaluate(f, result.witness) == (True, [])


class TestFilterSatisfiable:
    def test_basic_partition(self):
        sat_f = Formula(num_vars=1, clauses=((1,),))
        unsat_f = Formula(num_vars=1, clauses=((1,), (-1,)))
        sat, unsat, undecided = filter_satisfiable([sat_f, unsat_f])
        assert sat == [sat_f]
        assert unsat == [unsat_f]
        assert undecided == []

    def test_empty_input(self):
        assert filter_satisfiable([]) == ([], [], [])

    def test_budget_failures_become_undecided(self):
        sat, unsat, undecided = filter_satisfiable([BRANCHING_FORMULA], budget=0)
        assert (sat, unsat) == ([], [])
        assert undecided == [BRANCHING_FORMULA]

    def test_phase_transition_mixture(self):
        instances = [generate_random_ksat(20, 85, 3, seed=s) for s in range(40)]
        sat, unsat, undecided = filter_satisfiable(instances)
        assert len(sat) + len(unsat) == 40
        assert sat and unsat  # ratio 4.25 yields both outcomes
