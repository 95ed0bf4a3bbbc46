import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betasat.cnf import (
    DimacsError,
    EmptyClauseError,
    Formula,
    emit_dimacs,
    evaluate,
    generate_random_ksat,
    parse_dimacs,
)

from oracles import formulas, formulas_with_assignment, naive_evaluate


class TestParseDimacs:
    def test_two_clause_document(self):
        f = parse_dimacs("p cnf 2 2\n1 2 0\n-1 0\n")
        assert f.num_vars == 2
        assert f.clauses == ((1, 2), (-1,))

    def test_comment_lines_skipped(self):
        f = parse_dimacs("c comment\np cnf 1 1\n1 0\n")
        assert f.num_vars == 1
        assert f.clauses == ((1,),)

    def test_literal_out_of_range(self):
        with pytest.raises(DimacsError, match="out of range"):
            parse_dimacs("p cnf 1 1\n2 0\n")

    def test_clauses_may_span_and_share_lines(self):
        f = parse_dimacs("p cnf 3 2\n1\n2 0 -3\n-1 0\n")
        assert f.clauses == ((1, 2), (-3, -1))

    def test_missing_header(self):
        with pytest.raises(DimacsError, match="header"):
            parse_dimacs("1 0\n")

    def test_malformed_header(self):
        with pytest.raises(DimacsError):
            parse_dimacs("p cnf 2\n1 0\n")
        with pytest.raises(DimacsError):
            parse_dimacs("p dnf 1 1\n1 0\n")
        with pytest.raises(DimacsError):
            parse_dimacs("p cnf one 1\n1 0\n")
        with pytest.raises(DimacsError):
            parse_dimacs("p cnf -1 0\n")

    def test_duplicate_header(self):
        with pytest.raises(DimacsError, match="duplicate"):
            parse_dimacs("p cnf 1 1\np cnf 1 1\n1 0\n")

    def test_clause_count_mismatch(self):
        with pytest.raises(DimacsError, match="clauses"):
            parse_dimacs("p cnf 2 3\n1 0\n2 0\n")

    def test_unterminated_clause(self):
        with pytest.raises(DimacsError, match="unterminated"):
            parse_dimacs("p cnf 2 1\n1 2\n")

    def test_non_integer_token(self):
        with pytest.raises(DimacsError, match="non-integer"):
            parse_dimacs("p cnf 2 1\n1 x 0\n")

    def test_empty_clause_rejected_by_default(self):
        with pytest.raises(EmptyClauseError):
            parse_dimacs("p cnf 2 2\n1 0\n0\n")

    def test_empty_clause_allowed_for_oracle_path(self):
        f = parse_dimacs("p cnf 2 2\n1 0\n0\n", allow_empty_clauses=True)
        assert f.clauses == ((1,), ())

    def test_empty_clause_error_is_distinct_class(self):
        # callers filter on the subclass, so the hierarchy is load-bearing
        assert issubclass(EmptyClauseError, DimacsError)
        with pytest.raises(DimacsError):
            parse_dimacs("p cnf 1 1\n0\n")

    def test_duplicate_literals_dropped(self):
        f = parse_dimacs("p cnf 2 1\n1 1 2 0\n")
        assert f.clauses == ((1, 2),)

    def test_tautology_kept_and_flagged(self):
        f = parse_dimacs("p cnf 2 2\n1 -1 0\n2 0\n")
        assert f.clauses == ((1, -1), (2,))
        assert f.tautologies == frozenset({0})

    def test_percent_line_ends_input(self):
        f = parse_dimacs("p cnf 1 1\n1 0\n%\n0\n")
        assert f.clauses == ((1,),)

    def test_name_attached(self):
        f = parse_dimacs("p cnf 1 1\n1 0\n", name="inst.cnf")
        assert f.name == "inst.cnf"

    def test_zero_clause_document(self):
        f = parse_dimacs("p cnf 3 0\n")
        assert f.num_vars == 3
        assert f.clauses == ()


class TestEmitDimacs:
    def test_minimal_instance(self):
        f = Formula(num_vars=1, clauses=((1,),))
        assert emit_dimacs(f) == "p cnf 1 1\n1 0\n"

    def test_literal_order_preserved(self):
        f = Formula(num_vars=2, clauses=((-2, 1),))
        assert "-2 1 0" in emit_dimacs(f)

    def test_empty_clause_emitted(self):
        f = Formula(num_vars=1, clauses=((1,), ()))
        text = emit_dimacs(f)
        assert text == "p cnf 1 2\n1 0\n0\n"
        back = parse_dimacs(text, allow_empty_clauses=True)
        assert back.clauses == f.clauses

    @given(formulas())
    def test_roundtrip(self, f):
        back = parse_dimacs(emit_dimacs(f))
        assert back == f

    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=25)
    def test_roundtrip_of_generated_instances(self, seed):
        f = generate_random_ksat(12, 40, 3, seed)
        back = parse_dimacs(emit_dimacs(f))
        assert back.num_vars == f.num_vars
        assert back.clauses == f.clauses

    def test_roundtrip_with_tautology(self):
        f = parse_dimacs("p cnf 3 2\n1 -1 2 0\n-3 0\n")
        assert parse_dimacs(emit_dimacs(f)) == f


class TestFormula:
    def test_rejects_out_of_range_literal(self):
        with pytest.raises(ValueError):
            Formula(num_vars=1, clauses=((2,),))
        with pytest.raises(ValueError):
            Formula(num_vars=1, clauses=((0,),))

    def test_rejects_negative_num_vars(self):
        with pytest.raises(ValueError):
            Formula(num_vars=-1, clauses=())

    def test_name_excluded_from_equality(self):
        a = Formula(num_vars=1, clauses=((1,),), name="a")
        b = Formula(num_vars=1, clauses=((1,),), name="b")
        assert a == b


class TestGenerateRandomKsat:
    def test_shape_at_hard_ratio(self):
        f = generate_random_ksat(20, 85, 3, seed=11)
        assert f.num_vars == 20
        assert f.num_clauses == 85
        for clause in f.clauses:
            assert len(clause) == 3
            assert len({abs(lit) for lit in clause}) == 3
            assert all(1 <= abs(lit) <= 20 for lit in clause)
        assert f.tautologies == frozenset()

    def test_full_width_clause_covers_all_variables(self):
        f = generate_random_ksat(3, 1, 3, seed=5)
        assert sorted(abs(lit) for lit in f.clauses[0]) == [1, 2, 3]

    def test_deterministic_given_seed(self):
        a = generate_random_ksat(15, 60, 3, seed=123)
        b = generate_random_ksat(15, 60, 3, seed=123)
        assert a == b

    def test_different_seeds_differ(self):
        a = generate_random_ksat(15, 60, 3, seed=1)
        b = generate_random_ksat(15, 60, 3, seed=2)
        assert a != b

    def test_rejects_wide_clauses(self):
        with pytest.raises(ValueError):
            generate_random_ksat(2, 5, 3, seed=0)

    def test_rejects_non_positive_counts(self):
        with pytest.raises(ValueError):
            generate_random_ksat(0, 5, 1, seed=0)
        with pytest.raises(ValueError):
            generate_random_ksat(5, 0, 1, seed=0)

    def test_polarities_roughly_balanced(self):
        f = generate_random_ksat(30, 400, 3, seed=9)
        positive = sum(lit > 0 for clause in f.clauses for lit in clause)
        assert 480 <= positive <= 720  # 1200 coins, ~6 sigma band


class TestEvaluate:
    def test_satisfying_assignment(self):
        f = Formula(num_vars=2, clauses=((1, 2), (-1,)))
        assert evaluate(f, [False, False, True]) == (True, [])

    def test_contradiction_always_violates_one(self):
        f = Formula(num_vars=1, clauses=((1,), (-1,)))
        for value in (False, True):
            ok, bad = evaluate(f, [False, value])
            assert not ok
            assert len(bad) == 1

    def test_size_mismatch(self):
        f = Formula(num_vars=2, clauses=((1,),))
        with pytest.raises(ValueError):
            evaluate(f, [False, True])

    def test_empty_clause_never_satisfied(self):
        f = Formula(num_vars=1, clauses=((), (1,)))
        ok, bad = evaluate(f, [False, True])
        assert not ok
        assert bad == [0]

    @given(formulas_with_assignment())
    def test_agrees_with_naive_scan(self, case):
        formula, assignment = case
        assert evaluate(formula, assignment) == naive_evaluate(formula, assignment)
