"""WalkSAT inner loop: incremental search state, move selection, try orchestration.

A solve run owns a single PRNG stream. The draw order is fixed so runs are
replayable: per try, the restart policy draws first (one pass over the
variables), then each flip draws the unsatisfied-clause index, followed either
by the freebie choice or by the noise coin and the move choice.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from .cnf import Assignment, Formula, evaluate
from .restart import RestartPolicy


@dataclass(frozen=True)
class SolverConfig:
    """Search budget and noise for one solve call."""

    p: float = 0.5
    max_tries: int = 100
    max_flips: int = 10_000
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must be in [0, 1], got {self.p}")
        if self.max_tries < 1 or self.max_flips < 1:
            raise ValueError("max_tries and max_flips must be >= 1")


@dataclass
class TrialOutcome:
    """Result of one try. A failed try's final assignment feeds the restart policy."""

    solved: bool
    final_assignment: Assignment
    flips_used: int
    unsat_remaining: int


@dataclass
class SolveResult:
    solved: bool
    assignment: Assignment | None
    tries_used: int
    total_flips: int
    elapsed: float
    init_time: float  # seconds spent drawing initial assignments


class SearchState:
    """Incremental bookkeeping for one try.

    Tracks the assignment, per-clause satisfied-literal counts, per-literal
    occurrence lists, and the set of violated clauses. The unsatisfied set is
    an index-backed bag: O(1) membership, insertion, removal, and uniform
    sampling, since drawing a random violated clause is the hot path.

    Mutating methods update only the clauses touched by the flipped variable;
    the result always matches a full recount from scratch.
    """

    def __init__(self, formula: Formula, assignment: Assignment) -> None:
        if len(assignment) != formula.num_vars + 1:
            raise ValueError(
                f"assignment covers {len(assignment) - 1} variables, "
                f"formula has {formula.num_vars}"
            )
        self.formula = formula
        self.assignment = list(assignment)
        n = formula.num_vars
        self.occ_true: list[list[int]] = [[] for _ in range(n + 1)]
        self.occ_false: list[list[int]] = [[] for _ in range(n + 1)]
        self.clause_vars: list[tuple[int, ...]] = []
        self.sat_count: list[int] = []
        # unsat bag: unsat_list holds violated clause indices, unsat_pos maps
        # clause index -> position in unsat_list (-1 when satisfied)
        self.unsat_list: list[int] = []
        self.unsat_pos: list[int] = [-1] * formula.num_clauses
        self.flips_done = 0

        values = self.assignment
        for ci, clause in enumerate(formula.clauses):
            count = 0
            for lit in clause:
                v = abs(lit)
                if lit > 0:
                    self.occ_true[v].append(ci)
                    count += values[v]
                else:
                    self.occ_false[v].append(ci)
                    count += not values[v]
            self.clause_vars.append(tuple(dict.fromkeys(abs(lit) for lit in clause)))
            self.sat_count.append(count)
            if count == 0:
                self.unsat_pos[ci] = len(self.unsat_list)
                self.unsat_list.append(ci)

    def break_count(self, v: int) -> int:
        """Number of satisfied clauses that flipping ``v`` would violate.

        Exactly the clauses where ``v``'s currently-true literal is the sole
        satisfier; currently violated clauses can never break further.
        """
        occ = self.occ_true[v] if self.assignment[v] else self.occ_false[v]
        sat_count = self.sat_count
        return sum(1 for ci in occ if sat_count[ci] == 1)

    def pick_move(self, ci: int, p: float, rng: random.Random) -> int:
        """Choose the variable to flip for violated clause ``ci``.

        Zero-break variables (freebies) are taken greedily, uniformly among
        themselves. Otherwise a noise coin with probability ``p`` picks a
        uniform variable of the clause, else a uniform choice among the
        variables minimizing the break count.
        """
        variables = self.clause_vars[ci]
        breaks = [self.break_count(v) for v in variables]
        freebies = [v for v, b in zip(variables, breaks) if b == 0]
        if freebies:
            return freebies[rng.randrange(len(freebies))]
        if rng.random() < p:
            return variables[rng.randrange(len(variables))]
        best = min(breaks)
        minimal = [v for v, b in zip(variables, breaks) if b == best]
        return minimal[rng.randrange(len(minimal))]

    def flip(self, v: int) -> "SearchState":
        """Negate ``v`` in place, updating counts via its occurrence lists."""
        value = self.assignment[v]
        breaking = self.occ_true[v] if value else self.occ_false[v]
        making = self.occ_false[v] if value else self.occ_true[v]
        sat_count = self.sat_count
        unsat_list = self.unsat_list
        unsat_pos = self.unsat_pos
        for ci in breaking:
            sat_count[ci] -= 1
            if sat_count[ci] == 0:
                unsat_pos[ci] = len(unsat_list)
                unsat_list.append(ci)
        for ci in making:
            if sat_count[ci] == 0:
                pos = unsat_pos[ci]
                last = unsat_list[-1]
                unsat_list[pos] = last
                unsat_pos[last] = pos
                unsat_list.pop()
                unsat_pos[ci] = -1
            sat_count[ci] += 1
        self.assignment[v] = not value
        self.flips_done += 1
        return self

    @property
    def unsat_set(self) -> set[int]:
        return set(self.unsat_list)


def run_try(
    formula: Formula,
    initial: Assignment,
    cfg: SolverConfig,
    rng: random.Random,
    on_flip: Callable[[int], None] | None = None,
) -> TrialOutcome:
    """Run one try: up to ``max_flips`` flips from the given initial assignment.

    The satisfied check also runs before the first flip, so an initial
    assignment that already satisfies the formula succeeds with zero flips.
    """
    state = SearchState(formula, initial)
    unsat_list = state.unsat_list
    if not unsat_list:
        return TrialOutcome(True, list(state.assignment), 0, 0)
    p = cfg.p
    for _ in range(cfg.max_flips):
        ci = unsat_list[rng.randrange(len(unsat_list))]
        v = state.pick_move(ci, p, rng)
        state.flip(v)
        if on_flip is not None:
            on_flip(v)
        if not unsat_list:
            return TrialOutcome(True, list(state.assignment), state.flips_done, 0)
    return TrialOutcome(
        False, list(state.assignment), state.flips_done, len(unsat_list)
    )


def solve(
    formula: Formula,
    cfg: SolverConfig,
    policy: RestartPolicy,
    on_flip: Callable[[int], None] | None = None,
) -> SolveResult:
    """Restart loop: sample an initial assignment from the policy, run a try,
    and on failure feed the outcome back to the policy.

    Returns a verified witness on success. An unsolved result means the
    budget ran out; it is never a proof of unsatisfiability. The policy is
    used as given (not reset), so a fresh policy per formula is the caller's
    responsibility.
    """
    if any(not clause for clause in formula.clauses):
        raise ValueError(
            "formula contains an empty clause; no flip can satisfy it "
            "(use the complete solver instead)"
        )
    if policy.num_vars != formula.num_vars:
        raise ValueError(
            f"policy initialized for {policy.num_vars} variables, "
            f"formula has {formula.num_vars}"
        )
    rng = random.Random(cfg.seed)
    start = time.perf_counter()
    total_flips = 0
    init_time = 0.0
    for try_index in range(1, cfg.max_tries + 1):
        t0 = time.perf_counter()
        initial = policy.sample_initial(rng)
        init_time += time.perf_counter() - t0
        outcome = run_try(formula, initial, cfg, rng, on_flip)
        total_flips += outcome.flips_used
        if outcome.solved:
            ok, _ = evaluate(formula, outcome.final_assignment)
            if not ok:
                raise RuntimeError("internal error: witness failed verification")
            return SolveResult(
                solved=True,
                assignment=outcome.final_assignment,
                tries_used=try_index,
                total_flips=total_flips,
                elapsed=time.perf_counter() - start,
                init_time=init_time,
            )
        policy.notify_failure(outcome)
    return SolveResult(
        solved=False,
        assignment=None,
        tries_used=cfg.max_tries,
        total_flips=total_flips,
        elapsed=time.perf_counter() - start,
        init_time=init_time,
    )
