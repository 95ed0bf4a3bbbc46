"""Restart-initialization policies for the WalkSAT variants.

Four policies, one per algorithm variant:

* ``UniformPolicy`` (WalkSAT): every restart is a fresh fair-coin assignment.
* ``BetaPolicy`` (BetaWalkSAT): keeps a Beta(alpha, beta) belief per variable.
  Each restart draws a success probability from the belief and flips a coin
  with it, Thompson-sampling style. After a failed try, the belief of each
  variable moves away from its failing value: a variable that ended true gets
  its beta parameter incremented, so a false assignment becomes more likely
  next time, and vice versa.
* ``KBestPolicy`` (KBestWalkSAT): remembers the final assignments of the k
  best failed tries (fewest unsatisfied clauses) and samples each variable
  with its Laplace-smoothed frequency of being true among them.
* ``AllHistoryPolicy`` (AllWalkSAT): same smoothed-frequency sampling, but
  over counters accumulated from every failed try.

A policy instance belongs to one solve run at a time and draws from the
run's PRNG stream, one pass over variables 1..num_vars per restart.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .cnf import Assignment

if TYPE_CHECKING:
    from .walksat import TrialOutcome

# Canonical algorithm ids, as reported by the benchmark harness, keyed by
# the short names the CLI accepts.
ALGORITHM_IDS = {
    "walksat": "WalkSAT",
    "beta": "BetaWalkSAT",
    "kbest": "KBestWalkSAT",
    "all": "AllWalkSAT",
}


def beta_sample(alpha: float, beta: float, rng: random.Random) -> float:
    """Draw from Beta(alpha, beta) via the ratio of two gamma draws.

    X/(X+Y) with X ~ Gamma(alpha, 1) and Y ~ Gamma(beta, 1), which avoids
    inverting the incomplete-beta CDF. random.Random.betavariate implements
    exactly this, so we delegate after validating the parameters.
    """
    if alpha <= 0 or beta <= 0:
        raise ValueError(f"Beta parameters must be positive, got ({alpha}, {beta})")
    return rng.betavariate(alpha, beta)


@dataclass
class BeliefState:
    """Per-variable Beta parameters, the explicit probabilistic model.

    Index 0 is unused. A fresh state is the uniform prior Beta(1, 1) for
    every variable, and both parameter vectors only ever grow.
    """

    alpha: list[float]
    beta: list[float]

    @classmethod
    def uniform_prior(cls, num_vars: int) -> "BeliefState":
        return cls(alpha=[1.0] * (num_vars + 1), beta=[1.0] * (num_vars + 1))


@dataclass
class HistoryEntry:
    """Final assignment of one failed try, ranked by unsatisfied clauses left."""

    assignment: Assignment
    unsat_remaining: int
    try_index: int


class RestartPolicy(ABC):
    """Produces initial assignments and consumes failed-trial feedback."""

    def __init__(self, num_vars: int) -> None:
        if num_vars < 0:
            raise ValueError("num_vars must be >= 0")
        self.num_vars = num_vars

    @abstractmethod
    def sample_initial(self, rng: random.Random) -> Assignment:
        """Draw an initial assignment (length num_vars + 1, index 0 unused)."""

    def notify_failure(self, outcome: "TrialOutcome") -> None:
        """Fold a failed try into the policy state. Rejects solved outcomes."""
        if outcome.solved:
            raise ValueError("notify_failure called with a solved outcome")
        if len(outcome.final_assignment) != self.num_vars + 1:
            raise ValueError("outcome assignment does not match policy size")
        self._update(outcome)

    def _update(self, outcome: "TrialOutcome") -> None:
        pass

    @abstractmethod
    def reset(self) -> None:
        """Return all policy state to its freshly-constructed value."""


class UniformPolicy(RestartPolicy):
    """Classic WalkSAT restarts: independent fair coins, no memory."""

    def sample_initial(self, rng: random.Random) -> Assignment:
        return [False] + [rng.random() < 0.5 for _ in range(self.num_vars)]

    def reset(self) -> None:
        pass


class BetaPolicy(RestartPolicy):
    """Beta-belief restarts with conjugate pseudo-count updates.

    ``delta`` is the pseudo-count added per failed try; the marginal
    probability of drawing true for a variable is alpha / (alpha + beta).
    """

    def __init__(self, num_vars: int, delta: float = 1.0) -> None:
        super().__init__(num_vars)
        if delta < 0:
            raise ValueError(f"delta must be >= 0, got {delta}")
        self.delta = delta
        self.beliefs = BeliefState.uniform_prior(num_vars)

    def sample_initial(self, rng: random.Random) -> Assignment:
        alpha, beta = self.beliefs.alpha, self.beliefs.beta
        return [False] + [
            rng.random() < beta_sample(alpha[v], beta[v], rng)
            for v in range(1, self.num_vars + 1)
        ]

    def _update(self, outcome: "TrialOutcome") -> None:
        alpha, beta = self.beliefs.alpha, self.beliefs.beta
        final = outcome.final_assignment
        delta = self.delta
        for v in range(1, self.num_vars + 1):
            if final[v]:
                beta[v] += delta
            else:
                alpha[v] += delta

    def reset(self) -> None:
        self.beliefs = BeliefState.uniform_prior(self.num_vars)


class KBestPolicy(RestartPolicy):
    """Remembers the k best failed tries and samples from their frequencies.

    Quality is the number of unsatisfied clauses at the end of the try,
    lower is better. On overflow the worst entry is evicted; ties evict the
    oldest. Sampling uses the Laplace-smoothed true-frequency
    (1 + #true) / (2 + #entries) per variable, which reduces to fair coins
    while the history is empty and never pins a variable completely.
    """

    def __init__(self, num_vars: int, k: int = 5) -> None:
        super().__init__(num_vars)
        if k < 1:
            raise ValueError(f"k must be >= 1, got {k}")
        self.k = k
        self.entries: list[HistoryEntry] = []
        self._tries_seen = 0

    def sample_initial(self, rng: random.Random) -> Assignment:
        entries = self.entries
        denom = 2 + len(entries)
        values = [False]
        for v in range(1, self.num_vars + 1):
            true_count = sum(e.assignment[v] for e in entries)
            values.append(rng.random() < (1 + true_count) / denom)
        return values

    def _update(self, outcome: "TrialOutcome") -> None:
        self._tries_seen += 1
        self.entries.append(
            HistoryEntry(
                assignment=list(outcome.final_assignment),
                unsat_remaining=outcome.unsat_remaining,
                try_index=self._tries_seen,
            )
        )
        self.entries.sort(key=lambda e: (e.unsat_remaining, e.try_index))
        if len(self.entries) > self.k:
            worst = max(self.entries, key=lambda e: (e.unsat_remaining, -e.try_index))
            self.entries.remove(worst)

    def reset(self) -> None:
        self.entries = []
        self._tries_seen = 0


class AllHistoryPolicy(RestartPolicy):
    """Frequency sampling over every failed try, stored as counters.

    Equivalent to KBestPolicy with unbounded capacity, but keeps only a
    per-variable true count and the total number of failures, so memory
    stays O(num_vars).
    """

    def __init__(self, num_vars: int) -> None:
        super().__init__(num_vars)
        self.true_counts = [0] * (num_vars + 1)
        self.failures = 0

    def sample_initial(self, rng: random.Random) -> Assignment:
        denom = 2 + self.failures
        true_counts = self.true_counts
        return [False] + [
            rng.random() < (1 + true_counts[v]) / denom
            for v in range(1, self.num_vars + 1)
        ]

    def _update(self, outcome: "TrialOutcome") -> None:
        self.failures += 1
        final = outcome.final_assignment
        for v in range(1, self.num_vars + 1):
            if final[v]:
                self.true_counts[v] += 1

    def reset(self) -> None:
        self.true_counts = [0] * (self.num_vars + 1)
        self.failures = 0


def make_policy(
    algorithm: str, num_vars: int, *, delta: float = 1.0, k: int = 5
) -> RestartPolicy:
    """Build the restart policy for an algorithm name.

    Accepts the short CLI names (walksat, beta, kbest, all) as well as the
    canonical ids (WalkSAT, BetaWalkSAT, ...).
    """
    short = {canonical: short for short, canonical in ALGORITHM_IDS.items()}.get(
        algorithm, algorithm
    )
    if short == "walksat":
        return UniformPolicy(num_vars)
    if short == "beta":
        return BetaPolicy(num_vars, delta=delta)
    if short == "kbest":
        return KBestPolicy(num_vars, k=k)
    if short == "all":
        return AllHistoryPolicy(num_vars)
    raise ValueError(
        f"unknown algorithm {algorithm!r}; expected one of "
        f"{sorted(ALGORITHM_IDS)} or {sorted(ALGORITHM_IDS.values())}"
    )
