"""CNF data model, DIMACS parsing/emission, and random k-SAT generation.

Literals are signed integers in the DIMACS convention: ``v`` means variable
``v`` occurs positively, ``-v`` negatively. Variables are 1-based. Assignments
are dense boolean lists of length ``num_vars + 1`` with index 0 unused.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

Clause = tuple[int, ...]
Assignment = list[bool]


class DimacsError(ValueError):
    """Malformed DIMACS CNF input."""


class EmptyClauseError(DimacsError):
    """Empty clause in the input.

    Kept distinct from other parse errors because a complete solver can
    handle empty clauses (they make the formula trivially unsatisfiable)
    while the local-search path must reject them.
    """


@dataclass(frozen=True)
class Formula:
    """Immutable CNF instance.

    ``clauses`` is an ordered tuple of clauses, each a tuple of signed
    literals. ``tautologies`` flags the indices of clauses containing both
    ``v`` and ``-v``; such clauses are satisfied by every assignment but are
    retained to stay faithful to the source instance.
    """

    num_vars: int
    clauses: tuple[Clause, ...]
    name: str | None = field(default=None, compare=False)
    tautologies: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise ValueError(f"num_vars must be >= 0, got {self.num_vars}")
        for i, clause in enumerate(self.clauses):
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(
                        f"clause {i}: literal {lit} out of range for "
                        f"{self.num_vars} variables"
                    )

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def _canonicalize(raw: list[int]) -> Clause:
    """Drop duplicate literals, preserving first-occurrence order."""
    return tuple(dict.fromkeys(raw))


def parse_dimacs(
    text: str,
    name: str | None = None,
    *,
    allow_empty_clauses: bool = False,
) -> Formula:
    """Parse a DIMACS CNF document.

    Accepts ``c`` comment lines, a single ``p cnf <vars> <clauses>`` header,
    and whitespace-separated signed integer literals with each clause
    terminated by ``0``. Clauses may span lines or share one. A line whose
    first token is ``%`` ends the input (a common benchmark-file quirk).

    Duplicate literals within a clause are dropped. Tautological clauses are
    kept and flagged. Empty clauses raise :class:`EmptyClauseError` unless
    ``allow_empty_clauses`` is set (the complete-solver path wants them).

    Raises :class:`DimacsError` on a malformed header, an out-of-range
    literal, or a clause count that disagrees with the header.
    """
    num_vars: int | None = None
    declared_clauses = 0
    tokens: list[str] = []

    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("c"):
            continue
        if stripped.startswith("%"):
            break
        if stripped.startswith("p"):
            if num_vars is not None:
                raise DimacsError("duplicate problem header")
            parts = stripped.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise DimacsError(f"malformed header: {stripped!r}")
            try:
                num_vars, declared_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"non-integer header counts: {stripped!r}") from None
            if num_vars < 0 or declared_clauses < 0:
                raise DimacsError(f"negative header counts: {stripped!r}")
            continue
        tokens.extend(stripped.split())

    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")

    clauses: list[Clause] = []
    tautologies: set[int] = set()
    current: list[int] = []
    for tok in tokens:
        try:
            lit = int(tok)
        except ValueError:
            raise DimacsError(f"non-integer token {tok!r} in clause data") from None
        if lit == 0:
            if not current:
                if not allow_empty_clauses:
                    raise EmptyClauseError(
                        f"empty clause at clause {len(clauses) + 1}"
                    )
                clauses.append(())
                continue
            clause = _canonicalize(current)
            if any(-lit in clause for lit in clause):
                tautologies.add(len(clauses))
            clauses.append(clause)
            current = []
        else:
            if abs(lit) > num_vars:
                raise DimacsError(
                    f"literal {lit} out of range (num_vars = {num_vars})"
                )
            current.append(lit)

    if current:
        raise DimacsError("unterminated clause at end of input")
    if len(clauses) != declared_clauses:
        raise DimacsError(
            f"header declares {declared_clauses} clauses, found {len(clauses)}"
        )

    return Formula(
        num_vars=num_vars,
        clauses=tuple(clauses),
        name=name,
        tautologies=frozenset(tautologies),
    )


def emit_dimacs(formula: Formula) -> str:
    """Serialize a formula to DIMACS text, preserving clause and literal order."""
    lines = [f"p cnf {formula.num_vars} {formula.num_clauses}"]
    for clause in formula.clauses:
        lines.append(" ".join([str(lit) for lit in clause] + ["0"]))
    return "\n".join(lines) + "\n"


def generate_random_ksat(
    num_vars: int, num_clauses: int, k: int, seed: int
) -> Formula:
    """Generate a uniform random k-SAT instance, reproducible from the seed.

    Each clause picks ``k`` distinct variables uniformly without replacement
    and gives each an independent fair-coin polarity. Clauses are not
    deduplicated. For 3-SAT, a clause/variable ratio near 4.26 lands in the
    hard phase-transition region.
    """
    if num_vars < 1 or num_clauses < 1:
        raise ValueError("num_vars and num_clauses must be >= 1")
    if k < 1 or k > num_vars:
        raise ValueError(f"k must be in 1..num_vars, got k={k}, num_vars={num_vars}")
    rng = random.Random(seed)
    clauses = []
    for _ in range(num_clauses):
        variables = rng.sample(range(1, num_vars + 1), k)
        clauses.append(
            tuple(v if rng.random() < 0.5 else -v for v in variables)
        )
    return Formula(
        num_vars=num_vars,
        clauses=tuple(clauses),
        name=f"random-{k}sat-v{num_vars}-c{num_clauses}-s{seed}",
    )


def evaluate(formula: Formula, assignment: Assignment) -> tuple[bool, list[int]]:
    """Evaluate an assignment, returning (satisfied, violated clause indices).

    A clause is satisfied when at least one literal matches the assignment;
    an empty clause is never satisfied. The assignment must cover all
    variables (length ``num_vars + 1``, index 0 ignored).
    """
    if len(assignment) != formula.num_vars + 1:
        raise ValueError(
            f"assignment covers {len(assignment) - 1} variables, "
            f"formula has {formula.num_vars}"
        )
    unsatisfied = [
        i
        for i, clause in enumerate(formula.clauses)
        if not any((lit > 0) == assignment[abs(lit)] for lit in clause)
    ]
    return (not unsatisfied, unsatisfied)
