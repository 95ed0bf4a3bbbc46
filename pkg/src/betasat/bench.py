"""Benchmark harness: run the four WalkSAT variants over an instance suite
and reduce the run records to the three standard comparison views
(cactus series, tries/flips per solution, per-instance solve percentages).

Records are streamed to a CSV file as they are produced, so partial results
survive an interrupted suite. Seeds are derived from the base seed by cell
index (instance-major, then algorithm, then repetition), which makes reruns
byte-identical apart from the wall-time column.
"""

from __future__ import annotations

import csv
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, TextIO

from .cnf import DimacsError, Formula, generate_random_ksat, parse_dimacs
from .dpll import BudgetExceeded, dpll_solve
from .restart import ALGORITHM_IDS, UniformPolicy, make_policy
from .walksat import SolverConfig, solve

log = logging.getLogger(__name__)

RECORD_HEADER = ("instance", "algorithm", "seed", "solved", "tries", "flips", "wall_time_s")


@dataclass(frozen=True)
class RunRecord:
    """One (instance, algorithm, repetition) cell of a suite."""

    instance: str
    algorithm: str
    seed: int
    solved: bool
    tries: int
    flips: int
    wall_time: float


@dataclass(frozen=True)
class GeneratorSpec:
    """Batch of random k-SAT instances; instance i uses seed ``seed + i``."""

    count: int
    num_vars: int
    num_clauses: int
    k: int = 3
    seed: int = 0

    def build(self) -> list[tuple[str, Formula]]:
        return [
            (
                f"gen-{i:03d}",
                generate_random_ksat(self.num_vars, self.num_clauses, self.k, self.seed + i),
            )
            for i in range(self.count)
        ]


@dataclass(frozen=True)
class AlgorithmParams:
    """Solver budget plus the policy knobs one algorithm variant uses."""

    p: float = 0.5
    max_tries: int = 100
    max_flips: int = 10_000
    delta: float = 1.0
    k: int = 5


@dataclass
class SuiteConfig:
    """Everything a suite run needs: instances, algorithms, budgets, seeds.

    ``params`` maps each canonical algorithm id to its solver parameters.
    Seeds derive from ``base_seed`` as
    ``base_seed + (instance_index * len(algorithms) + algorithm_index) * repetitions + repetition``,
    which is collision-free within a suite.
    """

    algorithms: list[str]
    params: dict[str, AlgorithmParams]
    repetitions: int = 1
    base_seed: int = 0
    instance_paths: list[str] = field(default_factory=list)
    generator: GeneratorSpec | None = None

    def __post_init__(self) -> None:
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if not self.algorithms:
            raise ValueError("at least one algorithm required")
        for algo in self.algorithms:
            if algo not in ALGORITHM_IDS.values():
                raise ValueError(f"unknown algorithm id {algo!r}")
            if algo not in self.params:
                raise ValueError(f"missing params for algorithm {algo!r}")
        if not self.instance_paths and self.generator is None:
            raise ValueError("config needs instance paths or a generator spec")


_CONFIG_INT_KEYS = {"max_tries", "max_flips", "k", "repetitions", "base_seed",
                    "gen_count", "gen_vars", "gen_clauses", "gen_k", "gen_seed"}
_CONFIG_FLOAT_KEYS = {"p", "delta"}
_ALGO_PARAM_KEYS = {"p", "max_tries", "max_flips", "delta", "k"}


def load_suite_config(path: str | Path) -> SuiteConfig:
    """Parse the plain-text key=value suite configuration.

    Lines are ``key = value``; ``#`` starts a comment. ``instances`` and
    ``algorithms`` take comma-separated lists. Global solver keys
    (p, max_tries, max_flips, delta, k) apply to every algorithm and can be
    overridden per algorithm with ``<algo>.<key> = value`` using the short
    algorithm names. Generator keys (gen_count, gen_vars, gen_clauses,
    gen_k, gen_seed) are only read when gen_count is present.
    """
    raw: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key or not value:
            raise ValueError(f"{path}:{lineno}: empty key or value")
        if key in raw:
            raise ValueError(f"{path}:{lineno}: duplicate key {key!r}")
        raw[key] = value

    def parse_scalar(key: str, value: str):
        try:
            if key in _CONFIG_INT_KEYS:
                return int(value)
            if key in _CONFIG_FLOAT_KEYS:
                return float(value)
        except ValueError:
            raise ValueError(f"invalid value for {key!r}: {value!r}") from None
        return value

    short_names = raw.pop("algorithms", "walksat, beta, kbest, all")
    algorithms = []
    for name in (part.strip() for part in short_names.split(",")):
        if name not in ALGORITHM_IDS:
            raise ValueError(f"unknown algorithm {name!r} (expected {sorted(ALGORITHM_IDS)})")
        algorithms.append(ALGORITHM_IDS[name])

    instance_paths = [
        part.strip() for part in raw.pop("instances", "").split(",") if part.strip()
    ]

    generator = None
    if "gen_count" in raw:
        generator = GeneratorSpec(
            count=parse_scalar("gen_count", raw.pop("gen_count")),
            num_vars=parse_scalar("gen_vars", raw.pop("gen_vars")),
            num_clauses=parse_scalar("gen_clauses", raw.pop("gen_clauses")),
            k=parse_scalar("gen_k", raw.pop("gen_k", "3")),
            seed=parse_scalar("gen_seed", raw.pop("gen_seed", "0")),
        )

    repetitions = parse_scalar("repetitions", raw.pop("repetitions", "1"))
    base_seed = parse_scalar("base_seed", raw.pop("base_seed", "0"))

    defaults = AlgorithmParams()
    global_kwargs = {
        key: parse_scalar(key, raw.pop(key))
        for key in list(_ALGO_PARAM_KEYS)
        if key in raw
    }
    params: dict[str, AlgorithmParams] = {}
    for short, canonical in ALGORITHM_IDS.items():
        if canonical not in algorithms:
            continue
        kwargs = dict(global_kwargs)
        for key in list(raw):
            prefix = f"{short}."
            if key.startswith(prefix):
                param = key[len(prefix):]
                if param not in _ALGO_PARAM_KEYS:
                    raise ValueError(f"unknown per-algorithm key {key!r}")
                kwargs[param] = parse_scalar(param, raw.pop(key))
        params[canonical] = replace(defaults, **kwargs)

    unknown = [key for key in raw if "." not in key]
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")

    return SuiteConfig(
        algorithms=algorithms,
        params=params,
        repetitions=repetitions,
        base_seed=base_seed,
        instance_paths=instance_paths,
        generator=generator,
    )


def load_instances(cfg: SuiteConfig) -> list[tuple[str, Formula]]:
    """Resolve the configured instances; unreadable files are logged and skipped."""
    instances: list[tuple[str, Formula]] = []
    for path in cfg.instance_paths:
        try:
            text = Path(path).read_text()
            formula = parse_dimacs(text, name=path)
        except (OSError, DimacsError) as exc:
            log.warning("skipping instance %s: %s", path, exc)
            continue
        instances.append((path, formula))
    if cfg.generator is not None:
        instances.extend(cfg.generator.build())
    return instances


def _run_cell(cell: tuple[str, Formula, str, AlgorithmParams, int]) -> RunRecord:
    instance_id, formula, algorithm, params, seed = cell
    policy = make_policy(algorithm, formula.num_vars, delta=params.delta, k=params.k)
    cfg = SolverConfig(p=params.p, max_tries=params.max_tries,
                       max_flips=params.max_flips, seed=seed)
    start = time.perf_counter()
    result = solve(formula, cfg, policy)
    wall = time.perf_counter() - start
    return RunRecord(
        instance=instance_id,
        algorithm=algorithm,
        seed=seed,
        solved=result.solved,
        tries=result.tries_used,
        flips=result.total_flips,
        wall_time=wall,
    )


def _write_record(writer, stream: TextIO, record: RunRecord) -> None:
    writer.writerow(
        (record.instance, record.algorithm, record.seed, int(record.solved),
         record.tries, record.flips, repr(record.wall_time))
    )
    stream.flush()


def run_suite(
    cfg: SuiteConfig, out_path: str | Path | None = None, jobs: int = 1
) -> list[RunRecord]:
    """Run every (instance, algorithm, repetition) cell and return the records.

    With ``out_path`` set, records are appended to the CSV as they complete.
    ``jobs`` > 1 runs cells in a process pool; completion is reduced back to
    the deterministic cell order, so the record sequence does not depend on
    scheduling.
    """
    instances = load_instances(cfg)
    cells = []
    for i, (instance_id, formula) in enumerate(instances):
        for a, algorithm in enumerate(cfg.algorithms):
            for rep in range(cfg.repetitions):
                seed = cfg.base_seed + (i * len(cfg.algorithms) + a) * cfg.repetitions + rep
                cells.append((instance_id, formula, algorithm, cfg.params[algorithm], seed))

    records: list[RunRecord] = []
    stream = writer = None

    def emit(record: RunRecord) -> None:
        # the file appears only once there is a record, so a suite that
        # produces nothing leaves no output behind
        nonlocal stream, writer
        records.append(record)
        if out_path is None:
            return
        if stream is None:
            stream = open(out_path, "w", newline="")
            writer = csv.writer(stream)
            writer.writerow(RECORD_HEADER)
        _write_record(writer, stream, record)

    try:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results: Iterable[RunRecord] = pool.map(_run_cell, cells)
                for record in results:
                    emit(record)
        else:
            for cell in cells:
                emit(_run_cell(cell))
    finally:
        if stream is not None:
            stream.close()
    return records


def read_records(path: str | Path) -> list[RunRecord]:
    """Load run records back from a CSV produced by :func:`run_suite`."""
    records = []
    with open(path, newline="") as stream:
        reader = csv.DictReader(stream)
        for row in reader:
            records.append(
                RunRecord(
                    instance=row["instance"],
                    algorithm=row["algorithm"],
                    seed=int(row["seed"]),
                    solved=bool(int(row["solved"])),
                    tries=int(row["tries"]),
                    flips=int(row["flips"]),
                    wall_time=float(row["wall_time_s"]),
                )
            )
    return records


def _algorithms_in(records: list[RunRecord]) -> list[str]:
    return list(dict.fromkeys(record.algorithm for record in records))


def cactus_data(records: list[RunRecord]) -> dict[str, list[tuple[int, float]]]:
    """Cactus transform: per algorithm, the i-th point is (i, i-th smallest
    solve time), so the series reads as instances-solved within a time bound.

    Algorithms with no solved run map to an empty series.
    """
    if not records:
        raise ValueError("no records")
    series: dict[str, list[tuple[int, float]]] = {}
    for algorithm in _algorithms_in(records):
        times = sorted(
            record.wall_time
            for record in records
            if record.algorithm == algorithm and record.solved
        )
        series[algorithm] = [(i, t) for i, t in enumerate(times, start=1)]
    return series


@dataclass(frozen=True)
class SummaryRow:
    """Per-algorithm averages over solved runs, with the solve rate alongside."""

    runs: int
    solved: int
    solve_rate: float
    mean_tries: float | None
    mean_flips: float | None


def tries_flips_summary(records: list[RunRecord]) -> dict[str, SummaryRow]:
    """Mean tries and flips per solution for each algorithm.

    Unsolved runs are excluded from the means and show up only through the
    solve rate; an algorithm with no solved run gets means of None.
    """
    summary = {}
    for algorithm in _algorithms_in(records):
        runs = [record for record in records if record.algorithm == algorithm]
        solved = [record for record in runs if record.solved]
        summary[algorithm] = SummaryRow(
            runs=len(runs),
            solved=len(solved),
            solve_rate=len(solved) / len(runs),
            mean_tries=sum(r.tries for r in solved) / len(solved) if solved else None,
            mean_flips=sum(r.flips for r in solved) / len(solved) if solved else None,
        )
    return summary


def solve_percentage(records: list[RunRecord], instance_id: str) -> dict[str, float]:
    """Percentage of solved repetitions per algorithm on one instance."""
    relevant = [record for record in records if record.instance == instance_id]
    if not relevant:
        raise ValueError(f"no records for instance {instance_id!r}")
    percentages = {}
    for algorithm in _algorithms_in(relevant):
        runs = [record for record in relevant if record.algorithm == algorithm]
        percentages[algorithm] = 100.0 * sum(r.solved for r in runs) / len(runs)
    return percentages


def harvest_hard_instances(
    generator: GeneratorSpec,
    probe: SolverConfig,
    *,
    oracle_budget: int | None = None,
    probe_runs: int = 10,
    fail_threshold: float = 0.5,
) -> list[Formula]:
    """Find satisfiable-but-hard instances: provably SAT by the oracle, yet
    failed by a budget-limited uniform WalkSAT probe on at least
    ``fail_threshold`` of ``probe_runs`` seeded attempts.

    Probe run j uses seed ``probe.seed + j``. Instances the oracle cannot
    decide within its budget are dropped. May return an empty list when the
    generated region yields nothing hard.
    """
    if not 0.0 <= fail_threshold <= 1.0:
        raise ValueError("fail_threshold must be in [0, 1]")
    if probe_runs < 1:
        raise ValueError("probe_runs must be >= 1")
    hard: list[Formula] = []
    for instance_id, formula in generator.build():
        try:
            verdict = dpll_solve(formula, oracle_budget)
        except BudgetExceeded:
            log.info("harvest: %s undecided within oracle budget", instance_id)
            continue
        if not verdict.satisfiable:
            continue
        failures = 0
        for j in range(probe_runs):
            cfg = SolverConfig(p=probe.p, max_tries=probe.max_tries,
                               max_flips=probe.max_flips, seed=probe.seed + j)
            if not solve(formula, cfg, UniformPolicy(formula.num_vars)).solved:
                failures += 1
        if failures / probe_runs >= fail_threshold:
            hard.append(formula)
    return hard
