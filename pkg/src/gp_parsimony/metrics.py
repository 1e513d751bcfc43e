"""Run records and sweep summaries.

The two headline measures of a method cell are the mean over runs of the
final generation's best adjusted fitness ("mean fitness") and the mean size
of that same best tree ("mean tree size").  Spreads are sample standard
deviations (ddof=1; 0.0 for a single run).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from statistics import fmean
from typing import Sequence

from .engine import GenerationResult
from .problems import PROBLEM_ORDER


@dataclass
class RunRecord:
    """Outcome of one evolution run inside a sweep cell."""

    problem: str
    strategy: str
    kill_proportion: float
    run_index: int
    seed: int
    final_best_adjusted: float
    final_best_size: int
    total_evaluations: int
    trajectory: list[GenerationResult] = field(default_factory=list)

    @classmethod
    def from_trajectory(
        cls,
        problem: str,
        strategy: str,
        kill_proportion: float,
        run_index: int,
        seed: int,
        trajectory: Sequence[GenerationResult],
    ) -> "RunRecord":
        if not trajectory:
            raise ValueError("a run record needs at least one generation")
        last = trajectory[-1]
        return cls(
            problem=problem,
            strategy=strategy,
            kill_proportion=kill_proportion,
            run_index=run_index,
            seed=seed,
            final_best_adjusted=last.best_adjusted,
            final_best_size=last.best_size,
            total_evaluations=sum(g.evaluations for g in trajectory),
            trajectory=list(trajectory),
        )


@dataclass(frozen=True)
class SweepSummary:
    """Aggregate of all runs of one (problem, method, kill proportion) cell."""

    problem: str
    method: str
    params: str
    kill_proportion: float
    n_runs: int
    mean_fitness: float
    std_fitness: float
    mean_tree_size: float
    std_tree_size: float
    mean_evaluations: float


def split_strategy_text(strategy: str) -> tuple[str, str]:
    """Split canonical strategy text into (method, params)."""
    method, _, params = strategy.partition(":")
    return method, params


def _sample_std(values: list[float]) -> float:
    if len(values) < 2:
        return 0.0
    mean = fmean(values)
    # fsum keeps the result independent of record order.
    return math.sqrt(math.fsum((v - mean) ** 2 for v in values) / (len(values) - 1))


def _problem_rank(problem: str):
    try:
        return (0, PROBLEM_ORDER.index(problem), problem)
    except ValueError:
        return (1, 0, problem)


def _params_rank(params: str):
    parts = []
    for piece in params.split(":"):
        try:
            parts.append((0, float(piece), ""))
        except ValueError:
            parts.append((1, 0.0, piece))
    return tuple(parts)


def summary_sort_key(problem: str, method: str, params: str, kill_proportion: float):
    return (_problem_rank(problem), method, _params_rank(params), kill_proportion)


def summarize(records: Sequence[RunRecord]) -> list[SweepSummary]:
    """Aggregate run records into one summary row per sweep cell."""
    if not records:
        raise ValueError("no run records to summarize")
    groups: dict[tuple[str, str, float], list[RunRecord]] = {}
    for record in records:
        groups.setdefault(
            (record.problem, record.strategy, record.kill_proportion), []
        ).append(record)

    summaries = []
    for (problem, strategy, kill), group in groups.items():
        method, params = split_strategy_text(strategy)
        fitnesses = [r.final_best_adjusted for r in group]
        sizes = [float(r.final_best_size) for r in group]
        evaluations = [float(r.total_evaluations) for r in group]
        summaries.append(
            SweepSummary(
                problem=problem,
                method=method,
                params=params,
                kill_proportion=kill,
                n_runs=len(group),
                mean_fitness=fmean(fitnesses),
                std_fitness=_sample_std(fitnesses),
                mean_tree_size=fmean(sizes),
                std_tree_size=_sample_std(sizes),
                mean_evaluations=fmean(evaluations),
            )
        )
    summaries.sort(
        key=lambda s: summary_sort_key(s.problem, s.method, s.params, s.kill_proportion)
    )
    return summaries


def generation_curves(
    records: Sequence[RunRecord],
) -> tuple[list[float], list[float]]:
    """Pointwise mean best fitness and best size across runs, per generation.

    All records must carry trajectories of equal length.
    """
    if not records:
        raise ValueError("no run records")
    lengths = {len(r.trajectory) for r in records}
    if lengths == {0}:
        raise ValueError("records carry no trajectories")
    if len(lengths) != 1:
        raise ValueError(f"trajectories differ in length: {sorted(lengths)}")
    n_gens = lengths.pop()
    fitness_curve = []
    size_curve = []
    for g in range(n_gens):
        fitness_curve.append(fmean(r.trajectory[g].best_adjusted for r in records))
        size_curve.append(fmean(float(r.trajectory[g].best_size) for r in records))
    return fitness_curve, size_curve


def mann_whitney_u(
    a: Sequence[float], b: Sequence[float], alternative: str = "two-sided"
) -> float:
    """Mann-Whitney U p-value for comparing two independent samples."""
    from scipy.stats import mannwhitneyu

    if len(a) == 0 or len(b) == 0:
        raise ValueError("both samples must be non-empty")
    return float(mannwhitneyu(list(a), list(b), alternative=alternative).pvalue)
