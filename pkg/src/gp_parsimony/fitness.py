"""Individuals, populations, and error-based fitness.

Raw fitness is the sum of absolute per-case errors, with each case's
contribution capped so a single wild prediction cannot swamp the total.
Adjusted fitness maps raw error into (0, 1] via 1 / (1 + raw); higher is
better and 1.0 means a perfect fit on the sampled cases.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exprtree import ExprTree, eval_cases, tree_depth, tree_size
from .problems import CaseSet

# Per-case absolute error cap.
ERROR_CAP = 1e10


@dataclass
class Individual:
    """One population member: genome plus cached size/depth and fitness slots."""

    genome: ExprTree
    size: int
    depth: int
    raw_error: Optional[float] = None
    adjusted: Optional[float] = None
    tarpeian_killed: bool = False
    bucket_rank: Optional[int] = None

    @classmethod
    def from_genome(cls, genome: ExprTree) -> "Individual":
        return cls(genome, tree_size(genome), tree_depth(genome))


@dataclass
class Population:
    members: list[Individual]
    generation: int = 0

    def __len__(self) -> int:
        return len(self.members)


def raw_error(tree: ExprTree, cases: CaseSet, cap: float = ERROR_CAP) -> float:
    """Capped sum of absolute errors of ``tree`` against ``cases``."""
    preds = eval_cases(tree, cases.columns)
    errs = np.abs(preds - cases.targets)
    np.minimum(errs, cap, out=errs)
    return float(errs.sum())


def adjusted_fitness(raw: float) -> float:
    """Map raw error to (0, 1]: exactly 1 / (1 + raw)."""
    if raw < 0:
        raise ValueError(f"raw error must be >= 0, got {raw}")
    return 1.0 / (1.0 + raw)


def worst_raw_error(n_cases: int, cap: float = ERROR_CAP) -> float:
    """The sentinel raw error assigned to members skipped by evaluation."""
    return cap * n_cases


def evaluate_population(pop: Population, cases: CaseSet, cap: float = ERROR_CAP) -> int:
    """Fill in fitness for every member; return how many were truly evaluated.

    Members flagged ``tarpeian_killed`` are not evaluated at all: they get the
    sentinel worst raw error and an adjusted fitness of 0.0, which every
    selection comparator treats as an ordinary (terrible) value.
    """
    sentinel = worst_raw_error(len(cases), cap)
    evaluated = 0
    for ind in pop.members:
        if ind.tarpeian_killed:
            ind.raw_error = sentinel
            ind.adjusted = 0.0
        else:
            ind.raw_error = raw_error(ind.genome, cases, cap)
            ind.adjusted = adjusted_fitness(ind.raw_error)
            evaluated += 1
    return evaluated
