"""The six symbolic-regression benchmark problems and fitness-case sampling.

Targets are evaluated with true (unprotected) arithmetic; the protected
semantics in `exprtree` apply only to candidate trees.  Fitness cases are
drawn i.i.d. uniform over each problem's domain hypercube from a seeded
generator, so a (problem, n, seed) triple always reproduces the same data.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .exprtree import PRIMITIVES, Primitive


@dataclass(frozen=True)
class Problem:
    """One benchmark: target function, arity, and sampling domain."""

    id: str
    name: str
    n_vars: int
    domain_low: float
    domain_high: float
    target: Callable[[Sequence[float]], float]
    function_set: tuple[Primitive, ...] = PRIMITIVES


def _quartic(v: Sequence[float]) -> float:
    x = v[0]
    return x * (x * (x * (x + 1.0) + 1.0) + 1.0)


def _cubic_constants(v: Sequence[float]) -> float:
    x = v[0]
    return 3.0 * x**3 + 11.0 * x**2 + 14.0 * x + 6.0


def _sextic(v: Sequence[float]) -> float:
    x = v[0]
    return x**6 - 2.0 * x**4 + x**2


def _bivariate(v: Sequence[float]) -> float:
    x, y = v[0], v[1]
    return x**2 * y + x * y + y


def _bivariate_constants(v: Sequence[float]) -> float:
    x, y = v[0], v[1]
    return 3.0 * x**2 * y + 4.0 * x * y + y


def _five_dim(v: Sequence[float]) -> float:
    x0, x1, x2, x3, x4 = v[0], v[1], v[2], v[3], v[4]
    return math.sin(x0) * math.cos(x1) / math.sqrt(math.exp(x2)) + math.tan(x3 - x4)


PROBLEMS: dict[str, Problem] = {
    p.id: p
    for p in (
        Problem("quartic", "x^4 + x^3 + x^2 + x", 1, -10.0, 10.0, _quartic),
        Problem(
            "cubic_constants", "3x^3 + 11x^2 + 14x + 6", 1, -10.0, 10.0, _cubic_constants
        ),
        Problem("sextic", "x^6 - 2x^4 + x^2", 1, -10.0, 10.0, _sextic),
        Problem("bivariate", "x^2 y + x y + y", 2, -10.0, 10.0, _bivariate),
        Problem(
            "bivariate_constants", "3x^2 y + 4x y + y", 2, -10.0, 10.0, _bivariate_constants
        ),
        Problem(
            "five_dim",
            "sin(x0) cos(x1) / sqrt(exp(x2)) + tan(x3 - x4)",
            5,
            -1.0,
            1.0,
            _five_dim,
        ),
    )
}

# Canonical ordering used in reports.
PROBLEM_ORDER: tuple[str, ...] = tuple(PROBLEMS)


def get_problem(problem_id: str) -> Problem:
    try:
        return PROBLEMS[problem_id]
    except KeyError:
        known = ", ".join(PROBLEM_ORDER)
        raise ValueError(f"unknown problem {problem_id!r}; known: {known}") from None


def target_value(problem: Problem, inputs: Sequence[float]) -> float:
    """Exact target output at one input point."""
    if len(inputs) != problem.n_vars:
        raise ValueError(
            f"{problem.id} takes {problem.n_vars} inputs, got {len(inputs)}"
        )
    return float(problem.target(inputs))


@dataclass(frozen=True)
class FitnessCase:
    inputs: tuple[float, ...]
    target: float


class CaseSet:
    """A fixed batch of fitness cases with column-major views for evaluation."""

    def __init__(self, inputs: np.ndarray, targets: np.ndarray, seed: Optional[int]):
        inputs = np.asarray(inputs, dtype=float)
        targets = np.asarray(targets, dtype=float)
        if inputs.ndim != 2 or len(inputs) == 0:
            raise ValueError("inputs must be a non-empty (n, n_vars) array")
        if len(targets) != len(inputs):
            raise ValueError("inputs and targets disagree on case count")
        self.inputs = inputs
        self.targets = targets
        self.seed = seed
        self.columns = tuple(
            np.ascontiguousarray(inputs[:, j]) for j in range(inputs.shape[1])
        )

    def __len__(self) -> int:
        return len(self.inputs)

    @property
    def cases(self) -> list[FitnessCase]:
        return [
            FitnessCase(tuple(float(x) for x in row), float(t))
            for row, t in zip(self.inputs, self.targets)
        ]


def sample_cases(problem: Problem, n: int, seed: int) -> CaseSet:
    """Draw ``n`` uniform fitness cases for ``problem`` from a seeded stream."""
    if n < 1:
        raise ValueError(f"need at least one fitness case, got {n}")
    rng = np.random.default_rng(seed)
    inputs = rng.uniform(problem.domain_low, problem.domain_high, (n, problem.n_vars))
    targets = np.array([problem.target(row) for row in inputs])
    return CaseSet(inputs, targets, seed)


def save_cases_csv(cases: CaseSet, path) -> None:
    """Write a case set as ``x0,...,xk,target`` rows with full float precision."""
    n_vars = cases.inputs.shape[1]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([f"x{j}" for j in range(n_vars)] + ["target"])
        for row, t in zip(cases.inputs, cases.targets):
            writer.writerow([repr(float(x)) for x in row] + [repr(float(t))])


def load_cases_csv(path) -> CaseSet:
    """Read a case set written by `save_cases_csv`."""
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if not header or header[-1] != "target":
            raise ValueError(f"{path}: expected a header ending in 'target'")
        rows = [[float(v) for v in row] for row in reader]
    if not rows:
        raise ValueError(f"{path}: no fitness cases")
    arr = np.array(rows)
    return CaseSet(arr[:, :-1], arr[:, -1], None)
