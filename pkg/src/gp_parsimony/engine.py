"""The generational evolution loop.

One run is fully determined by its `EngineConfig`: the config seed is split
into two independent streams (fitness-case sampling and everything on the
breeding side) by hashing the seed with a fixed tag per stream, so the same
config always reproduces the same run bit for bit.

Each generation breeds a full replacement population of the same size by
fitness-proportionless operator choice (subtree crossover, subtree mutation,
or straight reproduction), with any child deeper than the depth ceiling
discarded in favour of its recipient parent.  Tarpeian marking, if enabled,
happens after breeding and before evaluation so that marked children are
never evaluated.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from statistics import fmean
from typing import Callable, Optional

import numpy as np

from .bloatcontrol import TarpeianConfig, tarpeian_mark
from .exprtree import (
    FULL,
    GROW,
    GrowMethod,
    pick_node,
    random_tree,
    replace_subtree,
    subtree_at,
    tree_depth,
)
from .fitness import ERROR_CAP, Individual, Population, evaluate_population
from .problems import Problem, sample_cases
from .selection import (
    PlainTournament,
    StrategySpec,
    assign_direct_buckets,
    assign_ratio_buckets,
    bucketing_for,
    make_selector,
)

# Stream tags hashed together with the config seed; changing either constant
# changes every run, so they are part of the reproducibility contract.
CASE_STREAM_TAG = "fitness-cases"
BREED_STREAM_TAG = "breeding"


def derive_seed(master_seed: int, tag: str) -> int:
    """A 63-bit stream seed derived from ``master_seed`` and a text tag."""
    digest = hashlib.sha256(f"{tag}:{master_seed}".encode()).digest()
    return int.from_bytes(digest[:8], "big") >> 1


@dataclass(frozen=True)
class EngineConfig:
    population_size: int = 1000
    generations: int = 50
    crossover_prob: float = 0.8
    mutation_prob: float = 0.1
    reproduction_prob: float = 0.1
    max_depth: int = 17
    init_depth_min: int = 2
    init_depth_max: int = 6
    mutation_subtree_depth: int = 4
    n_cases: int = 20
    error_cap: float = ERROR_CAP
    strategy: StrategySpec = PlainTournament(7)
    tarpeian: TarpeianConfig = TarpeianConfig()
    seed: int = 0
    fixed_case_seed: Optional[int] = None

    def __post_init__(self):
        if self.population_size < 2:
            raise ValueError("population size must be >= 2")
        if self.generations < 0:
            raise ValueError("generations must be >= 0")
        for name in ("crossover_prob", "mutation_prob", "reproduction_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")
        total = self.crossover_prob + self.mutation_prob + self.reproduction_prob
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"operator probabilities must sum to 1, got {total}")
        if not 0 <= self.init_depth_min <= self.init_depth_max:
            raise ValueError("need 0 <= init_depth_min <= init_depth_max")
        if self.max_depth < self.init_depth_max:
            raise ValueError("max_depth must be >= init_depth_max")
        if self.mutation_subtree_depth < 0:
            raise ValueError("mutation subtree depth must be >= 0")
        if self.n_cases < 1:
            raise ValueError("need at least one fitness case")
        if self.error_cap <= 0.0:
            raise ValueError("error cap must be positive")


@dataclass(frozen=True)
class GenerationResult:
    """Per-generation statistics of the evaluated population."""

    generation: int
    best_index: int
    best_adjusted: float
    best_size: int
    mean_pop_size: float
    mean_adjusted: float
    evaluations: int


def init_population(config: EngineConfig, problem: Problem, rng) -> Population:
    """Ramped half-and-half initialization.

    Depth budgets cycle over [init_depth_min, init_depth_max], alternating a
    grow-generated and a full-generated tree at each budget.  No uniqueness
    filtering is applied.
    """
    n_slots = (config.init_depth_max - config.init_depth_min + 1) * 2
    members = []
    for i in range(config.population_size):
        slot = i % n_slots
        depth = config.init_depth_min + slot // 2
        kind = GROW if slot % 2 == 0 else FULL
        genome = random_tree(
            GrowMethod(kind, depth), problem.n_vars, rng, problem.function_set
        )
        members.append(Individual.from_genome(genome))
    return Population(members, generation=0)


def breed_child(
    pop: Population,
    config: EngineConfig,
    problem: Problem,
    select: Callable[[Population, object], int],
    rng,
) -> Individual:
    """Produce one child by crossover, mutation, or reproduction.

    A crossover or mutation child exceeding ``max_depth`` is rejected and the
    recipient (or mutated) parent is returned unchanged instead.
    """
    members = pop.members
    draw = rng.random()
    if draw < config.crossover_prob:
        recipient = members[select(pop, rng)].genome
        donor = members[select(pop, rng)].genome
        site = pick_node(recipient, rng)
        graft = subtree_at(donor, pick_node(donor, rng))
        child = replace_subtree(recipient, site, graft)
        genome = recipient if tree_depth(child) > config.max_depth else child
    elif draw < config.crossover_prob + config.mutation_prob:
        parent = members[select(pop, rng)].genome
        site = pick_node(parent, rng)
        graft = random_tree(
            GrowMethod(GROW, config.mutation_subtree_depth),
            problem.n_vars,
            rng,
            problem.function_set,
        )
        child = replace_subtree(parent, site, graft)
        genome = parent if tree_depth(child) > config.max_depth else child
    else:
        genome = members[select(pop, rng)].genome
    return Individual.from_genome(genome)


def _assign_ranks(pop: Population, strategy: StrategySpec) -> None:
    bucketing = bucketing_for(strategy)
    if bucketing is None:
        return
    kind, parameter = bucketing
    if kind == "direct":
        assign_direct_buckets(pop, parameter)
    else:
        assign_ratio_buckets(pop, parameter)


def _generation_result(pop: Population, evaluations: int) -> GenerationResult:
    members = pop.members
    best = 0
    best_key = (members[0].adjusted, -members[0].size)
    for i in range(1, len(members)):
        key = (members[i].adjusted, -members[i].size)
        if key > best_key:  # ties keep the lower index
            best = i
            best_key = key
    return GenerationResult(
        generation=pop.generation,
        best_index=best,
        best_adjusted=members[best].adjusted,
        best_size=members[best].size,
        mean_pop_size=fmean(ind.size for ind in members),
        mean_adjusted=fmean(ind.adjusted for ind in members),
        evaluations=evaluations,
    )


def run_generation(
    pop: Population, config: EngineConfig, problem: Problem, cases, rng
) -> tuple[Population, GenerationResult]:
    """Breed, mark, evaluate, and rank one successor population."""
    select = make_selector(config.strategy)
    children = [
        breed_child(pop, config, problem, select, rng)
        for _ in range(config.population_size)
    ]
    new_pop = Population(children, generation=pop.generation + 1)
    tarpeian_mark(new_pop, config.tarpeian, rng)
    evaluations = evaluate_population(new_pop, cases, config.error_cap)
    _assign_ranks(new_pop, config.strategy)
    return new_pop, _generation_result(new_pop, evaluations)


def run_evolution(
    config: EngineConfig,
    problem: Problem,
    on_generation: Optional[Callable[[Population, GenerationResult], None]] = None,
) -> list[GenerationResult]:
    """Run one full evolution; returns one result per generation, 0 first.

    Generation 0 is the evaluated initial population.  ``on_generation``,
    if given, observes each evaluated population in turn (useful for extra
    instrumentation; it must not mutate the population).
    """
    case_seed = (
        config.fixed_case_seed
        if config.fixed_case_seed is not None
        else derive_seed(config.seed, CASE_STREAM_TAG)
    )
    cases = sample_cases(problem, config.n_cases, case_seed)
    rng = np.random.default_rng(derive_seed(config.seed, BREED_STREAM_TAG))

    pop = init_population(config, problem, rng)
    tarpeian_mark(pop, config.tarpeian, rng)
    evaluations = evaluate_population(pop, cases, config.error_cap)
    _assign_ranks(pop, config.strategy)
    results = [_generation_result(pop, evaluations)]
    if on_generation is not None:
        on_generation(pop, results[0])

    for _ in range(config.generations):
        pop, result = run_generation(pop, config, problem, cases, rng)
        results.append(result)
        if on_generation is not None:
            on_generation(pop, result)
    return results
