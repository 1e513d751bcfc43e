"""Tournament selection and its parsimony-pressure variants.

Every variant is a tournament over contestants drawn uniformly *with*
replacement; they differ only in how contestants are compared:

* plain tournament: adjusted fitness alone;
* double tournament: a fitness round and a smaller-size-wins round chained
  in either order, the size round using a probabilistic tournament size
  drawn from {1, 2};
* lexicographic: fitness first, smaller size breaking exact ties;
* bucketed tournaments: members are first ranked into fitness buckets
  (direct bucket count, or a geometric-ratio carve-up of the worst
  remainder), then compared by bucket rank with smaller size breaking ties.

All comparators resolve remaining ties uniformly at random among the tied
contestant entries, so a member drawn twice gets twice the weight.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Union

from .fitness import Individual, Population


class Comparator(Enum):
    FITNESS_ONLY = "fitness_only"
    SMALLER_SIZE_WINS = "smaller_size_wins"
    LEXICOGRAPHIC = "lexicographic"
    BUCKET_RANK_THEN_SIZE = "bucket_rank_then_size"


def comparison_key(comparator: Comparator, ind: Individual):
    """Sortable key under ``comparator``; greater keys win."""
    if comparator is Comparator.SMALLER_SIZE_WINS:
        return -ind.size
    if comparator is Comparator.BUCKET_RANK_THEN_SIZE:
        if ind.bucket_rank is None:
            raise ValueError("bucketed selection before bucket ranks were assigned")
        return (ind.bucket_rank, -ind.size)
    if ind.adjusted is None:
        raise ValueError("selection from an unevaluated population")
    if comparator is Comparator.FITNESS_ONLY:
        return ind.adjusted
    return (ind.adjusted, -ind.size)


def _best_entry(members: list[Individual], entries, comparator: Comparator, rng) -> int:
    # Winner among contestant entries; ties go uniformly to one tied *entry*.
    best_key = None
    winners: list[int] = []
    for i in entries:
        key = comparison_key(comparator, members[i])
        if best_key is None or key > best_key:
            best_key = key
            winners = [i]
        elif key == best_key:
            winners.append(i)
    if len(winners) == 1:
        return int(winners[0])
    return int(winners[int(rng.integers(len(winners)))])


def tournament_select(
    pop: Population, tournament_size: int, comparator: Comparator, rng
) -> int:
    """Index of the winner of one tournament drawn with replacement."""
    n = len(pop.members)
    if n == 0:
        raise ValueError("cannot select from an empty population")
    if tournament_size < 1:
        raise ValueError(f"tournament size must be >= 1, got {tournament_size}")
    entries = rng.integers(0, n, size=tournament_size)
    return _best_entry(pop.members, entries, comparator, rng)


def probabilistic_tournament_size(d: float, rng) -> int:
    """Draw a tournament size from {1, 2}: 2 with probability d - 1."""
    if not 1.0 <= d <= 2.0:
        raise ValueError(f"probabilistic tournament size needs 1 <= d <= 2, got {d}")
    return 2 if rng.random() < d - 1.0 else 1


def double_tournament_select(
    pop: Population,
    fitness_size: int,
    parsimony_size: float,
    do_fitness_first: bool,
    rng,
) -> int:
    """Two chained tournaments: one on fitness, one preferring smaller trees.

    With ``do_fitness_first`` the qualifiers are fitness-tournament winners
    and the final round picks the smaller; otherwise the qualifiers are
    smaller-size winners and the final round picks the fitter.  The number
    of qualifiers feeding the size round (first order) or the size of each
    size round (second order) is the probabilistic {1, 2} draw governed by
    ``parsimony_size``.
    """
    if do_fitness_first:
        n_qualifiers = probabilistic_tournament_size(parsimony_size, rng)
        winners = [
            tournament_select(pop, fitness_size, Comparator.FITNESS_ONLY, rng)
            for _ in range(n_qualifiers)
        ]
        if len(winners) == 1:
            return winners[0]
        return _best_entry(pop.members, winners, Comparator.SMALLER_SIZE_WINS, rng)
    winners = [
        tournament_select(
            pop,
            probabilistic_tournament_size(parsimony_size, rng),
            Comparator.SMALLER_SIZE_WINS,
            rng,
        )
        for _ in range(fitness_size)
    ]
    if len(winners) == 1:
        return winners[0]
    return _best_entry(pop.members, winners, Comparator.FITNESS_ONLY, rng)


def lexicographic_select(pop: Population, tournament_size: int, rng) -> int:
    """Tournament on fitness with smaller size breaking exact fitness ties."""
    return tournament_select(pop, tournament_size, Comparator.LEXICOGRAPHIC, rng)


def bucket_tournament_select(pop: Population, tournament_size: int, rng) -> int:
    """Tournament on pre-assigned bucket ranks, smaller size breaking ties."""
    return tournament_select(pop, tournament_size, Comparator.BUCKET_RANK_THEN_SIZE, rng)


def _worst_first_order(members: list[Individual]) -> list[int]:
    for i, ind in enumerate(members):
        if ind.adjusted is None:
            raise ValueError(f"member {i} has no fitness; evaluate before bucketing")
    return sorted(range(len(members)), key=lambda i: (members[i].adjusted, i))


def assign_direct_buckets(pop: Population, num_buckets: int) -> None:
    """Rank members into ``num_buckets`` equal-capacity fitness buckets.

    Members are laid worst-to-best into buckets of capacity ceil(n / b);
    rank 1 is the worst bucket.  With more buckets than members every
    member lands in its own bucket and ranking degenerates to fitness order.
    """
    if num_buckets < 1:
        raise ValueError(f"bucket count must be >= 1, got {num_buckets}")
    members = pop.members
    order = _worst_first_order(members)
    capacity = -(-len(members) // num_buckets)
    for position, i in enumerate(order):
        members[i].bucket_rank = position // capacity + 1


def assign_ratio_buckets(pop: Population, ratio: int) -> None:
    """Rank members into geometrically shrinking worst-first fitness buckets.

    Repeatedly carve off the worst ceil(remaining / ratio) members into the
    next bucket, then widen that bucket to absorb any member whose fitness
    exactly equals the best fitness inside it, so equal-fitness members never
    straddle a bucket boundary.
    """
    if ratio < 2:
        raise ValueError(f"bucketing ratio must be >= 2, got {ratio}")
    members = pop.members
    order = _worst_first_order(members)
    n = len(order)
    rank = 0
    start = 0
    while start < n:
        rank += 1
        take = -(-(n - start) // ratio)
        end = start + take
        boundary_fitness = members[order[end - 1]].adjusted
        while end < n and members[order[end]].adjusted == boundary_fitness:
            end += 1
        for position in range(start, end):
            members[order[position]].bucket_rank = rank
        start = end


@dataclass(frozen=True)
class PlainTournament:
    tournament_size: int = 7

    def __post_init__(self):
        if self.tournament_size < 1:
            raise ValueError("tournament size must be >= 1")


@dataclass(frozen=True)
class DoubleTournament:
    fitness_size: int = 7
    parsimony_size: float = 1.4
    do_fitness_first: bool = True

    def __post_init__(self):
        if self.fitness_size < 1:
            raise ValueError("fitness tournament size must be >= 1")
        if not 1.0 <= self.parsimony_size <= 2.0:
            raise ValueError("parsimony tournament size must lie in [1, 2]")


@dataclass(frozen=True)
class Lexicographic:
    tournament_size: int = 7

    def __post_init__(self):
        if self.tournament_size < 1:
            raise ValueError("tournament size must be >= 1")


@dataclass(frozen=True)
class DirectBucket:
    num_buckets: int
    tournament_size: int = 7

    def __post_init__(self):
        if self.num_buckets < 1:
            raise ValueError("bucket count must be >= 1")
        if self.tournament_size < 1:
            raise ValueError("tournament size must be >= 1")


@dataclass(frozen=True)
class RatioBucket:
    ratio: int
    tournament_size: int = 7

    def __post_init__(self):
        if self.ratio < 2:
            raise ValueError("bucketing ratio must be >= 2")
        if self.tournament_size < 1:
            raise ValueError("tournament size must be >= 1")


StrategySpec = Union[PlainTournament, DoubleTournament, Lexicographic, DirectBucket, RatioBucket]


def _format_float(x: float) -> str:
    return repr(float(x))


def format_strategy(spec: StrategySpec) -> str:
    """Canonical text form, e.g. ``tournament:7`` or ``double:7:1.8``."""
    if isinstance(spec, PlainTournament):
        return f"tournament:{spec.tournament_size}"
    if isinstance(spec, DoubleTournament):
        text = f"double:{spec.fitness_size}:{_format_float(spec.parsimony_size)}"
        if not spec.do_fitness_first:
            text += ":size_first"
        return text
    if isinstance(spec, Lexicographic):
        return f"lex:{spec.tournament_size}"
    if isinstance(spec, DirectBucket):
        if spec.tournament_size != 7:
            return f"direct_bucket:{spec.num_buckets}:{spec.tournament_size}"
        return f"direct_bucket:{spec.num_buckets}"
    if isinstance(spec, RatioBucket):
        if spec.tournament_size != 7:
            return f"ratio_bucket:{spec.ratio}:{spec.tournament_size}"
        return f"ratio_bucket:{spec.ratio}"
    raise ValueError(f"unknown strategy spec {spec!r}")


def parse_strategy(text: str) -> StrategySpec:
    """Parse the canonical text form produced by `format_strategy`."""
    parts = text.strip().split(":")
    kind = parts[0]
    try:
        if kind == "tournament" and len(parts) == 2:
            return PlainTournament(int(parts[1]))
        if kind == "double" and len(parts) in (3, 4):
            fitness_first = True
            if len(parts) == 4:
                if parts[3] != "size_first":
                    raise ValueError
                fitness_first = False
            return DoubleTournament(int(parts[1]), float(parts[2]), fitness_first)
        if kind == "lex" and len(parts) == 2:
            return Lexicographic(int(parts[1]))
        if kind == "direct_bucket" and len(parts) in (2, 3):
            if len(parts) == 3:
                return DirectBucket(int(parts[1]), int(parts[2]))
            return DirectBucket(int(parts[1]))
        if kind == "ratio_bucket" and len(parts) in (2, 3):
            if len(parts) == 3:
                return RatioBucket(int(parts[1]), int(parts[2]))
            return RatioBucket(int(parts[1]))
    except ValueError as err:
        detail = str(err)
        suffix = f": {detail}" if detail else ""
        raise ValueError(f"bad strategy {text!r}{suffix}") from None
    raise ValueError(
        f"bad strategy {text!r}; expected one of tournament:<k>, double:<k>:<d>, "
        f"lex:<k>, direct_bucket:<b>, ratio_bucket:<r>"
    )


def bucketing_for(spec: StrategySpec):
    """(kind, parameter) of the rank pre-pass a strategy needs, or None."""
    if isinstance(spec, DirectBucket):
        return ("direct", spec.num_buckets)
    if isinstance(spec, RatioBucket):
        return ("ratio", spec.ratio)
    return None


Selector = Callable[[Population, object], int]


def make_selector(spec: StrategySpec) -> Selector:
    """Compile a strategy spec into a ``(population, rng) -> index`` callable."""
    if isinstance(spec, PlainTournament):
        k = spec.tournament_size
        return lambda pop, rng: tournament_select(pop, k, Comparator.FITNESS_ONLY, rng)
    if isinstance(spec, DoubleTournament):
        return lambda pop, rng: double_tournament_select(
            pop, spec.fitness_size, spec.parsimony_size, spec.do_fitness_first, rng
        )
    if isinstance(spec, Lexicographic):
        k = spec.tournament_size
        return lambda pop, rng: lexicographic_select(pop, k, rng)
    if isinstance(spec, (DirectBucket, RatioBucket)):
        k = spec.tournament_size
        return lambda pop, rng: bucket_tournament_select(pop, k, rng)
    raise ValueError(f"unknown strategy spec {spec!r}")
