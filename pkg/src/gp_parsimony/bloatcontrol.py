"""Tarpeian size control.

Before a population is evaluated, each member whose tree is strictly larger
than the population's mean size is, with a fixed probability, marked killed.
Killed members skip evaluation entirely (that is where the saving comes
from) and carry the worst possible fitness into selection, so they are
eliminated by ordinary competition rather than removed from the population.
"""
from __future__ import annotations

from dataclasses import dataclass

from .fitness import Population


@dataclass(frozen=True)
class TarpeianConfig:
    """``kill_proportion`` is the per-member kill probability above the mean."""

    kill_proportion: float = 0.0
    enabled: bool = False

    def __post_init__(self):
        if not 0.0 <= self.kill_proportion <= 1.0:
            raise ValueError(
                f"kill proportion must lie in [0, 1], got {self.kill_proportion}"
            )


def tarpeian_mark(pop: Population, config: TarpeianConfig, rng) -> int:
    """Flag above-mean-size members killed with the configured probability.

    Genomes, sizes, and existing fitness values are never touched; only the
    ``tarpeian_killed`` flags of marked members change.  Returns the number
    of members marked by this call.
    """
    if not config.enabled or config.kill_proportion == 0.0 or not pop.members:
        return 0
    mean_size = sum(ind.size for ind in pop.members) / len(pop.members)
    marked = 0
    for ind in pop.members:
        if ind.size > mean_size and rng.random() < config.kill_proportion:
            ind.tarpeian_killed = True
            marked += 1
    return marked
