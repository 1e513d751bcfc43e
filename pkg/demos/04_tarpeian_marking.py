"""
Tarpeian bloat control
======================

Before evaluation, each member whose tree is strictly larger than the
population's mean size is, with probability W, marked killed: it gets
the worst possible fitness and its evaluation is skipped entirely.
Small members are never touched, so the method costs nothing when no
tree is oversized and saves evaluation time when many are.
"""
import numpy as np

from gp_parsimony import (
    EngineConfig,
    TarpeianConfig,
    get_problem,
    run_evolution,
)
from gp_parsimony.bloatcontrol import tarpeian_mark
from gp_parsimony.fitness import Individual, Population
from gp_parsimony.exprtree import Var

# A population with a known size spread: mean size is 5.
sizes = [1, 3, 5, 7, 9]
members = [Individual(genome=Var(0), size=s, depth=0) for s in sizes]
pop = Population(members)

rng = np.random.default_rng(0)
cfg = TarpeianConfig(kill_proportion=1.0, enabled=True)
n = tarpeian_mark(pop, cfg, rng)
print("sizes:", sizes, " mean: 5")
print("marked with W=1.0:", [m.tarpeian_killed for m in pop.members])
print("count:", n, "(only the strictly-above-mean sizes 7 and 9)")

# With a fractional W each oversized member is marked independently.
trials = 10_000
marked = 0
cfg = TarpeianConfig(kill_proportion=0.3, enabled=True)
probe = Population([Individual(genome=Var(0), size=s, depth=0) for s in (1, 9)])
for _ in range(trials):
    probe.members[1].tarpeian_killed = False
    marked += tarpeian_mark(probe, cfg, rng)
print(f"\nW=0.3 marks the oversized member {marked / trials:.3f} of the time")

# Inside a run, killed members show up as skipped evaluations.
config = EngineConfig(
    population_size=100,
    generations=5,
    n_cases=10,
    seed=3,
    tarpeian=TarpeianConfig(kill_proportion=0.4, enabled=True),
)
results = run_evolution(config, get_problem("quartic"))
print("\ngeneration  evaluations (population is 100)")
for r in results:
    print(f"{r.generation:>10}  {r.evaluations}")
