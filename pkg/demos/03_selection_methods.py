"""
Selection strategies and parsimony pressure
===========================================

Every strategy is a tournament over a shared population; they differ in
the comparison key.  This script builds a tiny population with known
fitnesses and sizes and shows how often each member wins under each
strategy.
"""
import numpy as np

from gp_parsimony import (
    Comparator,
    Individual,
    Population,
    Var,
    assign_direct_buckets,
    assign_ratio_buckets,
    bucket_tournament_select,
    double_tournament_select,
    lexicographic_select,
    parse_strategy,
    tournament_select,
)

# Four members: two share the top fitness but differ in size.
fitnesses = [0.2, 0.9, 0.9, 0.5]
sizes = [3, 25, 7, 11]
members = []
for f, s in zip(fitnesses, sizes):
    ind = Individual(genome=Var(0), size=s, depth=0)
    ind.adjusted = f
    members.append(ind)
pop = Population(members)

DRAWS = 20_000


def frequencies(select):
    rng = np.random.default_rng(123)
    counts = [0] * len(members)
    for _ in range(DRAWS):
        counts[select(rng)] += 1
    return [c / DRAWS for c in counts]


def show(label, freqs):
    cells = "  ".join(f"{f:.3f}" for f in freqs)
    print(f"{label:<22} {cells}")


print("member:                #0     #1     #2     #3")
print(f"adjusted fitness:     {fitnesses[0]}    {fitnesses[1]}    {fitnesses[2]}    {fitnesses[3]}")
print(f"tree size:            {sizes[0]}      {sizes[1]}     {sizes[2]}      {sizes[3]}")
print()

# Plain tournament ignores size: the two fitness-0.9 members split wins.
show("tournament k=3", frequencies(
    lambda rng: tournament_select(pop, 3, Comparator.FITNESS_ONLY, rng)
))

# Lexicographic breaks exact fitness ties toward the smaller tree, so
# member #2 takes nearly all of member #1's wins.
show("lexicographic k=3", frequencies(
    lambda rng: lexicographic_select(pop, 3, rng)
))

# Double tournament runs fitness qualifiers, then a size playoff whose
# expected size is D in [1, 2]; higher D means more size pressure.
show("double F=3 D=1.4", frequencies(
    lambda rng: double_tournament_select(pop, 3, 1.4, True, rng)
))
show("double F=3 D=2.0", frequencies(
    lambda rng: double_tournament_select(pop, 3, 2.0, True, rng)
))

# Bucketing coarsens fitness into ranks first; ties inside a bucket go
# to the smaller tree.
assign_direct_buckets(pop, 2)
print("\ndirect buckets b=2 ranks:", [m.bucket_rank for m in pop.members])
show("bucket tournament k=3", frequencies(
    lambda rng: bucket_tournament_select(pop, 3, rng)
))

assign_ratio_buckets(pop, 2)
print("\nratio buckets r=2 ranks:", [m.bucket_rank for m in pop.members])
show("bucket tournament k=3", frequencies(
    lambda rng: bucket_tournament_select(pop, 3, rng)
))

# Strategies also parse from the compact text form used in configs.
print("\nparsed strategy:", parse_strategy("double:7:1.8"))
