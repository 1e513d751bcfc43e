"""
One evolution run, start to finish
==================================

run_evolution wires everything together: seeded fitness cases, ramped
half-and-half initialization, tournament selection, subtree crossover
and mutation under the depth-17 cap, and per-generation statistics.
The whole run is reproducible from its seed.
"""
from gp_parsimony import (
    DoubleTournament,
    EngineConfig,
    get_problem,
    run_evolution,
    to_sexpr,
)

problem = get_problem("sextic")
config = EngineConfig(
    population_size=300,
    generations=20,
    n_cases=20,
    seed=11,
    strategy=DoubleTournament(7, 1.8),
)

best_tree = {}


def remember_best(pop, result):
    best_tree["genome"] = pop.members[result.best_index].genome


results = run_evolution(config, problem, on_generation=remember_best)

print(f"problem: {problem.name}")
print("gen   best fitness   best size   mean size")
for r in results:
    if r.generation % 4 == 0 or r.generation == len(results) - 1:
        print(
            f"{r.generation:>3}   {r.best_adjusted:<12.6f}   {r.best_size:<9}   "
            f"{r.mean_pop_size:.1f}"
        )

print("\nfinal best tree:")
print(" ", to_sexpr(best_tree["genome"]))

# Same seed, same everything: the trajectory is bit-identical.
again = run_evolution(config, problem)
print("\nrerun identical:", again == results)
