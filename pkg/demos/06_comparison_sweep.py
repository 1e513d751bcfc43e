"""
A small comparison sweep
========================

The harness runs a grid of (problem, strategy, kill proportion) cells,
each several times with seeds derived from the master seed, and writes
per-generation and summary CSVs plus SVG bar charts of the two bloat
measures.  Outputs are byte-identical across reruns and worker counts.

The command-line equivalents:
    gp-parsimony run sweep.toml
    gp-parsimony run --preset paper-table3
    gp-parsimony report results/
    gp-parsimony list-presets
"""
from pathlib import Path
from tempfile import mkdtemp

from gp_parsimony import (
    DoubleTournament,
    EngineConfig,
    ExperimentConfig,
    PlainTournament,
    run_experiment,
)

out_dir = Path(mkdtemp(prefix="gp-sweep-"))

# Quartic only, plain tournament vs plain+Tarpeian vs double tournament,
# 3 runs each, deliberately small so this finishes in seconds.
config = ExperimentConfig(
    problems=["quartic"],
    methods=[
        (PlainTournament(7), 0.0),
        (PlainTournament(7), 0.4),
        (DoubleTournament(7, 1.8), 0.0),
    ],
    runs=3,
    engine=EngineConfig(
        population_size=100, generations=10, n_cases=20, seed=20260822
    ),
    output_dir=out_dir,
)

records, summaries = run_experiment(config, jobs=1)
print(f"ran {len(records)} runs into {out_dir}\n")

print(f"{'method':<12} {'W':<4} {'mean fitness':<14} {'mean tree size'}")
for s in summaries:
    method = f"{s.method}:{s.params}"
    print(
        f"{method:<12} {s.kill_proportion:<4g} {s.mean_fitness:<14.6f} "
        f"{s.mean_tree_size:.1f}"
    )

print("\nfiles written:")
for path in sorted(out_dir.iterdir()):
    print(" ", path.name)

# A TOML config for the same kind of sweep.  Note the kill grid crosses
# every strategy, so this grid has one extra cell: double with W=0.4.
print("""
similar sweep.toml:

    [engine]
    population_size = 100
    generations = 10
    seed = 20260822

    [sweep]
    problems = ["quartic"]
    strategies = ["tournament:7", "double:7:1.8"]
    runs = 3

    [tarpeian]
    kill_proportion = [0.0, 0.4]
""")
