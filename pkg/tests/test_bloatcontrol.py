import numpy as np
import pytest

from gp_parsimony.bloatcontrol import TarpeianConfig, tarpeian_mark
from gp_parsimony.exprtree import Var
from gp_parsimony.fitness import Individual, Population


def pop_with_sizes(sizes):
    return Population(
        [Individual(genome=Var(0), size=s, depth=0) for s in sizes]
    )


def test_config_validation():
    TarpeianConfig(kill_proportion=0.0)
    TarpeianConfig(kill_proportion=1.0, enabled=True)
    with pytest.raises(ValueError):
        TarpeianConfig(kill_proportion=-0.1)
    with pytest.raises(ValueError):
        TarpeianConfig(kill_proportion=1.5)


def test_disabled_marks_nothing():
    pop = pop_with_sizes([1, 100, 200])
    n = tarpeian_mark(pop, TarpeianConfig(kill_proportion=0.9, enabled=False),
                      np.random.default_rng(0))
    assert n == 0
    assert not any(m.tarpeian_killed for m in pop.members)


def test_zero_proportion_marks_nothing():
    pop = pop_with_sizes([1, 100, 200])
    n = tarpeian_mark(pop, TarpeianConfig(kill_proportion=0.0, enabled=True),
                      np.random.default_rng(0))
    assert n == 0
    assert not any(m.tarpeian_killed for m in pop.members)


def test_full_proportion_marks_exactly_above_mean():
    # Mean size 5: only 7 and 9 are strictly above it.
    pop = pop_with_sizes([1, 3, 5, 7, 9])
    n = tarpeian_mark(pop, TarpeianConfig(kill_proportion=1.0, enabled=True),
                      np.random.default_rng(0))
    assert n == 2
    assert [m.tarpeian_killed for m in pop.members] == [
        False, False, False, True, True
    ]


def test_at_mean_never_marked():
    pop = pop_with_sizes([4, 4, 4, 4])
    n = tarpeian_mark(pop, TarpeianConfig(kill_proportion=1.0, enabled=True),
                      np.random.default_rng(0))
    assert n == 0


def test_below_mean_never_marked():
    rng = np.random.default_rng(1)
    for _ in range(50):
        sizes = [int(rng.integers(1, 60)) for _ in range(20)]
        pop = pop_with_sizes(sizes)
        tarpeian_mark(pop, TarpeianConfig(kill_proportion=0.7, enabled=True), rng)
        mean = sum(sizes) / len(sizes)
        for m in pop.members:
            if m.size <= mean:
                assert not m.tarpeian_killed


def test_marking_frequency_tracks_proportion():
    rng = np.random.default_rng(2)
    w = 0.3
    trials = 20_000
    marked = 0
    pop = pop_with_sizes([1, 9])  # member 1 above mean 5 every time
    cfg = TarpeianConfig(kill_proportion=w, enabled=True)
    for _ in range(trials):
        pop.members[1].tarpeian_killed = False
        marked += tarpeian_mark(pop, cfg, rng)
    assert abs(marked / trials - w) < 0.01


def test_flags_only_no_fitness_touched():
    pop = pop_with_sizes([1, 9])
    pop.members[1].adjusted = 0.5
    pop.members[1].raw_error = 1.0
    tarpeian_mark(pop, TarpeianConfig(kill_proportion=1.0, enabled=True),
                  np.random.default_rng(0))
    assert pop.members[1].tarpeian_killed
    assert pop.members[1].adjusted == 0.5
    assert pop.members[1].raw_error == 1.0


def test_empty_population():
    assert tarpeian_mark(Population([]),
                         TarpeianConfig(kill_proportion=1.0, enabled=True),
                         np.random.default_rng(0)) == 0


def test_deterministic_given_seed():
    cfg = TarpeianConfig(kill_proportion=0.4, enabled=True)
    outcomes = []
    for _ in range(2):
        pop = pop_with_sizes([2, 4, 6, 8, 10, 12])
        tarpeian_mark(pop, cfg, np.random.default_rng(99))
        outcomes.append([m.tarpeian_killed for m in pop.members])
    assert outcomes[0] == outcomes[1]
