import sys
from pathlib import Path

import numpy as np
import pytest

# Make the sibling oracle helpers importable as a plain module.
sys.path.insert(0, str(Path(__file__).parent))

from gp_parsimony.exprtree import GrowMethod, random_tree


@pytest.fixture
def rng():
    return np.random.default_rng(20260822)


def random_trees(n, n_vars=1, max_depth=5, seed=7):
    """A deterministic batch of random trees mixing grow and full shapes."""
    gen = np.random.default_rng(seed)
    trees = []
    for i in range(n):
        kind = "grow" if i % 2 == 0 else "full"
        depth = 1 + i % max_depth
        trees.append(random_tree(GrowMethod(kind, depth), n_vars, gen))
    return trees


class ScriptedRNG:
    """Replays queued values for .random() and .integers() calls.

    Lets a test drive one exact path through stochastic code.  integers()
    answers are taken literally (and asserted to be in range); an exhausted
    queue raises.
    """

    def __init__(self, randoms=(), integers=()):
        self._randoms = list(randoms)
        self._integers = list(integers)

    def random(self):
        if not self._randoms:
            raise AssertionError("ScriptedRNG ran out of random() values")
        return self._randoms.pop(0)

    def integers(self, low, high=None, size=None):
        lo, hi = (0, low) if high is None else (low, high)
        if size is None:
            if not self._integers:
                raise AssertionError("ScriptedRNG ran out of integers() values")
            value = self._integers.pop(0)
            assert lo <= value < hi, f"scripted integer {value} not in [{lo}, {hi})"
            return value
        out = [self.integers(lo, hi) for _ in range(size)]
        return np.array(out)
