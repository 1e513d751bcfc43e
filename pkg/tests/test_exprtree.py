import math

import numpy as np
import pytest

from gp_parsimony.exprtree import (
    CLAMP,
    Const,
    Func,
    GrowMethod,
    PRIMITIVES,
    Primitive,
    Var,
    apply_primitive,
    eval_cases,
    eval_tree,
    iter_paths,
    parse_sexpr,
    pick_node,
    random_tree,
    replace_subtree,
    subtree_at,
    to_sexpr,
    tree_depth,
    tree_size,
    trees_equal,
)

from conftest import random_trees


def test_function_set_contents():
    symbols = {p.symbol: p.arity for p in PRIMITIVES}
    assert symbols == {
        "+": 2, "-": 2, "*": 2, "/": 2,
        "tan": 1, "sin": 1, "cos": 1, "log": 1, "exp": 1, "sqrt": 1,
    }


class TestApplyPrimitive:
    def test_protected_division(self):
        assert apply_primitive(Primitive.DIV, [1.0, 0.0]) == 1.0
        assert apply_primitive(Primitive.DIV, [-7.5, 0.0]) == 1.0
        assert apply_primitive(Primitive.DIV, [6.0, 3.0]) == 2.0

    def test_protected_sqrt(self):
        assert apply_primitive(Primitive.SQRT, [-4.0]) == 2.0
        assert apply_primitive(Primitive.SQRT, [9.0]) == 3.0

    def test_protected_log(self):
        assert apply_primitive(Primitive.LOG, [0.0]) == 0.0
        assert apply_primitive(Primitive.LOG, [math.e]) == pytest.approx(1.0)
        assert apply_primitive(Primitive.LOG, [-math.e]) == pytest.approx(1.0)

    def test_add(self):
        assert apply_primitive(Primitive.ADD, [2.0, 3.0]) == 5.0

    def test_exp_clamped(self):
        assert apply_primitive(Primitive.EXP, [1e6]) == CLAMP
        assert apply_primitive(Primitive.EXP, [0.0]) == 1.0

    def test_tan_finite(self):
        out = apply_primitive(Primitive.TAN, [math.pi / 2])
        assert math.isfinite(out)
        assert abs(out) <= CLAMP

    def test_overflow_replacement(self):
        # Finite overshoot stays; only a non-finite result is pulled back.
        assert apply_primitive(Primitive.ADD, [1e300, 1e300]) == 2e300
        assert apply_primitive(Primitive.MUL, [1e300, 1e300]) == CLAMP
        assert apply_primitive(Primitive.MUL, [-1e300, 1e300]) == -CLAMP
        assert apply_primitive(Primitive.DIV, [1e300, 1e-300]) == CLAMP

    def test_arity_mismatch(self):
        with pytest.raises(ValueError):
            apply_primitive(Primitive.ADD, [1.0])
        with pytest.raises(ValueError):
            apply_primitive(Primitive.SIN, [1.0, 2.0])


class TestEval:
    def test_identity_tree(self):
        assert eval_tree(Var(0), [7.5]) == 7.5

    def test_hand_arithmetic(self):
        t = Func(Primitive.ADD, [Func(Primitive.MUL, [Var(0), Var(0)]), Var(0)])
        assert eval_tree(t, [3.0]) == 12.0

    def test_protected_division_trace(self):
        t = Func(Primitive.DIV, [Var(0), Func(Primitive.SUB, [Var(0), Var(0)])])
        assert eval_tree(t, [5.0]) == 1.0

    def test_batch_matches_scalar_bitwise(self):
        rng = np.random.default_rng(3)
        for tree in random_trees(60, n_vars=2, seed=11):
            inputs = rng.uniform(-10, 10, (8, 2))
            columns = [inputs[:, 0].copy(), inputs[:, 1].copy()]
            batch = eval_cases(tree, columns)
            for row, got in zip(inputs, batch):
                assert eval_tree(tree, row) == got

    def test_always_finite(self):
        rng = np.random.default_rng(5)
        for tree in random_trees(150, n_vars=1, seed=13):
            xs = rng.uniform(-10, 10, 20)
            out = eval_cases(tree, [xs])
            assert np.isfinite(out).all()

    def test_deterministic(self):
        for tree in random_trees(20, n_vars=1, seed=17):
            xs = np.linspace(-5, 5, 10)
            a = eval_cases(tree, [xs])
            b = eval_cases(tree, [xs])
            assert np.array_equal(a, b)

    def test_inputs_never_mutated(self):
        xs = np.linspace(-5, 5, 10)
        saved = xs.copy()
        for tree in random_trees(30, n_vars=1, seed=19):
            eval_cases(tree, [xs])
        assert np.array_equal(xs, saved)

    def test_var_result_is_a_copy(self):
        xs = np.ones(4)
        out = eval_cases(Var(0), [xs])
        out[0] = 99.0
        assert xs[0] == 1.0

    def test_var_out_of_range(self):
        with pytest.raises(IndexError):
            eval_tree(Var(2), [1.0, 2.0][:1])
        with pytest.raises(IndexError):
            eval_cases(Var(1), [np.ones(3)])

    def test_const_node(self):
        t = Func(Primitive.ADD, [Const(2.5), Var(0)])
        assert eval_tree(t, [1.0]) == 3.5


class TestSizeDepth:
    def test_examples(self):
        x = Var(0)
        add = Func(Primitive.ADD, [x, x])
        nested = Func(Primitive.ADD, [Func(Primitive.MUL, [x, x]), x])
        assert tree_size(x) == 1 and tree_depth(x) == 0
        assert tree_size(add) == 3 and tree_depth(add) == 1
        assert tree_size(nested) == 5 and tree_depth(nested) == 2

    def test_size_equals_path_count(self):
        for tree in random_trees(40, n_vars=2, seed=23):
            assert tree_size(tree) == len(iter_paths(tree))

    def test_depth_equals_longest_path(self):
        for tree in random_trees(40, n_vars=2, seed=29):
            assert tree_depth(tree) == max(len(p) for p, _ in iter_paths(tree))


class TestRandomTree:
    def test_full_depth_zero_is_single_variable(self, rng):
        for _ in range(20):
            t = random_tree(GrowMethod("full", 0), 3, rng)
            assert isinstance(t, Var)

    def test_full_all_leaves_at_max_depth(self, rng):
        for depth in (1, 2, 3, 4):
            for _ in range(25):
                t = random_tree(GrowMethod("full", depth), 2, rng)
                leaf_depths = {
                    len(p) for p, node in iter_paths(t) if not isinstance(node, Func)
                }
                assert leaf_depths == {depth}

    def test_grow_depth_support(self, rng):
        # Depth stays in [1, budget] and is not always maximal.
        depths = [tree_depth(random_tree(GrowMethod("grow", 3), 1, rng)) for _ in range(10_000)]
        assert set(depths) <= {1, 2, 3}
        assert min(depths) < 3

    def test_grow_root_is_function(self, rng):
        for _ in range(100):
            assert isinstance(random_tree(GrowMethod("grow", 4), 2, rng), Func)

    def test_grow_depth_zero_is_terminal(self, rng):
        assert isinstance(random_tree(GrowMethod("grow", 0), 2, rng), Var)

    def test_determinism(self):
        a = random_tree(GrowMethod("grow", 5), 2, np.random.default_rng(99))
        b = random_tree(GrowMethod("grow", 5), 2, np.random.default_rng(99))
        assert trees_equal(a, b)

    def test_function_subset_respected(self, rng):
        subset = (Primitive.ADD, Primitive.SIN)
        for _ in range(50):
            t = random_tree(GrowMethod("full", 3), 1, rng, function_set=subset)
            ops = {node.op for _, node in iter_paths(t) if isinstance(node, Func)}
            assert ops <= set(subset)

    def test_erc_range(self, rng):
        consts = []
        for _ in range(200):
            t = random_tree(GrowMethod("full", 2), 1, rng, erc_range=(-2.0, 2.0))
            consts += [n.value for _, n in iter_paths(t) if isinstance(n, Const)]
        assert consts
        assert all(-2.0 <= c <= 2.0 for c in consts)

    def test_var_indices_in_range(self, rng):
        for _ in range(50):
            t = random_tree(GrowMethod("grow", 4), 3, rng)
            indices = {n.index for _, n in iter_paths(t) if isinstance(n, Var)}
            assert indices <= {0, 1, 2}

    def test_bad_method_rejected(self):
        with pytest.raises(ValueError):
            GrowMethod("half", 3)
        with pytest.raises(ValueError):
            GrowMethod("grow", -1)
        with pytest.raises(ValueError):
            random_tree(GrowMethod("grow", 2), 0, np.random.default_rng(1))


class TestPickNode:
    def test_single_terminal_always_root(self, rng):
        for _ in range(50):
            assert pick_node(Var(0), rng) == ()

    def test_function_bias(self, rng):
        # One function, two terminals: function picked with p = 0.9.
        t = Func(Primitive.ADD, [Var(0), Var(1)])
        hits = sum(pick_node(t, rng) == () for _ in range(10_000))
        assert abs(hits / 10_000 - 0.9) < 0.02

    def test_terminal_split_uniform(self, rng):
        t = Func(Primitive.ADD, [Var(0), Var(0)])
        picks = [pick_node(t, rng) for _ in range(10_000)]
        left = sum(p == (0,) for p in picks)
        right = sum(p == (1,) for p in picks)
        assert left + right > 0
        assert abs(left / (left + right) - 0.5) < 0.05


class TestSubtreeOps:
    def test_subtree_at_root(self):
        t = Func(Primitive.ADD, [Var(0), Var(1)])
        assert subtree_at(t, ()) is t
        assert subtree_at(t, (1,)).index == 1

    def test_replace_root(self):
        t = Func(Primitive.ADD, [Var(0), Var(0)])
        assert isinstance(replace_subtree(t, (), Var(0)), Var)

    def test_replace_leaf_grows_size(self):
        t = Func(Primitive.ADD, [Var(0), Var(0)])
        bigger = replace_subtree(t, (0,), Func(Primitive.MUL, [Var(0), Var(0)]))
        assert tree_size(t) == 3
        assert tree_size(bigger) == 5

    def test_splice_back_identity_and_value_semantics(self):
        for tree in random_trees(25, n_vars=2, seed=31):
            snapshot = parse_sexpr(to_sexpr(tree), n_vars=2)
            for path, _ in iter_paths(tree):
                rebuilt = replace_subtree(tree, path, subtree_at(tree, path))
                assert trees_equal(rebuilt, tree)
            assert trees_equal(tree, snapshot)  # original untouched throughout

    def test_invalid_paths_raise(self):
        t = Func(Primitive.SIN, [Var(0)])
        with pytest.raises(ValueError):
            subtree_at(t, (0, 0))
        with pytest.raises(ValueError):
            subtree_at(t, (1,))
        with pytest.raises(ValueError):
            replace_subtree(t, (2,), Var(0))
        with pytest.raises(ValueError):
            replace_subtree(Var(0), (0,), Var(0))


class TestSexpr:
    def test_known_form(self):
        t = Func(Primitive.ADD, [Func(Primitive.MUL, [Var(0), Var(0)]), Var(0)])
        assert to_sexpr(t) == "(+ (* x0 x0) x0)"
        assert trees_equal(parse_sexpr("(+ (* x0 x0) x0)"), t)

    def test_roundtrip(self):
        for tree in random_trees(50, n_vars=3, seed=37):
            assert trees_equal(parse_sexpr(to_sexpr(tree), n_vars=3), tree)

    def test_const_roundtrip(self):
        t = Func(Primitive.ADD, [Const(1.5), Var(0)])
        back = parse_sexpr(to_sexpr(t))
        assert trees_equal(back, t)

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_sexpr("(bogus x0)")
        with pytest.raises(ValueError):
            parse_sexpr("(+ x0")
        with pytest.raises(ValueError):
            parse_sexpr("(+ x0 x0) x1")
        with pytest.raises(ValueError):
            parse_sexpr("x3", n_vars=2)
        with pytest.raises(ValueError):
            parse_sexpr("(+ x0 x0 x0)")  # arity enforced on build


def test_func_arity_enforced():
    with pytest.raises(ValueError):
        Func(Primitive.ADD, [Var(0)])
    with pytest.raises(ValueError):
        Var(-1)
