"""
Expression trees: building, evaluating, serializing
===================================================

Programs are immutable trees of Func/Var/Const nodes over a fixed
primitive set.  Evaluation is vectorized over fitness cases and always
returns finite numbers, even for division by zero or huge exponents.
"""
import numpy as np

from gp_parsimony import (
    Const,
    Func,
    GrowMethod,
    Primitive,
    Var,
    eval_cases,
    eval_tree,
    parse_sexpr,
    random_tree,
    to_sexpr,
    tree_depth,
    tree_size,
)

# x^2 + x, written out as a tree: (+ (* x0 x0) x0)
x = Var(0)
tree = Func(Primitive.ADD, (Func(Primitive.MUL, (x, x)), x))
print("tree:", to_sexpr(tree))
print("size:", tree_size(tree), " depth:", tree_depth(tree))
print("value at x=3:", eval_tree(tree, [3.0]))

# The same evaluation over a whole batch of inputs at once.
xs = np.linspace(-2.0, 2.0, 5)
print("batch:", eval_cases(tree, (xs,)))

# Protected operators keep every result finite: dividing by an exact
# zero yields 1, log takes absolute values, overflow is clamped.
div = Func(Primitive.DIV, (Var(0), Func(Primitive.SUB, (Var(0), Var(0)))))
print("x / (x - x) at x=5:", eval_tree(div, [5.0]))

log = Func(Primitive.LOG, (Const(0.0),))
print("log(0):", eval_tree(log, []))

big = Func(Primitive.EXP, (Const(1e6),))
print("exp(1e6) clamps to:", eval_tree(big, []))

# Random trees come from the two classic generators.  Full builds every
# branch to the exact depth budget; Grow may stop early at terminals.
rng = np.random.default_rng(7)
full_tree = random_tree(GrowMethod("full", 3), n_vars=1, rng=rng)
grow_tree = random_tree(GrowMethod("grow", 3), n_vars=1, rng=rng)
print("full depth-3:", to_sexpr(full_tree), " depth:", tree_depth(full_tree))
print("grow depth<=3:", to_sexpr(grow_tree), " depth:", tree_depth(grow_tree))

# Trees round-trip through the s-expression text form.
text = "(+ (* x0 x0) x0)"
parsed = parse_sexpr(text, n_vars=1)
print("parsed back:", to_sexpr(parsed) == text)
