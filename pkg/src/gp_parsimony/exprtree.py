"""Expression trees over a fixed numeric function set.

Trees are built from binary arithmetic, trig, and exponential/log primitives
plus indexed variable terminals.  All primitives are *protected*: division by
an exact zero yields 1, log and sqrt act on absolute values, exp and tan are
clamped, and any non-finite intermediate is replaced by a finite value.  As a
result evaluation always returns a finite float for finite inputs.

Trees are treated as immutable values: no function in this module mutates an
existing node, and editing operations (`replace_subtree`) return new trees
that share untouched subtrees with their input.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence, Union

import numpy as np

# Magnitude bound for clamped primitives and non-finite replacement.
CLAMP = 1e300


class Primitive(Enum):
    """The function set: four binary operators and six unary functions."""

    ADD = ("+", 2)
    SUB = ("-", 2)
    MUL = ("*", 2)
    DIV = ("/", 2)
    TAN = ("tan", 1)
    SIN = ("sin", 1)
    COS = ("cos", 1)
    LOG = ("log", 1)
    EXP = ("exp", 1)
    SQRT = ("sqrt", 1)

    def __init__(self, symbol: str, arity: int):
        self.symbol = symbol
        self.arity = arity


PRIMITIVES: tuple[Primitive, ...] = tuple(Primitive)

_BY_SYMBOL = {p.symbol: p for p in Primitive}


class Func:
    """Internal node applying a primitive to its children."""

    __slots__ = ("op", "children")

    def __init__(self, op: Primitive, children: Sequence["ExprTree"]):
        children = tuple(children)
        if len(children) != op.arity:
            raise ValueError(
                f"{op.symbol} takes {op.arity} children, got {len(children)}"
            )
        self.op = op
        self.children = children

    def __repr__(self) -> str:
        return f"Func({to_sexpr(self)})"


class Var:
    """Leaf referring to input variable ``x<index>``."""

    __slots__ = ("index",)

    def __init__(self, index: int):
        if index < 0:
            raise ValueError(f"variable index must be >= 0, got {index}")
        self.index = index

    def __repr__(self) -> str:
        return f"Var(x{self.index})"


class Const:
    """Leaf holding a fixed numeric constant (opt-in; off by default)."""

    __slots__ = ("value",)

    def __init__(self, value: float):
        self.value = float(value)

    def __repr__(self) -> str:
        return f"Const({self.value!r})"


ExprTree = Union[Func, Var, Const]


def _fix(values: np.ndarray) -> np.ndarray:
    # NaN -> 0, +inf -> CLAMP, -inf -> -CLAMP; leaves finite arrays untouched.
    if np.isfinite(values).all():
        return values
    return np.nan_to_num(values, nan=0.0, posinf=CLAMP, neginf=-CLAMP)


def _apply_vector(op: Primitive, args: Sequence[np.ndarray]) -> np.ndarray:
    if op is Primitive.ADD:
        return _fix(args[0] + args[1])
    if op is Primitive.SUB:
        return _fix(args[0] - args[1])
    if op is Primitive.MUL:
        return _fix(args[0] * args[1])
    if op is Primitive.DIV:
        a, b = args
        zero = b == 0.0
        if zero.any():
            out = np.where(zero, 1.0, a / np.where(zero, 1.0, b))
        else:
            out = a / b
        return _fix(out)
    if op is Primitive.SIN:
        return np.sin(args[0])
    if op is Primitive.COS:
        return np.cos(args[0])
    if op is Primitive.TAN:
        return _fix(np.clip(np.tan(args[0]), -CLAMP, CLAMP))
    if op is Primitive.EXP:
        return _fix(np.clip(np.exp(args[0]), -CLAMP, CLAMP))
    if op is Primitive.SQRT:
        return np.sqrt(np.abs(args[0]))
    if op is Primitive.LOG:
        x = np.abs(args[0])
        out = np.log(x)
        if (x == 0.0).any():
            out = np.where(x == 0.0, 0.0, out)
        return _fix(out)
    raise ValueError(f"unknown primitive {op}")


def apply_primitive(p: Primitive, args: Sequence[float]) -> float:
    """Apply one protected primitive to scalar arguments.

    An arity mismatch is a caller bug and raises ValueError.
    """
    if len(args) != p.arity:
        raise ValueError(f"{p.symbol} expects {p.arity} args, got {len(args)}")
    vecs = [np.array([float(a)]) for a in args]
    with np.errstate(all="ignore"):
        return float(_apply_vector(p, vecs)[0])


def _eval(node: ExprTree, columns: Sequence[np.ndarray], n: int) -> np.ndarray:
    kind = type(node)
    if kind is Var:
        if node.index >= len(columns):
            raise IndexError(
                f"tree refers to x{node.index} but only {len(columns)} inputs given"
            )
        return columns[node.index]
    if kind is Const:
        return np.full(n, node.value)
    args = [_eval(child, columns, n) for child in node.children]
    return _apply_vector(node.op, args)


def eval_cases(tree: ExprTree, columns: Sequence[np.ndarray]) -> np.ndarray:
    """Evaluate ``tree`` over a batch of cases.

    ``columns[i]`` holds the values of variable ``x<i>`` across all cases.
    Returns one finite float per case.
    """
    if not columns:
        raise ValueError("need at least one input column")
    n = len(columns[0])
    with np.errstate(all="ignore"):
        out = _eval(tree, columns, n)
    if type(tree) is Var:
        return out.copy()  # never hand back the caller's own column
    return out


def eval_tree(tree: ExprTree, inputs: Sequence[float]) -> float:
    """Evaluate ``tree`` at a single input point."""
    arr = np.asarray(inputs, dtype=float).reshape(-1)
    if len(arr) == 0:
        # Constant-only trees can be evaluated without input columns.
        with np.errstate(all="ignore"):
            return float(_eval(tree, [], 1)[0])
    columns = [arr[i : i + 1] for i in range(len(arr))]
    return float(eval_cases(tree, columns)[0])


def tree_size(tree: ExprTree) -> int:
    """Total node count, functions and terminals."""
    if type(tree) is Func:
        return 1 + sum(tree_size(c) for c in tree.children)
    return 1


def tree_depth(tree: ExprTree) -> int:
    """Longest root-to-leaf edge count; a lone terminal has depth 0."""
    if type(tree) is Func:
        return 1 + max(tree_depth(c) for c in tree.children)
    return 0


GROW = "grow"
FULL = "full"


@dataclass(frozen=True)
class GrowMethod:
    """Tree-generation recipe: ``grow`` or ``full`` up to ``max_depth``."""

    kind: str
    max_depth: int

    def __post_init__(self):
        if self.kind not in (GROW, FULL):
            raise ValueError(f"kind must be {GROW!r} or {FULL!r}, got {self.kind!r}")
        if self.max_depth < 0:
            raise ValueError(f"max_depth must be >= 0, got {self.max_depth}")


def _random_terminal(
    n_vars: int, rng, erc_range: Optional[tuple[float, float]]
) -> ExprTree:
    if erc_range is None:
        return Var(int(rng.integers(n_vars)))
    pick = int(rng.integers(n_vars + 1))
    if pick == n_vars:
        return Const(float(rng.uniform(erc_range[0], erc_range[1])))
    return Var(pick)


def random_tree(
    method: GrowMethod,
    n_vars: int,
    rng,
    function_set: Optional[Sequence[Primitive]] = None,
    erc_range: Optional[tuple[float, float]] = None,
) -> ExprTree:
    """Generate a random tree.

    ``full`` places a uniformly random function at every slot shallower than
    ``max_depth`` and a terminal at exactly ``max_depth``.  ``grow`` forces a
    function at the root, then lets deeper slots pick uniformly from the
    union of functions and terminals until the depth budget runs out, so the
    resulting depth is anywhere in [1, max_depth] (0 when max_depth is 0).
    Terminals are uniform over the ``n_vars`` variables, plus an ephemeral
    constant option when ``erc_range`` is given.
    """
    if n_vars < 1:
        raise ValueError("n_vars must be >= 1")
    functions = tuple(function_set) if function_set is not None else PRIMITIVES
    n_terms = n_vars + (1 if erc_range is not None else 0)

    def full(budget: int) -> ExprTree:
        if budget == 0:
            return _random_terminal(n_vars, rng, erc_range)
        op = functions[int(rng.integers(len(functions)))]
        return Func(op, [full(budget - 1) for _ in range(op.arity)])

    def grow(budget: int, at_root: bool) -> ExprTree:
        if budget == 0:
            return _random_terminal(n_vars, rng, erc_range)
        if at_root:
            op = functions[int(rng.integers(len(functions)))]
            return Func(op, [grow(budget - 1, False) for _ in range(op.arity)])
        pick = int(rng.integers(len(functions) + n_terms))
        if pick < len(functions):
            op = functions[pick]
            return Func(op, [grow(budget - 1, False) for _ in range(op.arity)])
        term_pick = pick - len(functions)
        if erc_range is not None and term_pick == n_vars:
            return Const(float(rng.uniform(erc_range[0], erc_range[1])))
        return Var(term_pick)

    if method.kind == FULL:
        return full(method.max_depth)
    return grow(method.max_depth, True)


Path = tuple[int, ...]


def iter_paths(tree: ExprTree) -> list[tuple[Path, ExprTree]]:
    """All (path, node) pairs in preorder; the root has the empty path."""
    out: list[tuple[Path, ExprTree]] = []
    stack: list[tuple[Path, ExprTree]] = [((), tree)]
    while stack:
        path, node = stack.pop()
        out.append((path, node))
        if type(node) is Func:
            for i in range(len(node.children) - 1, -1, -1):
                stack.append((path + (i,), node.children[i]))
    return out


def pick_node(tree: ExprTree, rng) -> Path:
    """Pick a node path with the usual 90/10 function/terminal bias.

    A tree with no function node falls back to its root terminal on the
    function branch.
    """
    func_paths: list[Path] = []
    term_paths: list[Path] = []
    for path, node in iter_paths(tree):
        if type(node) is Func:
            func_paths.append(path)
        else:
            term_paths.append(path)
    if rng.random() < 0.9 and func_paths:
        pool = func_paths
    else:
        pool = term_paths
    return pool[int(rng.integers(len(pool)))]


def subtree_at(tree: ExprTree, path: Path) -> ExprTree:
    """Return the subtree addressed by ``path``; invalid paths raise."""
    node = tree
    for step in path:
        if type(node) is not Func:
            raise ValueError(f"path {path} descends through a terminal")
        if step >= len(node.children):
            raise ValueError(f"path {path} has child index {step} out of range")
        node = node.children[step]
    return node


def replace_subtree(tree: ExprTree, path: Path, sub: ExprTree) -> ExprTree:
    """New tree with the subtree at ``path`` replaced by ``sub``."""
    if not path:
        return sub
    if type(tree) is not Func:
        raise ValueError(f"path {path} descends through a terminal")
    step = path[0]
    if step >= len(tree.children):
        raise ValueError(f"path {path} has child index {step} out of range")
    children = list(tree.children)
    children[step] = replace_subtree(children[step], path[1:], sub)
    return Func(tree.op, children)


def trees_equal(a: ExprTree, b: ExprTree) -> bool:
    """Structural equality."""
    ka, kb = type(a), type(b)
    if ka is not kb:
        return False
    if ka is Var:
        return a.index == b.index
    if ka is Const:
        return a.value == b.value
    return a.op is b.op and all(
        trees_equal(ca, cb) for ca, cb in zip(a.children, b.children)
    )


def to_sexpr(tree: ExprTree) -> str:
    """Canonical prefix form, e.g. ``(+ (* x0 x0) x0)``."""
    kind = type(tree)
    if kind is Var:
        return f"x{tree.index}"
    if kind is Const:
        return repr(tree.value)
    inner = " ".join(to_sexpr(c) for c in tree.children)
    return f"({tree.op.symbol} {inner})"


def parse_sexpr(text: str, n_vars: Optional[int] = None) -> ExprTree:
    """Parse the canonical prefix form back into a tree."""
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse() -> ExprTree:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of expression: {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            if pos >= len(tokens):
                raise ValueError(f"unexpected end of expression: {text!r}")
            sym = tokens[pos]
            pos += 1
            if sym not in _BY_SYMBOL:
                raise ValueError(f"unknown function {sym!r} in {text!r}")
            op = _BY_SYMBOL[sym]
            children = []
            while True:
                if pos >= len(tokens):
                    raise ValueError(f"missing ')' in {text!r}")
                if tokens[pos] == ")":
                    break
                children.append(parse())
            pos += 1  # consume ')'
            return Func(op, children)
        if tok == ")":
            raise ValueError(f"unbalanced ')' in {text!r}")
        if tok.startswith("x") and tok[1:].isdigit():
            index = int(tok[1:])
            if n_vars is not None and index >= n_vars:
                raise ValueError(f"variable {tok} out of range for {n_vars} inputs")
            return Var(index)
        try:
            return Const(float(tok))
        except ValueError:
            raise ValueError(f"unknown token {tok!r} in {text!r}") from None

    tree = parse()
    if pos != len(tokens):
        raise ValueError(f"trailing tokens in {text!r}")
    return tree
