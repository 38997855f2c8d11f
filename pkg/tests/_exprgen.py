"""Seeded random expression-tree generator for round-trip testing.

Only shapes the canonical formatter can reach are produced: the parser
folds negated literals and literal/literal division into single constants,
and a chained condition always has a bare comparison on its left leg, so
the generator never emits those unreachable variants.
"""
from __future__ import annotations

import random
from fractions import Fraction

from relation_lab.expr import (
    Abs,
    Add,
    And,
    Cmp,
    Const,
    Div,
    If,
    Max,
    Min,
    Mul,
    Neg,
    Not,
    Or,
    Pow,
    Sin,
    Sub,
    Var,
)

_CMP_OPS = ("<", "<=", "=", ">=", ">")


def _const(rng: random.Random) -> Const:
    return Const(Fraction(rng.randint(-40, 40), rng.randint(1, 12)))


def _leaf(rng: random.Random, dim: int):
    if rng.random() < 0.5:
        return _const(rng)
    return Var(rng.randint(1, dim))


def random_ast(rng: random.Random, dim: int, depth: int):
    """Random expression tree of the given maximum depth over x1..x{dim}."""
    if depth <= 0:
        return _leaf(rng, dim)
    kind = rng.choice(
        ("leaf", "neg", "add", "sub", "mul", "div", "pow",
         "min", "max", "abs", "sin", "if")
    )
    sub = depth - 1
    if kind == "leaf":
        return _leaf(rng, dim)
    if kind == "neg":
        # The parser folds -<literal> into a signed constant, so a negation
        # node never has a constant operand in parser output.
        operand = random_ast(rng, dim, sub)
        while isinstance(operand, Const):
            operand = Var(rng.randint(1, dim))
        return Neg(operand)
    if kind in ("add", "sub", "mul", "div"):
        left = random_ast(rng, dim, sub)
        right = random_ast(rng, dim, sub)
        if kind == "div" and isinstance(left, Const) and isinstance(right, Const):
            # literal/literal folds to one constant in parser output
            right = Var(rng.randint(1, dim))
        node = {"add": Add, "sub": Sub, "mul": Mul, "div": Div}[kind]
        return node(left, right)
    if kind == "pow":
        return Pow(random_ast(rng, dim, sub), rng.randint(0, 5))
    if kind in ("min", "max"):
        args = tuple(random_ast(rng, dim, sub) for _ in range(rng.randint(1, 3)))
        return Min(args) if kind == "min" else Max(args)
    if kind == "abs":
        return Abs(random_ast(rng, dim, sub))
    if kind == "sin":
        return Sin(random_ast(rng, dim, sub))
    return If(
        random_cond(rng, dim, sub),
        random_ast(rng, dim, sub),
        random_ast(rng, dim, sub),
    )


def random_cond(rng: random.Random, dim: int, depth: int):
    """Random condition tree; chained legs keep a bare comparison on the left."""
    cmp_node = Cmp(
        rng.choice(_CMP_OPS),
        random_ast(rng, dim, max(depth - 1, 0)),
        random_ast(rng, dim, max(depth - 1, 0)),
    )
    if depth <= 0:
        return cmp_node
    roll = rng.random()
    if roll < 0.4:
        return cmp_node
    if roll < 0.55:
        return Not(random_cond(rng, dim, depth - 1))
    rest = random_cond(rng, dim, depth - 1)
    return And(cmp_node, rest) if roll < 0.775 else Or(cmp_node, rest)


def ast_corpus(count: int, seed: str = "expr-fuzz"):
    """Deterministic list of (dimension, ast) pairs for round-trip checks."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        dim = rng.randint(1, 4)
        out.append((dim, random_ast(rng, dim, rng.randint(1, 4))))
    return out
