"""Expression language: parsing, evaluation, formatting, and diagnostics."""
from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from _exprgen import ast_corpus, random_ast
from relation_lab import expr
from relation_lab.expr import (
    Abs,
    Add,
    Cmp,
    Const,
    Div,
    EvalError,
    ExprDimensionError,
    ExprSyntaxError,
    If,
    Max,
    Min,
    Mul,
    Neg,
    Pow,
    Sin,
    Sub,
    Var,
)


# ---------------------------------------------------------------------------
# parsing structure and precedence
# ---------------------------------------------------------------------------

def test_multiplication_binds_tighter_than_addition():
    ast = expr.parse("2+3*4", 1)
    assert ast == Add(Const(Fraction(2)), Mul(Const(Fraction(3)), Const(Fraction(4))))
    assert expr.eval(ast, (0.0,)) == 14.0


def test_power_binds_tighter_than_unary_minus():
    ast = expr.parse("-x1^2", 1)
    assert ast == Neg(Pow(Var(1), 2))
    assert expr.eval(ast, (2.0,)) == -4.0


def test_division_of_products_groups_left_to_right():
    ast = expr.parse("x1*x2/(x1^2+x2^2)", 2)
    assert ast == Div(
        Mul(Var(1), Var(2)),
        Add(Pow(Var(1), 2), Pow(Var(2), 2)),
    )
    assert expr.eval(ast, (1.0, 1.0)) == 0.5


def test_subtraction_is_left_associative():
    assert expr.eval(expr.parse("10-4-3", 1), (0.0,)) == 3.0


def test_literal_fraction_folds_to_one_constant():
    assert expr.parse("3/4", 1) == Const(Fraction(3, 4))
    assert expr.parse("-3/4", 1) == Const(Fraction(-3, 4))


def test_conditional_chain_keeps_comparison_on_left():
    ast = expr.parse("if x1<1 and x2>0 or x1=0 then 1 else 0", 2)
    assert isinstance(ast, If)
    cond = ast.cond
    assert isinstance(cond, expr.And)
    assert isinstance(cond.left, Cmp)
    assert isinstance(cond.right, expr.Or)


def test_not_wraps_the_whole_remaining_condition():
    ast = expr.parse("if not x1<1 and x2>0 then 1 else 0", 2)
    assert isinstance(ast.cond, expr.Not)
    assert isinstance(ast.cond.operand, expr.And)


def test_min_max_accept_multiple_arguments():
    ast = expr.parse("min(x1, x2, 3)", 2)
    assert ast == Min((Var(1), Var(2), Const(Fraction(3))))
    assert expr.eval(ast, (5.0, 4.0)) == 3.0
    assert expr.eval(expr.parse("max(x1, x2)", 2), (5.0, 4.0)) == 5.0


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def test_eval_matches_hand_computed_values():
    assert expr.eval(expr.parse("x1+x2", 2), (0.25, 0.5)) == 0.75
    assert expr.eval(expr.parse("abs(x1-2)", 1), (0.5,)) == 1.5
    assert expr.eval(expr.parse("sin(x1)", 1), (2.0,)) == math.sin(2.0)
    assert expr.eval(expr.parse("x1^0", 1), (7.0,)) == 1.0


def test_eval_conditional_branches():
    ast = expr.parse("if x1<0 then -x1 else x1", 1)
    assert expr.eval(ast, (-3.0,)) == 3.0
    assert expr.eval(ast, (4.0,)) == 4.0


def test_eval_equality_comparison_is_exact():
    ast = expr.parse("if x1=1/2 then 1 else 0", 1)
    assert expr.eval(ast, (0.5,)) == 1.0
    assert expr.eval(ast, (0.5 + 1e-12,)) == 0.0


def test_eval_division_by_zero_reports_the_point():
    with pytest.raises(EvalError) as info:
        expr.eval(expr.parse("x1/x2", 2), (1.0, 0.0))
    assert info.value.point == (1.0, 0.0)
    assert "division by zero" in str(info.value)


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------

def test_syntax_error_carries_line_and_column():
    with pytest.raises(ExprSyntaxError) as info:
        expr.parse("x1+", 2)
    assert info.value.line == 1
    assert info.value.col == 4


def test_syntax_error_on_unbalanced_parenthesis():
    with pytest.raises(ExprSyntaxError):
        expr.parse("(x1+1", 1)


def test_syntax_error_on_empty_input():
    with pytest.raises(ExprSyntaxError):
        expr.parse("   ", 1)


def test_syntax_error_on_fractional_exponent():
    with pytest.raises(ExprSyntaxError):
        expr.parse("x1^1.5", 1)


def test_variable_beyond_dimension_is_rejected():
    with pytest.raises(ExprDimensionError):
        expr.parse("x3+1", 2)
    expr.parse("x3+1", 3)  # in range: no error


# ---------------------------------------------------------------------------
# formatting round trips
# ---------------------------------------------------------------------------

def test_format_parse_round_trip_on_500_random_trees():
    corpus = ast_corpus(500)
    assert len(corpus) == 500
    for dim, ast in corpus:
        text = expr.format(ast)
        assert expr.parse(text, dim) == ast, text


def test_format_parenthesizes_compound_operands():
    ast = Mul(Add(Var(1), Const(Fraction(1))), Var(2))
    assert expr.format(ast) == "(x1+1)*x2"
    assert expr.parse("(x1+1)*x2", 2) == ast


def test_format_of_negative_power_base_round_trips():
    ast = Pow(Const(Fraction(-2)), 3)
    text = expr.format(ast)
    assert text == "(-2)^3"
    assert expr.parse(text, 1) == ast


def test_formatted_text_is_stable_under_reformat():
    rng = random.Random("reformat")
    for _ in range(50):
        ast = random_ast(rng, 3, 3)
        text = expr.format(ast)
        assert expr.format(expr.parse(text, 3)) == text


def test_round_trip_preserves_evaluation():
    rng = random.Random("eval-agree")
    for _ in range(100):
        ast = random_ast(rng, 2, 3)
        point = (rng.uniform(-3, 3), rng.uniform(-3, 3))
        try:
            want = expr.eval(ast, point)
        except EvalError:
            continue
        got = expr.eval(expr.parse(expr.format(ast), 2), point)
        assert got == want or (math.isnan(got) and math.isnan(want))
