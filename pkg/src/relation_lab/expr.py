"""Utility-expression language: parse, evaluate, format.

Grammar (whitespace-insensitive)::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' int] | '-' factor
    atom   := number | 'x'int | func '(' args ')' | '(' expr ')'
            | 'if' cond 'then' expr 'else' expr
    func   := 'min' | 'max' | 'abs' | 'sin'
    cond   := expr rel expr (('and'|'or') cond)* | 'not' cond
    rel    := '<' | '<=' | '=' | '>=' | '>'
    number := int ['/' int] | decimal

Unary minus binds looser than '^', so ``-x1^2`` is −(x1²).  Rational
literals ("1/3", "0.8") are kept exact in the tree and converted to Float64
only at evaluation, which keeps piecewise thresholds exact.  And/or chains
associate to the right and 'not' binds the whole remaining chain; formatted
trees always re-parse to themselves because the formatter only emits shapes
the parser produces.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, line: int, col: int) -> None:
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class ExprDimensionError(ValueError):
    pass


class EvalError(ArithmeticError):
    def __init__(self, message: str, point: tuple) -> None:
        super().__init__(f"{message} at point {point}")
        self.point = point


# ---------------------------------------------------------------------------
# tree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Var:
    index: int  # 1-based


@dataclass(frozen=True)
class Neg:
    operand: "Ast"


@dataclass(frozen=True)
class Add:
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Sub:
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Mul:
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Div:
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class Pow:
    base: "Ast"
    exponent: int  # nonnegative


@dataclass(frozen=True)
class Min:
    args: tuple


@dataclass(frozen=True)
class Max:
    args: tuple


@dataclass(frozen=True)
class Abs:
    operand: "Ast"


@dataclass(frozen=True)
class Sin:
    operand: "Ast"


@dataclass(frozen=True)
class Cmp:
    op: str  # one of < <= = >= >
    left: "Ast"
    right: "Ast"


@dataclass(frozen=True)
class And:
    left: "Cond"
    right: "Cond"


@dataclass(frozen=True)
class Or:
    left: "Cond"
    right: "Cond"


@dataclass(frozen=True)
class Not:
    operand: "Cond"


@dataclass(frozen=True)
class If:
    cond: "Cond"
    then: "Ast"
    els: "Ast"


Ast = Union[Const, Var, Neg, Add, Sub, Mul, Div, Pow, Min, Max, Abs, Sin, If]
Cond = Union[Cmp, And, Or, Not]

_FUNCS = {"min": Min, "max": Max}
_KEYWORDS = {"if", "then", "else", "and", "or", "not", "min", "max", "abs", "sin"}


# ---------------------------------------------------------------------------
# lexer
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER | IDENT | OP | END
    text: str
    line: int
    col: int
    value: Fraction = Fraction(0)
    is_integer: bool = False


def _tokenize(text: str) -> list:
    tokens = []
    i = 0
    line, col = 1, 1
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            is_int = True
            if j < n and text[j] == "." and j + 1 < n and text[j + 1].isdigit():
                is_int = False
                j += 1
                while j < n and text[j].isdigit():
                    j += 1
            lexeme = text[i:j]
            value = Fraction(int(lexeme)) if is_int else Fraction(lexeme)
            tokens.append(_Token("NUMBER", lexeme, line, start_col,
                                 value=value, is_integer=is_int))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalpha() or text[j].isdigit()):
                j += 1
            tokens.append(_Token("IDENT", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in "<>":
            if i + 1 < n and text[i + 1] == "=":
                tokens.append(_Token("OP", text[i:i + 2], line, start_col))
                i += 2
                col += 2
                continue
            tokens.append(_Token("OP", ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch in "+-*/^(),=":
            tokens.append(_Token("OP", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(_Token("END", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, tokens: list, dimension: int) -> None:
        self.tokens = tokens
        self.pos = 0
        self.dimension = dimension

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str) -> ExprSyntaxError:
        tok = self.peek()
        return ExprSyntaxError(message, tok.line, tok.col)

    def expect_op(self, text: str) -> None:
        tok = self.peek()
        if tok.kind == "OP" and tok.text == text:
            self.advance()
            return
        raise self.error(f"expected {text!r}")

    def at_op(self, *texts: str) -> bool:
        tok = self.peek()
        return tok.kind == "OP" and tok.text in texts

    def at_keyword(self, *words: str) -> bool:
        tok = self.peek()
        return tok.kind == "IDENT" and tok.text in words

    # expr := term (('+'|'-') term)*
    def parse_expr(self) -> Ast:
        node = self.parse_term()
        while self.at_op("+", "-"):
            op = self.advance().text
            rhs = self.parse_term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    # term := factor (('*'|'/') factor)*
    def parse_term(self) -> Ast:
        node = self.parse_factor()
        while self.at_op("*", "/"):
            op = self.advance().text
            rhs = self.parse_factor()
            if op == "*":
                node = Mul(node, rhs)
            else:
                node = _make_div(node, rhs)
        return node

    # factor := atom ['^' int] | '-' factor
    def parse_factor(self) -> Ast:
        if self.at_op("-"):
            self.advance()
            return _make_neg(self.parse_factor())
        node = self.parse_atom()
        if self.at_op("^"):
            self.advance()
            tok = self.peek()
            if tok.kind != "NUMBER" or not tok.is_integer:
                raise self.error("expected integer exponent after '^'")
            self.advance()
            node = Pow(node, int(tok.value))
        return node

    def parse_atom(self) -> Ast:
        tok = self.peek()
        if tok.kind == "NUMBER":
            self.advance()
            return Const(tok.value)
        if tok.kind == "OP" and tok.text == "(":
            self.advance()
            node = self.parse_expr()
            self.expect_op(")")
            return node
        if tok.kind == "IDENT":
            word = tok.text
            if word == "if":
                self.advance()
                cond = self.parse_cond()
                if not self.at_keyword("then"):
                    raise self.error("expected 'then'")
                self.advance()
                then = self.parse_expr()
                if not self.at_keyword("else"):
                    raise self.error("expected 'else'")
                self.advance()
                els = self.parse_expr()
                return If(cond, then, els)
            if word in ("min", "max", "abs", "sin"):
                self.advance()
                self.expect_op("(")
                args = [self.parse_expr()]
                while self.at_op(","):
                    self.advance()
                    args.append(self.parse_expr())
                self.expect_op(")")
                if word == "abs":
                    if len(args) != 1:
                        raise self.error("abs takes exactly one argument")
                    return Abs(args[0])
                if word == "sin":
                    if len(args) != 1:
                        raise self.error("sin takes exactly one argument")
                    return Sin(args[0])
                return _FUNCS[word](tuple(args))
            if word.startswith("x") and word[1:].isdigit():
                self.advance()
                index = int(word[1:])
                if index < 1:
                    raise ExprSyntaxError("variable index must be >= 1",
                                          tok.line, tok.col)
                if index > self.dimension:
                    raise ExprDimensionError(
                        f"variable x{index} exceeds dimension {self.dimension}")
                return Var(index)
            if word in _KEYWORDS:
                raise self.error(f"unexpected keyword {word!r}")
            raise self.error(f"unknown identifier {word!r}")
        raise self.error("expected a number, variable, function, or '('")

    # cond := expr rel expr (('and'|'or') cond)* | 'not' cond
    def parse_cond(self) -> Cond:
        if self.at_keyword("not"):
            self.advance()
            return Not(self.parse_cond())
        left = self.parse_expr()
        tok = self.peek()
        if tok.kind == "OP" and tok.text in ("<", "<=", "=", ">=", ">"):
            self.advance()
            right = self.parse_expr()
            node: Cond = Cmp(tok.text, left, right)
        else:
            raise self.error("expected a comparison operator")
        if self.at_keyword("and", "or"):
            word = self.advance().text
            rest = self.parse_cond()
            return And(node, rest) if word == "and" else Or(node, rest)
        return node


def _make_div(left: Ast, right: Ast) -> Ast:
    if isinstance(left, Const) and isinstance(right, Const) and right.value != 0:
        return Const(left.value / right.value)
    return Div(left, right)


def _make_neg(operand: Ast) -> Ast:
    if isinstance(operand, Const):
        return Const(-operand.value)
    return Neg(operand)


def parse(text: str, dimension: int) -> Ast:
    """Parse an expression over variables x1..x{dimension}."""
    if not text or not text.strip():
        raise ExprSyntaxError("empty expression", 1, 1)
    parser = _Parser(_tokenize(text), dimension)
    node = parser.parse_expr()
    if parser.peek().kind != "END":
        raise parser.error("unexpected trailing input")
    return node


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def eval(ast, p: tuple) -> float:  # noqa: A001 - contract name
    """Evaluate in Float64 at point p (1-based variable indices)."""
    if isinstance(ast, Const):
        return float(ast.value)
    if isinstance(ast, Var):
        if ast.index > len(p):
            raise ExprDimensionError(
                f"point dimension {len(p)} below variable x{ast.index}")
        return float(p[ast.index - 1])
    if isinstance(ast, Neg):
        return -eval(ast.operand, p)
    if isinstance(ast, Add):
        return eval(ast.left, p) + eval(ast.right, p)
    if isinstance(ast, Sub):
        return eval(ast.left, p) - eval(ast.right, p)
    if isinstance(ast, Mul):
        return eval(ast.left, p) * eval(ast.right, p)
    if isinstance(ast, Div):
        denom = eval(ast.right, p)
        if denom == 0.0:
            raise EvalError("division by zero", tuple(p))
        return eval(ast.left, p) / denom
    if isinstance(ast, Pow):
        return eval(ast.base, p) ** ast.exponent
    if isinstance(ast, Min):
        return min(eval(a, p) for a in ast.args)
    if isinstance(ast, Max):
        return max(eval(a, p) for a in ast.args)
    if isinstance(ast, Abs):
        return abs(eval(ast.operand, p))
    if isinstance(ast, Sin):
        return math.sin(eval(ast.operand, p))
    if isinstance(ast, If):
        return eval(ast.then, p) if _eval_cond(ast.cond, p) else eval(ast.els, p)
    raise TypeError(f"not an expression node: {ast!r}")


def _eval_cond(cond, p: tuple) -> bool:
    if isinstance(cond, Cmp):
        lhs = eval(cond.left, p)
        rhs = eval(cond.right, p)
        if cond.op == "<":
            return lhs < rhs
        if cond.op == "<=":
            return lhs <= rhs
        if cond.op == "=":
            return lhs == rhs
        if cond.op == ">=":
            return lhs >= rhs
        return lhs > rhs
    if isinstance(cond, And):
        return _eval_cond(cond.left, p) and _eval_cond(cond.right, p)
    if isinstance(cond, Or):
        return _eval_cond(cond.left, p) or _eval_cond(cond.right, p)
    if isinstance(cond, Not):
        return not _eval_cond(cond.operand, p)
    raise TypeError(f"not a condition node: {cond!r}")


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------

def _fmt_const(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _atomic(node) -> bool:
    """Nodes whose formatted text can stand as an operand without parens."""
    if isinstance(node, Const):
        # A fractional literal renders with '/', which would merge into a
        # surrounding multiplicative chain ("x1/3/4"), so it needs parens.
        return node.value >= 0 and node.value.denominator == 1
    return isinstance(node, (Var, Min, Max, Abs, Sin, Pow))


def _operand(node) -> str:
    text = format(node)
    return text if _atomic(node) else f"({text})"


def format(ast) -> str:  # noqa: A001 - contract name
    """Canonical text; parse(format(a), n) is structurally equal to a."""
    if isinstance(ast, Const):
        return _fmt_const(ast.value)
    if isinstance(ast, Var):
        return f"x{ast.index}"
    if isinstance(ast, Neg):
        return "-" + _operand(ast.operand)
    if isinstance(ast, Add):
        return f"{_operand(ast.left)}+{_operand(ast.right)}"
    if isinstance(ast, Sub):
        return f"{_operand(ast.left)}-{_operand(ast.right)}"
    if isinstance(ast, Mul):
        return f"{_operand(ast.left)}*{_operand(ast.right)}"
    if isinstance(ast, Div):
        return f"{_operand(ast.left)}/{_operand(ast.right)}"
    if isinstance(ast, Pow):
        base = ast.base
        base_text = format(base)
        if not (isinstance(base, (Var, Min, Max, Abs, Sin))
                or (isinstance(base, Const) and base.value >= 0
                    and base.value.denominator == 1)):
            base_text = f"({base_text})"
        return f"{base_text}^{ast.exponent}"
    if isinstance(ast, Min):
        return "min(" + ",".join(format(a) for a in ast.args) + ")"
    if isinstance(ast, Max):
        return "max(" + ",".join(format(a) for a in ast.args) + ")"
    if isinstance(ast, Abs):
        return "abs(" + format(ast.operand) + ")"
    if isinstance(ast, Sin):
        return "sin(" + format(ast.operand) + ")"
    if isinstance(ast, If):
        return (f"if {_fmt_cond(ast.cond)} then {_operand(ast.then)} "
                f"else {_operand(ast.els)}")
    raise TypeError(f"not an expression node: {ast!r}")


def _fmt_cond(cond) -> str:
    if isinstance(cond, Cmp):
        return f"{_operand(cond.left)}{cond.op}{_operand(cond.right)}"
    if isinstance(cond, And):
        return f"{_fmt_cond(cond.left)} and {_fmt_cond(cond.right)}"
    if isinstance(cond, Or):
        return f"{_fmt_cond(cond.left)} or {_fmt_cond(cond.right)}"
    if isinstance(cond, Not):
        return f"not {_fmt_cond(cond.operand)}"
    raise TypeError(f"not a condition node: {cond!r}")
