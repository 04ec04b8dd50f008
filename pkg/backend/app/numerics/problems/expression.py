# app/numerics/problems/expression.py
"""
Minimal arithmetic-expression reader for test functions.

Grammar: numbers, the variable x, the constant pi, unary +/-, binary + - * /,
power (^ or **, right associative) and the calls exp, log, sin, cos, sqrt, abs.
That covers the benchmark suite; it is not a computer-algebra system.

Expressions compile into closures over BigScalar, evaluated at whatever
precision is active when they are called.
"""
import logging
from functools import lru_cache
from typing import Callable

import mpmath
import pyparsing as pp
from mpmath import mpf

from app.numerics.exceptions import DomainError, ExpressionError
from app.numerics.precision import ELEMENTARY, eval_elementary

logger = logging.getLogger(__name__)

pp.ParserElement.enable_packrat()

Node = Callable[[mpf], mpf]

VARIABLE = "x"
CONSTANTS = {"pi": lambda: +mpmath.pi}


def _number(tokens) -> Node:
    literal = tokens[0]
    return lambda x: mpf(literal)


def _identifier(tokens) -> Node:
    name = tokens[0]
    if name == VARIABLE:
        return lambda x: x
    if name in CONSTANTS:
        constant = CONSTANTS[name]
        return lambda x: constant()
    raise ExpressionError(f"unknown identifier '{name}'")


def _call(tokens) -> Node:
    name, arg = tokens[0], tokens[1]
    if name not in ELEMENTARY:
        raise ExpressionError(f"unknown function '{name}'")
    return lambda x: eval_elementary(name, arg(x))


def _power(base: mpf, exponent: mpf) -> mpf:
    if exponent == mpmath.floor(exponent):
        n = int(exponent)
        if base == 0 and n < 0:
            raise DomainError("zero raised to a negative power")
        return base ** n
    if base < 0:
        raise DomainError("negative base with fractional exponent")
    return base ** exponent


def _divide(a: mpf, b: mpf) -> mpf:
    if b == 0:
        raise DomainError("division by zero")
    return a / b


_BINARY = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "*": lambda a, b: a * b,
    "/": _divide,
    "^": _power,
    "**": _power,
}


def _sign(tokens) -> Node:
    op, operand = tokens[0]
    if op == "-":
        return lambda x: -operand(x)
    return operand


def _left_fold(tokens) -> Node:
    items = tokens[0]
    node = items[0]
    for i in range(1, len(items), 2):
        node = _bind(_BINARY[items[i]], node, items[i + 1])
    return node


def _right_fold(tokens) -> Node:
    items = tokens[0]
    node = items[-1]
    for i in range(len(items) - 2, 0, -2):
        node = _bind(_BINARY[items[i]], items[i - 1], node)
    return node


def _bind(op, left: Node, right: Node) -> Node:
    return lambda x: op(left(x), right(x))


@lru_cache(maxsize=1)
def _grammar() -> pp.ParserElement:
    expr = pp.Forward()
    number = pp.Regex(r"(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?").set_parse_action(_number)
    ident = pp.Word(pp.alphas, pp.alphanums + "_")
    call = (ident + pp.Suppress("(") + expr + pp.Suppress(")")).set_parse_action(_call)
    operand = number | call | ident.copy().set_parse_action(_identifier)

    expr <<= pp.infix_notation(
        operand,
        [
            (pp.one_of("^ **"), 2, pp.OpAssoc.RIGHT, _right_fold),
            (pp.one_of("+ -"), 1, pp.OpAssoc.RIGHT, _sign),
            (pp.one_of("* /"), 2, pp.OpAssoc.LEFT, _left_fold),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, _left_fold),
        ],
    )
    return expr + pp.StringEnd()


def compile_expression(text: str) -> Node:
    """
    Compile `text` into a callable f(x) over BigScalar.

    Raises ExpressionError for anything outside the grammar. Domain problems
    (log of a negative number, division by zero) surface as DomainError when
    the callable is evaluated.
    """
    if not text or not text.strip():
        raise ExpressionError("empty expression")
    try:
        result = _grammar().parse_string(text.strip(), parse_all=True)
    except pp.ParseBaseException as e:
        raise ExpressionError(f"cannot parse '{text}': {e}") from e
    return result[0]


def evaluate_constant(text: str) -> mpf:
    """Evaluate an x-free expression such as '1/3' at the working precision."""
    return compile_expression(text)(mpf(0))
