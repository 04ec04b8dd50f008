import numpy as np
import pytest
from mpmath import mpf

from app.numerics.precision import working_precision
from app.numerics.problems.suite import Problem


@pytest.fixture
def digits50():
    with working_precision(50) as digits:
        yield digits


@pytest.fixture
def digits100():
    with working_precision(100) as digits:
        yield digits


@pytest.fixture
def digits1000():
    with working_precision(1000) as digits:
        yield digits


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def make_problem():
    """Problem from an expression in x, e.g. make_problem('x - 5')."""

    def _make(text, name=None, bracket=None):
        return Problem.from_expression(text, name=name, bracket=bracket)

    return _make


def linear(a, b):
    """a*x + b with its exact root, as plain BigScalar callables."""
    a, b = mpf(a), mpf(b)
    return (lambda x: a * x + b), -b / a
