# app/numerics/exceptions.py
"""
Error hierarchy for the numerical core.

Library code raises these; methods.solver.solve is the only place that turns
them into a SolveStatus.
"""


class SolverError(Exception):
    """Base class for every numerical failure."""


class DomainError(SolverError, ValueError):
    """Input outside the real domain of a function (log of x<=0, sqrt of x<0, 1/0)."""


class DegenerateNodes(SolverError):
    """Divided-difference nodes closer than the precision allows."""

    def __init__(self, which: str, gap=None):
        self.which = which
        self.gap = gap
        super().__init__(f"degenerate divided difference {which}")


class ZeroDenominator(SolverError):
    """A divided difference or ratio denominator evaluated to exactly zero."""

    def __init__(self, which: str):
        self.which = which
        super().__init__(f"zero denominator in {which}")


class ZeroDerivative(SolverError):
    pass


class PoleError(SolverError):
    """A weight function was evaluated at its pole."""


class InsufficientTrace(SolverError):
    pass


class NumericalNoise(SolverError):
    """Quantity fell below what the working precision resolves."""


class EvaluationFailure(SolverError):
    pass


class NoSignChange(SolverError):
    pass


class ExpressionError(SolverError, ValueError):
    """Malformed or unsupported arithmetic expression."""
