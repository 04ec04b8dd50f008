# app/numerics/precision.py
"""
Arbitrary-precision scalar helpers.

BigScalar is mpmath's mpf. The working precision is not a global constant:
callers open a working_precision(digits) block per run, so a COC experiment
can run at 4096 digits while the benchmark runs at 1000.

Elementary functions come from mpmath; this module only adds the real-domain
guards the solver relies on and the decimal formatting used in reports.
"""
import logging
from contextlib import contextmanager
from typing import Iterator

import mpmath
from mpmath import mp, mpf

from app.numerics.exceptions import DomainError

logger = logging.getLogger(__name__)

BigScalar = mpf

MIN_SOLVER_DIGITS = 50
DEFAULT_DIGITS = 1000
# Slack between the working precision and what we treat as resolvable
ULP_SLACK_DIGITS = 10

ELEMENTARY = {
    "exp": mpmath.exp,
    "log": mpmath.log,
    "sin": mpmath.sin,
    "cos": mpmath.cos,
    "sqrt": mpmath.sqrt,
    "abs": mpmath.fabs,
}


@contextmanager
def working_precision(digits: int) -> Iterator[int]:
    """Run the enclosed block at `digits` significant decimal digits."""
    if digits < 1:
        raise ValueError(f"precision must be positive, got {digits}")
    with mp.workdps(digits):
        yield digits


def require_solver_precision(digits: int) -> int:
    if digits < MIN_SOLVER_DIGITS:
        raise ValueError(
            f"solver runs need at least {MIN_SOLVER_DIGITS} digits, got {digits}"
        )
    return digits


def to_scalar(value) -> mpf:
    """
    Convert a decimal string (or number) to a BigScalar at the current precision.

    Strings are parsed by mpmath, so "1.72" is exact to the working precision
    rather than inherited from a binary float.
    """
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty number")
        try:
            return mpf(text)
        except (ValueError, TypeError) as e:
            raise ValueError(f"not a decimal number: '{value}'") from e
    return mpf(value)


def eval_elementary(name: str, x: mpf) -> mpf:
    """
    Evaluate exp, log, sin, cos, sqrt or abs at the working precision.

    Raises DomainError for log(x<=0) and sqrt(x<0); the solver maps that to
    an Indeterminate trajectory.
    """
    fn = ELEMENTARY.get(name)
    if fn is None:
        raise ValueError(f"unknown elementary function '{name}'")
    if name == "log" and x <= 0:
        raise DomainError(f"log undefined at {nstr_short(x)}")
    if name == "sqrt" and x < 0:
        raise DomainError(f"sqrt undefined at {nstr_short(x)}")
    return fn(x)


def ulp_threshold(x: mpf, digits: int | None = None) -> mpf:
    """10^(-digits+10) * max(1, |x|): node gaps at or below this are degenerate."""
    digits = digits or mp.dps
    scale = mpf(f"1e{-digits + ULP_SLACK_DIGITS}")
    magnitude = abs(mpf(x))
    return scale * magnitude if magnitude > 1 else scale


def format_scientific(x: mpf, digits: int | None = None) -> str:
    """Scientific notation at full working precision, trailing zeros stripped."""
    digits = digits or mp.dps
    return mpmath.nstr(mpf(x), digits, min_fixed=0, max_fixed=0)


def nstr_short(x: mpf, digits: int = 12) -> str:
    return mpmath.nstr(x, digits)


def short_style(x: mpf) -> str:
    """
    Render |x| in the benchmark short form: one-digit mantissa in [0.1, 1).

    4e-81 -> "0.4e-80"; zero renders as "0".
    """
    x = mpf(x)
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    x = abs(x)
    exponent = int(mpmath.floor(mpmath.log10(x))) + 1
    digit = int(mpmath.nint(x / mpf(10) ** exponent * 10))
    if digit == 10:
        digit = 1
        exponent += 1
    return f"{sign}0.{digit}e{exponent}"


def decimal_exponent(x: mpf) -> float:
    """log10|x| as a machine float; -inf for zero."""
    x = abs(mpf(x))
    if x == 0:
        return float("-inf")
    return float(mpmath.log10(x))
