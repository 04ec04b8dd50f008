# app/numerics/analysis/conditions.py
"""
Numerical check of weight-function Taylor conditions.

Derivatives 0..4 are measured at the expansion point with mpmath's central
finite differences (step 10^(-digits/4), evaluated internally at raised
precision) and compared with the declared values to 10^(-digits/8).
"""
import logging
from typing import List

import mpmath
from mpmath import mpf

from app.numerics.exceptions import EvaluationFailure, SolverError
from app.numerics.methods.weights import WeightFn
from app.numerics.precision import working_precision
from app.schemas.analysis import ConditionCheck

logger = logging.getLogger(__name__)

MIN_CHECK_DIGITS = 128
MAX_ORDER = 4


def measure_derivatives(w: WeightFn, digits: int = 256, max_order: int = MAX_ORDER) -> List[mpf]:
    """w^(k)(expansion_point) for k = 0..max_order at `digits` digits."""
    if digits < MIN_CHECK_DIGITS:
        raise ValueError(f"condition checks need at least {MIN_CHECK_DIGITS} digits, got {digits}")
    with working_precision(digits):
        point = mpf(w.expansion_point)
        h = mpf(10) ** (-(digits // 4))
        try:
            return [mpf(mpmath.diff(w, point, k, h=h)) for k in range(max_order + 1)]
        except (SolverError, ZeroDivisionError, ValueError, TypeError) as e:
            raise EvaluationFailure(f"{w.name} not evaluable on the stencil at {w.expansion_point}: {e}") from e


def check_weight_conditions(w: WeightFn, digits: int = 256) -> List[ConditionCheck]:
    """
    One ConditionCheck per derivative order 0..4.

    Declared orders must match their value; every other order only has to be
    finite.
    """
    measured = measure_derivatives(w, digits)
    declared = dict(w.conditions)
    with working_precision(digits):
        tol = mpf(10) ** (-(digits // 8))
        checks = []
        for k, value in enumerate(measured):
            finite = mpmath.isfinite(value)
            if k in declared:
                expected = declared[k]
                passed = bool(finite and abs(value - mpf(expected)) <= tol)
                checks.append(ConditionCheck(order=k, expected=float(expected), measured=float(value), passed=passed))
            else:
                checks.append(ConditionCheck(order=k, expected=None, measured=float(value), passed=bool(finite)))

    failed = [c.order for c in checks if not c.passed]
    if failed:
        logger.info(f"[ANALYSIS] {w.name}: conditions fail at orders {failed}")
    else:
        logger.info(f"[ANALYSIS] {w.name}: all conditions hold")
    return checks


def conditions_hold(checks: List[ConditionCheck]) -> bool:
    return all(c.passed for c in checks)
