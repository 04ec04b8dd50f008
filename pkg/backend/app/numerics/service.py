# app/numerics/service.py
"""
Unified numerics service for OctaSolve.

Provides a clean interface for:
- Resolving problems by suite name or expression
- Running a solve at a given precision with optional COC
- Checking weight conditions
"""
import logging
from typing import Dict, List, Optional, Tuple

from app.config import settings
from app.numerics.exceptions import InsufficientTrace
from app.numerics.precision import require_solver_precision, to_scalar, working_precision
from app.schemas.analysis import ConditionCheck
from app.schemas.solver import IterationTrace, SolveReport, StepKind

logger = logging.getLogger(__name__)

# Lazy-loaded suite index
_suite_index = None


def get_suite_index() -> Dict[str, object]:
    """Problem items by name (lazy loaded)."""
    global _suite_index
    if _suite_index is None:
        from app.numerics.problems.suite import load_entries

        _suite_index = {item.name: item for item in load_entries()}
        logger.info(f"Problem suite loaded ({len(_suite_index)} functions)")
    return _suite_index


def resolve_problem(problem: Optional[str] = None, expression: Optional[str] = None, literal_f7: Optional[bool] = None):
    """
    A fresh Problem from a suite name or an expression in x.

    Raises KeyError for an unknown name and ExpressionError for a bad expression.
    """
    from app.numerics.problems.suite import Problem

    if (problem is None) == (expression is None):
        raise ValueError("give exactly one of a problem name or an expression")
    if expression is not None:
        return Problem.from_expression(expression)
    index = get_suite_index()
    if problem not in index:
        raise KeyError(f"unknown problem '{problem}' (choose from {', '.join(index)})")
    literal = settings.F7_LITERAL if literal_f7 is None else literal_f7
    return Problem.from_entry(index[problem], literal=literal)


class NumericsService:
    """
    Unified numerics service.

    Provides methods for:
    - Solving one problem from one starting point
    - Estimating the order of convergence of that run
    - Checking every registered weight function
    """

    def __init__(self, digits: Optional[int] = None):
        self.digits = digits or settings.PRECISION_DIGITS

    def solve(
        self,
        x0: str,
        problem: Optional[str] = None,
        expression: Optional[str] = None,
        method: StepKind = StepKind.OM8,
        tol: Optional[str] = None,
        max_iter: Optional[int] = None,
        alpha: Optional[str] = None,
        m: Optional[int] = None,
        weights: str = "particular",
        with_coc: bool = False,
    ) -> Tuple[SolveReport, IterationTrace]:
        """
        Solve and, when asked, attach a COC estimate to the report.

        COC uses the reference root when one is known and successive
        differences otherwise.
        """
        from app.numerics.analysis.convergence import coc
        from app.numerics.methods.solver import default_config, solve

        require_solver_precision(self.digits)
        f = resolve_problem(problem, expression)
        method = StepKind(method)
        if method in (StepKind.VARIANT_M1, StepKind.VARIANT_M2) and m is not None:
            logger.warning(f"[SOLVE] --m ignored for {method.value}")
        cfg = default_config(
            method,
            alpha=alpha if alpha is not None else settings.ALPHA,
            m=m if m is not None else settings.EXPONENT_M,
            weights=weights,
        )

        with working_precision(self.digits):
            to_scalar(x0)
            report, trace = solve(f, x0, method, cfg, tol=tol, max_iter=max_iter)
            if with_coc:
                root = f.reference_root() if f.has_reference_root else None
                try:
                    report.coc = coc(trace, root)
                except InsufficientTrace as e:
                    logger.warning(f"[SOLVE] COC unavailable: {e}")
        return report, trace

    def check_weights(self, digits: int = 256) -> List[Tuple[str, List[ConditionCheck]]]:
        from app.numerics.analysis.conditions import check_weight_conditions
        from app.numerics.methods.weights import REGISTERED_WEIGHTS

        return [(w.name, check_weight_conditions(w, digits)) for w in REGISTERED_WEIGHTS]


# Global service instance
_numerics_service = None


def get_numerics_service(digits: Optional[int] = None) -> NumericsService:
    """Get the numerics service instance; a different precision builds a new one."""
    global _numerics_service
    wanted = digits or settings.PRECISION_DIGITS
    if _numerics_service is None or _numerics_service.digits != wanted:
        _numerics_service = NumericsService(wanted)
    return _numerics_service
