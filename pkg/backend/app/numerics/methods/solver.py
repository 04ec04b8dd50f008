# app/numerics/methods/solver.py
"""
The common solve loop.

This is the only place numerical exceptions become a SolveStatus:

    |f(x_{n+1})| < tol                      -> Converged
    |x_n| > divergence bound, inf, overflow -> Divergent
    max_iter reached, zero denominator,
    zero derivative, weight pole            -> NotConverged
    DomainError                             -> Indeterminate

A degenerate step (divided-difference nodes collapsed at the working
precision) stops the run: Converged if the residual is already below tol,
NotConverged with a note otherwise.
"""
import logging
from typing import Callable, Optional, Tuple, Union

import mpmath
from mpmath import mp, mpf

from app.config import settings
from app.numerics.exceptions import DomainError, PoleError, ZeroDenominator, ZeroDerivative
from app.numerics.methods.steps import newton_step, om8_step, steffensen_step
from app.numerics.methods.weights import SchemeConfig, om8_config, variant_config
from app.numerics.precision import nstr_short, short_style, to_scalar, working_precision
from app.schemas.solver import (
    IterationRecord,
    IterationTrace,
    SolveReport,
    SolveStatus,
    StepKind,
    StepOutcome,
)

logger = logging.getLogger(__name__)


def default_config(step: StepKind, alpha="1", m: Optional[int] = None, weights: str = "particular") -> Optional[SchemeConfig]:
    """SchemeConfig implied by a step kind; None for the one-point methods."""
    step = StepKind(step)
    if step == StepKind.OM8:
        return om8_config(alpha=alpha, m=m if m is not None else 3, weights=weights)
    if step == StepKind.VARIANT_M1:
        return variant_config(1, alpha=alpha)
    if step == StepKind.VARIANT_M2:
        return variant_config(2, alpha=alpha)
    return None


def _kernel(step: StepKind, f, cfg: Optional[SchemeConfig], fprime) -> Callable[[mpf, mpf], StepOutcome]:
    if step == StepKind.NEWTON:
        return lambda x, fx: newton_step(f, fprime, x, fx)
    if step == StepKind.STEFFENSEN:
        return lambda x, fx: steffensen_step(f, x, fx)
    return lambda x, fx: om8_step(f, x, cfg, fx)


def solve(
    f,
    x0: Union[str, mpf],
    step: StepKind = StepKind.OM8,
    cfg: Optional[SchemeConfig] = None,
    tol: Union[str, mpf, None] = None,
    max_iter: Optional[int] = None,
    fprime=None,
    divergence_bound: Optional[float] = None,
    precision_digits: Optional[int] = None,
) -> Tuple[SolveReport, IterationTrace]:
    """
    Iterate `step` from x0 until the stopping rule fires.

    Runs at `precision_digits` when given, otherwise at the caller's working
    precision. Never raises for numerical failures; see the module docstring.
    """
    if precision_digits is not None:
        with working_precision(precision_digits):
            return solve(f, x0, step, cfg, tol, max_iter, fprime, divergence_bound)

    step = StepKind(step)
    tol = to_scalar(tol if tol is not None else settings.TOLERANCE)
    max_iter = max_iter if max_iter is not None else settings.MAX_ITER
    bound = mpf(divergence_bound if divergence_bound is not None else settings.DIVERGENCE_BOUND)
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")

    if step in (StepKind.OM8, StepKind.VARIANT_M1, StepKind.VARIANT_M2) and cfg is None:
        cfg = default_config(step)
    if step == StepKind.NEWTON and fprime is None:
        fprime = f.derivative()
    kernel = _kernel(step, f, cfg, fprime)

    x0_text = x0 if isinstance(x0, str) else nstr_short(x0, 20)
    name = getattr(f, "name", "f")
    x = to_scalar(x0)
    trace = IterationTrace()
    tne = 0
    it = 0
    fx = None
    status = SolveStatus.NOT_CONVERGED
    note = None

    def report() -> SolveReport:
        residual = abs(fx) if fx is not None else mpf("nan")
        return SolveReport(
            problem=name,
            method=step,
            x0=x0_text,
            precision_digits=mp.dps,
            status=status,
            iterations=it,
            evaluations=tne,
            x=x,
            residual=residual,
            tolerance=tol,
            note=note,
        )

    logger.debug(f"[SOLVE] {name}: {step.value} from x0={x0_text} at {mp.dps} digits")
    try:
        fx = f(x)
        trace.append(IterationRecord(iteration=0, x=x, residual=abs(fx), evaluations=0))

        while it < max_iter:
            outcome = kernel(x, fx)
            it += 1
            tne += outcome.evals_used
            x_next = outcome.next_x

            if mpmath.isinf(x_next) or mpmath.isnan(x_next) or abs(x_next) > bound:
                x = x_next
                fx = None
                trace.append(IterationRecord(iteration=it, x=x_next, residual=None, evaluations=tne))
                status = SolveStatus.DIVERGENT
                note = f"|x| exceeded {mpmath.nstr(bound, 3)}"
                break

            fx_next = outcome.next_fx if outcome.next_fx is not None else f(x_next)
            x, fx = x_next, fx_next
            trace.append(IterationRecord(iteration=it, x=x, residual=abs(fx), evaluations=tne))
            logger.debug(f"[SOLVE] {name} it={it} |f|={short_style(abs(fx))} tne={tne}")

            if abs(fx) < tol:
                status = SolveStatus.CONVERGED
                break
            if outcome.degenerate:
                status = SolveStatus.NOT_CONVERGED
                note = f"stagnation: {outcome.degenerate} degenerate with |f| = {short_style(abs(fx))}"
                break
        else:
            note = f"iteration cap {max_iter} reached"

    except DomainError as e:
        status = SolveStatus.INDETERMINATE
        note = str(e)
    except (ZeroDenominator, ZeroDerivative, PoleError) as e:
        status = SolveStatus.NOT_CONVERGED
        note = str(e)
    except (OverflowError, ZeroDivisionError) as e:
        status = SolveStatus.DIVERGENT
        note = f"arithmetic failure: {e}"
        fx = None

    result = report()
    if status == SolveStatus.CONVERGED:
        logger.info(f"[SOLVE] {name} x0={x0_text}: {status.value} IT={it} TNE={tne} |f|={short_style(result.residual)}")
    else:
        logger.warning(f"[SOLVE] {name} x0={x0_text}: {status.value} after {it} iterations ({note})")
    return result, trace
