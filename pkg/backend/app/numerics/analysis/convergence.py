# app/numerics/analysis/convergence.py
"""
Computational order of convergence and efficiency indices.
"""
import logging
from typing import List, Optional, Sequence, Union

import mpmath
from mpmath import mpf

from app.numerics.exceptions import InsufficientTrace
from app.numerics.precision import ulp_threshold
from app.schemas.analysis import COCEstimate, EfficiencyRow
from app.schemas.solver import IterationTrace

logger = logging.getLogger(__name__)

MIN_ITERATES = 4


def _resolvable_prefix(errors: List[mpf], scales: List[mpf]) -> List[mpf]:
    """Errors up to the first one the working precision cannot resolve."""
    kept = []
    for e, scale in zip(errors, scales):
        if e <= ulp_threshold(scale):
            break
        kept.append(e)
    return kept


def coc(
    trace: Union[IterationTrace, Sequence],
    root: Optional[mpf] = None,
    last: int = 1,
) -> COCEstimate:
    """
    rho = ln(e_{n+1}/e_n) / ln(e_n/e_{n-1}) on the last admissible triple.

    With `root` the errors are |x_n - root|; without it, successive differences
    |x_{n+1} - x_n| stand in and the estimate is flagged residual_based.
    Errors at or below the precision floor are treated as zero and dropped.
    `last` > 1 averages rho over that many trailing admissible triples.

    Raises InsufficientTrace with fewer than four usable iterates.
    """
    xs = trace.iterates() if isinstance(trace, IterationTrace) else [mpf(x) for x in trace]

    if root is not None:
        root = mpf(root)
        errors = [abs(x - root) for x in xs]
        errors = _resolvable_prefix(errors, [root] * len(errors))
        usable_iterates = len(errors)
    else:
        diffs = [abs(b - a) for a, b in zip(xs, xs[1:])]
        errors = _resolvable_prefix(diffs, xs)
        usable_iterates = len(errors) + 1 if errors else 0

    if usable_iterates < MIN_ITERATES:
        raise InsufficientTrace(f"need {MIN_ITERATES} usable iterates, have {usable_iterates}")

    rhos = []
    for n in range(len(errors) - 2, 0, -1):
        e_prev, e_n, e_next = errors[n - 1], errors[n], errors[n + 1]
        if e_prev == e_n or e_n == e_next:
            continue
        rhos.append(mpmath.log(e_next / e_n) / mpmath.log(e_n / e_prev))
        if len(rhos) == last:
            break
    if not rhos:
        raise InsufficientTrace("no admissible triple of distinct errors")

    rho = float(mpmath.fsum(rhos) / len(rhos))
    logger.debug(f"[ANALYSIS] COC {rho:.4f} from {len(rhos)} triple(s)")
    return COCEstimate(rho=rho, triples_used=len(rhos), residual_based=root is None)


def efficiency_index(order: float, evals: int) -> float:
    """order^(1/evals)."""
    if order <= 1:
        raise ValueError(f"order must exceed 1, got {order}")
    if evals < 1:
        raise ValueError(f"evals must be >= 1, got {evals}")
    return float(order) ** (1.0 / evals)


# (method, order, evaluations per iteration)
EFFICIENCY_METHODS = [
    ("newton", 2, 2),
    ("steffensen", 2, 2),
    ("om8", 8, 4),
    ("variant-m1", 5, 4),
    ("variant-m2", 7, 4),
    ("eighth order, five evaluations", 8, 5),
]


def efficiency_table() -> List[EfficiencyRow]:
    return [
        EfficiencyRow(method=name, order=order, evaluations=evals, index=efficiency_index(order, evals))
        for name, order, evals in EFFICIENCY_METHODS
    ]
