# app/numerics/analysis/error_constant.py
"""
Asymptotic error constant of the particular eighth-order method.

The predicted constant is

    C = -c2 c3 (-c3^2 + c2 (f'(a)^3 c2 + 4 c2^3 + c4))

with c_k = f^(k)(a) / (k! f'(a)). Its normalization is ambiguous, so the probe
reports predicted and observed constants side by side and asserts nothing.
"""
import logging
from typing import Tuple

import mpmath
from mpmath import mpf

from app.numerics.exceptions import InsufficientTrace, NumericalNoise
from app.numerics.precision import ulp_threshold
from app.schemas.analysis import ErrorConstantProbe
from app.schemas.solver import IterationTrace

logger = logging.getLogger(__name__)

STENCIL_STEP = mpf("1e-50")


def taylor_coefficients(f, root: mpf, h: mpf = None) -> Tuple[mpf, mpf, mpf, mpf]:
    """(c2, c3, c4, f'(root)) by central finite differences. Evaluations are not counted."""
    func = getattr(f, "value", f)
    h = mpf(h) if h is not None else STENCIL_STEP
    derivs = [mpmath.diff(func, root, k, h=h) for k in range(1, 5)]
    fprime = derivs[0]
    if fprime == 0:
        raise NumericalNoise("f'(root) vanishes; the root is not simple")
    c2, c3, c4 = (derivs[k - 1] / (mpmath.factorial(k) * fprime) for k in (2, 3, 4))
    return c2, c3, c4, fprime


def predicted_error_constant(c2: mpf, c3: mpf, c4: mpf, fprime: mpf) -> mpf:
    return -c2 * c3 * (-c3**2 + c2 * (fprime**3 * c2 + 4 * c2**3 + c4))


def error_constant_probe(f, root: mpf, trace: IterationTrace, order: int = 8) -> ErrorConstantProbe:
    """
    Compare e_{n+1}/e_n^order along `trace` with the predicted constant.

    Errors are signed (x_n - root). Only pairs whose e_{n+1} the working
    precision resolves contribute a ratio.
    """
    xs = trace.iterates()
    if len(xs) < 3:
        raise InsufficientTrace(f"need 3 iterates, have {len(xs)}")

    root = mpf(root)
    floor = ulp_threshold(root)
    errors = [x - root for x in xs]
    ratios = []
    for e_n, e_next in zip(errors, errors[1:]):
        if abs(e_n) <= floor or abs(e_next) <= floor:
            break
        ratios.append(e_next / e_n**order)
    if not ratios:
        raise NumericalNoise("no consecutive errors above the precision floor")

    c2, c3, c4, fprime = taylor_coefficients(f, root)
    predicted = predicted_error_constant(c2, c3, c4, fprime)
    observed = ratios[-1]
    logger.info(
        f"[ANALYSIS] error constant: predicted {mpmath.nstr(predicted, 8)}, observed {mpmath.nstr(observed, 8)}"
    )
    return ErrorConstantProbe(
        c2=c2,
        c3=c3,
        c4=c4,
        fprime_alpha=fprime,
        predicted_C=predicted,
        observed_ratio=observed,
        ratios=ratios,
    )
