# app/numerics/problems/refine.py
"""
Reference-root refinement.

Published roots are truncated (1.19 for f3). Bisection on a sign-change
bracket gives a certified reference to any depth; findroot then polishes it
to the working precision for the 4096-digit order experiments.
"""
import logging
from typing import Tuple

import mpmath
from mpmath import mp, mpf

from app.numerics.exceptions import NoSignChange
from app.numerics.precision import working_precision

logger = logging.getLogger(__name__)

GUARD_DIGITS = 10


def bisect(func, lo: mpf, hi: mpf, width: mpf) -> mpf:
    """Plain bisection of `func` on [lo, hi] until the bracket is narrower than `width`."""
    f_lo, f_hi = func(lo), func(hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise NoSignChange(f"no sign change on [{mpmath.nstr(lo, 8)}, {mpmath.nstr(hi, 8)}]")

    while hi - lo > width:
        mid = (lo + hi) / 2
        f_mid = func(mid)
        if f_mid == 0:
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return (lo + hi) / 2


def refine_root(problem, bracket: Tuple, digits: int) -> mpf:
    """
    Bisect `problem` on `bracket` to width 10^-digits.

    The result is returned at the caller's precision; the bisection itself runs
    with a few guard digits beyond `digits`. Evaluations are not counted.
    """
    with working_precision(digits + GUARD_DIGITS):
        lo, hi = (mpf(v) for v in bracket)
        if lo > hi:
            lo, hi = hi, lo
        root = bisect(problem.value, lo, hi, mpf(f"1e-{digits}"))
    logger.debug(f"[PROBLEMS] {problem.name}: bisected to {digits} digits")
    return +root


def polish_root(problem, root: mpf, accurate_digits: int) -> mpf:
    """
    Polish a bisection root to the current working precision with mpmath's secant solver.

    `root` must already be good to `accurate_digits`; a polished value that moves
    further than that is rejected.
    """
    if problem.value(root) == 0:
        return root
    offset = mpf(10) ** (-(mp.dps // 4))
    try:
        polished = mpmath.findroot(problem.value, (root, root + offset), solver="secant", maxsteps=60)
    except (ValueError, ZeroDivisionError) as e:
        logger.warning(f"[PROBLEMS] {problem.name}: polishing failed ({e}), keeping bisection root")
        return root
    if abs(polished - root) > mpf(10) ** (-accurate_digits + GUARD_DIGITS):
        logger.warning(f"[PROBLEMS] {problem.name}: polished root drifted, keeping bisection root")
        return root
    return polished
