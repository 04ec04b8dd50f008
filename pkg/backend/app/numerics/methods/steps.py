# app/numerics/methods/steps.py
"""
One iteration of each method.

Every kernel takes f(x) from the caller when it is already known (the solve
loop evaluates f at each new iterate for its stopping test), so the three-step
scheme spends exactly four evaluations per iteration: f(x), f(z), f(y), f(w).
`evals_used` always includes f(x).
"""
import logging
from typing import Callable, Optional

import mpmath
from mpmath import mpf

from app.numerics.exceptions import DegenerateNodes, ZeroDenominator, ZeroDerivative
from app.numerics.methods.weights import SchemeConfig
from app.numerics.precision import ulp_threshold
from app.schemas.solver import StepOutcome

logger = logging.getLogger(__name__)

Func = Callable[[mpf], mpf]


def divided_difference(
    f: Func,
    a: mpf,
    b: mpf,
    fa: Optional[mpf] = None,
    fb: Optional[mpf] = None,
    which: str = "f[a,b]",
) -> mpf:
    """
    f[a,b] = (f(a) - f(b)) / (a - b).

    Nodes are put in canonical order before subtracting, so f[a,b] == f[b,a]
    bit for bit. Known values are reused; missing ones are evaluated (and
    counted) here.

    Raises DegenerateNodes when |a - b| <= ulp_threshold(max(|a|, |b|)).
    """
    if b > a:
        a, b, fa, fb = b, a, fb, fa
    gap = a - b
    if gap <= ulp_threshold(max(abs(a), abs(b))):
        raise DegenerateNodes(which, gap)
    if fa is None:
        fa = f(a)
    if fb is None:
        fb = f(b)
    return (fa - fb) / gap


def newton_step(f: Func, fprime: Func, x: mpf, fx: Optional[mpf] = None) -> StepOutcome:
    """x - f(x)/f'(x)."""
    if fx is None:
        fx = f(x)
    d = fprime(x)
    if d == 0:
        raise ZeroDerivative(f"f'({mpmath.nstr(x, 12)}) = 0")
    return StepOutcome(next_x=x - fx / d, evals_used=2)


def steffensen_step(f: Func, x: mpf, fx: Optional[mpf] = None) -> StepOutcome:
    """x - f(x)/f[x, x + f(x)]."""
    if fx is None:
        fx = f(x)
    which = "f[x,x+f(x)]"
    if fx == 0:
        return StepOutcome(next_x=x, evals_used=1, degenerate=which, next_fx=fx)
    w = x + fx
    if abs(w - x) <= ulp_threshold(max(abs(w), abs(x))):
        logger.debug(f"[SOLVE] steffensen: degenerate divided difference {which}")
        return StepOutcome(next_x=x, evals_used=1, degenerate=which, next_fx=fx)
    fw = f(w)
    dd = divided_difference(f, w, x, fw, fx, which=which)
    if dd == 0:
        raise ZeroDenominator(which)
    return StepOutcome(next_x=x - fx / dd, evals_used=2)


def om8_step(f: Func, x: mpf, cfg: SchemeConfig, fx: Optional[mpf] = None) -> StepOutcome:
    """
    One iteration of the three-step scheme:

        z  = x + alpha f(x)^m
        y  = x - f(x)/f[z,x]
        w  = y - G(t1) f(y)/f[x,y],          t1 = f(y)/f(x)
        x' = w - H(t) f(w)/f[w,y],           t = f[w,y]/f[w,x]  (or t1 for the variants)

    A collapsed divided difference ends the step at the latest point with the
    outcome flagged; an exact zero of f ends it at that point.
    """
    if fx is None:
        fx = f(x)
    evals = 1
    if fx == 0:
        return StepOutcome(next_x=x, evals_used=evals, degenerate="f[z,x]", next_fx=fx)

    # latest point reached and its value, for the degenerate exit
    last, f_last = x, fx
    try:
        z = x + cfg.alpha * fx**cfg.m
        if abs(z - x) <= ulp_threshold(max(abs(z), abs(x))):
            raise DegenerateNodes("f[z,x]", z - x)
        fz = f(z)
        evals += 1
        d_zx = divided_difference(f, z, x, fz, fx, which="f[z,x]")
        if d_zx == 0:
            raise ZeroDenominator("f[z,x]")
        y = x - fx / d_zx

        fy = f(y)
        evals += 1
        last, f_last = y, fy
        if fy == 0:
            return StepOutcome(next_x=y, evals_used=evals, degenerate="f[w,y]", next_fx=fy)
        t1 = fy / fx
        d_xy = divided_difference(f, x, y, fx, fy, which="f[x,y]")
        if d_xy == 0:
            raise ZeroDenominator("f[x,y]")
        w = y - cfg.G(t1) * fy / d_xy

        fw = f(w)
        evals += 1
        last, f_last = w, fw
        if fw == 0:
            return StepOutcome(next_x=w, evals_used=evals, next_fx=fw)
        d_wy = divided_difference(f, w, y, fw, fy, which="f[w,y]")
        if d_wy == 0:
            raise ZeroDenominator("f[w,y]")
        if cfg.third_ratio == "t2":
            d_wx = divided_difference(f, w, x, fw, fx, which="f[w,x]")
            if d_wx == 0:
                raise ZeroDenominator("f[w,x]")
            t = d_wy / d_wx
        else:
            t = t1
        next_x = w - cfg.H(t) * fw / d_wy
    except DegenerateNodes as e:
        logger.debug(f"[SOLVE] om8: {e}")
        return StepOutcome(next_x=last, evals_used=evals, degenerate=e.which, next_fx=f_last)

    return StepOutcome(next_x=next_x, evals_used=evals)
