# app/numerics/methods/weights.py
"""
Weight functions and scheme configuration for the three-step family.

The second step is weighted by G(t1), t1 = f(y)/f(x), expanded about 0; the
third by H(t2), t2 = f[w,y]/f[w,x], expanded about 1. Eighth order holds for
any pair with

    G(0) = 1, G'(0) = 1, |G'''(0)| finite
    H(1) = 1, H'(1) = 0, H''(1) = 2, H'''(1) = -12, |H''''(1)| finite

and any alpha != 0, m >= 3. The m = 1 and m = 2 variants keep G but weight the
third step with H(t1) = 1 + t1^2 (anchored at 0), giving orders 5 and 7.

`formula` is plain arithmetic so the basin renderer can apply it to numpy
complex arrays; calling a WeightFn adds the BigScalar pole guard.
"""
import logging
from typing import Any, Callable, Dict, List, Optional, Tuple

from mpmath import mpf
from pydantic import BaseModel, field_validator

from app.numerics.exceptions import PoleError
from app.numerics.precision import ulp_threshold

logger = logging.getLogger(__name__)


def g_particular(t: mpf) -> mpf:
    """G(t) = (1 - 2t)/(1 - 3t). Raises PoleError at t = 1/3."""
    den = 1 - 3 * t
    if abs(den) <= ulp_threshold(1):
        raise PoleError(f"G evaluated at its pole t = 1/3 (t = {t})")
    return (1 - 2 * t) / den


def h_particular(t: mpf) -> mpf:
    """H(t) = 4 - 8t + 7t^2 - 2t^3."""
    return 4 - 8 * t + 7 * t**2 - 2 * t**3


def h_variant(t: mpf) -> mpf:
    return 1 + t**2


def g_linear(t: mpf) -> mpf:
    return 1 + t


def h_quartic(t: mpf) -> mpf:
    """H(t) = 1 + (t-1)^2 - 2(t-1)^3 + (t-1)^4, same conditions as h_particular but H''''(1) = 24."""
    s = t - 1
    return 1 + s**2 - 2 * s**3 + s**4


class WeightFn(BaseModel):
    """A G- or H-type weight with the Taylor conditions it must satisfy"""

    name: str
    kind: str  # "G" or "H"
    formula: Callable[[Any], Any]
    expansion_point: int
    conditions: List[Tuple[int, float]]  # (derivative order, required value)
    finite_orders: List[int] = []  # orders that only need to be finite
    guarded: Optional[Callable[[mpf], mpf]] = None

    class Config:
        arbitrary_types_allowed = True

    def __call__(self, t):
        if self.guarded is not None:
            return self.guarded(t)
        return self.formula(t)

    def with_conditions(self, conditions: List[Tuple[int, float]]) -> "WeightFn":
        return self.model_copy(update={"conditions": conditions})


G_CONDITIONS = [(0, 1), (1, 1)]
H_CONDITIONS = [(0, 1), (1, 0), (2, 2), (3, -12)]
# Variant third step: H(0)=1, H'(0)=0, H''(0)=2
H_VARIANT_CONDITIONS = [(0, 1), (1, 0), (2, 2)]

G_PARTICULAR = WeightFn(
    name="g_particular",
    kind="G",
    formula=lambda t: (1 - 2 * t) / (1 - 3 * t),
    guarded=g_particular,
    expansion_point=0,
    conditions=G_CONDITIONS,
    finite_orders=[3],
)

H_PARTICULAR = WeightFn(
    name="h_particular",
    kind="H",
    formula=h_particular,
    expansion_point=1,
    conditions=H_CONDITIONS,
    finite_orders=[4],
)

G_LINEAR = WeightFn(
    name="g_linear",
    kind="G",
    formula=g_linear,
    expansion_point=0,
    conditions=G_CONDITIONS,
    finite_orders=[3],
)

H_QUARTIC = WeightFn(
    name="h_quartic",
    kind="H",
    formula=h_quartic,
    expansion_point=1,
    conditions=H_CONDITIONS,
    finite_orders=[4],
)

H_VARIANT = WeightFn(
    name="h_variant",
    kind="H",
    formula=h_variant,
    expansion_point=0,
    conditions=H_VARIANT_CONDITIONS,
)

WEIGHT_PAIRS: Dict[str, Tuple[WeightFn, WeightFn]] = {
    "particular": (G_PARTICULAR, H_PARTICULAR),
    "alternate": (G_LINEAR, H_QUARTIC),
}

REGISTERED_WEIGHTS: List[WeightFn] = [G_PARTICULAR, H_PARTICULAR, G_LINEAR, H_QUARTIC, H_VARIANT]


class SchemeConfig(BaseModel):
    """
    Parameters of the three-step scheme.

    third_ratio selects the argument of H: "t2" = f[w,y]/f[w,x] for the
    eighth-order family, "t1" = f(y)/f(x) for the m = 1, 2 variants.
    """

    alpha: mpf = mpf(1)
    m: int = 3
    G: WeightFn = G_PARTICULAR
    H: WeightFn = H_PARTICULAR
    third_ratio: str = "t2"

    class Config:
        arbitrary_types_allowed = True

    @field_validator("alpha", mode="before")
    @classmethod
    def _alpha_nonzero(cls, v):
        v = mpf(v)
        if v == 0:
            raise ValueError("alpha must be nonzero")
        return v

    @field_validator("m")
    @classmethod
    def _m_positive(cls, v):
        if v < 1:
            raise ValueError(f"m must be >= 1, got {v}")
        return v

    @field_validator("third_ratio")
    @classmethod
    def _known_ratio(cls, v):
        if v not in ("t1", "t2"):
            raise ValueError(f"third_ratio must be 't1' or 't2', got {v!r}")
        return v

    @property
    def claims_eighth_order(self) -> bool:
        return self.third_ratio == "t2" and self.m >= 3


def om8_config(alpha="1", m: int = 3, weights: str = "particular") -> SchemeConfig:
    """The eighth-order scheme with a registered weight pair."""
    if weights not in WEIGHT_PAIRS:
        raise ValueError(f"unknown weight pair '{weights}' (choose from {', '.join(WEIGHT_PAIRS)})")
    G, H = WEIGHT_PAIRS[weights]
    cfg = SchemeConfig(alpha=alpha, m=m, G=G, H=H, third_ratio="t2")
    if m < 3:
        logger.warning(f"[SOLVE] m = {m} < 3: eighth order is not claimed for this exponent")
    return cfg


def variant_config(m: int, alpha="1") -> SchemeConfig:
    """Fifth- (m=1) or seventh-order (m=2) construction variant."""
    if m not in (1, 2):
        raise ValueError(f"construction variants exist for m = 1, 2 only, got {m}")
    return SchemeConfig(alpha=alpha, m=m, G=G_PARTICULAR, H=H_VARIANT, third_ratio="t1")
