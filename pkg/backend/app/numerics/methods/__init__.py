from app.numerics.methods.solver import default_config, solve
from app.numerics.methods.steps import divided_difference, newton_step, om8_step, steffensen_step
from app.numerics.methods.weights import (
    G_PARTICULAR,
    H_PARTICULAR,
    REGISTERED_WEIGHTS,
    WEIGHT_PAIRS,
    SchemeConfig,
    WeightFn,
    g_particular,
    h_particular,
    om8_config,
    variant_config,
)

__all__ = [
    "default_config",
    "solve",
    "divided_difference",
    "newton_step",
    "om8_step",
    "steffensen_step",
    "G_PARTICULAR",
    "H_PARTICULAR",
    "REGISTERED_WEIGHTS",
    "WEIGHT_PAIRS",
    "SchemeConfig",
    "WeightFn",
    "g_particular",
    "h_particular",
    "om8_config",
    "variant_config",
]
