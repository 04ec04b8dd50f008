from app.numerics.analysis.conditions import check_weight_conditions, conditions_hold, measure_derivatives
from app.numerics.analysis.convergence import coc, efficiency_index, efficiency_table
from app.numerics.analysis.error_constant import (
    error_constant_probe,
    predicted_error_constant,
    taylor_coefficients,
)

__all__ = [
    "check_weight_conditions",
    "conditions_hold",
    "measure_derivatives",
    "coc",
    "efficiency_index",
    "efficiency_table",
    "error_constant_probe",
    "predicted_error_constant",
    "taylor_coefficients",
]
