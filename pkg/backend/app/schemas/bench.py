# app/schemas/bench.py
from typing import Optional

from pydantic import BaseModel

from app.schemas.solver import SolveReport, SolveStatus


class BenchCase(BaseModel):
    """One (function, initial guess) row of the OM8 column, transcribed as printed"""

    problem: str
    x0: str
    expected_status: SolveStatus = SolveStatus.CONVERGED
    expected_it: Optional[int] = None
    expected_tne: Optional[int] = None
    expected_residual: Optional[str] = None  # short form, e.g. "0.4e-80"


class BenchResult(BaseModel):
    case: BenchCase
    report: SolveReport
    it_match: bool
    tne_match: bool
    residual_exponent_delta: Optional[int] = None  # None unless both residuals are known

    @property
    def residual_match(self) -> bool:
        return self.residual_exponent_delta is not None and self.residual_exponent_delta <= 10
