# app/schemas/analysis.py
from typing import List, Optional

from mpmath import mpf
from pydantic import BaseModel


class COCEstimate(BaseModel):
    """Computational order of convergence from the last admissible triple"""

    rho: float
    triples_used: int
    residual_based: bool = False


class ConditionCheck(BaseModel):
    """One derivative order of a weight function measured at its expansion point"""

    order: int
    expected: Optional[float] = None  # None: only finiteness is required
    measured: float
    passed: bool

    @property
    def label(self) -> str:
        return f"d^{self.order}" if self.order else "value"


class ErrorConstantProbe(BaseModel):
    """Predicted versus observed asymptotic error constant of the particular method"""

    c2: mpf
    c3: mpf
    c4: mpf
    fprime_alpha: mpf
    predicted_C: mpf
    observed_ratio: mpf
    ratios: List[mpf] = []  # e_{n+1}/e_n^8 for every resolvable pair, oldest first

    class Config:
        arbitrary_types_allowed = True


class EfficiencyRow(BaseModel):
    method: str
    order: float
    evaluations: int
    index: float
