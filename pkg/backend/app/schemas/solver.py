# app/schemas/solver.py
from enum import Enum
from typing import List, Optional, Sequence

from mpmath import mpf
from pydantic import BaseModel

from app.schemas.analysis import COCEstimate


class SolveStatus(str, Enum):
    """Terminal status of a solve, with the short DIV. / NC / I labels used in the benchmark table"""

    CONVERGED = "Converged"
    DIVERGENT = "Divergent"
    NOT_CONVERGED = "NotConverged"
    INDETERMINATE = "Indeterminate"

    @property
    def short_label(self) -> str:
        return {
            SolveStatus.CONVERGED: "",
            SolveStatus.DIVERGENT: "DIV.",
            SolveStatus.NOT_CONVERGED: "NC",
            SolveStatus.INDETERMINATE: "I",
        }[self]


class StepKind(str, Enum):
    NEWTON = "newton"
    STEFFENSEN = "steffensen"
    OM8 = "om8"
    VARIANT_M1 = "variant-m1"
    VARIANT_M2 = "variant-m2"


class StepOutcome(BaseModel):
    """Result of one iteration of any step kind"""

    next_x: mpf
    evals_used: int
    degenerate: Optional[str] = None  # name of the collapsed divided difference
    next_fx: Optional[mpf] = None  # f(next_x) when the step already knows it

    class Config:
        arbitrary_types_allowed = True


class IterationRecord(BaseModel):
    iteration: int
    x: mpf
    residual: Optional[mpf] = None  # |f(x)|
    evaluations: int = 0  # cumulative

    class Config:
        arbitrary_types_allowed = True


class IterationTrace(BaseModel):
    """Ordered per-iteration records, iterate 0 first"""

    records: List[IterationRecord] = []

    class Config:
        arbitrary_types_allowed = True

    def append(self, record: IterationRecord) -> None:
        self.records.append(record)

    def iterates(self) -> List[mpf]:
        return [r.x for r in self.records]

    def residuals(self) -> List[Optional[mpf]]:
        return [r.residual for r in self.records]

    def __len__(self) -> int:
        return len(self.records)

    @classmethod
    def from_iterates(cls, xs: Sequence) -> "IterationTrace":
        return cls(records=[IterationRecord(iteration=i, x=mpf(x)) for i, x in enumerate(xs)])


class SolveReport(BaseModel):
    """Outcome of methods.solver.solve"""

    problem: str
    method: StepKind
    x0: str
    precision_digits: int
    status: SolveStatus
    iterations: int  # IT
    evaluations: int  # TNE
    x: mpf  # last iterate
    residual: mpf  # |f(x)|
    tolerance: mpf
    note: Optional[str] = None
    coc: Optional[COCEstimate] = None

    class Config:
        arbitrary_types_allowed = True

    @property
    def converged(self) -> bool:
        return self.status == SolveStatus.CONVERGED
