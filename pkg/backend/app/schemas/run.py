# app/schemas/run.py
from typing import List, Optional

from pydantic import BaseModel, field_validator

from app.schemas.solver import StepKind


class RunConfig(BaseModel):
    """Resolved options of one CLI invocation: config file, then flags, then settings"""

    precision_digits: int
    tolerance: str
    max_iter: int
    method: StepKind = StepKind.OM8
    methods: List[StepKind] = []  # basins: one image per method
    problem: Optional[str] = None
    expr: Optional[str] = None
    x0: Optional[str] = None
    alpha: str = "1"
    m: Optional[int] = None
    weights: str = "particular"
    coc: bool = False
    trace: bool = False
    format: str = "markdown"
    out: Optional[str] = None
    poly: List[str] = []
    grid: int = 512
    region: str = "-2,2,-2,2"
    max_iter_basin: int = 100
    capture_tol: float = 1e-3
    workers: Optional[int] = None

    @field_validator("precision_digits")
    @classmethod
    def _digits(cls, v):
        if v < 50:
            raise ValueError(f"precision must be at least 50 digits, got {v}")
        return v

    @field_validator("max_iter", "max_iter_basin")
    @classmethod
    def _positive(cls, v):
        if v < 1:
            raise ValueError("iteration caps must be >= 1")
        return v

    @field_validator("format")
    @classmethod
    def _format(cls, v):
        if v not in ("csv", "markdown"):
            raise ValueError(f"format must be csv or markdown, got {v!r}")
        return v
