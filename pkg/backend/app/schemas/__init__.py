# app/schemas/__init__.py
from app.schemas.analysis import COCEstimate, ConditionCheck, EfficiencyRow, ErrorConstantProbe
from app.schemas.basins import BasinConfig, BasinImage
from app.schemas.bench import BenchCase, BenchResult
from app.schemas.problem import Domain, ProblemEntry
from app.schemas.run import RunConfig
from app.schemas.solver import (
    IterationRecord,
    IterationTrace,
    SolveReport,
    SolveStatus,
    StepKind,
    StepOutcome,
)

__all__ = [
    "COCEstimate",
    "ConditionCheck",
    "EfficiencyRow",
    "ErrorConstantProbe",
    "BasinConfig",
    "BasinImage",
    "BenchCase",
    "BenchResult",
    "Domain",
    "ProblemEntry",
    "RunConfig",
    "IterationRecord",
    "IterationTrace",
    "SolveReport",
    "SolveStatus",
    "StepKind",
    "StepOutcome",
]
