# app/schemas/basins.py
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, field_validator, model_validator

from app.schemas.solver import StepKind


class BasinConfig(BaseModel):
    """Parameters of one basins-of-attraction render"""

    polynomial: List[complex]  # coefficients, highest degree first
    region: Tuple[float, float, float, float] = (-2.0, 2.0, -2.0, 2.0)  # re_min, re_max, im_min, im_max
    width: int = 512
    height: int = 512
    max_iter: int = 100
    capture_tol: float = 1e-3
    method: StepKind = StepKind.OM8
    alpha: complex = 1.0
    m: int = 3
    weights: str = "particular"
    divergence_bound: float = 1e10
    label: Optional[str] = None  # polynomial token used in file names

    @field_validator("polynomial")
    @classmethod
    def _degree_two(cls, v):
        while v and v[0] == 0:
            v = v[1:]
        if len(v) < 3:
            raise ValueError("basin polynomial must have degree >= 2")
        return v

    @field_validator("width", "height")
    @classmethod
    def _grid_size(cls, v):
        if v < 16:
            raise ValueError(f"grid dimensions must be >= 16, got {v}")
        return v

    @field_validator("alpha")
    @classmethod
    def _alpha_nonzero(cls, v):
        if v == 0:
            raise ValueError("alpha must be non-zero")
        return v

    @field_validator("max_iter")
    @classmethod
    def _iterations(cls, v):
        if v < 1:
            raise ValueError("max_iter must be >= 1")
        return v

    @field_validator("capture_tol")
    @classmethod
    def _capture(cls, v):
        if v <= 0:
            raise ValueError("capture_tol must be positive")
        return v

    @model_validator(mode="after")
    def _region_area(self):
        re_min, re_max, im_min, im_max = self.region
        if not (re_max > re_min and im_max > im_min):
            raise ValueError(f"region {self.region} has zero area")
        return self


class BasinImage(BaseModel):
    """Per-pixel root index (-1 for none) and iterations used, row 0 at the top"""

    root_index: np.ndarray
    iterations: np.ndarray
    roots: np.ndarray
    max_iter: int

    class Config:
        arbitrary_types_allowed = True

    @property
    def height(self) -> int:
        return self.root_index.shape[0]

    @property
    def width(self) -> int:
        return self.root_index.shape[1]

    def class_counts(self) -> dict:
        labels, counts = np.unique(self.root_index, return_counts=True)
        return {int(k): int(c) for k, c in zip(labels, counts)}
