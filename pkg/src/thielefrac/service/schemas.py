"""Request/response models for the approximation service."""

import math
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


def _clean(v):
    """JSON has no inf/nan; report those as null in numeric summary fields."""
    v = float(v)
    return v if math.isfinite(v) else None


class FractionModel(BaseModel):
    """Wire form of a continued fraction: coefficients `a`, nodes `z`."""

    a: List[float]
    z: List[float]


class InterpolateRequest(BaseModel):
    xs: List[float]
    fs: List[float]
    tol: float = 5e-15
    max_terms: Optional[int] = Field(default=None, ge=1)


class InterpolateResponse(BaseModel):
    fraction: FractionModel
    points_used: int
    termination: str
    final_max_residual: Optional[float]
    node_residual_2norm: Optional[float]
    node_residual_max: Optional[float]


class GridSpec(BaseModel):
    a: float
    b: float
    m: int = Field(ge=2)


class EvaluateRequest(BaseModel):
    fraction: FractionModel
    points: Optional[List[float]] = None
    grid: Optional[GridSpec] = None

    @model_validator(mode="after")
    def _one_source(self):
        if (self.points is None) == (self.grid is None):
            raise ValueError("provide exactly one of points or grid")
        return self


class EvaluateResponse(BaseModel):
    xs: List[float]
    # decimal strings so that inf/-inf/nan pole values survive JSON
    values: List[str]


class ExperimentRequest(BaseModel):
    name: str
    n_min: Optional[int] = None
    n_max: Optional[int] = None
    grid_size: Optional[int] = None
    smax: Optional[float] = None
    t: Optional[float] = None
    tol: Optional[float] = None
    max_iter: Optional[int] = None


class ExperimentRowModel(BaseModel):
    n: int
    max_interval_error: float
    node_residual_2norm: float
    points_used: int
    poles_in_interval: bool
    runtime_ms: float
    asymptote: float


class MinimaxModel(BaseModel):
    fraction: FractionModel
    leveled_error: float
    level_ratio: float
    iterations: int
    converged: bool
    degenerate: bool
    equioscillations: int
    alternating: bool
    trace: List[Tuple[float, float]]


class ExperimentResponse(BaseModel):
    name: str
    rows: Optional[List[ExperimentRowModel]] = None
    minimax: Optional[MinimaxModel] = None


class NodesResponse(BaseModel):
    kind: str
    points: List[float]
