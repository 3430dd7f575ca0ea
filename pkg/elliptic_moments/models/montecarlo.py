"""Sampled matrices and Monte Carlo estimates."""

from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class GoeMatrix(BaseModel):
    """Real symmetric N×N sample with off-diagonal variance 1/N and diagonal variance 2/N."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dim: int = Field(..., ge=1)
    entries: np.ndarray


class GeeMatrix(BaseModel):
    """Complex N×N sample X = √((1+ρ)/2) W1 + i √((1-ρ)/2) W2."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dim: int = Field(..., ge=1)
    rho: float = Field(..., ge=-1.0, le=1.0)
    entries: np.ndarray


class EstimateResult(BaseModel):
    """Average of tr(word)/N over independent samples; stderr is sample std / √samples."""

    model_config = ConfigDict(frozen=True)

    word: str
    rho: float
    dim: int
    mean: float
    stderr: float
    imag_mean: float
    imag_stderr: float
    samples: int
    seed: int


class ValidationOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    estimate: EstimateResult
    exact: float
    tolerance: float
    z: float
    passed: bool
    exact_text: Optional[str] = None
