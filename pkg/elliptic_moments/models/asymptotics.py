"""Parameters and derived quantities of the saddle-point estimate."""

import enum

from pydantic import BaseModel, ConfigDict, Field, field_validator


class AsymptoticRegime(enum.Enum):
    """Where the saddle sits relative to the width of its gaussian."""
    SADDLE = "saddle"
    CROSSOVER = "crossover"
    HALF_GAUSSIAN = "half_gaussian"


class AsymptoticParams(BaseModel):
    """Ray q = u/v, elliptic parameter ρ and scale v of the block moment P_{2u}^{2v}."""

    model_config = ConfigDict(frozen=True)

    q: float = Field(..., ge=1.0)
    rho: float = Field(..., gt=-1.0, lt=1.0, description="0 < |ρ| < 1; negative ρ carries the sign (-1)^{u+v}")
    v: int = Field(..., ge=1)

    @field_validator("rho")
    @classmethod
    def _check_nonzero(cls, value: float) -> float:
        if value == 0.0:
            raise ValueError("ρ = 0 has no saddle; the rescaled moment is δ_{uv}")
        return value

    @property
    def u(self) -> int:
        return round(self.q * self.v)


class AsymptoticSummary(BaseModel):
    model_config = ConfigDict(frozen=True)

    params: AsymptoticParams
    saddle: float
    rate: float
    curvature: float
    h_value: float
    psi: float
    phi: float
    phi_hat: float
    estimate: float
    regime: AsymptoticRegime
