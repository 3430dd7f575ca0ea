"""
Runtime settings, read from the environment (prefix ELLIPTIC_MOMENTS_) and an optional .env file.
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Tunable limits for enumeration, Monte Carlo sampling and log-space evaluation."""

    model_config = SettingsConfigDict(env_prefix="ELLIPTIC_MOMENTS_", env_file=".env", extra="ignore")

    max_l: int = Field(24, ge=0, description="Longest word the exhaustive pairing enumeration accepts")
    workers: int = Field(1, ge=1, description="Process pool size for branch-partitioned census")
    mc_max_dim: int = Field(512, ge=1, description="Largest Monte Carlo matrix dimension")
    mc_default_dim: int = Field(300, ge=1)
    mc_default_samples: int = Field(100, ge=2)
    exact_log_limit: int = Field(
        500, ge=0, description="Largest block half-size evaluated from exact integer coefficients"
    )
    log_level: str = Field("INFO")


@lru_cache
def get_settings() -> Settings:
    return Settings()
