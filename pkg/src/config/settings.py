"""
Application Settings
"""

from functools import lru_cache
from typing import Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .constants import (
    DEFAULT_KEYWORD_TOP_K,
    DEFAULT_LDA_BETA,
    DEFAULT_LDA_ITERATIONS,
    DEFAULT_LDA_TOP_N,
    DEFAULT_LOW_QUALITY_THRESHOLD,
    DEFAULT_RENAME_THRESHOLD,
    DEFAULT_SEED,
    DEFAULT_SPLIT_COVERAGE,
    LogLevel,
)


class Settings(BaseSettings):
    """Application settings"""

    model_config = SettingsConfigDict(
        env_prefix="P2G_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Logging (P2G_LOG)
    log: LogLevel = Field(default=LogLevel.WARN)

    # Scoring
    low_quality_threshold: float = Field(default=DEFAULT_LOW_QUALITY_THRESHOLD, ge=0.0, le=1.0)
    score_workers: int = Field(default=4, ge=1)

    # Change pattern heuristics
    rename_threshold: float = Field(default=DEFAULT_RENAME_THRESHOLD, ge=0.0, le=1.0)
    split_coverage: float = Field(default=DEFAULT_SPLIT_COVERAGE, ge=0.0, le=1.0)

    # Topic modelling
    lda_alpha: Optional[float] = Field(default=None, gt=0.0, description="None means 50/K")
    lda_beta: float = Field(default=DEFAULT_LDA_BETA, gt=0.0)
    lda_iterations: int = Field(default=DEFAULT_LDA_ITERATIONS, ge=1)
    lda_top_n: int = Field(default=DEFAULT_LDA_TOP_N, ge=1)
    topic_k_min: int = Field(default=1, ge=1)
    topic_k_max: int = Field(default=10, ge=1)
    seed: int = Field(default=DEFAULT_SEED)

    # Keywords
    keyword_top_k: int = Field(default=DEFAULT_KEYWORD_TOP_K, ge=1)

    # Mirror fetching
    fetch_timeout_seconds: float = Field(default=30.0, gt=0.0)
    fetch_max_attempts: int = Field(default=3, ge=1)

    @field_validator("log", mode="before")
    @classmethod
    def normalize_log(cls, v):
        """Accept P2G_LOG in any case."""
        if isinstance(v, str):
            return v.strip().lower()
        return v


@lru_cache
def get_settings() -> Settings:
    """Get application settings"""
    return Settings()
