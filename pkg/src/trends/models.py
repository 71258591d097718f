"""
Trend and correlation records.
"""

from typing import List, Literal

from pydantic import BaseModel, Field, model_validator


class TrendPoint(BaseModel):
    """Group adoption figures for one version."""
    version: str
    group_count: int = Field(..., ge=0)
    p2g_package_count: int = Field(..., ge=0)
    total_package_count: int = Field(..., ge=0)
    ratio: float = Field(..., ge=0.0, le=1.0)


class TrendSummary(BaseModel):
    """Spread of one distribution's trend series."""
    distribution: str
    versions: List[str] = Field(default_factory=list)
    p2g_median: float = 0.0
    p2g_min: int = 0
    p2g_max: int = 0
    ratio_median: float = 0.0
    ratio_min: float = 0.0
    ratio_max: float = 0.0


class SpearmanResult(BaseModel):
    """Two-sided Spearman rank correlation."""
    rho: float = Field(..., ge=-1.0, le=1.0)
    p_value: float = Field(..., ge=0.0, le=1.0)
    n: int = Field(..., ge=3)
    method: Literal["exact", "t"]
    # names of the paired observations, when known
    labels: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_labels(self) -> "SpearmanResult":
        if self.labels and len(self.labels) != self.n:
            raise ValueError("labels must match the number of observations")
        return self
