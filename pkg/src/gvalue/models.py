"""
GValue records: size distribution, per-group report, snapshot scores.
"""

from typing import Annotated, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from ..config.constants import ReportFlag
from ..trends.models import SpearmanResult

UnitScore = Annotated[float, Field(ge=0.0, le=1.0)]


class DistributionStats(BaseModel):
    """Mean and sample deviation of group sizes, with the accepted size range."""
    mean: float
    stddev: float = Field(..., ge=0.0)
    lower: float
    upper: float

    @model_validator(mode="after")
    def validate_range(self) -> "DistributionStats":
        if not self.lower <= self.mean <= self.upper:
            raise ValueError("distribution range must contain the mean")
        return self

    def contains(self, size: int) -> bool:
        """Inclusive range check."""
        return self.lower <= size <= self.upper


class GValueReport(BaseModel):
    """Sub-metrics and fused score of one group.

    The differentiation fields are None when the snapshot has fewer than two
    groups; gvalue then averages the three remaining components.
    """
    group_id: str
    com: UnitScore
    rel: UnitScore
    ndif: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    ddif: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    pdif: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    dif: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    dist: int = Field(..., ge=0, le=1)
    gvalue: UnitScore
    flags: List[ReportFlag] = Field(default_factory=list)

    def has_flag(self, flag: ReportFlag) -> bool:
        return flag in self.flags


class SnapshotScores(BaseModel):
    """Every group's report plus the low-quality subset."""
    distribution: str
    version: str
    threshold: float = Field(..., ge=0.0, le=1.0)
    stats: Optional[DistributionStats] = None
    reports: List[GValueReport] = Field(default_factory=list)
    low_quality: List[GValueReport] = Field(default_factory=list)


class ScoreSummary(BaseModel):
    """Headline figures of a scored snapshot."""
    group_count: int = Field(..., ge=0)
    mean_gvalue: float = Field(..., ge=0.0, le=1.0)
    threshold: float = Field(..., ge=0.0, le=1.0)
    low_quality_count: int = Field(..., ge=0)
    low_quality_share: float = Field(..., ge=0.0, le=1.0)
    # ReportFlag value -> number of groups carrying it
    flag_counts: Dict[str, int] = Field(default_factory=dict)


class AspectValidation(BaseModel):
    """Manual-score correlation of the fused score and of each rated aspect."""
    gvalue: SpearmanResult
    # aspect (com, rel, dif, dist) -> correlation, for rated aspects with 3+ pairs
    aspects: Dict[str, SpearmanResult] = Field(default_factory=dict)
