"""
Validated run configuration assembled from parsed arguments and settings.
"""

from argparse import Namespace
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

from ..config.constants import LogLevel, ReportFormat
from ..config.settings import Settings
from ..errors import UsageError


class RunConfig(BaseModel):
    """Everything one CLI invocation needs."""
    command: str
    inputs: List[str] = Field(default_factory=list)
    output: Optional[str] = None
    format: ReportFormat = ReportFormat.JSON
    log: LogLevel = LogLevel.WARN

    # ingest
    comps: Optional[str] = None
    primary: Optional[str] = None
    dist: Optional[str] = None
    version: Optional[str] = None

    # optional extra inputs
    prev: Optional[str] = None
    popularity: Optional[str] = None

    # scoring
    threshold: float = Field(..., ge=0.0, le=1.0)
    workers: int = Field(..., ge=1)

    # change patterns
    rename_threshold: float = Field(..., ge=0.0, le=1.0)
    split_coverage: float = Field(..., ge=0.0, le=1.0)

    # topics
    k_min: int = Field(..., ge=1)
    k_max: int = Field(..., ge=1)
    alpha: Optional[float] = Field(default=None, gt=0.0)
    beta: float = Field(..., gt=0.0)
    iterations: int = Field(..., ge=1)
    top_n: int = Field(..., ge=1)
    seed: int

    # keywords
    top_k: int = Field(..., ge=1)

    @model_validator(mode="after")
    def validate_topic_range(self) -> "RunConfig":
        if self.k_min > self.k_max:
            raise ValueError(f"--kmin ({self.k_min}) must not exceed --kmax ({self.k_max})")
        return self

    @classmethod
    def from_namespace(cls, args: Namespace, settings: Settings) -> "RunConfig":
        """Merge parsed arguments over settings defaults.

        Raises:
            UsageError: a value is out of range
        """

        def pick(name: str, default):
            value = getattr(args, name, None)
            return default if value is None else value

        try:
            return cls(
                command=args.command,
                inputs=list(getattr(args, "inputs", None) or []),
                output=getattr(args, "output", None),
                format=pick("format", _format_from_suffix(getattr(args, "output", None))),
                log=pick("log", settings.log),
                comps=getattr(args, "comps", None),
                primary=getattr(args, "primary", None),
                dist=getattr(args, "dist", None),
                version=getattr(args, "version", None),
                prev=getattr(args, "prev", None),
                popularity=getattr(args, "popularity", None),
                threshold=pick("threshold", settings.low_quality_threshold),
                workers=pick("workers", settings.score_workers),
                rename_threshold=pick("rename_threshold", settings.rename_threshold),
                split_coverage=pick("split_coverage", settings.split_coverage),
                k_min=pick("kmin", settings.topic_k_min),
                k_max=pick("kmax", settings.topic_k_max),
                alpha=pick("alpha", settings.lda_alpha),
                beta=pick("beta", settings.lda_beta),
                iterations=pick("iterations", settings.lda_iterations),
                top_n=pick("top_n", settings.lda_top_n),
                seed=pick("seed", settings.seed),
                top_k=pick("top_k", settings.keyword_top_k),
            )
        except ValidationError as e:
            problems = "; ".join(
                f"{'.'.join(str(p) for p in error['loc']) or 'arguments'}: {error['msg']}"
                for error in e.errors()
            )
            raise UsageError(problems) from e


def _format_from_suffix(output: Optional[str]) -> ReportFormat:
    """Report format implied by an -o path; JSON unless it ends in .csv."""
    if output and Path(output).suffix.lower() == ".csv":
        return ReportFormat.CSV
    return ReportFormat.JSON
