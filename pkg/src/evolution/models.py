"""
Records describing how groups change between consecutive versions.
"""

from typing import List

from pydantic import BaseModel, Field, model_validator

from ..config.constants import ChangePattern
from ..ingest.models import GroupDef


class GroupDiff(BaseModel):
    """Groups added, removed and retained between two snapshots (by id)."""
    prev_version: str = ""
    curr_version: str = ""
    added: List[GroupDef] = Field(default_factory=list)
    removed: List[GroupDef] = Field(default_factory=list)
    retained: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_partition(self) -> "GroupDiff":
        added = {group.id for group in self.added}
        removed = {group.id for group in self.removed}
        retained = set(self.retained)
        if added & removed or added & retained or removed & retained:
            raise ValueError("added, removed and retained ids must be disjoint")
        return self

    def added_ids(self) -> List[str]:
        return [group.id for group in self.added]

    def removed_ids(self) -> List[str]:
        return [group.id for group in self.removed]


class FlowReport(BaseModel):
    """Package flow into and out of groups between two snapshots.

    s1: newly grouped, already in the previous universe
    s2: newly grouped, new to the universe
    o1: no longer grouped, still in the current universe
    o2: no longer grouped, gone from the universe
    """
    prev_version: str = ""
    curr_version: str = ""
    s1: int = Field(..., ge=0)
    s2: int = Field(..., ge=0)
    o1: int = Field(..., ge=0)
    o2: int = Field(..., ge=0)
    ap: List[str] = Field(default_factory=list)
    rp: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_conservation(self) -> "FlowReport":
        if self.s1 + self.s2 != len(self.ap):
            raise ValueError("s1 + s2 must equal the number of added packages")
        if self.o1 + self.o2 != len(self.rp):
            raise ValueError("o1 + o2 must equal the number of removed packages")
        return self


class FlowBreakdown(BaseModel):
    """Summed flow counts over several version pairs, with percentages of the total."""
    pairs: int = Field(..., ge=1)
    s1: int = Field(..., ge=0)
    s2: int = Field(..., ge=0)
    o1: int = Field(..., ge=0)
    o2: int = Field(..., ge=0)
    total: int = Field(..., ge=0)
    s1_pct: float = 0.0
    s2_pct: float = 0.0
    o1_pct: float = 0.0
    o2_pct: float = 0.0
    zero_total: bool = False


class ChangeRecord(BaseModel):
    """One suggested change pattern with its supporting evidence."""
    pattern: ChangePattern
    involved_old: List[str] = Field(default_factory=list)
    involved_new: List[str] = Field(default_factory=list)
    confidence: float = Field(..., ge=0.0, le=1.0)
    evidence: str = ""
    affected_packages: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def validate_shape(self) -> "ChangeRecord":
        old, new = len(self.involved_old), len(self.involved_new)
        shapes = {
            ChangePattern.SPLIT: old == 1 and new >= 2,
            ChangePattern.MERGE: old >= 2 and new == 1,
            ChangePattern.RENAME: old == 1 and new == 1,
            ChangePattern.REPLACE_FEATURE: old == 1 and new == 1,
            ChangePattern.ADD_FEATURE: old == 0 and new == 1,
            ChangePattern.REMOVE_FEATURE: old == 1 and new == 0,
        }
        if not shapes[self.pattern]:
            raise ValueError(
                f"{self.pattern.value} cannot involve {old} old and {new} new groups"
            )
        return self
