"""
Snapshot data models.
One distribution version: its groups (from comps) and its package universe (from primary).
"""

from dataclasses import dataclass, field
from typing import Dict, Generic, List, Set, TypeVar

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..config.constants import RequirementLevel

T = TypeVar("T")


class SnapshotModel(BaseModel):
    """Base configuration for snapshot records: immutable, no unknown keys."""
    model_config = ConfigDict(frozen=True, extra="forbid")


class PackageEntry(SnapshotModel):
    """A package listed in a group, with its membership level."""
    name: str = Field(..., min_length=1)
    requirement: RequirementLevel


class GroupDef(SnapshotModel):
    """A comps group: id, display name, description and typed package list."""
    id: str = Field(..., min_length=1)
    name: str = ""
    description: str = ""
    packages: List[PackageEntry] = Field(default_factory=list)

    @field_validator("packages")
    @classmethod
    def validate_unique_packages(cls, v: List[PackageEntry]) -> List[PackageEntry]:
        """A package may appear only once per group."""
        seen: Set[str] = set()
        for entry in v:
            if entry.name in seen:
                raise ValueError(f"duplicate package '{entry.name}' in group")
            seen.add(entry.name)
        return v

    @property
    def size(self) -> int:
        """Number of packages (m)."""
        return len(self.packages)

    def package_names(self) -> List[str]:
        """Package names in list order."""
        return [entry.name for entry in self.packages]

    def weights(self) -> Dict[str, RequirementLevel]:
        """Membership level per package name."""
        return {entry.name: entry.requirement for entry in self.packages}


class PackageMeta(SnapshotModel):
    """A package from primary metadata."""
    name: str = Field(..., min_length=1)
    description: str = ""
    provides: List[str] = Field(default_factory=list)
    requires: List[str] = Field(default_factory=list)


class Snapshot(SnapshotModel):
    """All groups and all packages of one distribution version."""
    distribution: str
    version: str
    groups: List[GroupDef] = Field(default_factory=list)
    packages: List[PackageMeta] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_unique_ids(self) -> "Snapshot":
        """Group ids and package names are unique."""
        group_ids: Set[str] = set()
        for group in self.groups:
            if group.id in group_ids:
                raise ValueError(f"duplicate group id '{group.id}'")
            group_ids.add(group.id)

        package_names: Set[str] = set()
        for package in self.packages:
            if package.name in package_names:
                raise ValueError(f"duplicate package name '{package.name}'")
            package_names.add(package.name)
        return self

    def package_map(self) -> Dict[str, PackageMeta]:
        """Package universe keyed by name."""
        return {package.name: package for package in self.packages}

    def package_names(self) -> Set[str]:
        """Names in the total package universe."""
        return {package.name for package in self.packages}

    def grouped_names(self) -> Set[str]:
        """Names appearing in at least one group's package list."""
        return {entry.name for group in self.groups for entry in group.packages}

    def get_group(self, group_id: str) -> GroupDef:
        """Look up a group by id (KeyError if absent)."""
        for group in self.groups:
            if group.id == group_id:
                return group
        raise KeyError(group_id)


@dataclass
class ParseResult(Generic[T]):
    """Parser output: the parsed records plus non-fatal warnings."""
    items: List[T] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def warning_count(self) -> int:
        """Number of warnings raised while parsing."""
        return len(self.warnings)


class FetchedFile(BaseModel):
    """One metadata file written by the fetch client."""
    kind: str
    path: str
    size_bytes: int = Field(..., ge=0)


class FetchManifest(BaseModel):
    """Files fetched from one mirror."""
    base_url: str
    entries: List[FetchedFile] = Field(default_factory=list)

    def path_for(self, kind: str) -> str:
        """Local path of the fetched file of the given kind."""
        for entry in self.entries:
            if entry.kind == kind:
                return entry.path
        raise KeyError(kind)
