"""
Repository metadata ingestion: comps/primary importers, canonical snapshots, mirror fetch.
"""

from .models import (
    FetchManifest,
    FetchedFile,
    GroupDef,
    PackageEntry,
    PackageMeta,
    ParseResult,
    Snapshot,
)
from .comps import parse_comps
from .primary import parse_primary
from .snapshot import (
    build_snapshot,
    load_snapshot,
    read_metadata_file,
    save_snapshot,
    snapshot_from_json,
    write_snapshot,
)
from .fetch import RepoFetcher, fetch_repo_metadata

__all__ = [
    "FetchManifest",
    "FetchedFile",
    "GroupDef",
    "PackageEntry",
    "PackageMeta",
    "ParseResult",
    "Snapshot",
    "parse_comps",
    "parse_primary",
    "build_snapshot",
    "load_snapshot",
    "read_metadata_file",
    "save_snapshot",
    "snapshot_from_json",
    "write_snapshot",
    "RepoFetcher",
    "fetch_repo_metadata",
]
