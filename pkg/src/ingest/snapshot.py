"""
Canonical snapshot JSON: load, save and build from comps + primary.
"""

import gzip
import json
import logging
import zlib
from pathlib import Path
from typing import List, Tuple, Union

from pydantic import ValidationError

from ..errors import DecompressError, IoError, SchemaViolation
from .comps import parse_comps
from .models import Snapshot
from .primary import parse_primary

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def load_snapshot(path: PathLike) -> Snapshot:
    """Read and validate a canonical snapshot file.

    Raises:
        IoError: unreadable path
        SchemaViolation: invalid JSON, missing keys, bad enum values or duplicate ids
    """
    try:
        raw = Path(path).read_bytes()
    except OSError as e:
        raise IoError(path, e.strerror or str(e)) from e
    return snapshot_from_json(raw, source=str(path))


def snapshot_from_json(raw: Union[bytes, str], source: str = "<snapshot>") -> Snapshot:
    """Validate snapshot JSON already in memory."""
    try:
        data = json.loads(raw)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise SchemaViolation(f"{source}: not valid JSON ({e})") from e
    if not isinstance(data, dict):
        raise SchemaViolation(f"{source}: top-level value must be an object")
    try:
        json.dumps(data, ensure_ascii=False).encode("utf-8")
    except UnicodeEncodeError as e:
        raise SchemaViolation(f"{source}: text is not valid Unicode ({e.reason})") from e
    try:
        return Snapshot.model_validate(data)
    except ValidationError as e:
        raise SchemaViolation(f"{source}: {_summarize(e)}") from e


def save_snapshot(snapshot: Snapshot) -> bytes:
    """Serialize to canonical JSON (fixed key order, 2-space indent, trailing newline)."""
    payload = snapshot.model_dump(mode="json")
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def write_snapshot(snapshot: Snapshot, path: PathLike) -> None:
    """Save a snapshot to disk."""
    try:
        Path(path).write_bytes(save_snapshot(snapshot))
    except OSError as e:
        raise IoError(path, e.strerror or str(e)) from e
    logger.info(f"Wrote snapshot {snapshot.distribution} {snapshot.version} to {path}")


def read_metadata_file(path: PathLike) -> bytes:
    """Read a metadata file, gunzipping paths that end in .gz.

    Raises:
        IoError: unreadable path
        DecompressError: corrupt gzip data
    """
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as e:
        raise IoError(path, e.strerror or str(e)) from e
    if path.suffix == ".gz":
        return gunzip(raw, str(path))
    return raw


def gunzip(raw: bytes, source: str) -> bytes:
    """Decompress gzip bytes, mapping failures to DecompressError."""
    try:
        return gzip.decompress(raw)
    except (OSError, EOFError, zlib.error) as e:
        raise DecompressError(f"{source}: {e}") from e


def build_snapshot(
    comps_xml: bytes,
    primary_xml: bytes,
    distribution: str,
    version: str,
) -> Tuple[Snapshot, List[str]]:
    """Combine parsed comps and primary into one snapshot.

    Returns:
        Tuple of (snapshot, parser warnings)
    """
    groups = parse_comps(comps_xml)
    packages = parse_primary(primary_xml)
    snapshot = Snapshot(
        distribution=distribution,
        version=version,
        groups=groups.items,
        packages=packages.items,
    )

    dangling = sorted(snapshot.grouped_names() - snapshot.package_names())
    if dangling:
        logger.warning(
            f"{len(dangling)} grouped package names are absent from the package universe: "
            f"{', '.join(dangling[:10])}"
        )
    return snapshot, groups.warnings + packages.warnings


def _summarize(error: ValidationError) -> str:
    """First few validation problems as one line."""
    parts: List[str] = []
    for item in error.errors()[:3]:
        location = ".".join(str(p) for p in item.get("loc", ()))
        parts.append(f"{location or 'snapshot'}: {item.get('msg', 'invalid')}")
    return "; ".join(parts)
