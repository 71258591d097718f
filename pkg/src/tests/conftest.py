"""
Pytest configuration and fixtures for the P2G toolkit tests.
Provides the mini repodata fixtures and small snapshot builders.
"""

import os
from pathlib import Path
from typing import Callable, Iterable, List, Optional, Tuple, Union

import pytest

from ..config.constants import RequirementLevel
from ..config.settings import get_settings
from ..ingest import (
    GroupDef,
    PackageEntry,
    PackageMeta,
    Snapshot,
    build_snapshot,
    write_snapshot,
)

FIXTURES = Path(__file__).parent / "fixtures"

# A package list entry: bare name (mandatory) or (name, level)
EntrySpec = Union[str, Tuple[str, str]]


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch, tmp_path):
    """Run every test without P2G_* variables or a stray .env file."""
    for key in list(os.environ):
        if key.startswith("P2G_"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.chdir(tmp_path)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def fixtures_dir() -> Path:
    """Directory holding the XML and CSV fixtures."""
    return FIXTURES


@pytest.fixture
def comps_bytes() -> bytes:
    """Eight-group comps document."""
    return (FIXTURES / "comps_mini.xml").read_bytes()


@pytest.fixture
def primary_bytes() -> bytes:
    """Forty-package primary document."""
    return (FIXTURES / "primary_mini.xml").read_bytes()


@pytest.fixture
def mini_snapshot(comps_bytes, primary_bytes) -> Snapshot:
    """Snapshot ingested from the mini comps and primary fixtures."""
    snapshot, _ = build_snapshot(comps_bytes, primary_bytes, "centosish", "1")
    return snapshot


def _entries(specs: Iterable[EntrySpec]) -> List[PackageEntry]:
    entries = []
    for spec in specs:
        if isinstance(spec, str):
            entries.append(PackageEntry(name=spec, requirement=RequirementLevel.MANDATORY))
        else:
            name, level = spec
            entries.append(PackageEntry(name=name, requirement=RequirementLevel(level)))
    return entries


@pytest.fixture
def make_group() -> Callable[..., GroupDef]:
    """Factory: make_group(id, packages, name=None, description="")."""

    def factory(
        group_id: str,
        packages: Iterable[EntrySpec] = (),
        name: Optional[str] = None,
        description: str = "",
    ) -> GroupDef:
        return GroupDef(
            id=group_id,
            name=group_id if name is None else name,
            description=description,
            packages=_entries(packages),
        )

    return factory


@pytest.fixture
def make_snapshot() -> Callable[..., Snapshot]:
    """Factory: make_snapshot(groups, universe, version="1", distribution="testdist").

    universe is a list of package names or PackageMeta records.
    """

    def factory(
        groups: Iterable[GroupDef],
        universe: Iterable[Union[str, PackageMeta]] = (),
        version: str = "1",
        distribution: str = "testdist",
    ) -> Snapshot:
        packages = [
            item if isinstance(item, PackageMeta) else PackageMeta(name=item)
            for item in universe
        ]
        return Snapshot(
            distribution=distribution, version=version, groups=list(groups), packages=packages
        )

    return factory


@pytest.fixture
def evolution_snapshots(make_group, make_snapshot) -> Tuple[Snapshot, Snapshot, Snapshot]:
    """Three versions: v1 -> v2 moves five packages, v2 -> v3 changes nothing.

    v1 -> v2 flows: emacs and tmux join groups from the old universe (s1),
    micro is new (s2), oldpkg leaves groups but stays (o1), sendmail is gone (o2).
    """
    v1 = make_snapshot(
        [
            make_group("base", ["bash", "coreutils"]),
            make_group("editors", [("vim", "default"), ("nano", "default")]),
            make_group("legacy", [("oldpkg", "optional"), ("sendmail", "optional")]),
        ],
        ["bash", "coreutils", "vim", "nano", "oldpkg", "sendmail", "emacs", "tmux"],
        version="1",
    )
    v2_groups = [
        make_group("base", ["bash", "coreutils", ("emacs", "optional")]),
        make_group("editors", [("vim", "default"), ("nano", "default"), ("micro", "optional")]),
        make_group("tools", [("tmux", "default")]),
    ]
    v2_universe = ["bash", "coreutils", "vim", "nano", "emacs", "tmux", "micro", "oldpkg"]
    v2 = make_snapshot(v2_groups, v2_universe, version="2")
    v3 = make_snapshot(v2_groups, v2_universe, version="3")
    return v1, v2, v3


@pytest.fixture
def snapshot_file(tmp_path) -> Callable[[Snapshot, str], str]:
    """Factory writing a snapshot to tmp_path and returning its path."""

    def factory(snapshot: Snapshot, filename: str) -> str:
        path = tmp_path / filename
        write_snapshot(snapshot, path)
        return str(path)

    return factory
