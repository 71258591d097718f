"""
GValue fusion and snapshot-wide scoring.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from ..config.constants import DEFAULT_LOW_QUALITY_THRESHOLD, ReportFlag
from ..config.settings import get_settings
from ..depgraph import DependencyGraph, build_graph
from ..ingest.models import GroupDef, Snapshot
from ..textvec import EmbeddingBackend, TfidfBackend
from .metrics import (
    compactness,
    desc_differentiation,
    distribution_stats,
    distribution_value,
    fuse_gvalue,
    name_differentiation,
    pkglist_differentiation,
    relevance,
)
from .models import DistributionStats, GValueReport, ScoreSummary, SnapshotScores

logger = logging.getLogger(__name__)


def score_group(
    group: GroupDef,
    snapshot: Snapshot,
    graph: DependencyGraph,
    backend: EmbeddingBackend,
    stats: DistributionStats,
    threshold: float = DEFAULT_LOW_QUALITY_THRESHOLD,
) -> GValueReport:
    """Compute every sub-metric of one group and fuse them.

    gvalue = (com + rel + dif + dist) / 4. An empty group gets rel = 0
    instead of raising; with a single group in the snapshot the
    differentiation fields stay None and gvalue = (com + rel + dist) / 3.

    Args:
        group: group to score, a member of snapshot
        snapshot: snapshot the group belongs to
        graph: dependency graph of snapshot
        backend: description embedding backend
        stats: group-size distribution of snapshot
        threshold: relevance below this raises the weak_description flag

    Returns:
        GValueReport with flags attached
    """
    com = compactness(group, snapshot, graph, backend)
    rel = relevance(group, snapshot, backend) if group.size > 0 else 0.0
    dist = distribution_value(group, stats)

    if len(snapshot.groups) >= 2:
        ndif = name_differentiation(group, snapshot.groups)
        ddif = desc_differentiation(group, snapshot.groups, backend)
        pdif = pkglist_differentiation(group, snapshot.groups)
        dif: Optional[float] = (ndif + ddif + pdif) / 3.0
    else:
        ndif = ddif = pdif = dif = None
    gvalue = fuse_gvalue(com, rel, dif, dist)

    report = GValueReport(
        group_id=group.id,
        com=com,
        rel=rel,
        ndif=ndif,
        ddif=ddif,
        pdif=pdif,
        dif=dif,
        dist=dist,
        gvalue=gvalue,
    )
    return report.model_copy(update={"flags": diagnose(report, group, snapshot, threshold)})


def diagnose(
    report: GValueReport,
    group: GroupDef,
    snapshot: Snapshot,
    threshold: float = DEFAULT_LOW_QUALITY_THRESHOLD,
) -> List[ReportFlag]:
    """Quality flags for a scored group, in ReportFlag declaration order."""
    universe = snapshot.package_names()
    raised = {
        ReportFlag.SINGLETON: group.size <= 1,
        ReportFlag.EMPTY_GROUP: group.size == 0,
        ReportFlag.SIZE_OUTLIER: report.dist == 0,
        ReportFlag.WEAK_DESCRIPTION: report.rel < threshold,
        ReportFlag.DIF_NOT_COMPUTABLE: report.dif is None,
        ReportFlag.MISSING_PACKAGES: any(
            name not in universe for name in group.package_names()
        ),
    }
    return [flag for flag in ReportFlag if raised[flag]]


def score_snapshot(
    snapshot: Snapshot,
    threshold: float = DEFAULT_LOW_QUALITY_THRESHOLD,
    backend: Optional[EmbeddingBackend] = None,
    workers: Optional[int] = None,
) -> SnapshotScores:
    """Score every group of a snapshot.

    Groups are scored on a thread pool; reports come back in the snapshot's
    group order. The low-quality subset holds reports with gvalue strictly
    below threshold, sorted by (gvalue, group_id).

    Args:
        snapshot: snapshot to score
        threshold: low-quality cut-off
        backend: embedding backend; defaults to TF-IDF over the snapshot's descriptions
        workers: thread count; defaults to the score_workers setting
    """
    if not snapshot.groups:
        logger.warning(f"{snapshot.distribution} {snapshot.version} has no groups to score")
        return SnapshotScores(
            distribution=snapshot.distribution, version=snapshot.version, threshold=threshold
        )

    graph = build_graph(snapshot)
    backend = backend or TfidfBackend.from_snapshot(snapshot)
    stats = distribution_stats(snapshot.groups)
    workers = workers or get_settings().score_workers

    def score(group: GroupDef) -> GValueReport:
        return score_group(group, snapshot, graph, backend, stats, threshold)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        reports = list(pool.map(score, snapshot.groups))

    low_quality = sorted(
        (report for report in reports if report.gvalue < threshold),
        key=lambda report: (report.gvalue, report.group_id),
    )
    logger.info(
        f"Scored {len(reports)} groups of {snapshot.distribution} {snapshot.version}: "
        f"{len(low_quality)} below {threshold}"
    )
    return SnapshotScores(
        distribution=snapshot.distribution,
        version=snapshot.version,
        threshold=threshold,
        stats=stats,
        reports=reports,
        low_quality=low_quality,
    )


def summarize_scores(
    reports: Sequence[GValueReport], threshold: float = DEFAULT_LOW_QUALITY_THRESHOLD
) -> ScoreSummary:
    """Group count, mean gvalue, low-quality share and per-flag counts."""
    count = len(reports)
    low = sum(1 for report in reports if report.gvalue < threshold)
    flag_counts = {
        flag.value: sum(1 for report in reports if flag in report.flags) for flag in ReportFlag
    }
    return ScoreSummary(
        group_count=count,
        mean_gvalue=math.fsum(report.gvalue for report in reports) / count if count else 0.0,
        threshold=threshold,
        low_quality_count=low,
        low_quality_share=low / count if count else 0.0,
        flag_counts=flag_counts,
    )
