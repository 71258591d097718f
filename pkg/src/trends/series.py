"""
Per-version adoption series for one distribution.
"""

import logging
from typing import List, Sequence

import numpy as np

from ..ingest.models import Snapshot
from .models import TrendPoint, TrendSummary

logger = logging.getLogger(__name__)


def trend_point(snapshot: Snapshot) -> TrendPoint:
    """Group count, distinct grouped packages and universe size of one snapshot."""
    p2g = len(snapshot.grouped_names())
    total = len(snapshot.packages)
    ratio = p2g / total if total > 0 else 0.0
    # grouped names outside the universe can push the raw ratio over 1
    return TrendPoint(
        version=snapshot.version,
        group_count=len(snapshot.groups),
        p2g_package_count=p2g,
        total_package_count=total,
        ratio=min(ratio, 1.0),
    )


def trend_series(snapshots: Sequence[Snapshot]) -> List[TrendPoint]:
    """One TrendPoint per snapshot, in the order given."""
    points = [trend_point(snapshot) for snapshot in snapshots]
    logger.info(f"Trend series over {len(points)} versions")
    return points


def summarize_trends(points: Sequence[TrendPoint], distribution: str) -> TrendSummary:
    """Median, minimum and maximum of the grouped-package counts and ratios."""
    if not points:
        return TrendSummary(distribution=distribution)

    counts = np.array([point.p2g_package_count for point in points], dtype=float)
    ratios = np.array([point.ratio for point in points], dtype=float)
    return TrendSummary(
        distribution=distribution,
        versions=[point.version for point in points],
        p2g_median=float(np.median(counts)),
        p2g_min=int(counts.min()),
        p2g_max=int(counts.max()),
        ratio_median=float(np.median(ratios)),
        ratio_min=float(ratios.min()),
        ratio_max=float(ratios.max()),
    )
