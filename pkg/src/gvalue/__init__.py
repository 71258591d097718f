"""
Group quality scoring (GValue).
"""

from .models import (
    AspectValidation,
    DistributionStats,
    GValueReport,
    ScoreSummary,
    SnapshotScores,
)
from .metrics import (
    compactness,
    desc_differentiation,
    differentiation,
    distribution_stats,
    distribution_value,
    fuse_gvalue,
    name_differentiation,
    name_distance,
    package_weight,
    pkglist_differentiation,
    relevance,
    weighted_jaccard,
)
from .scorer import diagnose, score_group, score_snapshot, summarize_scores
from .validation import (
    correlate_aspects,
    correlate_with_human_scores,
    load_aspect_scores,
    load_human_scores,
)

__all__ = [
    "AspectValidation",
    "DistributionStats",
    "GValueReport",
    "ScoreSummary",
    "SnapshotScores",
    "compactness",
    "desc_differentiation",
    "differentiation",
    "distribution_stats",
    "distribution_value",
    "fuse_gvalue",
    "name_differentiation",
    "name_distance",
    "package_weight",
    "pkglist_differentiation",
    "relevance",
    "weighted_jaccard",
    "diagnose",
    "score_group",
    "score_snapshot",
    "summarize_scores",
    "correlate_aspects",
    "correlate_with_human_scores",
    "load_aspect_scores",
    "load_human_scores",
]
