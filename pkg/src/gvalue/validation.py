"""
GValue vs. manual quality scores, fused and per aspect.
"""

import logging
from pathlib import Path
from typing import Dict, Mapping, Optional, Sequence, Union

from ..errors import TooFewPoints
from ..trends import SpearmanResult, paired_values, read_keyed_columns, spearman
from .models import AspectValidation, GValueReport

logger = logging.getLogger(__name__)

# manual-score column for the fused score
SCORE_COLUMN = "score"
# sub-score aspects a manual rating file may also carry
ASPECT_COLUMNS = ("com", "rel", "dif", "dist")


def load_human_scores(path: Union[str, Path]) -> Dict[str, float]:
    """Read a `group_id,score` CSV of manual ratings."""
    return load_aspect_scores(path)[SCORE_COLUMN]


def load_aspect_scores(path: Union[str, Path]) -> Dict[str, Dict[str, float]]:
    """Read manual ratings: a required `score` column plus any of com, rel, dif, dist.

    Returns:
        Column name -> (group_id -> rating), for the columns present
    """
    return read_keyed_columns(path, "group_id", [SCORE_COLUMN], optional=ASPECT_COLUMNS)


def correlate_with_human_scores(
    reports: Sequence[GValueReport], human_scores: Mapping[str, float]
) -> SpearmanResult:
    """Spearman correlation between gvalue and manual scores.

    Only groups present in both inputs are paired.

    Raises:
        TooFewPoints: fewer than three groups are paired
    """
    gvalues = {report.group_id: report.gvalue for report in reports}
    group_ids, xs, ys = paired_values(gvalues, human_scores)
    unmatched = len(set(human_scores) - set(gvalues))
    if unmatched:
        logger.warning(f"{unmatched} manually scored group(s) are not in the snapshot")
    logger.info(f"Correlating gvalue with manual scores over {len(group_ids)} groups")
    return spearman(xs, ys, labels=group_ids)


def correlate_aspects(
    reports: Sequence[GValueReport], ratings: Mapping[str, Mapping[str, float]]
) -> AspectValidation:
    """Correlate gvalue and every rated sub-score with its manual column.

    Groups without a differentiation score (single-group snapshots) are left
    out of the dif pairing. An aspect with fewer than three pairs is skipped
    with a warning; the fused score must pair at least three groups.

    Raises:
        TooFewPoints: fewer than three groups pair on the fused score
    """
    fused = correlate_with_human_scores(reports, ratings[SCORE_COLUMN])
    aspects: Dict[str, SpearmanResult] = {}
    for aspect in ASPECT_COLUMNS:
        if aspect not in ratings:
            continue
        result = _correlate_aspect(reports, aspect, ratings[aspect])
        if result is not None:
            aspects[aspect] = result
    return AspectValidation(gvalue=fused, aspects=aspects)


def _correlate_aspect(
    reports: Sequence[GValueReport], aspect: str, manual: Mapping[str, float]
) -> Optional[SpearmanResult]:
    computed: Dict[str, float] = {}
    for report in reports:
        value = getattr(report, aspect)
        if value is not None:
            computed[report.group_id] = float(value)
    group_ids, xs, ys = paired_values(computed, manual)
    try:
        return spearman(xs, ys, labels=group_ids)
    except TooFewPoints as e:
        logger.warning(f"Skipping {aspect} correlation: {e}")
        return None
