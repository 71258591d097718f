"""
Group diff and package-flow classification between consecutive snapshots.
"""

import logging
from typing import List, Sequence

from ..errors import EmptyInput
from ..ingest.models import Snapshot
from .models import FlowBreakdown, FlowReport, GroupDiff

logger = logging.getLogger(__name__)


def diff_groups(prev: Snapshot, curr: Snapshot) -> GroupDiff:
    """Set difference on group ids; every list ordered by id."""
    prev_groups = {group.id: group for group in prev.groups}
    curr_groups = {group.id: group for group in curr.groups}

    diff = GroupDiff(
        prev_version=prev.version,
        curr_version=curr.version,
        added=[curr_groups[i] for i in sorted(curr_groups.keys() - prev_groups.keys())],
        removed=[prev_groups[i] for i in sorted(prev_groups.keys() - curr_groups.keys())],
        retained=sorted(prev_groups.keys() & curr_groups.keys()),
    )
    logger.info(
        f"Group diff {prev.version} -> {curr.version}: +{len(diff.added)} "
        f"-{len(diff.removed)} ={len(diff.retained)}"
    )
    return diff


def classify_flows(prev: Snapshot, curr: Snapshot) -> FlowReport:
    """Classify packages entering and leaving groups.

    ap holds names grouped in curr but not in prev, rp the reverse. Added names
    already in prev's universe are s1, the rest s2; removed names still in
    curr's universe are o1, the rest o2.
    """
    prev_grouped = prev.grouped_names()
    curr_grouped = curr.grouped_names()
    prev_universe = prev.package_names()
    curr_universe = curr.package_names()

    ap = sorted(curr_grouped - prev_grouped)
    rp = sorted(prev_grouped - curr_grouped)
    s1 = sum(1 for name in ap if name in prev_universe)
    o1 = sum(1 for name in rp if name in curr_universe)

    return FlowReport(
        prev_version=prev.version,
        curr_version=curr.version,
        s1=s1,
        s2=len(ap) - s1,
        o1=o1,
        o2=len(rp) - o1,
        ap=ap,
        rp=rp,
    )


def flow_chain(snapshots: Sequence[Snapshot]) -> List[FlowReport]:
    """Flow reports for every consecutive pair, in the order given.

    Raises:
        EmptyInput: fewer than two snapshots
    """
    if len(snapshots) < 2:
        raise EmptyInput("a flow chain needs at least two snapshots")
    return [classify_flows(prev, curr) for prev, curr in zip(snapshots, snapshots[1:])]


def aggregate_flows(reports: Sequence[FlowReport]) -> FlowBreakdown:
    """Sum flow counts and express each class as a percentage of the total.

    A zero total reports 0% everywhere with zero_total set.

    Raises:
        EmptyInput: no reports
    """
    if not reports:
        raise EmptyInput("no flow reports to aggregate")

    s1 = sum(report.s1 for report in reports)
    s2 = sum(report.s2 for report in reports)
    o1 = sum(report.o1 for report in reports)
    o2 = sum(report.o2 for report in reports)
    total = s1 + s2 + o1 + o2

    if total == 0:
        logger.warning(f"No package flow across {len(reports)} version pair(s)")
        return FlowBreakdown(pairs=len(reports), s1=0, s2=0, o1=0, o2=0, total=0, zero_total=True)

    return FlowBreakdown(
        pairs=len(reports),
        s1=s1,
        s2=s2,
        o1=o1,
        o2=o2,
        total=total,
        s1_pct=100.0 * s1 / total,
        s2_pct=100.0 * s2 / total,
        o1_pct=100.0 * o1 / total,
        o2_pct=100.0 * o2 / total,
    )
