"""
Group evolution between versions: diff, package flow and change patterns.
"""

from .models import ChangeRecord, FlowBreakdown, FlowReport, GroupDiff
from .flows import aggregate_flows, classify_flows, diff_groups, flow_chain
from .patterns import suggest_patterns

__all__ = [
    "ChangeRecord",
    "FlowBreakdown",
    "FlowReport",
    "GroupDiff",
    "aggregate_flows",
    "classify_flows",
    "diff_groups",
    "flow_chain",
    "suggest_patterns",
]
