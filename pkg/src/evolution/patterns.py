"""
Heuristic change-pattern suggestions between consecutive snapshots.

Candidates (rename, split, merge, replace_feature) are ranked by confidence and
accepted greedily; a group takes part in at most one record. Whatever is left
over becomes add_feature / remove_feature.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ..config.constants import (
    DEFAULT_RENAME_THRESHOLD,
    DEFAULT_SPLIT_COVERAGE,
    ChangePattern,
)
from ..gvalue.metrics import weighted_jaccard
from ..ingest.models import GroupDef, Snapshot
from .flows import diff_groups
from .models import ChangeRecord

logger = logging.getLogger(__name__)

# Preference among candidates of equal confidence
_PATTERN_RANK = {
    ChangePattern.RENAME: 0,
    ChangePattern.SPLIT: 1,
    ChangePattern.MERGE: 2,
    ChangePattern.REPLACE_FEATURE: 3,
}


@dataclass(frozen=True)
class _Candidate:
    pattern: ChangePattern
    old: Tuple[str, ...]
    new: Tuple[str, ...]
    confidence: float
    evidence: str

    def sort_key(self) -> Tuple[float, int, Tuple[str, ...], Tuple[str, ...]]:
        return (-self.confidence, _PATTERN_RANK[self.pattern], self.old, self.new)


def _coverage(members: Set[str], covering: Set[str]) -> float:
    """Share of members found in covering."""
    if not members:
        return 0.0
    return len(members & covering) / len(members)


def _rename_candidates(
    removed: Sequence[GroupDef], added: Sequence[GroupDef], threshold: float
) -> List[_Candidate]:
    candidates = []
    for old in removed:
        for new in added:
            overlap = weighted_jaccard(old.weights(), new.weights())
            if overlap >= threshold:
                candidates.append(
                    _Candidate(
                        ChangePattern.RENAME,
                        (old.id,),
                        (new.id,),
                        overlap,
                        f"weighted package overlap {overlap:.3f} between '{old.id}' and '{new.id}'",
                    )
                )
    return candidates


def _split_candidates(
    sources: Sequence[GroupDef],
    targets: Sequence[GroupDef],
    coverage_threshold: float,
    pattern: ChangePattern,
) -> List[_Candidate]:
    """One source group spread over two or more target groups.

    For a split, sources are removed groups and targets added ones; a merge
    swaps the two.
    """
    candidates = []
    for source in sources:
        members = set(source.package_names())
        sharing = [target for target in targets if members & set(target.package_names())]
        if len(sharing) < 2:
            continue
        covering: Set[str] = set()
        for target in sharing:
            covering.update(target.package_names())
        coverage = _coverage(members, covering)
        if coverage < coverage_threshold:
            continue

        ids = tuple(target.id for target in sharing)
        if pattern == ChangePattern.SPLIT:
            old, new = (source.id,), ids
            evidence = f"{coverage:.0%} of '{source.id}' packages moved to {', '.join(ids)}"
        else:
            old, new = ids, (source.id,)
            evidence = f"{coverage:.0%} of '{source.id}' packages came from {', '.join(ids)}"
        candidates.append(_Candidate(pattern, old, new, coverage, evidence))
    return candidates


def _replace_candidates(
    removed: Sequence[GroupDef], retained: Sequence[GroupDef], coverage_threshold: float
) -> List[_Candidate]:
    """A removed group absorbed by exactly one retained group."""
    candidates = []
    for old in removed:
        members = set(old.package_names())
        absorbing = [
            (group, _coverage(members, set(group.package_names()))) for group in retained
        ]
        absorbing = [(group, c) for group, c in absorbing if c >= coverage_threshold]
        if len(absorbing) != 1:
            continue
        group, coverage = absorbing[0]
        candidates.append(
            _Candidate(
                ChangePattern.REPLACE_FEATURE,
                (old.id,),
                (group.id,),
                coverage,
                f"{coverage:.0%} of '{old.id}' packages now live in retained group '{group.id}'",
            )
        )
    return candidates


def _affected(
    old: Sequence[str],
    new: Sequence[str],
    prev: Dict[str, GroupDef],
    curr: Dict[str, GroupDef],
) -> int:
    """Distinct package names across the involved groups."""
    names: Set[str] = set()
    for group_id in old:
        names.update(prev[group_id].package_names())
    for group_id in new:
        names.update(curr[group_id].package_names())
    return len(names)


def suggest_patterns(
    prev: Snapshot,
    curr: Snapshot,
    rename_threshold: Optional[float] = None,
    split_coverage: Optional[float] = None,
) -> List[ChangeRecord]:
    """Suggest change patterns explaining the group diff between two snapshots.

    Args:
        prev: older snapshot
        curr: newer snapshot
        rename_threshold: minimum weighted package overlap for a rename (default 0.7)
        split_coverage: minimum member coverage for split, merge and replace (default 0.6)

    Returns:
        Accepted records by descending confidence, then add_feature and
        remove_feature records ordered by group id
    """
    rename_threshold = DEFAULT_RENAME_THRESHOLD if rename_threshold is None else rename_threshold
    split_coverage = DEFAULT_SPLIT_COVERAGE if split_coverage is None else split_coverage

    diff = diff_groups(prev, curr)
    prev_groups = {group.id: group for group in prev.groups}
    curr_groups = {group.id: group for group in curr.groups}
    retained = [curr_groups[group_id] for group_id in diff.retained]

    candidates = (
        _rename_candidates(diff.removed, diff.added, rename_threshold)
        + _split_candidates(diff.removed, diff.added, split_coverage, ChangePattern.SPLIT)
        + _split_candidates(diff.added, diff.removed, split_coverage, ChangePattern.MERGE)
        + _replace_candidates(diff.removed, retained, split_coverage)
    )

    used: Set[str] = set()
    records: List[ChangeRecord] = []
    for candidate in sorted(candidates, key=_Candidate.sort_key):
        involved = set(candidate.old) | set(candidate.new)
        if involved & used:
            continue
        used.update(involved)
        records.append(
            ChangeRecord(
                pattern=candidate.pattern,
                involved_old=list(candidate.old),
                involved_new=list(candidate.new),
                confidence=candidate.confidence,
                evidence=candidate.evidence,
                affected_packages=_affected(candidate.old, candidate.new, prev_groups, curr_groups),
            )
        )

    for group in diff.added:
        if group.id not in used:
            records.append(
                ChangeRecord(
                    pattern=ChangePattern.ADD_FEATURE,
                    involved_new=[group.id],
                    confidence=1.0,
                    evidence=f"new group '{group.id}' with no matching predecessor",
                    affected_packages=group.size,
                )
            )
    for group in diff.removed:
        if group.id not in used:
            records.append(
                ChangeRecord(
                    pattern=ChangePattern.REMOVE_FEATURE,
                    involved_old=[group.id],
                    confidence=1.0,
                    evidence=f"group '{group.id}' dropped with no matching successor",
                    affected_packages=group.size,
                )
            )

    logger.info(
        f"Suggested {len(records)} change pattern(s) for {prev.version} -> {curr.version}"
    )
    return records
