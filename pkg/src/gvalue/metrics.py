"""
GValue sub-metrics.

compactness   mean over package pairs of max(description similarity, dependency degree)
relevance     mean similarity of the group description to each member description
ndif/ddif/pdif  name, description and package-list distance to every other group
dist          1 when the group size lies within mean +/- 2 sigma of the snapshot's sizes

Similarities come from an EmbeddingBackend; negative values (possible with
non-TF-IDF backends) are floored at 0 in compactness and relevance.
"""

import itertools
import logging
import math
from typing import List, Mapping, Optional, Sequence

import numpy as np

from ..config.constants import DISTRIBUTION_SIGMA_WIDTH, PACKAGE_WEIGHTS, RequirementLevel
from ..depgraph import DependencyGraph, dependency_degree
from ..errors import EmptyGroup, SingletonCorpus, UnknownGroup
from ..ingest.models import GroupDef, Snapshot
from ..textvec import EmbeddingBackend, edit_distance
from .models import DistributionStats

logger = logging.getLogger(__name__)


def package_weight(requirement: RequirementLevel) -> float:
    """Weight of a membership level: mandatory 0.8, default 0.5, optional 0.2."""
    return PACKAGE_WEIGHTS[RequirementLevel(requirement)]


def _require_member(group: GroupDef, snapshot: Snapshot) -> None:
    if all(candidate.id != group.id for candidate in snapshot.groups):
        raise UnknownGroup(
            f"group '{group.id}' is not part of {snapshot.distribution} {snapshot.version}"
        )


def _others(group: GroupDef, groups: Sequence[GroupDef]) -> List[GroupDef]:
    """Every group except `group`; SingletonCorpus below two groups."""
    if len(groups) < 2:
        raise SingletonCorpus("differentiation needs at least two groups")
    others = [candidate for candidate in groups if candidate.id != group.id]
    if len(others) == len(groups):
        raise UnknownGroup(f"group '{group.id}' is not in the compared collection")
    return others


def compactness(
    group: GroupDef,
    snapshot: Snapshot,
    graph: DependencyGraph,
    backend: EmbeddingBackend,
) -> float:
    """Average over package pairs of max(similarity, dependency degree).

    The pair score is symmetric, so the mean over unordered pairs equals the
    mean over ordered pairs with denominator m(m-1). Packages missing from the
    universe score 0 against every partner. Groups with m <= 1 score 0.

    Raises:
        UnknownGroup: group is not part of snapshot
    """
    _require_member(group, snapshot)
    names = group.package_names()
    m = len(names)
    if m <= 1:
        return 0.0

    universe = snapshot.package_map()
    pair_scores = []
    for a, b in itertools.combinations(names, 2):
        if a not in universe or b not in universe:
            pair_scores.append(0.0)
            continue
        similarity = backend.text_similarity(universe[a].description, universe[b].description)
        pair_scores.append(max(similarity, dependency_degree(graph, a, b), 0.0))

    return 2.0 * math.fsum(pair_scores) / (m * (m - 1))


def relevance(group: GroupDef, snapshot: Snapshot, backend: EmbeddingBackend) -> float:
    """Mean similarity between the group description and each member's description.

    Raises:
        UnknownGroup: group is not part of snapshot
        EmptyGroup: group has no packages
    """
    _require_member(group, snapshot)
    if group.size == 0:
        raise EmptyGroup(f"group '{group.id}' has no packages")

    universe = snapshot.package_map()
    group_vector = backend.embed(group.description)
    scores = []
    for name in group.package_names():
        package = universe.get(name)
        if package is None:
            scores.append(0.0)
            continue
        similarity = backend.similarity(group_vector, backend.embed(package.description))
        scores.append(max(similarity, 0.0))
    return math.fsum(scores) / group.size


def name_distance(a: str, b: str) -> float:
    """Edit distance normalized by the longer name; 0 for two empty names."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 0.0
    return edit_distance(a, b) / longest


def weighted_jaccard(
    a: Mapping[str, RequirementLevel], b: Mapping[str, RequirementLevel]
) -> float:
    """Weighted Jaccard similarity of two typed package lists.

    A package in only one list adds its own weight to the denominator. Two
    empty lists are identical (similarity 1).
    """
    union = set(a) | set(b)
    if not union:
        return 1.0
    shared = math.fsum(
        min(package_weight(a[name]), package_weight(b[name])) for name in set(a) & set(b)
    )
    total = math.fsum(
        max(
            package_weight(a[name]) if name in a else 0.0,
            package_weight(b[name]) if name in b else 0.0,
        )
        for name in union
    )
    return shared / total


def name_differentiation(group: GroupDef, groups: Sequence[GroupDef]) -> float:
    """Mean normalized name edit distance to every other group.

    Raises:
        SingletonCorpus: fewer than two groups
    """
    others = _others(group, groups)
    return math.fsum(name_distance(group.name, other.name) for other in others) / len(others)


def desc_differentiation(
    group: GroupDef, groups: Sequence[GroupDef], backend: EmbeddingBackend
) -> float:
    """Mean of 1 - (sim + 1) / 2 over every other group's description.

    Raises:
        SingletonCorpus: fewer than two groups
    """
    others = _others(group, groups)
    own = backend.embed(group.description)
    distances = []
    for other in others:
        similarity = backend.similarity(own, backend.embed(other.description))
        distances.append(1.0 - (similarity + 1.0) / 2.0)
    return math.fsum(distances) / len(others)


def pkglist_differentiation(group: GroupDef, groups: Sequence[GroupDef]) -> float:
    """Mean of 1 - weighted Jaccard similarity to every other group's package list.

    Raises:
        SingletonCorpus: fewer than two groups
    """
    others = _others(group, groups)
    own = group.weights()
    distances = [1.0 - weighted_jaccard(own, other.weights()) for other in others]
    return math.fsum(distances) / len(others)


def differentiation(
    group: GroupDef, groups: Sequence[GroupDef], backend: EmbeddingBackend
) -> float:
    """(ndif + ddif + pdif) / 3."""
    return (
        name_differentiation(group, groups)
        + desc_differentiation(group, groups, backend)
        + pkglist_differentiation(group, groups)
    ) / 3.0


def distribution_stats(groups: Sequence[GroupDef]) -> DistributionStats:
    """Mean and sample standard deviation of group sizes.

    sigma is 0 with fewer than two groups.
    """
    sizes = np.array([group.size for group in groups], dtype=float)
    mean = float(sizes.mean()) if sizes.size else 0.0
    stddev = float(sizes.std(ddof=1)) if sizes.size >= 2 else 0.0
    width = DISTRIBUTION_SIGMA_WIDTH * stddev
    return DistributionStats(mean=mean, stddev=stddev, lower=mean - width, upper=mean + width)


def distribution_value(group: GroupDef, stats: DistributionStats) -> int:
    """1 if the group size is inside the accepted range, else 0."""
    return 1 if stats.contains(group.size) else 0


def fuse_gvalue(com: float, rel: float, dif: Optional[float], dist: int) -> float:
    """Equal-weight mean of the sub-scores; dif None drops it from the mean."""
    if dif is None:
        return (com + rel + dist) / 3.0
    return (com + rel + dif + dist) / 4.0
