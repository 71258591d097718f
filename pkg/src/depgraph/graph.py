"""
Package dependency graph.
Undirected adjacency built from requires/provides; hop counts feed the dependency degree.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Set, Tuple

from ..errors import SamePackage, UnknownNode
from ..ingest.models import Snapshot

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DependencyGraph:
    """Resolved package-level dependency graph (undirected view)."""
    nodes: Tuple[str, ...]
    adjacency: Mapping[str, FrozenSet[str]]
    unresolved: Tuple[Tuple[str, str], ...] = ()
    _hops: Dict[str, Dict[str, int]] = field(default_factory=dict, compare=False, repr=False)

    def __contains__(self, name: object) -> bool:
        return name in self.adjacency

    def neighbors(self, name: str) -> List[str]:
        """Sorted neighbors of a node."""
        self.require_node(name)
        return sorted(self.adjacency[name])

    def edge_count(self) -> int:
        """Number of undirected edges."""
        return sum(len(n) for n in self.adjacency.values()) // 2

    def distances_from(self, source: str) -> Dict[str, int]:
        """Breadth-first hop counts from source to every reachable node (memoized)."""
        self.require_node(source)
        cached = self._hops.get(source)
        if cached is not None:
            return cached

        distances = {source: 0}
        queue = deque([source])
        while queue:
            current = queue.popleft()
            for neighbor in self.adjacency[current]:
                if neighbor not in distances:
                    distances[neighbor] = distances[current] + 1
                    queue.append(neighbor)
        # racing writers compute identical maps; first one wins
        return self._hops.setdefault(source, distances)

    def require_node(self, name: str) -> None:
        """Raise UnknownNode unless name is a node."""
        if name not in self.adjacency:
            raise UnknownNode(f"'{name}' is not a package in the dependency graph")


def build_graph(snapshot: Snapshot) -> DependencyGraph:
    """Resolve every package's requires against provides and package names.

    An edge A-B exists when A requires a capability that B provides or that
    equals B's name. Self-edges are dropped; capabilities with no provider are
    recorded as unresolved.
    """
    providers: Dict[str, Set[str]] = {}
    for package in snapshot.packages:
        providers.setdefault(package.name, set()).add(package.name)
        for capability in package.provides:
            providers.setdefault(capability, set()).add(package.name)

    adjacency: Dict[str, Set[str]] = {package.name: set() for package in snapshot.packages}
    unresolved: List[Tuple[str, str]] = []

    for package in snapshot.packages:
        for capability in package.requires:
            targets = providers.get(capability)
            if not targets:
                unresolved.append((package.name, capability))
                continue
            for target in targets:
                if target == package.name:
                    continue
                adjacency[package.name].add(target)
                adjacency[target].add(package.name)

    graph = DependencyGraph(
        nodes=tuple(package.name for package in snapshot.packages),
        adjacency={name: frozenset(neighbors) for name, neighbors in adjacency.items()},
        unresolved=tuple(unresolved),
    )
    logger.info(
        f"Dependency graph for {snapshot.distribution} {snapshot.version}: "
        f"{len(graph.nodes)} nodes, {graph.edge_count()} edges, {len(unresolved)} unresolved"
    )
    return graph


def shortest_hops(graph: DependencyGraph, a: str, b: str) -> Optional[int]:
    """Length of the shortest undirected path, None when disconnected."""
    graph.require_node(b)
    return graph.distances_from(a).get(b)


def dependency_degree(graph: DependencyGraph, a: str, b: str) -> float:
    """1 / hops between two distinct packages; 0.0 when disconnected.

    Raises:
        UnknownNode: a or b is not a node
        SamePackage: a == b
    """
    if a == b:
        raise SamePackage(f"dependency degree of '{a}' with itself is undefined")
    hops = shortest_hops(graph, a, b)
    if hops is None:
        return 0.0
    return 1.0 / hops
