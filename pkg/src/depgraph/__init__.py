"""Package dependency graph and dependency-degree queries."""

from .graph import DependencyGraph, build_graph, dependency_degree, shortest_hops

__all__ = ["DependencyGraph", "build_graph", "dependency_degree", "shortest_hops"]
