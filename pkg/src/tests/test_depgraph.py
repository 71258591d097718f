"""
Tests for the package dependency graph.
"""

import random
from collections import deque

import pytest

from ..depgraph import build_graph, dependency_degree, shortest_hops
from ..errors import SamePackage, UnknownNode
from ..ingest import PackageMeta

pytestmark = pytest.mark.unit


def _naive_hops(snapshot, a, b):
    """BFS over edges rebuilt from scratch, for cross-checking."""
    providers = {}
    for package in snapshot.packages:
        for capability in [package.name] + package.provides:
            providers.setdefault(capability, set()).add(package.name)
    edges = set()
    for package in snapshot.packages:
        for capability in package.requires:
            for target in providers.get(capability, ()):
                if target != package.name:
                    edges.add(frozenset((package.name, target)))

    seen = {a: 0}
    queue = deque([a])
    while queue:
        node = queue.popleft()
        for edge in edges:
            if node in edge:
                (other,) = edge - {node}
                if other not in seen:
                    seen[other] = seen[node] + 1
                    queue.append(other)
    return seen.get(b)


def _random_universe(rng, size):
    """Packages n0..n{size-1} with random capabilities, some requires unresolved."""
    names = [f"n{i}" for i in range(size)]
    capabilities = [f"lib{i}.so" for i in range(size // 3 + 1)]
    return [
        PackageMeta(
            name=name,
            provides=rng.sample(capabilities, rng.randint(0, 2)),
            requires=rng.sample(names + capabilities + ["missing"], rng.randint(0, 3)),
        )
        for name in names
    ]


def _all_pairs_hops(packages):
    """Floyd-Warshall over edges rebuilt from scratch; None for unreachable pairs."""
    names = [p.name for p in packages]
    providers = {}
    for package in packages:
        for capability in [package.name] + package.provides:
            providers.setdefault(capability, set()).add(package.name)
    inf = float("inf")
    dist = {a: {b: (0 if a == b else inf) for b in names} for a in names}
    for package in packages:
        for capability in package.requires:
            for target in providers.get(capability, ()):
                if target != package.name:
                    dist[package.name][target] = dist[target][package.name] = 1
    for k in names:
        for i in names:
            for j in names:
                if dist[i][k] + dist[k][j] < dist[i][j]:
                    dist[i][j] = dist[i][k] + dist[k][j]
    return {a: {b: (None if d == inf else int(d)) for b, d in row.items()} for a, row in dist.items()}


class TestBuildGraph:
    """Graph construction from requires/provides."""

    def test_mini_graph_shape(self, mini_snapshot):
        """Every package is a node; capabilities resolve to 60 distinct edges."""
        graph = build_graph(mini_snapshot)

        assert len(graph.nodes) == 40
        assert graph.edge_count() == 60
        assert graph.unresolved == (
            ("gcc", "glibc-devel"),
            ("gcc", "binutils"),
            ("php", "libxml2.so.2"),
        )

    def test_edges_are_undirected(self, mini_snapshot):
        """A requires B puts each in the other's neighbor list."""
        graph = build_graph(mini_snapshot)

        assert "glibc" in graph.neighbors("bash")
        assert "bash" in graph.neighbors("glibc")
        assert graph.neighbors("mod_ssl") == ["httpd", "openssl-libs"]

    def test_virtual_provides_resolve(self, mini_snapshot):
        """php requires 'webserver', which httpd provides."""
        graph = build_graph(mini_snapshot)

        assert graph.neighbors("php") == ["httpd"]

    def test_isolated_packages(self, mini_snapshot):
        graph = build_graph(mini_snapshot)

        for name in ["gcc", "dejavu-sans-fonts", "liberation-fonts", "kernel", "rust-serde-devel"]:
            assert graph.neighbors(name) == []

    def test_self_requirement_dropped(self, make_snapshot):
        """A package requiring its own capability gets no self-edge."""
        snapshot = make_snapshot(
            [], [PackageMeta(name="a", provides=["liba.so"], requires=["liba.so", "a"])]
        )

        graph = build_graph(snapshot)

        assert graph.neighbors("a") == []
        assert graph.unresolved == ()


class TestDependencyDegree:
    """1 / hops between two packages."""

    @pytest.mark.parametrize(
        "a, b, expected",
        [
            ("bash", "coreutils", 1.0),
            ("kdelibs", "kdebase", 1.0),
            ("vim-enhanced", "nano", 0.5),
            ("gnome-shell", "nautilus", 0.5),
            ("php", "httpd", 1.0),
            ("gcc", "make", 0.0),
            ("dejavu-sans-fonts", "liberation-fonts", 0.0),
        ],
    )
    def test_known_degrees(self, mini_snapshot, a, b, expected):
        graph = build_graph(mini_snapshot)

        assert dependency_degree(graph, a, b) == expected

    def test_symmetric_and_matches_naive_bfs(self, mini_snapshot):
        """Degree is symmetric and agrees with a from-scratch BFS on random pairs."""
        graph = build_graph(mini_snapshot)
        names = sorted(mini_snapshot.package_names())
        rng = random.Random(7)

        for _ in range(60):
            a, b = rng.sample(names, 2)
            hops = _naive_hops(mini_snapshot, a, b)
            expected = 0.0 if hops is None else 1.0 / hops
            assert dependency_degree(graph, a, b) == expected
            assert dependency_degree(graph, b, a) == expected
            assert shortest_hops(graph, a, b) == hops

    def test_same_package_raises(self, mini_snapshot):
        with pytest.raises(SamePackage):
            dependency_degree(build_graph(mini_snapshot), "bash", "bash")

    def test_unknown_node_raises(self, mini_snapshot):
        """Names outside the universe are not nodes."""
        graph = build_graph(mini_snapshot)

        with pytest.raises(UnknownNode):
            dependency_degree(graph, "kde-l10n-extra", "kdelibs")
        with pytest.raises(UnknownNode):
            dependency_degree(graph, "kdelibs", "kde-l10n-extra")


class TestRandomGraphs:
    """Hop counts on generated graphs of up to 50 packages."""

    def test_matches_all_pairs_search(self, make_snapshot):
        rng = random.Random(43)
        for _ in range(30):
            packages = _random_universe(rng, rng.randint(2, 50))
            graph = build_graph(make_snapshot([], packages))
            expected = _all_pairs_hops(packages)

            for a, row in expected.items():
                for b, hops in row.items():
                    assert shortest_hops(graph, a, b) == hops, (a, b)
                    if a != b:
                        degree = 0.0 if hops is None else 1.0 / hops
                        assert dependency_degree(graph, a, b) == degree

    def test_hops_triangle_inequality(self, make_snapshot):
        rng = random.Random(47)
        for _ in range(20):
            packages = _random_universe(rng, rng.randint(3, 30))
            graph = build_graph(make_snapshot([], packages))
            names = [p.name for p in packages]

            for _ in range(200):
                a, b, c = rng.sample(names, 3)
                ab, bc, ac = (
                    shortest_hops(graph, a, b),
                    shortest_hops(graph, b, c),
                    shortest_hops(graph, a, c),
                )
                assert shortest_hops(graph, b, a) == ab
                if ab is not None and bc is not None:
                    assert ac is not None
                    assert ac <= ab + bc
