"""Shared graph builders and random generators for the test suite."""

import random
from pathlib import Path

import pytest

from flowpoly.multigraph import MultiGraph, bridges

FIXTURES = Path(__file__).parent / "fixtures"


def loop_graph() -> MultiGraph:
    return MultiGraph(1, [(0, 0)])


def parallel_graph(k: int) -> MultiGraph:
    """Two vertices joined by k parallel edges."""
    return MultiGraph(2, [(0, 1)] * k)


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])


def random_connected_multigraph(
    rng: random.Random, max_n: int = 6, max_m: int = 10, max_mult: int = 3
) -> MultiGraph:
    """Random connected multigraph: a spanning tree plus extra edges and
    loops, no parallel class above max_mult."""
    n = rng.randint(1, max_n)
    while n - 1 > max_m:
        n = rng.randint(1, max_n)
    edges: list[tuple[int, int]] = []
    counts: dict[tuple[int, int], int] = {}
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v))
        counts[(u, v)] = 1
    extra = rng.randint(0, max_m - len(edges))
    for _ in range(extra):
        for _attempt in range(8):
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u > v:
                u, v = v, u
            if counts.get((u, v), 0) < max_mult:
                counts[(u, v)] = counts.get((u, v), 0) + 1
                edges.append((u, v))
                break
    return MultiGraph(n, edges)


def random_bridgeless_multigraph(
    rng: random.Random, max_n: int = 5, max_m: int = 10, max_mult: int = 3
) -> MultiGraph:
    """Random connected bridgeless multigraph, built by doubling bridges
    until none remain."""
    while True:
        g = random_connected_multigraph(rng, max_n, max_m - 2, max_mult - 1)
        guard = 0
        while True:
            b = bridges(g)
            if not b:
                return g
            guard += 1
            if guard > max_m or g.m >= max_m:
                break
            i = min(b)
            g = MultiGraph(g.n, list(g.edges) + [g.edges[i]])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)
