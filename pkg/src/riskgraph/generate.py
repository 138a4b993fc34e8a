"""Seeded random instances for self-tests."""

import random

from .graph import Graph, is_connected
from .risk import Threat, ThreatProfile


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    labels = [f"v{i}" for i in range(n)]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(labels, edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[i], order[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    g = Graph([f"v{i}" for i in range(n)], sorted(edges))
    assert is_connected(g) or n == 0
    return g


def random_profile(rng: random.Random, n: int, max_threats: int = 3,
                   max_damage: float = 100.0) -> ThreatProfile:
    table = {}
    for v in range(n):
        count = rng.randint(0, max_threats)
        table[v] = [
            Threat(f"t{v}_{i}", rng.random(), rng.uniform(0.0, max_damage))
            for i in range(count)
        ]
    return ThreatProfile(n, table)
