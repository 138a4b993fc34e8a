"""Exhaustive connectivity oracles for small graphs.

These enumerate removal sets directly and share no code with the flow
routines, so they can be used to cross-check them.
"""

from itertools import combinations

from .errors import TooLarge, TooSmall
from .graph import Graph

EXHAUSTIVE_MAX_N = 9


def _connected(n, alive, adj):
    # alive: bitmask of remaining vertices, adj: per-vertex neighbor bitmasks
    if alive == 0:
        return False
    start = alive & -alive
    reach = start
    frontier = start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        nxt = adj[low.bit_length() - 1] & alive & ~reach
        reach |= nxt
        frontier |= nxt
    return reach == alive


def _check(g):
    if g.n < 2:
        raise TooSmall(f"need at least 2 vertices, graph has {g.n}")
    if g.n > EXHAUSTIVE_MAX_N:
        raise TooLarge(f"exhaustive oracles are limited to n <= {EXHAUSTIVE_MAX_N}, got n={g.n}")


def min_disconnecting_edge_set(g: Graph) -> int:
    """Size of the smallest edge set whose removal disconnects ``g``.

    Sizes are tried in increasing order. Removing every edge at a
    minimum-degree vertex always disconnects, so the search stops there.
    """
    _check(g)
    n = g.n
    full = (1 << n) - 1
    base = [0] * n
    for u, v in g.edges:
        base[u] |= 1 << v
        base[v] |= 1 << u
    if not _connected(n, full, base):
        return 0
    for size in range(1, g.min_degree()):
        for removed in combinations(g.edges, size):
            adj = list(base)
            for u, v in removed:
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
            if not _connected(n, full, adj):
                return size
    return g.min_degree()


def min_separating_vertex_set(g: Graph) -> int:
    """Size of the smallest vertex set whose removal leaves >= 2 vertices, disconnected.

    Complete graphs have no such set; by convention ``n - 1`` is returned.
    """
    _check(g)
    n = g.n
    full = (1 << n) - 1
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    for size in range(0, n - 1):
        for removed in combinations(range(n), size):
            mask = full
            for v in removed:
                mask &= ~(1 << v)
            if not _connected(n, mask, adj):
                return size
    return n - 1
