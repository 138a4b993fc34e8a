"""Local and global vertex/edge connectivity by unit-capacity max flow.

Disjoint-path witnesses come from decomposing the final flow, so the number
of returned paths always equals the computed local connectivity.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .errors import BadK, SameVertex, TooSmall
from .graph import Graph, is_connected


@dataclass(frozen=True)
class FlowNetwork:
    """Residual network in CSR form.

    ``capacity`` holds the initial residual capacities; arcs flagged in
    ``original`` are the modelled unit arcs, the rest are zero-capacity
    reverse arcs added for the residual graph.
    """

    nodes: int
    offsets: np.ndarray
    tail: np.ndarray
    head: np.ndarray
    rev: np.ndarray
    capacity: np.ndarray
    original: np.ndarray
    source: int
    sink: int

    def solve(self):
        """Run max flow on a private copy; return ``(value, residual)``."""
        res = self.capacity.copy()
        value = kernels.max_flow(self.offsets, self.head, self.rev, res, self.source, self.sink)
        return int(value), res

    def with_terminals(self, source: int, sink: int) -> "FlowNetwork":
        return FlowNetwork(self.nodes, self.offsets, self.tail, self.head, self.rev,
                           self.capacity, self.original, source, sink)

    def arc_flows(self, residual: np.ndarray) -> np.ndarray:
        return np.maximum(self.capacity - residual, 0)


def _csr(nodes, tails, heads, caps, revs, original):
    tails = np.asarray(tails, dtype=np.int64)
    heads = np.asarray(heads, dtype=np.int64)
    order = np.lexsort((np.arange(len(tails)), heads, tails))
    position = np.empty_like(order)
    position[order] = np.arange(len(order))
    rev = position[np.asarray(revs, dtype=np.int64)[order]]
    offsets = np.zeros(nodes + 1, dtype=np.int64)
    np.add.at(offsets, tails + 1, 1)
    offsets = np.cumsum(offsets)
    return (
        offsets,
        np.ascontiguousarray(tails[order]),
        np.ascontiguousarray(heads[order]),
        np.ascontiguousarray(rev),
        np.ascontiguousarray(np.asarray(caps, dtype=np.int64)[order]),
        np.asarray(original, dtype=bool)[order],
    )


def edge_network(g: Graph, source: int = 0, sink: int = 0) -> FlowNetwork:
    """Each undirected edge becomes two opposite unit arcs that are each other's reverse."""
    tails, heads, revs = [], [], []
    for u, v in g.edges:
        a = len(tails)
        tails += [u, v]
        heads += [v, u]
        revs += [a + 1, a]
    caps = [1] * len(tails)
    arrays = _csr(g.n, tails, heads, caps, revs, [True] * len(tails))
    return FlowNetwork(g.n, *arrays, source, sink)


def split_node_in(v: int) -> int:
    return 2 * v


def split_node_out(v: int) -> int:
    return 2 * v + 1


def vertex_split_network(g: Graph, source: int = 0, sink: int = 0) -> FlowNetwork:
    """Network on 2n nodes: ``v_in -> v_out`` per vertex, ``u_out -> v_in`` per edge direction.

    Flow runs from ``source_out`` to ``sink_in``, so the terminals' own
    split arcs never carry flow.
    """
    tails, heads, caps, revs, orig = [], [], [], [], []

    def add(x, y):
        a = len(tails)
        tails.extend((x, y))
        heads.extend((y, x))
        caps.extend((1, 0))
        revs.extend((a + 1, a))
        orig.extend((True, False))

    for v in range(g.n):
        add(split_node_in(v), split_node_out(v))
    for u, v in g.edges:
        add(split_node_out(u), split_node_in(v))
        add(split_node_out(v), split_node_in(u))
    arrays = _csr(2 * g.n, tails, heads, caps, revs, orig)
    return FlowNetwork(2 * g.n, *arrays, split_node_out(source), split_node_in(sink))


def _check_pair(g: Graph, u: int, v: int) -> None:
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise SameVertex(f"local connectivity needs two distinct vertices, got {g.labels[u]!r} twice")


def local_edge_connectivity(g: Graph, u: int, v: int) -> int:
    """Maximum number of edge-disjoint u-v paths."""
    _check_pair(g, u, v)
    value, _ = edge_network(g, u, v).solve()
    return value


def local_vertex_connectivity(g: Graph, u: int, v: int) -> int:
    """Maximum number of u-v paths sharing no vertex except u and v.

    For adjacent u, v the direct edge counts as one of the paths.
    """
    _check_pair(g, u, v)
    value, _ = vertex_split_network(g, u, v).solve()
    return value


def edge_connectivity(g: Graph) -> int:
    """Global edge connectivity: min of lambda(0, v) over every v != 0."""
    if g.n < 2:
        raise TooSmall(f"edge connectivity needs at least 2 vertices, graph has {g.n}")
    if not is_connected(g):
        return 0
    base = edge_network(g)
    best = g.min_degree()
    for v in range(1, g.n):
        value, _ = base.with_terminals(0, v).solve()
        best = min(best, value)
    return best


def vertex_connectivity(g: Graph) -> int:
    """Global vertex connectivity.

    ``n - 1`` for complete graphs, otherwise the minimum local value over
    non-adjacent pairs. Only pairs whose first vertex has index at most the
    current best are examined: a minimum separator misses one of the
    vertices ``0..kappa``, and that vertex is non-adjacent to everything on
    the far side of the separator.
    """
    n = g.n
    if n < 2:
        raise TooSmall(f"vertex connectivity needs at least 2 vertices, graph has {n}")
    if g.is_complete():
        return n - 1
    if not is_connected(g):
        return 0
    base = vertex_split_network(g)
    best = n - 1
    done = set()
    i = 0
    while i < n and i <= best:
        for j in range(n):
            if j == i or g.has_edge(i, j):
                continue
            key = (min(i, j), max(i, j))
            if key in done:
                continue
            done.add(key)
            value, _ = base.with_terminals(split_node_out(i), split_node_in(j)).solve()
            best = min(best, value)
        i += 1
    return best


def is_k_edge_connected(g: Graph, k: int) -> bool:
    if k < 1:
        raise BadK(f"k must be a positive integer, got {k}")
    if g.n == 0:
        return False
    if g.n == 1:
        return True
    return edge_connectivity(g) >= k


def is_k_connected(g: Graph, k: int) -> bool:
    if k < 1:
        raise BadK(f"k must be a positive integer, got {k}")
    if g.n < k + 1:
        return False
    return vertex_connectivity(g) >= k


def _decompose(net: FlowNetwork, residual: np.ndarray, value: int) -> list[list[int]]:
    """Split an integral flow into ``value`` simple source-sink node paths.

    Walks always take the lowest-id head among remaining flow arcs; a walk
    that revisits a node drops the closed loop (a flow cycle) and continues.
    """
    flows = net.arc_flows(residual)
    out: dict[int, list[int]] = {}
    for a in np.flatnonzero(flows):
        out.setdefault(int(net.tail[a]), []).append(int(net.head[a]))
    for heads in out.values():
        heads.sort(reverse=True)  # pop() yields lowest id
    paths = []
    for _ in range(value):
        path = [net.source]
        pos = {net.source: 0}
        x = net.source
        while x != net.sink:
            y = out[x].pop()
            if y in pos:
                for z in path[pos[y] + 1:]:
                    del pos[z]
                del path[pos[y] + 1:]
            else:
                pos[y] = len(path)
                path.append(y)
            x = y
        paths.append(path)
    return paths


def edge_disjoint_paths(g: Graph, u: int, v: int) -> list[list[int]]:
    """lambda(u, v) pairwise edge-disjoint u-v paths."""
    _check_pair(g, u, v)
    net = edge_network(g, u, v)
    value, residual = net.solve()
    return _decompose(net, residual, value)


def vertex_disjoint_paths(g: Graph, u: int, v: int) -> list[list[int]]:
    """kappa(u, v) u-v paths that share no vertex besides u and v."""
    _check_pair(g, u, v)
    net = vertex_split_network(g, u, v)
    value, residual = net.solve()
    paths = []
    for node_path in _decompose(net, residual, value):
        path = []
        for node in node_path:
            x = node // 2
            if not path or path[-1] != x:
                path.append(x)
        paths.append(path)
    return paths


@dataclass
class PairResult:
    u: int
    v: int
    kappa: int
    lam: int
    vertex_paths: Optional[list[list[int]]] = None
    edge_paths: Optional[list[list[int]]] = None


@dataclass
class ConnectivityReport:
    kappa: int
    lam: int
    min_degree: int
    per_pair: list[PairResult] = field(default_factory=list)

    @property
    def whitney_holds(self) -> bool:
        return self.kappa <= self.lam <= self.min_degree


def connectivity_report(g: Graph, pairs: Sequence[tuple[int, int]] = (),
                        witnesses: bool = False) -> ConnectivityReport:
    per_pair = []
    for u, v in pairs:
        if witnesses:
            vp = vertex_disjoint_paths(g, u, v)
            ep = edge_disjoint_paths(g, u, v)
            per_pair.append(PairResult(u, v, len(vp), len(ep), vp, ep))
        else:
            per_pair.append(PairResult(u, v, local_vertex_connectivity(g, u, v),
                                       local_edge_connectivity(g, u, v)))
    return ConnectivityReport(vertex_connectivity(g), edge_connectivity(g), g.min_degree(), per_pair)
