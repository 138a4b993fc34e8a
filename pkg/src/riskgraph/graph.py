"""Finite simple undirected graphs over dense integer vertex ids."""

from collections import deque
from typing import Iterable, Sequence

from .errors import DuplicateEdge, DuplicateLabel, InvalidVertex, SelfLoop, UnknownEndpoint


class Graph:
    """Immutable simple undirected graph.

    Vertices are ``0..n-1`` in input order; ``labels[i]`` is the external
    name of vertex ``i``. Edges are stored as ``(u, v)`` tuples with
    ``u < v``. Neighbor lists are sorted ascending so every traversal that
    walks them breaks ties by lowest id.
    """

    __slots__ = ("_labels", "_index", "_edges", "_adj", "_adj_sets")

    def __init__(self, labels: Sequence[str], edges: Iterable[tuple[int, int]]):
        labels = tuple(labels)
        n = len(labels)
        adj: list[set[int]] = [set() for _ in range(n)]
        edge_set = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertex(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at {labels[u]!r}")
            e = (u, v) if u < v else (v, u)
            if e in edge_set:
                raise DuplicateEdge(f"duplicate edge ({labels[e[0]]!r}, {labels[e[1]]!r})")
            edge_set.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self._labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._edges = tuple(sorted(edge_set))
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._adj_sets = tuple(frozenset(s) for s in adj)

    def __setattr__(self, name, value):
        if hasattr(self, "_adj_sets"):
            raise AttributeError("Graph is immutable")
        object.__setattr__(self, name, value)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._edges == other._edges

    def __hash__(self):
        return hash((self._labels, self._edges))

    @property
    def n(self) -> int:
        return len(self._labels)

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def label(self, v: int) -> str:
        self.check_vertex(v)
        return self._labels[v]

    def vertex_id(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidVertex(f"unknown vertex {label!r}") from None

    def check_vertex(self, v) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.n:
            raise InvalidVertex(f"invalid vertex id {v!r} (graph has {self.n} vertices)")

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self._adj_sets[v]

    def sorted_neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return v in self._adj_sets[u]

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def is_complete(self) -> bool:
        n = self.n
        return self.m == n * (n - 1) // 2


def build_graph(vertex_labels: Sequence[str], edge_list: Iterable[Sequence[str]]) -> Graph:
    """Build a :class:`Graph` from labels and label pairs.

    Ids follow the order of ``vertex_labels``. Raises DuplicateLabel,
    UnknownEndpoint, SelfLoop or DuplicateEdge naming the offending item.
    """
    index: dict[str, int] = {}
    for lab in vertex_labels:
        if lab in index:
            raise DuplicateLabel(f"duplicate vertex label {lab!r}")
        index[lab] = len(index)
    pairs = []
    seen = set()
    for a, b in edge_list:
        for end in (a, b):
            if end not in index:
                raise UnknownEndpoint(f"edge ({a!r}, {b!r}) has unknown endpoint {end!r}")
        u, v = index[a], index[b]
        if u == v:
            raise SelfLoop(f"self-loop at {a!r}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"duplicate edge ({a!r}, {b!r})")
        seen.add(key)
        pairs.append((u, v))
    return Graph(list(index), pairs)


def neighbors(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def connected_components(g: Graph) -> list[list[int]]:
    """Blocks of mutually reachable vertices, each sorted, ordered by smallest id."""
    seen = [False] * g.n
    blocks = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.sorted_neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    queue.append(w)
        blocks.append(sorted(block))
    return blocks


def component_count(g: Graph) -> int:
    return len(connected_components(g))


def is_connected(g: Graph) -> bool:
    return component_count(g) == 1


def validate_path(g: Graph, path: Sequence[int]) -> bool:
    """True iff ``path`` is non-empty, repeats no vertex and walks only edges of ``g``."""
    if not path:
        return False
    for v in path:
        if not isinstance(v, int) or not 0 <= v < g.n:
            return False
    if len(set(path)) != len(path):
        return False
    return all(path[i + 1] in g.neighbors(path[i]) for i in range(len(path) - 1))
