"""Threat-based initial risk, neighbor-averaged modified risk, and the induced distance."""

import logging
import math
from dataclasses import dataclass
from typing import Collection, Mapping, Sequence

import numpy as np

from .errors import EmptyCluster, InvalidThreat, InvalidVertex, OverlappingClusters, UnknownVertex
from .graph import Graph

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Threat:
    name: str
    probability: float
    damage: float

    def __post_init__(self):
        p, d = self.probability, self.damage
        if isinstance(p, bool) or not isinstance(p, (int, float)) or not 0.0 <= p <= 1.0:
            raise InvalidThreat(f"threat {self.name!r}: probability {p!r} not in [0, 1]")
        if isinstance(d, bool) or not isinstance(d, (int, float)) or not math.isfinite(d) or d < 0:
            raise InvalidThreat(f"threat {self.name!r}: damage {d!r} must be finite and >= 0")

    @property
    def expected_loss(self) -> float:
        return float(self.probability) * float(self.damage)


class ThreatProfile:
    """Threat sets T(v) for every vertex of a host graph (empty when unlisted)."""

    def __init__(self, n: int, threats: Mapping[int, Sequence[Threat]] = None):
        self.n = n
        table: list[tuple[Threat, ...]] = [()] * n
        for v, ts in (threats or {}).items():
            if not isinstance(v, int) or not 0 <= v < n:
                raise InvalidVertex(f"threat profile names invalid vertex id {v!r}")
            table[v] = tuple(ts)
        self._table = tuple(table)

    @classmethod
    def from_labels(cls, g: Graph, threats: Mapping[str, Sequence[Threat]]) -> "ThreatProfile":
        by_id = {}
        for label, ts in threats.items():
            try:
                by_id[g.vertex_id(label)] = ts
            except InvalidVertex:
                raise UnknownVertex(f"threats given for unknown vertex {label!r}") from None
        missing = [g.labels[v] for v in range(g.n) if v not in by_id]
        if missing:
            log.warning("no threats listed for %d vertices (risk 0): %s",
                        len(missing), ", ".join(missing))
        return cls(g.n, by_id)

    def threats(self, v: int) -> tuple[Threat, ...]:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidVertex(f"invalid vertex id {v!r}")
        return self._table[v]


def initial_risk(profile: ThreatProfile, v: int) -> float:
    """Expected loss: sum of probability * damage over the threats against ``v``."""
    total = 0.0
    for t in profile.threats(v):
        total += t.expected_loss
    return total


def neighbor_average(g: Graph, r0: Sequence[float], v: int) -> float:
    """Mean initial risk over N(v); 0 for an isolated vertex."""
    nbrs = g.sorted_neighbors(v)
    if not nbrs:
        return 0.0
    total = 0.0
    for u in nbrs:
        total += float(r0[u])
    return total / len(nbrs)


@dataclass(frozen=True)
class RiskAssessment:
    """Per-vertex initial risk ``r0``, neighbor average ``f`` and modified risk ``r``."""

    r0: np.ndarray
    f: np.ndarray
    r: np.ndarray

    @property
    def n(self) -> int:
        return len(self.r)

    def check_vertex(self, v) -> None:
        if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or not 0 <= v < self.n:
            raise InvalidVertex(f"invalid vertex id {v!r}")

    def distance(self, u: int, v: int) -> float:
        self.check_vertex(u)
        self.check_vertex(v)
        return abs(float(self.r[u]) - float(self.r[v]))

    @classmethod
    def from_risks(cls, r) -> "RiskAssessment":
        """Assessment with given modified risks (r0 = r, f = 0); handy for clustering-only use."""
        r = _frozen(r)
        return cls(r, _frozen(np.zeros(len(r))), r)


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=np.float64)
    arr.flags.writeable = False
    return arr


def assess(g: Graph, profile: ThreatProfile) -> RiskAssessment:
    if profile.n != g.n:
        raise InvalidVertex(f"threat profile covers {profile.n} vertices, graph has {g.n}")
    r0 = [initial_risk(profile, v) for v in range(g.n)]
    f = [neighbor_average(g, r0, v) for v in range(g.n)]
    r = [a + b for a, b in zip(r0, f)]
    return RiskAssessment(_frozen(r0), _frozen(f), _frozen(r))


def distance(a: RiskAssessment, u: int, v: int) -> float:
    return a.distance(u, v)


def cluster_distance(a: RiskAssessment, c1: Collection[int], c2: Collection[int]) -> float:
    """Smallest distance between a vertex of ``c1`` and a vertex of ``c2``."""
    if not c1 or not c2:
        raise EmptyCluster("cluster distance needs two non-empty clusters")
    s1, s2 = set(c1), set(c2)
    common = s1 & s2
    if common:
        raise OverlappingClusters(f"clusters share vertices {sorted(common)}")
    return min(a.distance(u, v) for u in sorted(s1) for v in sorted(s2))
