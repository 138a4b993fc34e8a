"""Partitioning vertices into k risk classes.

:func:`farthest_first` is the classification path. :func:`exact_optimal` and
:func:`brute_force_optimal` compute true optima and exist to audit it.
"""

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .errors import BadK, DuplicateCenter, EmptyCenters, InvalidPartition, TooLarge
from .risk import RiskAssessment

BRUTE_FORCE_MAX_N = 12


@dataclass(frozen=True)
class Clustering:
    k: int
    centers: tuple[int, ...]
    partition: tuple[tuple[int, ...], ...]
    objective: float

    def labels(self, n: int) -> list[int]:
        out = [-1] * n
        for i, block in enumerate(self.partition):
            for v in block:
                out[v] = i
        return out


def _check_k(a: RiskAssessment, k) -> int:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or not 1 <= k <= a.n:
        raise BadK(f"k must be an integer in 1..{a.n}, got {k!r}")
    return int(k)


def objective(a: RiskAssessment, partition: Sequence[Sequence[int]]) -> float:
    """Largest distance between two vertices sharing a block.

    With scalar risks this is the largest in-block range ``max r - min r``;
    float subtraction is monotone, so the range is exactly the largest
    pairwise distance.
    """
    seen = set()
    for block in partition:
        if len(block) == 0:
            raise InvalidPartition("partition has an empty block")
        for v in block:
            a.check_vertex(v)
            if v in seen:
                raise InvalidPartition(f"vertex {v} appears in more than one block")
            seen.add(v)
    if len(seen) != a.n:
        missing = sorted(set(range(a.n)) - seen)
        raise InvalidPartition(f"partition misses vertices {missing}")
    r = a.r
    worst = 0.0
    for block in partition:
        vals = [float(r[v]) for v in block]
        worst = max(worst, max(vals) - min(vals))
    return worst


def _make(a: RiskAssessment, centers, blocks) -> Clustering:
    blocks = tuple(tuple(sorted(int(v) for v in b)) for b in blocks)
    return Clustering(len(blocks), tuple(int(c) for c in centers), blocks, objective(a, blocks))


def assign_to_centers(a: RiskAssessment, centers: Sequence[int]) -> list[list[int]]:
    """Blocks induced by ``centers``: each vertex joins its nearest center.

    A center always stays in its own block, even when an earlier center has
    the same risk; any other tie goes to the earliest center.
    """
    if len(centers) == 0:
        raise EmptyCenters("need at least one center")
    for c in centers:
        a.check_vertex(c)
    if len(set(centers)) != len(centers):
        raise DuplicateCenter(f"centers repeat a vertex: {list(centers)}")
    own = {c: i for i, c in enumerate(centers)}
    blocks = [[] for _ in centers]
    for v in range(a.n):
        if v in own:
            blocks[own[v]].append(v)
            continue
        best_i, best_d = 0, a.distance(v, centers[0])
        for i in range(1, len(centers)):
            d = a.distance(v, centers[i])
            if d < best_d:
                best_i, best_d = i, d
        blocks[best_i].append(v)
    return blocks


def farthest_first(a: RiskAssessment, k: int) -> Clustering:
    """Greedy k-center classification.

    The first center is the riskiest vertex. Each round promotes the vertex
    farthest from its own block's center (lowest id on ties, never an
    existing center) and reassigns vertices that are now strictly closer to
    it. The result's objective is at most twice the optimum.
    """
    k = _check_k(a, k)
    first = int(np.argmax(a.r))
    centers, labels = kernels.farthest_first(a.r, k, first)
    blocks = [[] for _ in centers]
    for v, i in enumerate(labels):
        blocks[i].append(v)
    return _make(a, centers, blocks)


def _split_to_k(blocks: list[list[int]], k: int) -> list[list[int]]:
    # peel the last member off the largest block until k blocks exist
    blocks = [list(b) for b in blocks]
    while len(blocks) < k:
        i = max(range(len(blocks)), key=lambda j: (len(blocks[j]), -j))
        blocks.insert(i + 1, [blocks[i].pop()])
    return blocks


def _block_center(a: RiskAssessment, block: Sequence[int]) -> int:
    # member with the smallest eccentricity, i.e. nearest the middle of the block's range
    vals = [float(a.r[v]) for v in block]
    lo, hi = min(vals), max(vals)
    return min(block, key=lambda c: (max(abs(float(a.r[c]) - lo), abs(hi - float(a.r[c]))), c))


def _bits(x: float) -> int:
    return int(np.float64(x).view(np.int64))


def _from_bits(b: int) -> float:
    return float(np.int64(b).view(np.float64))


def exact_optimal(a: RiskAssessment, k: int) -> Clustering:
    """Minimum-diameter k-partition for scalar risks.

    Some optimal partition cuts the risk-sorted order into contiguous runs,
    and greedy left-to-right packing decides whether diameter ``D`` fits in
    ``k`` runs. Non-negative doubles order like their bit patterns, so
    bisecting the bit pattern finds the smallest feasible ``D`` exactly; it
    is always one of the pairwise differences.
    """
    k = _check_k(a, k)
    order = sorted(range(a.n), key=lambda v: (float(a.r[v]), v))
    sr = np.array([a.r[v] for v in order], dtype=np.float64)

    def fits(d):
        return kernels.greedy_block_count(sr, d) <= k

    if fits(0.0):
        best = 0.0
    else:
        lo, hi = _bits(0.0), _bits(float(sr[-1] - sr[0]))
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if fits(_from_bits(mid)):
                hi = mid
            else:
                lo = mid
        best = _from_bits(hi)

    blocks = [[order[0]]]
    start = float(sr[0])
    for v, x in zip(order[1:], sr[1:]):
        if float(x) - start > best:
            blocks.append([v])
            start = float(x)
        else:
            blocks[-1].append(v)
    blocks = _split_to_k(blocks, k)
    return _make(a, [_block_center(a, b) for b in blocks], blocks)


def brute_force_optimal(a: RiskAssessment, k: int) -> Clustering:
    """Exhaustive search over partitions into at most ``k`` blocks.

    Uses only pairwise distances, never the ordering of risks, so it is an
    independent check on :func:`exact_optimal`. Branch-and-bound keeps the
    first partition found with the smallest diameter.
    """
    n = a.n
    if n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}, got n={n}")
    k = _check_k(a, k)
    dist = [[a.distance(u, v) for v in range(n)] for u in range(n)]
    blocks: list[list[int]] = []
    diam: list[float] = []
    best = [math.inf, None]

    def place(v, current):
        if current >= best[0]:
            return
        if v == n:
            best[0] = current
            best[1] = [list(b) for b in blocks]
            return
        for j, block in enumerate(blocks):
            d = max(diam[j], max(dist[v][u] for u in block))
            old = diam[j]
            block.append(v)
            diam[j] = d
            place(v + 1, max(current, d))
            block.pop()
            diam[j] = old
        if len(blocks) < k:
            blocks.append([v])
            diam.append(0.0)
            place(v + 1, current)
            blocks.pop()
            diam.pop()

    place(0, 0.0)
    found = _split_to_k(best[1], k)
    return _make(a, [_block_center(a, b) for b in found], found)


@dataclass(frozen=True)
class ApproximationAudit:
    greedy: float
    optimal: float

    @property
    def ratio(self) -> float:
        if self.optimal > 0:
            return self.greedy / self.optimal
        return 1.0 if self.greedy == 0 else math.inf

    @property
    def within_bound(self) -> bool:
        return self.greedy <= 2 * self.optimal + 1e-9


def audit(a: RiskAssessment, k: int) -> ApproximationAudit:
    return ApproximationAudit(farthest_first(a, k).objective, exact_optimal(a, k).objective)
