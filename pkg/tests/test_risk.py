from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riskgraph.errors import EmptyCluster, InvalidThreat, InvalidVertex, OverlappingClusters, UnknownVertex
from riskgraph.generate import random_graph, random_profile
from riskgraph.graph import Graph
from riskgraph.risk import (
    RiskAssessment,
    Threat,
    ThreatProfile,
    assess,
    cluster_distance,
    distance,
    initial_risk,
    neighbor_average,
)

from conftest import graphs, named, rng


def profile(n, table):
    return ThreatProfile(n, {v: [Threat(f"t{i}", p, d) for i, (p, d) in enumerate(ts)]
                             for v, ts in table.items()})


def test_initial_risk_examples():
    prof = profile(3, {0: [], 1: [(1.0, 7)], 2: [(0.5, 10), (0.1, 100)]})
    assert initial_risk(prof, 0) == 0
    assert initial_risk(prof, 1) == 7
    expected = Fraction(1, 2) * 10 + Fraction(1, 10) * 100
    assert initial_risk(prof, 2) == pytest.approx(float(expected), rel=1e-15)
    with pytest.raises(InvalidVertex):
        initial_risk(prof, 3)


@pytest.mark.parametrize("p, d", [(1.5, 10), (-0.1, 1), (0.5, -1), (0.5, float("inf")), (True, 1)])
def test_invalid_threats(p, d):
    with pytest.raises(InvalidThreat):
        Threat("bad", p, d)


def fig3():
    # u and v share r0; N(v) has risks {1, 1}, N(u) has risks {1, 10}
    g = named(["u", "v", "a", "b", "c", "d"], ["ua", "ub", "vc", "vd"])
    table = {"u": [Threat("x", 1.0, 3.0)], "v": [Threat("x", 1.0, 3.0)],
             "a": [Threat("x", 1.0, 1.0)], "b": [Threat("x", 1.0, 10.0)],
             "c": [Threat("x", 1.0, 1.0)], "d": [Threat("x", 1.0, 1.0)]}
    return g, ThreatProfile.from_labels(g, table)


def test_neighbor_average_examples():
    g, prof = fig3()
    r0 = [initial_risk(prof, v) for v in range(g.n)]
    assert neighbor_average(g, r0, 1) == 1.0
    assert neighbor_average(g, r0, 0) == 5.5
    iso = named("ab", [])
    assert neighbor_average(iso, [3.0, 4.0], 0) == 0.0


def test_fig3_ordering():
    g, prof = fig3()
    a = assess(g, prof)
    assert a.r[0] > a.r[1]
    assert a.r[0] - a.r[1] == 4.5


def test_assess_examples():
    g = named("ab", ["ab"])
    a = assess(g, profile(2, {0: [(1.0, 2.0)], 1: [(1.0, 4.0)]}))
    assert list(a.r) == [6.0, 6.0]
    assert list(a.f) == [4.0, 2.0]
    z = assess(g, ThreatProfile(2))
    assert list(z.r) == [0.0, 0.0]


def test_missing_threats_warn(caplog):
    g = named("ab", ["ab"])
    with caplog.at_level("WARNING"):
        prof = ThreatProfile.from_labels(g, {"a": [Threat("t", 0.5, 2.0)]})
    assert prof.threats(1) == ()
    assert "b" in caplog.text


def test_unknown_vertex_in_profile():
    g = named("ab", ["ab"])
    with pytest.raises(UnknownVertex, match="'z'"):
        ThreatProfile.from_labels(g, {"z": []})


def test_distance_examples():
    a = RiskAssessment.from_risks([6.0, 1.5, 3.0])
    assert distance(a, 0, 0) == 0
    assert distance(a, 0, 1) == 4.5
    with pytest.raises(InvalidVertex):
        distance(a, 0, 9)


def test_cluster_distance_examples():
    a = RiskAssessment.from_risks([1, 5, 6, 20, 5])
    assert cluster_distance(a, {0}, {2}) == distance(a, 0, 2)
    assert cluster_distance(a, {0, 1}, {2, 3}) == 1
    assert cluster_distance(a, {1}, {4}) == 0
    with pytest.raises(EmptyCluster):
        cluster_distance(a, set(), {1})
    with pytest.raises(OverlappingClusters):
        cluster_distance(a, {0, 1}, {1, 2})


def test_assessment_is_read_only():
    a = RiskAssessment.from_risks([1.0, 2.0])
    with pytest.raises(ValueError):
        a.r[0] = 5.0


risks = st.lists(st.floats(0, 1e6, allow_nan=False), min_size=1, max_size=12)


@given(risks)
def test_pseudometric(rs):
    a = RiskAssessment.from_risks(rs)
    n = a.n
    for u in range(n):
        assert distance(a, u, u) == 0
        for v in range(n):
            duv = distance(a, u, v)
            assert duv >= 0
            assert duv == distance(a, v, u)
            for w in range(n):
                assert duv <= (distance(a, u, w) + distance(a, w, v)) * (1 + 1e-12)


@settings(max_examples=50)
@given(graphs(max_n=10), st.integers(0, 2**32))
def test_r_dominates_r0(g, seed):
    a = assess(g, random_profile(rng(seed), g.n))
    assert np.all(a.r >= a.r0)
    assert np.all(a.f >= 0)
    assert np.array_equal(a.r, a.r0 + a.f)
    assert np.all(np.isfinite(a.r))


@settings(max_examples=50)
@given(graphs(min_n=2, max_n=10), st.integers(0, 2**32), st.data())
def test_raising_a_neighbor_raises_only_its_neighbors(g, seed, data):
    edges = g.edges
    if not edges:
        return
    x, v = data.draw(st.sampled_from(edges))
    base = {w: [Threat("t", 1.0, float(d))] for w, d in
            enumerate(data.draw(st.lists(st.integers(0, 100), min_size=g.n, max_size=g.n)))}
    bumped = dict(base)
    bumped[x] = [Threat("t", 1.0, base[x][0].damage + 7.0)]
    before = assess(g, ThreatProfile(g.n, base))
    after = assess(g, ThreatProfile(g.n, bumped))
    assert after.r[v] > before.r[v]
    for w in range(g.n):
        if w != x and w not in g.neighbors(x):
            assert after.r[w] == before.r[w]


def test_assess_is_pure():
    r = rng(11)
    g = random_graph(r, 30, 0.2)
    prof = random_profile(r, 30)
    a1, a2 = assess(g, prof), assess(g, prof)
    assert a1.r.tobytes() == a2.r.tobytes()
    assert a1.f.tobytes() == a2.f.tobytes()


def test_profile_size_mismatch():
    with pytest.raises(InvalidVertex):
        assess(Graph(["a"], []), ThreatProfile(2))
