import itertools

import pytest
from hypothesis import given, settings

from riskgraph import oracles
from riskgraph.connectivity import (
    connectivity_report,
    edge_connectivity,
    edge_disjoint_paths,
    edge_network,
    is_k_connected,
    is_k_edge_connected,
    local_edge_connectivity,
    local_vertex_connectivity,
    vertex_connectivity,
    vertex_disjoint_paths,
    vertex_split_network,
)
from riskgraph.errors import InvalidVertex, SameVertex, TooSmall
from riskgraph.generate import random_connected_graph, random_graph
from riskgraph.graph import Graph

from _oracles import brute_local_edge, brute_local_vertex, check_witnesses
from conftest import graphs, named, rng

pytestmark = pytest.mark.usefixtures("backend")


def two_triangles():
    return named("abcdef", ["ab", "bc", "ac", "de", "ef", "df"])


def star():
    return named("habc", ["ha", "hb", "hc"])


def test_local_edge_examples(path3, cycle4):
    assert local_edge_connectivity(path3, 0, 2) == 1
    for u, v in itertools.combinations(range(4), 2):
        assert local_edge_connectivity(cycle4, u, v) == 2
    assert local_edge_connectivity(two_triangles(), 0, 4) == 0


def test_local_vertex_examples(path3, cycle4, k4):
    assert local_vertex_connectivity(cycle4, 0, 2) == 2
    assert local_vertex_connectivity(cycle4, 1, 3) == 2
    assert local_vertex_connectivity(path3, 0, 2) == 1
    for u, v in itertools.combinations(range(4), 2):
        assert local_vertex_connectivity(k4, u, v) == 3


def test_local_errors(triangle):
    with pytest.raises(SameVertex):
        local_edge_connectivity(triangle, 1, 1)
    with pytest.raises(SameVertex):
        local_vertex_connectivity(triangle, 0, 0)
    with pytest.raises(InvalidVertex):
        local_edge_connectivity(triangle, 0, 7)


def test_global_examples(cycle4, k4):
    assert edge_connectivity(cycle4) == 2
    tree = named("abcde", ["ab", "bc", "bd", "de"])
    assert edge_connectivity(tree) == 1
    assert edge_connectivity(two_triangles()) == 0
    assert vertex_connectivity(k4) == 3
    assert vertex_connectivity(cycle4) == 2
    assert vertex_connectivity(star()) == 1
    assert vertex_connectivity(two_triangles()) == 0


def test_two_vertex_graphs():
    assert vertex_connectivity(named("ab", ["ab"])) == 1
    assert edge_connectivity(named("ab", ["ab"])) == 1
    assert vertex_connectivity(named("ab", [])) == 0
    assert edge_connectivity(named("ab", [])) == 0


def test_too_small():
    with pytest.raises(TooSmall):
        edge_connectivity(named("a", []))
    with pytest.raises(TooSmall):
        vertex_connectivity(named("a", []))


def test_k_predicates(triangle, cycle4):
    assert is_k_edge_connected(cycle4, 2)
    assert not is_k_edge_connected(cycle4, 3)
    assert not is_k_edge_connected(two_triangles(), 1)
    assert is_k_connected(triangle, 2)
    assert not is_k_connected(triangle, 3)
    assert is_k_connected(cycle4, 2)
    assert not is_k_connected(cycle4, 3)
    assert is_k_connected(named("ab", ["ab"]), 1)
    assert not is_k_connected(named("ab", []), 1)


def test_witness_examples(cycle4, path3, k4):
    paths = edge_disjoint_paths(cycle4, 0, 2)
    assert sorted(paths) == [[0, 1, 2], [0, 3, 2]]
    assert edge_disjoint_paths(path3, 0, 2) == [[0, 1, 2]]
    assert edge_disjoint_paths(two_triangles(), 0, 3) == []
    paths = vertex_disjoint_paths(k4, 0, 1)
    assert sorted(paths) == [[0, 1], [0, 2, 1], [0, 3, 1]]
    assert vertex_disjoint_paths(path3, 0, 2) == [[0, 1, 2]]
    assert vertex_disjoint_paths(two_triangles(), 1, 5) == []


def test_witnesses_deterministic(cycle4):
    assert edge_disjoint_paths(cycle4, 0, 2) == edge_disjoint_paths(cycle4, 0, 2)


def test_network_shapes(cycle4, k4):
    for g in (cycle4, k4, two_triangles()):
        net = vertex_split_network(g, 0, 1)
        assert net.nodes == 2 * g.n
        assert int(net.original.sum()) == 2 * g.m + g.n
        assert set(net.capacity[net.original].tolist()) == {1}
        assert set(net.capacity[~net.original].tolist()) <= {0}
        enet = edge_network(g)
        assert enet.nodes == g.n and len(enet.head) == 2 * g.m
        assert set(enet.capacity.tolist()) <= {1}
        assert (enet.rev[enet.rev] == list(range(len(enet.rev)))).all()


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_local_values_match_path_enumeration(g):
    for u, v in itertools.combinations(range(g.n), 2):
        assert local_edge_connectivity(g, u, v) == brute_local_edge(g, u, v)
        assert local_vertex_connectivity(g, u, v) == brute_local_vertex(g, u, v)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=8))
def test_global_values_match_exhaustive_removal(g):
    assert edge_connectivity(g) == oracles.min_disconnecting_edge_set(g)
    assert vertex_connectivity(g) == oracles.min_separating_vertex_set(g)


def test_global_equals_min_over_all_pairs():
    r = rng(7)
    for _ in range(40):
        g = random_graph(r, r.randint(2, 10), r.uniform(0.2, 0.9))
        pairs = list(itertools.combinations(range(g.n), 2))
        assert edge_connectivity(g) == min(local_edge_connectivity(g, u, v) for u, v in pairs)
        if not g.is_complete():
            assert vertex_connectivity(g) == min(
                local_vertex_connectivity(g, u, v) for u, v in pairs if not g.has_edge(u, v))


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=14))
def test_menger_and_whitney(g):
    for u, v in itertools.combinations(range(min(g.n, 6)), 2):
        ep = edge_disjoint_paths(g, u, v)
        vp = vertex_disjoint_paths(g, u, v)
        assert len(ep) == local_edge_connectivity(g, u, v)
        assert len(vp) == local_vertex_connectivity(g, u, v)
        check_witnesses(g, u, v, ep, vertex_form=False)
        check_witnesses(g, u, v, vp, vertex_form=True)
    assert vertex_connectivity(g) <= edge_connectivity(g) <= g.min_degree()


def test_report(cycle4):
    rep = connectivity_report(cycle4, [(0, 2)], witnesses=True)
    assert (rep.kappa, rep.lam, rep.min_degree) == (2, 2, 2)
    assert rep.whitney_holds
    pr = rep.per_pair[0]
    assert (pr.kappa, pr.lam) == (2, 2)
    assert len(pr.vertex_paths) == len(pr.edge_paths) == 2


def test_larger_connected_graph():
    r = rng(3)
    g = random_connected_graph(r, 60, 0.08)
    lam = edge_connectivity(g)
    kap = vertex_connectivity(g)
    assert 1 <= kap <= lam <= g.min_degree()
    # removing all edges at a min-degree vertex is a cut, so lambda is attained by some pair
    assert lam == min(local_edge_connectivity(g, 0, v) for v in range(1, g.n))


def test_graph_not_mutated(cycle4):
    before = (cycle4.labels, cycle4.edges)
    vertex_connectivity(cycle4)
    edge_disjoint_paths(cycle4, 0, 2)
    assert (cycle4.labels, cycle4.edges) == before
    assert isinstance(cycle4, Graph)
