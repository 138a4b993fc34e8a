import pytest
from hypothesis import given

from riskgraph.errors import DuplicateEdge, DuplicateLabel, InvalidVertex, SelfLoop, UnknownEndpoint
from riskgraph.graph import (
    build_graph,
    component_count,
    connected_components,
    is_connected,
    neighbors,
    validate_path,
)

from _oracles import reachable_pairs_connected
from conftest import graphs, named


def test_triangle(triangle):
    assert triangle.n == 3 and triangle.m == 3
    assert [triangle.degree(v) for v in range(3)] == [2, 2, 2]


def test_ids_follow_input_order():
    g = named(["x", "a", "m"], [("m", "x")])
    assert [g.vertex_id(s) for s in ("x", "a", "m")] == [0, 1, 2]
    assert g.edges == ((0, 2),)


def test_isolated_vertices():
    g = named("abc", [])
    assert [g.degree(v) for v in range(3)] == [0, 0, 0]
    assert neighbors(g, 1) == frozenset()


@pytest.mark.parametrize("labels, edges, exc, needle", [
    ("ab", ["aa"], SelfLoop, "'a'"),
    ("ab", ["ab", "ba"], DuplicateEdge, "'b'"),
    (["a", "a"], [], DuplicateLabel, "'a'"),
    ("a", [("a", "b")], UnknownEndpoint, "'b'"),
])
def test_build_graph_rejects(labels, edges, exc, needle):
    with pytest.raises(exc, match=needle):
        named(labels, edges)


def test_neighbors(path3, triangle):
    assert neighbors(path3, 1) == {0, 2}
    assert neighbors(triangle, 0) == {1, 2}
    with pytest.raises(InvalidVertex):
        neighbors(path3, 3)
    with pytest.raises(InvalidVertex):
        neighbors(path3, -1)


def test_components():
    assert component_count(named("abc", ["ab", "bc", "ac"])) == 1
    assert component_count(named("abc", [])) == 3
    g = named("abcde", ["ab", "bc", "ac", "de"])
    assert connected_components(g) == [[0, 1, 2], [3, 4]]


def test_validate_path(triangle, path3):
    assert validate_path(triangle, [0, 1, 2])
    assert not validate_path(path3, [0, 2])
    assert not validate_path(triangle, [0, 1, 0])
    assert not validate_path(triangle, [])
    assert validate_path(triangle, [1])


def test_graph_is_immutable(triangle):
    with pytest.raises(AttributeError):
        triangle._edges = ()


@given(graphs(max_n=15))
def test_handshake(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m


@given(graphs(max_n=15))
def test_adjacency_symmetric(g):
    for v in range(g.n):
        assert v not in g.neighbors(v)
        for u in g.neighbors(v):
            assert v in g.neighbors(u)


@given(graphs(max_n=15))
def test_components_partition_vertices(g):
    blocks = connected_components(g)
    flat = [v for b in blocks for v in b]
    assert sorted(flat) == list(range(g.n))
    assert len(flat) == len(set(flat))


@given(graphs(max_n=12))
def test_connected_iff_all_pairs_reachable(g):
    assert is_connected(g) == reachable_pairs_connected(g)
