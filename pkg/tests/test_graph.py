import networkx as nx
import pytest

from mprod.corpus import factor_graphs
from mprod.graph import (
    Graph,
    GraphError,
    complement,
    emit_edge_list,
    emit_graph6,
    erdos_renyi,
    generator,
    parse_edge_list,
    parse_graph6,
)


def test_from_edge_list_path():
    g = Graph.from_edge_list(3, [(0, 1), (1, 2)])
    assert list(g.edges()) == [(0, 1), (1, 2)]
    assert g.degrees() == [1, 2, 1]


def test_from_edge_list_cycle():
    g = Graph.from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.degrees() == [2, 2, 2, 2]


def test_duplicates_and_orientation_collapse():
    g = Graph.from_edge_list(3, [(0, 1), (1, 0), (0, 1), (2, 1)])
    assert g.num_edges == 2


def test_self_loop_rejected():
    with pytest.raises(GraphError, match="self-loop"):
        Graph.from_edge_list(2, [(0, 0)])


def test_endpoint_out_of_range():
    with pytest.raises(GraphError, match="outside"):
        Graph.from_edge_list(2, [(0, 2)])


@pytest.mark.parametrize("kind,n,degrees", [
    ("path", 4, [1, 2, 2, 1]),
    ("star", 4, [3, 1, 1, 1]),
    ("complete", 4, [3, 3, 3, 3]),
    ("cycle", 5, [2] * 5),
    ("path", 1, [0]),
])
def test_generators(kind, n, degrees):
    assert generator(kind, n).degrees() == degrees


def test_complete_edge_count():
    assert generator("complete", 4).num_edges == 6


def test_cycle_too_small():
    with pytest.raises(GraphError):
        generator("cycle", 2)


def test_complement_p3():
    c = complement(generator("path", 3))
    assert list(c.edges()) == [(0, 2)]
    assert c.degree(1) == 0


def test_complement_k4_is_empty():
    assert complement(generator("complete", 4)).num_edges == 0


def test_complement_degrees():
    g = erdos_renyi(9, 0.4, seed=3)
    c = complement(g)
    assert c.degrees() == [g.n - 1 - d for d in g.degrees()]


@pytest.mark.parametrize("name", sorted(factor_graphs()))
def test_corpus_invariants(name):
    g = factor_graphs()[name]
    assert sum(g.degrees()) == 2 * g.num_edges
    assert complement(complement(g)) == g
    for v in range(g.n):
        assert not g.has_edge(v, v)
        for u in g.neighbors(v):
            assert g.has_edge(u, v)


def test_graph6_p3_vector():
    # produced by networkx.to_graph6_bytes(nx.path_graph(3))
    assert emit_graph6(generator("path", 3)) == "Bg"
    g = parse_graph6("Bg")
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_graph6_c5_vector():
    assert emit_graph6(generator("cycle", 5)) == "Dhc"
    assert parse_graph6(">>graph6<<Dhc\n") == generator("cycle", 5)


def test_graph6_roundtrip_against_networkx():
    for n in (1, 2, 5, 20, 63, 70):
        g = erdos_renyi(n, 0.4, seed=n)
        text = emit_graph6(g)
        nxg = nx.Graph()
        nxg.add_nodes_from(range(n))
        nxg.add_edges_from(g.edges())
        assert text == nx.to_graph6_bytes(nxg, header=False).decode().strip()
        assert parse_graph6(text) == g


@pytest.mark.parametrize("name", sorted(factor_graphs()))
def test_graph6_roundtrip_corpus(name):
    g = factor_graphs()[name]
    assert parse_graph6(emit_graph6(g)) == g


def test_graph6_truncated():
    with pytest.raises(GraphError, match="offset"):
        parse_graph6("Dh")


def test_graph6_bad_byte():
    with pytest.raises(GraphError, match="offset 1"):
        parse_graph6("D h")


def test_graph6_trailing_bytes():
    with pytest.raises(GraphError, match="expected 2 body bytes"):
        parse_graph6("Dhc?")


def test_edge_list_roundtrip():
    g = erdos_renyi(8, 0.5, seed=11)
    assert parse_edge_list(emit_edge_list(g)) == g


def test_edge_list_errors():
    with pytest.raises(GraphError):
        parse_edge_list("")
    with pytest.raises(GraphError, match="line 2"):
        parse_edge_list("3\n0 1 2\n")
    with pytest.raises(GraphError):
        parse_edge_list("x\n")
