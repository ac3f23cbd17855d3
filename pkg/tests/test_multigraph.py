import pytest
from hypothesis import given

from conftest import make_graph, multigraphs
from treepack.generators import complete, cycle
from treepack.lowerbound import build_instance, seed_graph
from treepack.multigraph import (
    GraphError,
    MultiGraph,
    Update,
    apply_update,
    format_graph,
    format_stream,
    parse_graph,
    parse_stream,
)
from treepack.oracles import stoer_wagner, phi_exact


def test_first_edge_gets_id_zero():
    g = MultiGraph(2)
    assert g.add_edge(0, 1) == 0
    assert g.m() == 1


def test_parallel_copies_have_distinct_ids():
    g = MultiGraph(2)
    a, b = g.add_edge(0, 1), g.add_edge(0, 1)
    assert a != b
    assert g.degree(0) == 2


def test_loops_count_twice():
    g = MultiGraph(4)
    g.add_edge(3, 3)
    g.add_edge(3, 3)
    assert g.degree(3) == 4


def test_remove_edge():
    g = make_graph(2, [(0, 1), (0, 1)])
    assert g.remove_edge(0) == (0, 1)
    assert g.m() == 1 and 1 in g.edges
    g.remove_edge(1)
    assert g.m() == 0
    with pytest.raises(GraphError):
        g.remove_edge(1)


def test_contract_nothing_on_k3():
    h, q = complete(3).contract([])
    assert h.n == 3 and h.m() == 3


def test_contract_c4_edge_gives_triangle():
    g = cycle(4)
    h, _q = g.contract([0])
    assert h.n == 3 and h.m() == 3
    assert h.is_simple()


def test_contract_parallel_pair_of_seed():
    g = seed_graph()
    par = [e for e, uv in g.edges.items() if uv == (1, 2)]
    h, _q = g.contract(par)
    assert h.n == 2
    assert sum(1 for u, v in h.edges.values() if u != v) == 2


def test_induced():
    k4 = complete(4)
    assert k4.induced(range(4)).m() == 6
    assert k4.induced([0, 1, 2]).m() == 3
    path = make_graph(3, [(0, 1), (1, 2)])
    h = path.induced([0, 2])
    assert h.n == 2 and h.m() == 0


def test_duplicate_edges():
    g = make_graph(2, [(0, 1)])
    assert g.duplicate_edges(1).m() == 1
    assert g.duplicate_edges(3).m() == 3
    h = build_instance(10, 1).graph.duplicate_edges(2)
    assert stoer_wagner(h)[0] == 4
    assert phi_exact(h) == 4


def test_graph_file_roundtrip():
    g = make_graph(4, [(0, 1), (1, 2), (2, 2), (0, 1)])
    text = format_graph(g)
    assert text.startswith("p mgraph 4 4")
    h = parse_graph("# comment\n\n" + text)
    assert sorted(h.edges.values()) == sorted(g.edges.values())


@pytest.mark.parametrize(
    "text",
    ["e 0 1\n", "p mgraph 2 2\ne 0 1\n", "p mgraph 2 1\nx 0 1\n", "p graph 2 0\n"],
)
def test_bad_graph_files(text):
    with pytest.raises(GraphError):
        parse_graph(text)


def test_stream_roundtrip_and_lowest_id_delete():
    ups = parse_stream("+ 0 1\n+ 0 1\n# drop one\n- 1 0\n")
    assert format_stream(ups) == "+ 0 1\n+ 0 1\n- 1 0\n"
    g = MultiGraph(2)
    for up in ups:
        apply_update(g, up)
    assert list(g.edges) == [1]


def test_delete_missing_edge_raises():
    with pytest.raises(GraphError):
        apply_update(MultiGraph(3), Update("-", 0, 1))


@given(multigraphs(connected=False, loops=True))
def test_degree_sum(g):
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.m()


@given(multigraphs())
def test_contract_keeps_crossing_edges(g):
    low = [e for e in g.edge_ids() if e % 2 == 0]
    h, q = g.contract(low)
    assert h.m() == g.m() - len(low)
    for e, (a, b) in h.edges.items():
        u, v = g.edges[e]
        assert (a, b) in ((q.class_of[u], q.class_of[v]), (q.class_of[v], q.class_of[u]))
