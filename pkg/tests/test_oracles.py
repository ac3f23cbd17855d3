from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import make_graph, multigraphs, two_triangles_bridge
from treepack._common import INF
from treepack.generators import complete, cycle
from treepack.oracles import (
    OracleLimitError,
    alpha_exact,
    density_exact,
    ga_degrees_naive,
    greedy_reference,
    mincut_enum,
    mincut_exact,
    phi_exact,
    report,
    stoer_wagner,
)
from treepack.packing import build_greedy


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    for u, v in g.edges.values():
        if u == v:
            continue
        w = h.get_edge_data(u, v, {"weight": 0})["weight"]
        h.add_edge(u, v, weight=w + 1)
    return h


def test_mincut_examples():
    assert mincut_exact(cycle(4))[0] == 2
    assert mincut_enum(cycle(4)) == 2
    assert mincut_exact(complete(4))[0] == 3
    g = two_triangles_bridge()
    val, cut = mincut_exact(g)
    assert val == 1 and cut == [6]


def test_disconnected_and_single_vertex():
    assert stoer_wagner(make_graph(3, [(0, 1)]))[0] == 0
    assert stoer_wagner(make_graph(1, []))[0] == INF


@settings(max_examples=60, deadline=None)
@given(multigraphs(n_max=8, m_max=16, loops=True))
def test_stoer_wagner_agrees_with_enumeration_and_networkx(g):
    val, cut = stoer_wagner(g)
    assert val == mincut_enum(g)
    assert len(cut) == val
    nx_val, _ = nx.stoer_wagner(to_nx(g))
    assert val == nx_val


def test_alpha_and_density_examples():
    assert alpha_exact(cycle(4)) == Fraction(4, 3)
    assert density_exact(cycle(4)) == 1
    assert alpha_exact(complete(4)) == 2
    assert density_exact(complete(4)) == Fraction(3, 2)
    one = make_graph(2, [(0, 1)])
    assert alpha_exact(one) == 1 and density_exact(one) == Fraction(1, 2)


@settings(max_examples=60, deadline=None)
@given(multigraphs(n_max=7, m_max=14))
def test_structural_inequalities(g):
    lam, _ = stoer_wagner(g)
    a = alpha_exact(g)
    p = phi_exact(g)
    assert Fraction(lam, 2) < p <= lam
    assert lam <= 2 * a
    assert density_exact(g) <= a


def test_subset_bound(monkeypatch):
    monkeypatch.setenv("TREEPACK_MAX_N", "5")
    with pytest.raises(OracleLimitError):
        alpha_exact(complete(6))
    monkeypatch.setenv("TREEPACK_MAX_N", "nope")
    with pytest.raises(ValueError):
        alpha_exact(complete(3))


def test_ga_degrees_naive_examples():
    g = two_triangles_bridge()
    low = {e: Fraction(0) for e in g.edges}
    assert ga_degrees_naive(g, low, Fraction(1, 2)) == [INF]
    high = {e: Fraction(1) for e in g.edges}
    assert ga_degrees_naive(g, high, Fraction(1, 2)) == sorted(g.degree(v) for v in range(6))
    mixed = {e: Fraction(0) for e in g.edges}
    mixed[6] = Fraction(1)
    assert ga_degrees_naive(g, mixed, Fraction(1, 2)) == [1, 1]


def test_greedy_reference_examples():
    tree = make_graph(4, [(0, 1), (1, 2), (1, 3)])
    trees, _ = greedy_reference(tree, 1)
    assert trees == [(0, 1, 2)]
    pair = make_graph(2, [(0, 1), (0, 1)])
    _, loads = greedy_reference(pair, 4)
    assert sorted(loads.values()) == [2, 2]


@settings(max_examples=100, deadline=None)
@given(multigraphs(n_max=7, m_max=14))
def test_reference_matches_build_greedy(g):
    trees, loads = greedy_reference(g, 7)
    P = build_greedy(g, 7)
    assert list(P.trees) == trees
    assert P.L == loads


def test_report_tags():
    assert report(cycle(4), "lambda").method == "stoer-wagner"
    assert report(cycle(4), "rho").value == 1
    with pytest.raises(ValueError):
        report(cycle(4), "beta")
