import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_graph
from treepack.existence import (
    ExistenceError,
    KDecomposition,
    decomposition_order_less,
    disjoint_forests,
    extend_to_tree,
    kaiser_pack,
    refines,
    small_packing,
)
from treepack.generators import complete, cycle, random_tree_edges, union_of_two_trees
from treepack.ideal import ideal_loads
from treepack.lowerbound import build_instance


def _spanning(g, es):
    return len(es) == g.n - 1 and make_graph(g.n, [g.edges[e] for e in es]).is_connected()


@pytest.mark.parametrize("g,trees,forest", [
    (complete(3), 1, 1),
    (complete(4), 2, 0),
    (build_instance(10, 1).graph, 2, 0),
])
def test_kaiser_examples(g, trees, forest):
    res = kaiser_pack(g)
    assert len(res.trees) == trees and len(res.forest) == forest
    assert all(_spanning(g, t) for t in res.trees)
    assert set().union(res.forest, *res.trees) == set(g.edges)


def test_kaiser_k5_needs_an_exchange_free_forest():
    g = complete(5)
    res = kaiser_pack(g)
    assert res.phi == Fraction(5, 2)
    assert len(res.trees) == 2 and len(res.forest) == 2


def test_kaiser_rejects_nontrivial_minimum():
    g = make_graph(4, [(0, 1), (0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (2, 3)])
    with pytest.raises(ExistenceError):
        kaiser_pack(g)
    with pytest.raises(ExistenceError):
        kaiser_pack(make_graph(2, [(0, 0), (0, 1)]))


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 9), st.integers(0, 10**6))
def test_kaiser_on_two_tree_unions(n, seed):
    g = union_of_two_trees(random.Random(seed), n)
    res = kaiser_pack(g)
    assert len(res.trees) == 2 and not res.forest


def test_disjoint_forests_are_disjoint():
    g = complete(6)
    fs = disjoint_forests(g, 3)
    assert all(len(f) == 5 for f in fs)
    assert len(set().union(*fs)) == 15


def test_extend_to_tree():
    g = cycle(5)
    t = extend_to_tree(g, {2})
    assert 2 in t and _spanning(g, t)


def test_refines():
    fine = (frozenset({0}), frozenset({1}), frozenset({2, 3}))
    coarse = (frozenset({0, 1}), frozenset({2, 3}))
    assert refines(fine, coarse) and not refines(coarse, fine)


def test_decomposition_order():
    g = complete(4)
    a = KDecomposition(g, [{0, 1, 2}, {3, 4, 5}])   # a star and a triangle
    b = KDecomposition(g, [{0, 3, 5}, {1, 2, 4}])   # two paths
    # two spanning paths never split V, so b stops at the trivial partition
    assert len(b.seq) == 1 and len(a.seq) == 3
    assert decomposition_order_less(a, b) and not decomposition_order_less(b, a)
    assert not decomposition_order_less(a, a)


def test_small_packing_tree():
    rng = random.Random(4)
    g = make_graph(6, random_tree_edges(rng, 6))
    P, rep = small_packing(g, Fraction(1, 2))
    assert rep.phi == 1 and rep.size == 4 and rep.max_error == 0
    assert all(P.L[e] == 4 for e in g.edges)


@pytest.mark.parametrize("g,eps", [
    (cycle(4), Fraction(1, 3)),
    (complete(4), Fraction(1, 4)),
    (build_instance(10, 1).graph, Fraction(1, 2)),
    (make_graph(4, [(0, 1), (0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (2, 3)]), Fraction(1, 2)),
])
def test_small_packing_bounds(g, eps):
    P, rep = small_packing(g, eps)
    assert rep.size <= rep.bound
    assert rep.max_error <= eps / rep.phi
    ideal = ideal_loads(g).loads
    assert max(abs(P.rel_load(e) - ideal[e]) for e in g.edges) == rep.max_error


def test_small_packing_rejects_bad_eps():
    with pytest.raises(ExistenceError):
        small_packing(cycle(4), Fraction(0))
