import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_graph, multigraphs
from treepack._common import UnionFind
from treepack.generators import complete, cycle
from treepack.lowerbound import seed_graph
from treepack.multigraph import MultiGraph
from treepack.oracles import stoer_wagner
from treepack.packing import (
    DisconnectedError,
    DynamicGreedyPacking,
    LeveledPacking,
    PackingError,
    TreePacking,
    arb_level_size,
    build_greedy,
    is_greedy,
    mincut_level_size,
    parse_packing_dump,
)


def forest_reference(vertices, edges, N):
    """Greedy spanning forests by plain Kruskal, ties by id."""
    index = {v: i for i, v in enumerate(sorted(vertices))}
    loads = {e: 0 for e in edges}
    trees = []
    for _ in range(N):
        uf = UnionFind(len(index))
        t = []
        for e in sorted(edges, key=lambda x: (loads[x], x)):
            u, v = edges[e]
            if u != v and uf.union(index[u], index[v]):
                t.append(e)
        for e in t:
            loads[e] += 1
        trees.append(tuple(sorted(t)))
    return trees, loads


def test_two_parallel_edges():
    P = build_greedy(make_graph(2, [(0, 1), (0, 1)]), 3)
    assert sorted(P.L.values()) == [1, 2]
    assert {P.rel_load(e) for e in P.L} == {Fraction(1, 3), Fraction(2, 3)}


def test_seed_graph_two_disjoint_trees():
    g = seed_graph()
    # the disjoint pair is a greedy packing with all counts 1
    disjoint = [(0, 2), (1, 3)]
    assert is_greedy(g, disjoint)
    P = TreePacking(disjoint, {0: 1, 1: 1, 2: 1, 3: 1})
    assert set(P.loads().values()) == {Fraction(1, 2)}
    # id tie-breaking picks a different (also greedy) packing
    Q = build_greedy(g, 2)
    assert is_greedy(g, Q)
    assert sum(Q.L.values()) == 4


def test_c4_twelve_trees():
    P = build_greedy(cycle(4), 12)
    assert set(P.L.values()) == {9}
    assert P.min_load()[0] == P.max_load()[0] == Fraction(3, 4)


def test_empty_packing_has_no_loads():
    with pytest.raises(PackingError):
        TreePacking([], {0: 0}).loads()


def test_disconnected_graph_rejected():
    with pytest.raises(DisconnectedError):
        build_greedy(make_graph(3, [(0, 1)]), 1)


def test_is_greedy_examples():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    P = build_greedy(g, 6)
    assert is_greedy(g, P)
    tree = make_graph(3, [(0, 1), (1, 2)])
    assert is_greedy(tree, [(0, 1)])


def test_is_greedy_rejects_a_heavier_swap():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (0, 2)])
    P = build_greedy(g, 6)
    for j in range(1, 6):
        prefix = {e: sum(e in t for t in P.trees[:j]) for e in g.edges}
        T = set(P.trees[j])
        for f in sorted(T):
            for e in sorted(set(g.edges) - T):
                cand = tuple(sorted((T - {f}) | {e}))
                if prefix[e] > prefix[f] and is_greedy(g, [cand]):
                    chk = is_greedy(g, list(P.trees[:j]) + [cand])
                    assert not chk
                    assert chk.witness.tree_index == j and chk.witness.nontree_edge == f
                    return
    pytest.fail("no heavier swap found")


def test_dump_roundtrip():
    P = build_greedy(complete(4), 3)
    assert parse_packing_dump(P.dump()) == P.trees


def test_level_sizes():
    assert mincut_level_size(0, 16, 1) == 4
    assert mincut_level_size(1, 16, Fraction(1, 2)) == 16
    assert arb_level_size(2, 8, Fraction(1, 2), 1) == 48


def _nonbridge(g, rng):
    ids = g.edge_ids()
    rng.shuffle(ids)
    for e in ids:
        h = g.copy()
        h.remove_edge(e)
        if h.is_connected():
            return e
    return None


@settings(max_examples=40, deadline=None)
@given(multigraphs(n_min=3, n_max=7, m_max=12), st.integers(0, 10**6))
def test_dynamic_packing_equals_rebuild(g, seed):
    rng = random.Random(seed)
    N = rng.randint(1, 8)
    D = DynamicGreedyPacking(range(g.n), dict(g.edges), N)
    for _ in range(12):
        r = rng.random()
        if r < 0.45:
            u, v = rng.randrange(g.n), rng.randrange(g.n)
            e = g.add_edge(u, v)
            D.insert(e, u, v)
        elif r < 0.8:
            e = _nonbridge(g, rng)
            if e is None:
                continue
            g.remove_edge(e)
            D.delete(e)
        else:
            N = rng.randint(1, 8)
            D.resize(N)
        ref = build_greedy(g, N)
        assert D.as_packing().trees == ref.trees
        assert {e: D.L[e] for e in g.edges} == ref.L


@settings(max_examples=40, deadline=None)
@given(multigraphs(n_min=2, n_max=7, m_max=10, connected=False), st.integers(0, 10**6))
def test_forest_mode_equals_kruskal_forests(g, seed):
    rng = random.Random(seed)
    N = rng.randint(1, 6)
    D = DynamicGreedyPacking(range(g.n), dict(g.edges), N, forest=True)
    for _ in range(10):
        if g.m() and rng.random() < 0.4:
            e = rng.choice(g.edge_ids())
            g.remove_edge(e)
            D.delete(e)
        else:
            u, v = rng.sample(range(g.n), 2)
            e = g.add_edge(u, v)
            D.insert(e, u, v)
        trees, loads = forest_reference(range(g.n), g.edges, N)
        assert D.as_packing().trees == trees
        assert {e: D.L[e] for e in g.edges} == loads


def test_deleting_a_bridge_raises():
    g = make_graph(3, [(0, 1), (1, 2)])
    D = DynamicGreedyPacking(range(3), dict(g.edges), 2)
    with pytest.raises(DisconnectedError):
        D.delete(0)


def test_deleting_unused_edge_has_no_recourse():
    g = make_graph(2, [(0, 1), (0, 1)])
    D = DynamicGreedyPacking(range(2), dict(g.edges), 1)
    unused = next(e for e in g.edges if D.L[e] == 0)
    assert D.delete(unused).recourse == 0


def test_parallel_copy_of_saturated_edge_rebalances():
    g = make_graph(3, [(0, 1), (1, 2)])
    D = DynamicGreedyPacking(range(3), dict(g.edges), 4)
    e = g.add_edge(0, 1)
    rep = D.insert(e, 0, 1)
    assert rep.recourse > 0
    assert D.L[0] == D.L[e] == 2


# -- leveled packings ----------------------------------------------------------------


def test_virtual_path_multiplicity_at_high_level():
    lp = LeveledPacking(6, "mincut", 5, [], const=Fraction(1, 64))
    verts, edges = lp.packed_graph()
    h = MultiGraph(5)
    for e in sorted(edges):
        h.add_edge(*edges[e])
    # nothing real to fall back on, so every virtual copy stays
    assert len(lp.virtual) == 4 * 4
    assert stoer_wagner(h)[0] == 2 ** (6 - 4)


def test_bridge_deletion_is_kept_virtual():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    lp = LeveledPacking(0, "mincut", 4, list(g.iter_edges()), const=1)
    lp.delete(0)
    rep = lp.delete(1)  # vertex 1 would be cut off
    assert rep.kept_virtual == 1
    assert 1 in lp.packed_edges() and 1 in lp.virtual


def test_queue_pops_at_most_one_per_update():
    rng = random.Random(3)
    n = 6
    lp = LeveledPacking(2, "mincut", n, [], const=Fraction(1, 4))
    nxt = 0
    for _ in range(40):
        before = len(lp.virtual)
        u, v = rng.sample(range(n), 2)
        rep = lp.insert(nxt, u, v)
        nxt += 1
        assert before - len(lp.virtual) <= 1
        assert rep.popped is None or rep.popped < 0


def test_arboricity_flavor_activation():
    g = make_graph(5, [(0, 1), (0, 1), (0, 2), (1, 2), (3, 4)])
    lp = LeveledPacking(2, "arboricity", 5, list(g.iter_edges()), const=1, eps=Fraction(1, 2))
    # level 2 needs degree >= 2
    assert lp.active == {0, 1, 2}
    lp.insert(5, 3, 4)
    assert lp.active == {0, 1, 2, 3, 4}


def test_arboricity_flavor_rejects_loops():
    lp = LeveledPacking(0, "arboricity", 3, [], const=1, eps=Fraction(1, 2))
    with pytest.raises(ValueError):
        lp.insert(0, 1, 1)
