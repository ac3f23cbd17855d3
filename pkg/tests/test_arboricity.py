import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import make_graph, multigraphs
from treepack._common import INF
from treepack.arboricity import (
    AdaptiveSampler,
    ArbConfig,
    ArbConfigError,
    DetArboricityEstimator,
    ObliviousSampler,
    Orientation,
    SimpleCombinator,
    adaptive_probability,
    estimate_from_packing,
    level_of,
    make_estimator,
    oblivious_probability,
)
from treepack.generators import arboricity_stream, complete, cycle, parallel_gadget, within
from treepack.lowerbound import build_instance
from treepack.multigraph import GraphError, MultiGraph, Update, apply_update
from treepack.oracles import alpha_exact, density_exact
from treepack.packing import TreePacking, build_greedy

EPS = Fraction(1, 4)


def test_config_validation():
    with pytest.raises(ArbConfigError):
        ArbConfig(eps=Fraction(0))
    with pytest.raises(ArbConfigError):
        ArbConfig(eps=EPS, mode="magic")
    assert ArbConfig(eps=EPS).as_dict()["eps"] == "1/4"


def test_probability_spot_values():
    assert oblivious_probability(12, 4096, Fraction(1, 2)) == Fraction(9, 16)
    assert adaptive_probability(0, 2, Fraction(1, 2)) == 8 * 5 * 16


def test_level_of():
    assert level_of(Fraction(1), 3) == 0
    assert level_of(Fraction(3), 3) == 1
    assert level_of(Fraction(8), 3) == 3
    assert level_of(100, 3) == 3
    assert level_of(INF, 3) == 3


def test_estimate_from_packing_examples():
    inst = build_instance(10, 1)
    g = inst.graph
    from treepack.existence import disjoint_forests

    trees = [tuple(sorted(f)) for f in disjoint_forests(g, 2)]
    P = TreePacking(trees, {e: 1 for e in g.edges})
    assert estimate_from_packing(P) == 2 == alpha_exact(g)
    assert estimate_from_packing(build_greedy(cycle(4), 12)) == Fraction(4, 3)
    pair = make_graph(2, [(0, 1), (0, 1)])
    assert estimate_from_packing(build_greedy(pair, 1)) == INF


def test_det_tree_stream_is_one():
    est = DetArboricityEstimator(6, EPS, 8, Fraction(1, 4))
    g = MultiGraph(6)
    for v in range(1, 6):
        up = Update("+", v - 1, v)
        apply_update(g, up)
        est.apply(up)
        assert est.value() == 1


def test_det_grows_k4():
    est = DetArboricityEstimator(4, EPS, 8, Fraction(1, 4))
    for u in range(4):
        for v in range(u + 1, 4):
            est.apply(Update("+", u, v))
    assert within(est.value(), Fraction(2), EPS)


def test_det_sixteen_parallel_edges():
    g = make_graph(2, [(0, 1)] * 16)
    est = DetArboricityEstimator.from_graph(g, EPS, 32, Fraction(1, 4))
    assert Fraction(64, 5) <= est.value() <= 20


def test_det_ignores_loops_and_empty():
    est = DetArboricityEstimator(3, EPS, 4, Fraction(1, 4))
    assert est.value() == 0
    est.apply(Update("+", 1, 1))
    assert est.value() == 0


@pytest.mark.parametrize("seed", [0, 1])
def test_det_stream_accuracy(seed):
    n = 6
    g = MultiGraph(n)
    est = DetArboricityEstimator(n, EPS, 8, Fraction(1, 4))
    for up in arboricity_stream(seed, n, 80, 8):
        apply_update(g, up)
        est.apply(up)
        a = alpha_exact(g)
        v = est.value()
        assert (v == 0) if a == 0 else (a <= v * (1 + EPS) and v <= a * (1 + EPS))


def test_simple_combinator_regimes():
    sc = SimpleCombinator(4, EPS, Fraction(1, 4), list(complete(4).iter_edges()))
    assert within(sc.value(), Fraction(2), EPS) and sc.regime == "low"
    star = make_graph(6, [(0, v) for v in range(1, 6)])
    sc = SimpleCombinator(6, EPS, Fraction(1, 4), list(star.iter_edges()))
    assert sc.value() == 1 and sc.regime == "low"
    k11 = complete(11)
    sc = SimpleCombinator(11, EPS, Fraction(1, 8), list(k11.iter_edges()))
    assert sc.value() == density_exact(k11) and sc.regime == "high"
    assert within(sc.value(), alpha_exact(k11), EPS)


def test_simple_combinator_rejects_multigraphs():
    with pytest.raises(GraphError):
        SimpleCombinator(2, EPS, 1, [(0, 0, 1), (1, 0, 1)])
    sc = SimpleCombinator(3, EPS, 1, [(0, 0, 1)])
    with pytest.raises(GraphError):
        sc.apply(Update("+", 1, 0))


def test_orientation_examples():
    o = Orientation.orient(cycle(4))
    assert o.max_out() == 1
    assert Orientation.orient(complete(4)).max_out() == 2
    o = Orientation.orient(make_graph(2, [(0, 1)] * 5))
    assert sorted(o.dplus(v) for v in range(2)) == [2, 3]


@settings(max_examples=40, deadline=None)
@given(multigraphs(n_max=7, m_max=16, connected=False), st.integers(0, 10**6))
def test_orientation_stays_optimal(g, seed):
    rng = random.Random(seed)
    o = Orientation.orient(g)
    for _ in range(15):
        if g.m() and rng.random() < 0.4:
            e = rng.choice(g.edge_ids())
            g.remove_edge(e)
            changed = o.delete(e)
        else:
            u, v = rng.sample(range(g.n), 2)
            e = g.add_edge(u, v)
            changed = o.insert(e, u, v)
        assert all(0 <= x < g.n for x in changed)
        assert o.max_out() == math.ceil(density_exact(g))
        assert sum(o.dplus(v) for v in range(g.n)) == g.m()


def test_samplers_fall_back_when_every_level_is_inactive():
    g = parallel_gadget(random.Random(0))
    for mode in ("oblivious", "adaptive"):
        est = make_estimator(g, ArbConfig(eps=EPS, alpha_max=40, mode=mode, const=Fraction(1, 8)))
        assert est.active == [] and est.selected_level == -1
        assert within(est.value(), alpha_exact(g), EPS)


def _scaled(mode, scale, seed=0):
    g = parallel_gadget(random.Random(seed))
    cfg = ArbConfig(eps=EPS, alpha_max=40, mode=mode, seed=seed, const=Fraction(1, 8),
                    sample_scale=scale)
    return g, make_estimator(g, cfg, m_max=g.m() + 4)


def test_oblivious_sampler_reads_a_scaled_level():
    g, est = _scaled("oblivious", Fraction(1, 512))
    assert isinstance(est, ObliviousSampler)
    assert est.active and all(p < 1 for p in est.probs.values())
    i = est.selected_level
    assert i in est.active
    assert est.sampled_edges() <= set(g.edges)
    assert est.value() == est.h_est[i].value() / est.probs[i]
    # coins are a pure function of (seed, level, edge)
    _, again = _scaled("oblivious", Fraction(1, 512))
    assert again.sampled == est.sampled


def test_adaptive_sampler_resamples_owner_on_delete():
    g, est = _scaled("adaptive", Fraction(1, 8192))
    assert isinstance(est, AdaptiveSampler)
    i = est.active[-1]
    e = min(est.sampled[i])
    owner = est.orientation.owner[e]
    k0 = est.epoch[(i, owner)]
    g.remove_edge(e)
    est.delete_id(e)
    assert e not in est.sampled[i]
    assert est.epoch[(i, owner)] > k0 or est.skipped > 0
    for j in est.active:
        assert est.sampled[j] <= set(est.graph.edges)


def test_adaptive_single_edge_is_one_coin():
    g = make_graph(2, [(0, 1)])
    cfg = ArbConfig(eps=EPS, alpha_max=64, mode="adaptive", sample_scale=Fraction(1, 10**6))
    est = make_estimator(g, cfg)
    for i in est.active:
        assert est.sampled[i] <= {0}


def test_heaviest_sample_is_a_live_edge():
    g, est = _scaled("oblivious", Fraction(1), 3)
    e = est.heaviest_sample()
    assert e in g.edges
