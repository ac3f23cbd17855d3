from fractions import Fraction

from hypothesis import given, settings

from conftest import make_graph, multigraphs, two_triangles_bridge
from treepack.generators import complete, cycle
from treepack.ideal import (
    alpha_exact_via_loads,
    ideal_loads,
    min_partition,
    phi,
    phi_lambda_check,
    rgs_table,
)
from treepack.lowerbound import build_instance
from treepack.oracles import alpha_exact


def test_rgs_table_counts_bell_numbers():
    assert [len(rgs_table(n)) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]


def test_phi_examples():
    assert phi(make_graph(2, [(0, 1)])) == 1
    assert phi(complete(4)) == 2
    assert phi(cycle(4)) == Fraction(4, 3)


def test_min_partition_prefers_most_blocks():
    p = min_partition(complete(4))
    assert len(p.blocks) == 4


def test_ideal_loads_examples():
    tree = make_graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert set(ideal_loads(tree).loads.values()) == {1}
    inst = build_instance(10, 1)
    assert set(ideal_loads(inst.graph).loads.values()) == {Fraction(1, 2)}
    pend = make_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    L = ideal_loads(pend).loads
    assert L[3] == 1
    assert L[0] == L[1] == L[2] == Fraction(2, 3)


def test_alpha_via_loads_examples():
    assert alpha_exact_via_loads(cycle(4)) == Fraction(4, 3)
    assert alpha_exact_via_loads(complete(4)) == 2
    g = two_triangles_bridge()
    assert alpha_exact_via_loads(g) == Fraction(3, 2)
    assert phi(g) < Fraction(3, 2)


def test_phi_lambda_examples():
    assert phi_lambda_check(complete(4))
    assert phi_lambda_check(cycle(4))
    assert phi_lambda_check(make_graph(2, [(0, 1)]))


def test_loops_get_zero_load():
    g = make_graph(3, [(0, 1), (1, 2), (2, 2)])
    assert ideal_loads(g).loads[2] == 0


@settings(max_examples=80, deadline=None)
@given(multigraphs(n_max=7, m_max=14))
def test_alpha_is_inverse_min_load(g):
    assert alpha_exact_via_loads(g) == alpha_exact(g)


@settings(max_examples=40, deadline=None)
@given(multigraphs(n_max=6, m_max=12))
def test_tie_break_does_not_change_loads(g):
    assert ideal_loads(g).loads == ideal_loads(g, reverse_tiebreak=True).loads


@settings(max_examples=60, deadline=None)
@given(multigraphs(n_max=7, m_max=14))
def test_loads_sum_to_n_minus_1(g):
    # a fractional spanning tree: total ideal load is n - 1
    assert sum(ideal_loads(g).loads.values()) == g.n - 1
