from fractions import Fraction
from pathlib import Path

import pytest

from treepack.ideal import ideal_loads
from treepack.lowerbound import (
    CapacityError,
    LowerBoundError,
    ScheduleState,
    build_instance,
    build_packing_step,
    full_schedule,
    min_tail,
    normal_pair,
    scaled,
    schedule_calls,
    seed_graph,
    target_size,
    verify_standard_position,
)
from treepack.oracles import stoer_wagner
from treepack.packing import is_greedy, parse_packing_dump

GOLDEN = Path(__file__).parent / "golden"


def test_instance_shape():
    inst = build_instance(10, 1)
    g = inst.graph
    assert g.m() == 18 and g.is_connected()
    assert all(ideal_loads(g).loads[e] == Fraction(1, 2) for e in g.edges)
    assert stoer_wagner(g)[0] == 2
    assert inst.labels[inst.e(2, 2)] == "e2_2"
    assert inst.labels[inst.f(1, 1)] == "f1_1"
    assert inst.labels[inst.g(2)] == "g_2"
    with pytest.raises(CapacityError):
        inst.f(inst.tail + 1, 1)
    with pytest.raises(LowerBoundError):
        build_instance(5, 2)
    with pytest.raises(LowerBoundError):
        build_instance(10, 0)


def test_seed_graph_packing_is_greedy():
    g = seed_graph()
    from treepack.packing import TreePacking

    # the disjoint pair is one of the greedy outcomes; id tie-break picks another
    P = TreePacking([(0, 2), (1, 3)], {0: 1, 1: 1, 2: 1, 3: 1})
    assert is_greedy(g, P)


def test_empty_state_is_standard():
    st = ScheduleState(build_instance(10, 1))
    assert st.profile() == [0, 0]
    assert verify_standard_position(st)


def test_single_build_step():
    inst = build_instance(10, 1)
    st = ScheduleState(inst)
    build_packing_step(st, 1)
    assert len(st.trees) == 2 * (2 * inst.k + 1)
    assert st.profile() == [1, 0]
    assert st.iota == 2
    assert verify_standard_position(st)
    assert is_greedy(inst.graph, st.packing())


def test_normal_pair_keeps_profile():
    st = ScheduleState(build_instance(10, 1))
    build_packing_step(st, 1)
    beta = st.profile()
    T, Tp = normal_pair(st, beta)
    st.add_tree(T)
    st.add_tree(Tp)
    assert st.profile() == beta and verify_standard_position(st)


def test_standard_position_reports_bullet():
    st = ScheduleState(build_instance(10, 1))
    build_packing_step(st, 1)
    st.trees.pop()
    assert verify_standard_position(st).bullet == 1


def test_schedule_calls():
    assert schedule_calls(1) == [1]
    assert schedule_calls(2) == [1, 2, 3, 1, 2, 1]
    assert min_tail(3) == 23


@pytest.mark.parametrize("n,k,size,error", [(10, 1, 18, Fraction(1, 18)), (14, 2, 100, Fraction(1, 50)),
                                            (23, 3, 294, Fraction(1, 98))])
def test_full_schedule(n, k, size, error):
    P, rep = full_schedule(build_instance(n, k))
    assert rep.size == size == target_size(k)
    assert rep.max_load == size // 2 + k
    assert rep.error == error == Fraction(k, size)
    assert rep.profile == list(range(2 * k - 1, -1, -1))
    assert rep.greedy


def test_capacity_error_when_tail_is_short():
    with pytest.raises(CapacityError, match="tail has 12 pairs"):
        full_schedule(build_instance(20, 3))


@pytest.mark.parametrize("n,k", [(10, 1), (14, 2)])
def test_golden_dump(n, k):
    P, _ = full_schedule(build_instance(n, k))
    golden = (GOLDEN / f"lowerbound_n{n}_k{k}.trees").read_text()
    assert P.dump() == golden
    assert parse_packing_dump(golden) == list(P.trees)


def test_scaled_copy():
    inst = build_instance(10, 1)
    P, _ = full_schedule(inst)
    h, Ps = scaled(inst, P, 2)
    assert Ps.size == 36 and stoer_wagner(h)[0] == 4
    worst = max(abs(Fraction(Ps.L[e], Ps.size) - Fraction(1, 4)) for e in h.edges)
    assert worst == Fraction(1, 36)
    with pytest.raises(LowerBoundError):
        scaled(inst, P, 0)
