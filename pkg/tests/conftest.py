import random

import pytest
from hypothesis import strategies as st

from treepack.multigraph import MultiGraph


def make_graph(n, pairs):
    g = MultiGraph(n)
    for u, v in pairs:
        g.add_edge(u, v)
    return g


def two_triangles_bridge():
    return make_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


@st.composite
def multigraphs(draw, n_min=2, n_max=7, m_max=14, connected=True, loops=False):
    n = draw(st.integers(n_min, n_max))
    g = MultiGraph(n)
    if connected:
        for v in range(1, n):
            g.add_edge(draw(st.integers(0, v - 1)), v)
    extra = draw(st.integers(0, max(0, m_max - g.m())))
    for _ in range(extra):
        u = draw(st.integers(0, n - 1))
        v = draw(st.integers(0, n - 1))
        if u == v and not loops:
            continue
        g.add_edge(u, v)
    return g


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
