"""Seeded instance and stream generators for tests, demos and the CLI.

All randomness goes through ``random.Random(seed)``, so a seed pins the
output exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .multigraph import MultiGraph, Update, apply_update
from .oracles import alpha_exact


def random_tree_edges(rng: random.Random, n: int) -> list[tuple[int, int]]:
    """Uniform-ish random labelled tree: attach each vertex to an earlier one."""
    order = list(range(n))
    rng.shuffle(order)
    return [(order[i], order[rng.randrange(i)]) for i in range(1, n)]


def random_connected_multigraph(
    rng: random.Random, n_max: int = 7, m_max: int = 14, n_min: int = 2, loops: bool = False
) -> MultiGraph:
    n = rng.randint(n_min, n_max)
    g = MultiGraph(n)
    for u, v in random_tree_edges(rng, n):
        g.add_edge(min(u, v), max(u, v))
    extra = rng.randint(0, max(0, m_max - (n - 1)))
    for _ in range(extra):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v and not loops:
            continue
        g.add_edge(u, v)
    return g


def union_of_two_trees(rng: random.Random, n: int) -> MultiGraph:
    g = MultiGraph(n)
    for _ in range(2):
        for u, v in random_tree_edges(rng, n):
            g.add_edge(min(u, v), max(u, v))
    return g


def cycle(n: int, mult: int = 1) -> MultiGraph:
    g = MultiGraph(n)
    for i in range(n):
        for _ in range(mult):
            g.add_edge(i, (i + 1) % n)
    return g


def complete(n: int, mult: int = 1) -> MultiGraph:
    g = MultiGraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            for _ in range(mult):
                g.add_edge(u, v)
    return g


def parallel_gadget(
    rng: random.Random, lo: int = 24, hi: int = 40, n_range: tuple[int, int] = (3, 5)
) -> MultiGraph:
    """Small skeleton with heavy parallel classes and lo <= alpha <= hi."""
    while True:
        n = rng.randint(*n_range)
        g = MultiGraph(n)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        for i, (u, v) in enumerate(pairs):
            if i < n - 1 or rng.random() < 0.5:
                for _ in range(rng.randint(8, 20)):
                    g.add_edge(u, v)
        if g.is_connected() and lo <= alpha_exact(g) <= hi:
            return g


def random_delete(rng: random.Random, g: MultiGraph) -> Update:
    e = rng.choice(g.edge_ids())
    u, v = g.edges[e]
    return Update("-", u, v)


def mincut_stream(
    seed: int, n: int, steps: int, p_delete: float = 0.45, start: MultiGraph | None = None
) -> tuple[MultiGraph, list[Update]]:
    """Random insert/delete stream on n vertices, starting from a spanning tree.

    Insertions are loop-free. The graph may disconnect along the way.
    """
    rng = random.Random(seed)
    if start is None:
        g0 = MultiGraph(n)
        for u, v in random_tree_edges(rng, n):
            g0.add_edge(min(u, v), max(u, v))
    else:
        g0 = start.copy()
    g = g0.copy()
    ups = []
    for _ in range(steps):
        if g.m() > 0 and rng.random() < p_delete:
            up = random_delete(rng, g)
        else:
            u, v = rng.sample(range(n), 2)
            up = Update("+", u, v)
        apply_update(g, up)
        ups.append(up)
    return g0, ups


def arboricity_stream(
    seed: int, n: int, steps: int, alpha_cap: int = 8, p_delete: float = 0.4
) -> list[Update]:
    """Stream from the empty graph whose arboricity never exceeds alpha_cap."""
    rng = random.Random(seed)
    g = MultiGraph(n)
    ups = []
    for _ in range(steps):
        up = None
        if g.m() == 0 or rng.random() >= p_delete:
            for _try in range(20):
                u, v = rng.sample(range(n), 2)
                h = g.copy()
                h.add_edge(u, v)
                if alpha_exact(h) <= alpha_cap:
                    up = Update("+", u, v)
                    break
        if up is None:
            up = random_delete(rng, g)
        apply_update(g, up)
        ups.append(up)
    return ups


def simple_stream(
    seed: int, n: int, steps: int, target_m: int, start_m: int | None = None
) -> tuple[MultiGraph, list[Update]]:
    """Stream on a simple graph whose edge count drifts around target_m."""
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    start_m = target_m if start_m is None else start_m
    g0 = MultiGraph(n)
    for u, v in pairs[:start_m]:
        g0.add_edge(u, v)
    g = g0.copy()
    ups = []
    for _ in range(steps):
        present = {tuple(sorted(uv)) for uv in g.edges.values()}
        absent = [p for p in pairs if p not in present]
        grow = rng.random() < (0.5 if g.m() == target_m else (0.8 if g.m() < target_m else 0.2))
        if (grow and absent) or not present:
            u, v = rng.choice(absent)
            up = Update("+", u, v)
        else:
            up = random_delete(rng, g)
        apply_update(g, up)
        ups.append(up)
    return g0, ups


def gadget_churn(rng: random.Random, g: MultiGraph, lo: int = 24, hi: int = 40) -> list[Update]:
    """Delete one random edge and re-add a parallel copy of a random class,
    retrying until the arboricity stays in [lo, hi]."""
    for _ in range(50):
        h = g.copy()
        d = random_delete(rng, h)
        apply_update(h, d)
        u, v = rng.choice(sorted(set(h.edges.values())))
        a = Update("+", u, v)
        apply_update(h, a)
        if lo <= alpha_exact(h) <= hi:
            return [d, a]
    return []


def within(value, truth: Fraction, eps: Fraction) -> bool:
    """(1 - eps) truth <= value <= (1 + eps) truth, exactly."""
    if truth == 0:
        return value == 0
    return (1 - eps) * truth <= value <= (1 + eps) * truth


__all__ = [
    "arboricity_stream",
    "complete",
    "cycle",
    "gadget_churn",
    "mincut_stream",
    "parallel_gadget",
    "random_connected_multigraph",
    "random_delete",
    "random_tree_edges",
    "simple_stream",
    "union_of_two_trees",
    "within",
]
