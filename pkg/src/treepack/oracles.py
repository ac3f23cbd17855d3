"""Brute-force ground truth used to check every maintained quantity.

Nothing here is clever on purpose: Stoer-Wagner, subset enumeration and a
from-scratch Kruskal packer. Size limits come from ``_common`` and may be
adjusted through TREEPACK_MAX_N (clamped to hard caps).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._common import INF, UnionFind, subset_bound
from .multigraph import MultiGraph


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    value: object
    method: str
    witness: tuple = ()


def _pair_weights(g: MultiGraph) -> Counter:
    w: Counter = Counter()
    for u, v in g.edges.values():
        if u != v:
            w[(min(u, v), max(u, v))] += 1
    return w


def _check_subset_size(g: MultiGraph) -> None:
    if g.n > subset_bound():
        raise OracleLimitError(f"n={g.n} exceeds subset-enumeration bound {subset_bound()}")


def _crossing(g: MultiGraph, side: set[int]) -> list[int]:
    return sorted(e for e, (u, v) in g.edges.items() if (u in side) != (v in side))


def stoer_wagner(g: MultiGraph) -> tuple[float | int, list[int]]:
    """Global min cut (value, crossing edge ids). Loops never cross."""
    n = g.n
    if n < 2:
        return INF, []
    if not g.is_connected():
        return 0, []
    w = np.zeros((n, n), dtype=np.int64)
    for (u, v), c in _pair_weights(g).items():
        w[u, v] += c
        w[v, u] += c
    groups = [[v] for v in range(n)]
    alive = list(range(n))
    best_val = None
    best_side: list[int] = []
    while len(alive) > 1:
        a = alive[0]
        added = [a]
        conn = w[a, alive].astype(np.int64).copy()
        in_a = np.zeros(len(alive), dtype=bool)
        in_a[0] = True
        prev = a
        last = a
        for _ in range(len(alive) - 1):
            masked = np.where(in_a, -1, conn)
            idx = int(np.argmax(masked))
            prev, last = last, alive[idx]
            in_a[idx] = True
            added.append(last)
            conn = conn + w[last, alive]
        cut_val = int(w[last, alive].sum())
        if best_val is None or cut_val < best_val:
            best_val = cut_val
            best_side = list(groups[last])
        # merge last into prev
        groups[prev].extend(groups[last])
        w[prev, :] += w[last, :]
        w[:, prev] += w[:, last]
        w[prev, prev] = 0
        alive.remove(last)
    side = set(best_side)
    return best_val, _crossing(g, side)


def mincut_enum(g: MultiGraph) -> int | float:
    """Min cut by enumerating the 2^(n-1) bipartitions."""
    n = g.n
    if n < 2:
        return INF
    _check_subset_size(g)
    masks = np.arange(1, 1 << (n - 1), dtype=np.int64)  # vertex n-1 always outside
    vals = np.zeros(len(masks), dtype=np.int64)
    for (u, v), c in _pair_weights(g).items():
        vals += c * (((masks >> u) & 1) != ((masks >> v) & 1))
    return int(vals.min())


def mincut_exact(g: MultiGraph) -> tuple[int | float, list[int]]:
    return stoer_wagner(g)


def _subset_edge_counts(g: MultiGraph) -> np.ndarray:
    n = g.n
    _check_subset_size(g)
    masks = np.arange(1 << n, dtype=np.int64)
    counts = np.zeros(len(masks), dtype=np.int64)
    loops = Counter(u for u, v in g.edges.values() if u == v)
    for (u, v), c in _pair_weights(g).items():
        counts += c * (((masks >> u) & 1) & ((masks >> v) & 1))
    for u, c in loops.items():
        counts += c * ((masks >> u) & 1)
    return counts


def _popcounts(n: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(len(masks), dtype=np.int64)
    for b in range(n):
        pc += (masks >> b) & 1
    return pc


def _best_ratio(counts: np.ndarray, sizes: np.ndarray) -> Fraction:
    best = Fraction(0)
    ok = sizes > 0
    if not ok.any():
        return best
    c = counts[ok]
    s = sizes[ok]
    # float prefilter, then exact comparison among near-maximal candidates
    ratio = c / s
    top = ratio.max()
    for i in np.nonzero(ratio >= top * (1 - 1e-9))[0]:
        best = max(best, Fraction(int(c[i]), int(s[i])))
    return best


def alpha_exact(g: MultiGraph) -> Fraction:
    """max |E(S)|/(|S|-1) over |S| >= 2; 0 when n < 2."""
    if g.n < 2:
        return Fraction(0)
    counts = _subset_edge_counts(g)
    return _best_ratio(counts, _popcounts(g.n) - 1)


def density_exact(g: MultiGraph) -> Fraction:
    """max |E(S)|/|S| over non-empty S."""
    if g.n < 1:
        return Fraction(0)
    counts = _subset_edge_counts(g)
    return _best_ratio(counts, _popcounts(g.n))


def phi_exact(g: MultiGraph) -> Fraction:
    from .ideal import min_partition

    return min_partition(g).value


def ga_degrees_naive(g: MultiGraph, loads: dict[int, Fraction], a: Fraction) -> list:
    """Sorted degrees of G_a (loops twice); [inf] when G_a is a single vertex."""
    low = [e for e in g.edges if loads[e] < a]
    h, _q = g.contract(low)
    if h.n == 1:
        return [INF]
    return sorted(h.degree(v) for v in range(h.n))


def greedy_reference(g: MultiGraph, N: int) -> tuple[list[tuple[int, ...]], dict[int, int]]:
    """Plain Kruskal greedy packing, ties by edge id. Returns (trees, loads)."""
    if N < 0:
        raise ValueError("N must be non-negative")
    loads = {e: 0 for e in g.edges}
    trees = []
    for _ in range(N):
        order = sorted(g.edges, key=lambda e: (loads[e], e))
        uf = UnionFind(g.n)
        tree = []
        for e in order:
            u, v = g.edges[e]
            if uf.union(u, v):
                tree.append(e)
        if len(tree) != g.n - 1:
            raise ValueError("graph is disconnected")
        for e in tree:
            loads[e] += 1
        trees.append(tuple(sorted(tree)))
    return trees, loads


def report(g: MultiGraph, what: str) -> OracleReport:
    if what == "lambda":
        val, cut = stoer_wagner(g)
        return OracleReport("lambda", val, "stoer-wagner", tuple(cut))
    if what == "phi":
        return OracleReport("phi", phi_exact(g), "enumeration")
    if what == "alpha":
        return OracleReport("alpha", alpha_exact(g), "enumeration")
    if what == "rho":
        return OracleReport("rho", density_exact(g), "enumeration")
    raise ValueError(f"unknown oracle quantity {what!r}")


__all__ = [
    "OracleLimitError",
    "OracleReport",
    "alpha_exact",
    "density_exact",
    "ga_degrees_naive",
    "greedy_reference",
    "mincut_enum",
    "mincut_exact",
    "phi_exact",
    "report",
    "stoer_wagner",
]
