"""Exact strength Phi, minimum partitions and ideal relative loads (desk scale).

Partitions are enumerated as restricted-growth strings held in one numpy
table per vertex count, so a single vectorised pass scores every partition.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._common import partition_bound
from .multigraph import MultiGraph


class PartitionLimitError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]
    value: Fraction  # part_val = |E(G/P)| / (|P| - 1)
    crossing: int


@dataclass
class DecompNode:
    vertices: tuple[int, ...]  # labels in the input graph
    blocks: tuple[tuple[int, ...], ...]
    phi: Fraction
    depth: int


@dataclass
class IdealLoads:
    loads: dict[int, Fraction]
    nodes: list[DecompNode] = field(default_factory=list)

    def min_load(self) -> Fraction | None:
        vals = [x for x in self.loads.values() if x > 0]
        return min(vals) if vals else None

    def max_load(self) -> Fraction | None:
        return max(self.loads.values()) if self.loads else None


@lru_cache(maxsize=4)
def rgs_table(n: int) -> np.ndarray:
    """All restricted-growth strings of length n in lexicographic order."""
    if n < 1:
        return np.zeros((1, 0), dtype=np.int8)
    rows = np.zeros((1, 1), dtype=np.int8)
    maxes = np.zeros(1, dtype=np.int8)
    for _pos in range(1, n):
        reps = (maxes + 2).astype(np.int64)
        idx = np.repeat(np.arange(len(rows)), reps)
        # value appended to each copy: 0..max+1
        starts = np.cumsum(reps) - reps
        vals = (np.arange(int(reps.sum())) - np.repeat(starts, reps)).astype(np.int8)
        rows = np.concatenate([rows[idx], vals[:, None]], axis=1)
        maxes = np.maximum(maxes[idx], vals)
    rows.setflags(write=False)
    return rows


def _pair_counts(g: MultiGraph) -> Counter:
    c: Counter = Counter()
    for u, v in g.edges.values():
        if u != v:
            c[(u, v) if u < v else (v, u)] += 1
    return c


def min_partition(g: MultiGraph, reverse_tiebreak: bool = False) -> Partition:
    """Exact minimum of part_val over partitions with at least two blocks.

    Ties prefer more blocks, then the lexicographically first string;
    ``reverse_tiebreak`` flips both preferences.
    """
    n = g.n
    if n < 2:
        raise ValueError("partition value needs at least two vertices")
    if n > partition_bound():
        raise PartitionLimitError(f"n={n} exceeds partition bound {partition_bound()}")
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    table = rgs_table(n)
    k = table.max(axis=1).astype(np.int64) + 1
    cross = np.zeros(len(table), dtype=np.int64)
    for (u, v), c in _pair_counts(g).items():
        cross += c * (table[:, u] != table[:, v])
    ok = k >= 2
    idx_ok = np.nonzero(ok)[0]
    ratio = cross[ok] / (k[ok] - 1)
    top = ratio.min()
    cand = idx_ok[ratio <= top * (1 + 1e-9)]
    best = min(Fraction(int(cross[i]), int(k[i] - 1)) for i in cand)
    exact = [i for i in cand if Fraction(int(cross[i]), int(k[i] - 1)) == best]
    if reverse_tiebreak:
        kmin = min(k[i] for i in exact)
        pick = max(i for i in exact if k[i] == kmin)
    else:
        kmax = max(k[i] for i in exact)
        pick = min(i for i in exact if k[i] == kmax)
    row = table[pick]
    blocks: dict[int, list[int]] = {}
    for v in range(n):
        blocks.setdefault(int(row[v]), []).append(v)
    return Partition(
        tuple(tuple(b) for _, b in sorted(blocks.items())), best, int(cross[pick])
    )


def phi(g: MultiGraph) -> Fraction:
    return min_partition(g).value


def ideal_loads(g: MultiGraph, reverse_tiebreak: bool = False) -> IdealLoads:
    """Recursive ideal loads; self-loops get load 0 (they never enter a tree)."""
    if not g.is_connected():
        raise ValueError("graph is disconnected")
    loads: dict[int, Fraction] = {e: Fraction(0) for e in g.edges}
    out = IdealLoads(loads)
    stack = [(g, tuple(range(g.n)), 0)]
    while stack:
        h, labels, depth = stack.pop()
        if h.n < 2:
            continue
        part = min_partition(h, reverse_tiebreak)
        block_of = {}
        for bi, b in enumerate(part.blocks):
            for v in b:
                block_of[v] = bi
        inv = 1 / part.value
        for e, (u, v) in h.edges.items():
            if block_of[u] != block_of[v]:
                loads[e] = inv
        out.nodes.append(
            DecompNode(
                tuple(labels),
                tuple(tuple(labels[v] for v in b) for b in part.blocks),
                part.value,
                depth,
            )
        )
        for b in reversed(part.blocks):
            if len(b) >= 2:
                stack.append((h.induced(b), tuple(labels[v] for v in b), depth + 1))
    out.nodes.sort(key=lambda nd: (nd.depth, nd.vertices))
    return out


def alpha_exact_via_loads(g: MultiGraph) -> Fraction:
    """1 / min ideal load over non-loop edges (0 for an edgeless graph)."""
    il = ideal_loads(g)
    lo = il.min_load()
    return Fraction(0) if lo is None else 1 / lo


def phi_lambda_check(g: MultiGraph) -> bool:
    from .oracles import stoer_wagner

    lam, _ = stoer_wagner(g)
    p = phi(g)
    return Fraction(lam, 2) < p <= lam
