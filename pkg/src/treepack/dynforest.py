"""Dynamic forests: an Euler-tour treap with subtree aggregates, a weighted
forest built on it, and a spanning-forest maintainer for a dynamic graph.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from dataclasses import dataclass, field


class ForestError(ValueError):
    pass


_BIG = 1 << 62


class _Node:
    __slots__ = (
        "pri", "left", "right", "parent", "size",
        "vertex", "weight", "sw", "spos", "scnt", "smin",
    )

    def __init__(self, pri: int, vertex: int = -1):
        self.pri = pri
        self.left: _Node | None = None
        self.right: _Node | None = None
        self.parent: _Node | None = None
        self.vertex = vertex  # -1 for an edge arc
        self.weight = 0
        self.size = 1
        self.sw = 0
        self.spos = 0
        self.scnt = 1 if vertex >= 0 else 0
        self.smin = vertex if vertex >= 0 else _BIG


def _pull(t: _Node) -> None:
    size, sw = 1, t.weight
    spos = 1 if t.weight > 0 else 0
    scnt = 1 if t.vertex >= 0 else 0
    smin = t.vertex if t.vertex >= 0 else _BIG
    for c in (t.left, t.right):
        if c is not None:
            size += c.size
            sw += c.sw
            spos += c.spos
            scnt += c.scnt
            if c.smin < smin:
                smin = c.smin
    t.size, t.sw, t.spos, t.scnt, t.smin = size, sw, spos, scnt, smin


def _merge(a: _Node | None, b: _Node | None) -> _Node | None:
    if a is None:
        return b
    if b is None:
        return a
    if a.pri > b.pri:
        r = _merge(a.right, b)
        a.right = r
        r.parent = a
        _pull(a)
        return a
    l = _merge(a, b.left)
    b.left = l
    l.parent = b
    _pull(b)
    return b


def _split(t: _Node | None, k: int) -> tuple[_Node | None, _Node | None]:
    """First k nodes go left."""
    if t is None:
        return None, None
    lsize = t.left.size if t.left is not None else 0
    if k <= lsize:
        a, b = _split(t.left, k)
        t.left = b
        if b is not None:
            b.parent = t
        _pull(t)
        if a is not None:
            a.parent = None
        t.parent = None
        return a, t
    a, b = _split(t.right, k - lsize - 1)
    t.right = a
    if a is not None:
        a.parent = t
    _pull(t)
    if b is not None:
        b.parent = None
    t.parent = None
    return t, b


def _root(x: _Node) -> _Node:
    while x.parent is not None:
        x = x.parent
    return x


def _index(x: _Node) -> int:
    idx = x.left.size if x.left is not None else 0
    while x.parent is not None:
        p = x.parent
        if p.right is x:
            idx += 1 + (p.left.size if p.left is not None else 0)
        x = p
    return idx


def _refresh_up(x: _Node | None) -> None:
    while x is not None:
        _pull(x)
        x = x.parent


class EulerTourForest:
    """Forest on vertices 0..n-1 as Euler tours stored in treaps."""

    def __init__(self, n: int, seed: int = 0):
        self._rng = random.Random(seed)
        self.n = n
        self._vnode = [_Node(self._rng.getrandbits(60), v) for v in range(n)]
        self._arcs: dict[int, tuple[_Node, _Node, int, int]] = {}

    def _reroot(self, v: int) -> _Node:
        x = self._vnode[v]
        r = _root(x)
        i = _index(x)
        a, b = _split(r, i)
        return _merge(b, a)

    def reroot(self, v: int) -> None:
        self._reroot(v)

    def connected(self, u: int, v: int) -> bool:
        return _root(self._vnode[u]) is _root(self._vnode[v])

    def has_edge(self, eid: int) -> bool:
        return eid in self._arcs

    def link(self, u: int, v: int, eid: int) -> None:
        if eid in self._arcs:
            raise ForestError(f"edge {eid} already in forest")
        if u == v or self.connected(u, v):
            raise ForestError(f"link {u}-{v} would create a cycle")
        tu = self._reroot(u)
        tv = self._reroot(v)
        a1 = _Node(self._rng.getrandbits(60))
        a2 = _Node(self._rng.getrandbits(60))
        self._arcs[eid] = (a1, a2, u, v)
        _merge(_merge(_merge(tu, a1), tv), a2)

    def cut(self, eid: int) -> tuple[int, int]:
        try:
            a1, a2, u, v = self._arcs.pop(eid)
        except KeyError:
            raise ForestError(f"edge {eid} is not a forest edge") from None
        r = _root(a1)
        i1, i2 = _index(a1), _index(a2)
        if i1 > i2:
            i1, i2 = i2, i1
        left, rest = _split(r, i1)
        _arc, rest = _split(rest, 1)
        mid, rest = _split(rest, i2 - i1 - 1)
        _arc, right = _split(rest, 1)
        _merge(left, right)
        return u, v

    # -- aggregates ----------------------------------------------------------
    def weight(self, v: int) -> int:
        return self._vnode[v].weight

    def add_weight(self, v: int, delta: int) -> None:
        x = self._vnode[v]
        if x.weight + delta < 0:
            raise ForestError(f"weight of {v} would become negative")
        x.weight += delta
        _refresh_up(x)

    def total_weight(self, v: int) -> int:
        return _root(self._vnode[v]).sw

    def positive_count(self, v: int) -> int:
        return _root(self._vnode[v]).spos

    def tree_size(self, v: int) -> int:
        return _root(self._vnode[v]).scnt

    def component_key(self, v: int) -> int:
        """Minimum vertex id in v's tree."""
        return _root(self._vnode[v]).smin

    def list_positive(self, v: int) -> Iterator[int]:
        """Lazily yield positive-weight vertices of v's tree in tour order.

        Subtrees without positive weight are skipped, so stopping early costs
        O(log n) per yielded vertex. Do not mutate while iterating.
        """
        stack: list[_Node] = []
        t: _Node | None = _root(self._vnode[v])
        while True:
            while t is not None and t.spos > 0:
                stack.append(t)
                t = t.left
            if not stack:
                return
            t = stack.pop()
            if t.vertex >= 0 and t.weight > 0:
                yield t.vertex
            t = t.right

    def tree_vertices(self, v: int) -> list[int]:
        out = []
        stack = [_root(self._vnode[v])]
        while stack:
            t = stack.pop()
            if t is None:
                continue
            if t.vertex >= 0:
                out.append(t.vertex)
            stack.append(t.left)
            stack.append(t.right)
        return out


class WeightedForest:
    """Forest with non-negative integer vertex weights and per-tree sums."""

    def __init__(self, n: int, seed: int = 0):
        self.ett = EulerTourForest(n, seed)

    def link(self, u: int, v: int, eid: int) -> None:
        self.ett.link(u, v, eid)

    def cut(self, eid: int) -> tuple[int, int]:
        return self.ett.cut(eid)

    def increment_weight(self, v: int) -> None:
        self.ett.add_weight(v, 1)

    def decrement_weight(self, v: int) -> None:
        if self.ett.weight(v) < 1:
            raise ForestError(f"weight of {v} is already 0")
        self.ett.add_weight(v, -1)

    def weight(self, v: int) -> int:
        return self.ett.weight(v)

    def total_weight(self, v: int) -> int:
        return self.ett.total_weight(v)

    def list_positive(self, v: int) -> Iterator[int]:
        return self.ett.list_positive(v)

    def connected(self, u: int, v: int) -> bool:
        return self.ett.connected(u, v)


@dataclass
class ForestDelta:
    removed: list[int] = field(default_factory=list)
    added: list[int] = field(default_factory=list)
    merged: bool = False
    split: bool = False


class SpanningForest:
    """Spanning forest of a dynamic multigraph with replacement-edge search.

    Loops are stored but never become forest edges. Deleting a forest edge
    scans non-tree edges of the smaller side and picks the lowest id.
    """

    def __init__(self, n: int, seed: int = 0):
        self.n = n
        self.ett = EulerTourForest(n, seed)
        self.edges: dict[int, tuple[int, int]] = {}
        self.tree_edges: set[int] = set()
        self._nontree: list[set[int]] = [set() for _ in range(n)]

    def connected(self, u: int, v: int) -> bool:
        return self.ett.connected(u, v)

    def component_key(self, v: int) -> int:
        return self.ett.component_key(v)

    def component_count(self) -> int:
        return sum(1 for v in range(self.n) if self.ett.component_key(v) == v)

    def is_connected(self) -> bool:
        return self.n <= 1 or self.ett.tree_size(0) == self.n

    def insert(self, eid: int, u: int, v: int) -> ForestDelta:
        if eid in self.edges:
            raise ForestError(f"edge {eid} already present")
        self.edges[eid] = (u, v)
        if u != v and not self.ett.connected(u, v):
            self.ett.link(u, v, eid)
            self.tree_edges.add(eid)
            return ForestDelta(added=[eid], merged=True)
        self._nontree[u].add(eid)
        self._nontree[v].add(eid)
        return ForestDelta()

    def delete(self, eid: int) -> ForestDelta:
        try:
            u, v = self.edges.pop(eid)
        except KeyError:
            raise ForestError(f"edge {eid} not present") from None
        if eid not in self.tree_edges:
            self._nontree[u].discard(eid)
            self._nontree[v].discard(eid)
            return ForestDelta()
        self.tree_edges.discard(eid)
        self.ett.cut(eid)
        small = u if self.ett.tree_size(u) <= self.ett.tree_size(v) else v
        side = self.ett.tree_vertices(small)
        best = None
        for x in side:
            for f in self._nontree[x]:
                a, b = self.edges[f]
                y = b if a == x else a
                if not self.ett.connected(small, y) and (best is None or f < best):
                    best = f
        if best is None:
            return ForestDelta(removed=[eid], split=True)
        a, b = self.edges[best]
        self._nontree[a].discard(best)
        self._nontree[b].discard(best)
        self.ett.link(a, b, best)
        self.tree_edges.add(best)
        return ForestDelta(removed=[eid], added=[best])
