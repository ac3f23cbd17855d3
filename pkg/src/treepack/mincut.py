"""Dynamic exact min-cut for small lambda via greedy tree packings.

Two candidate families are maintained: cuts that cross a packed tree once
(1-respecting cuts) and trivial cuts of the contracted graph G_a, where
G_a contracts every edge whose relative load is below a.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._common import INF, UnionFind, ceil_log2
from .dynforest import SpanningForest
from .multigraph import MultiGraph, Update, apply_update
from .packing import LeveledPacking, build_greedy


class ConfigError(ValueError):
    pass


def a_mu(mu: int) -> Fraction:
    """Contraction threshold 2/mu - 3/(8 mu^2)."""
    return Fraction(2, mu) - Fraction(3, 8 * mu * mu)


@dataclass(frozen=True)
class MinCutConfig:
    lambda_max: int
    const: Fraction = Fraction(1536)
    c: Fraction = Fraction(2)
    gamma: Fraction = Fraction(8)
    sparsify: bool = False
    seed: int = 0

    def __post_init__(self) -> None:
        if self.lambda_max < 1:
            raise ConfigError("lambda_max must be >= 1")
        if Fraction(self.const) <= 0:
            raise ConfigError("packing constant must be positive")
        if Fraction(self.c) < Fraction(3, 2):
            raise ConfigError("c must be >= 3/2")
        if Fraction(self.gamma) < 4 * Fraction(self.c):
            raise ConfigError("gamma must be >= 4c")

    def eps(self, lam: int) -> Fraction:
        return Fraction(1, 16 * lam)

    def levels(self) -> list[int]:
        return list(range(self.lambda_max.bit_length()))

    def as_dict(self) -> dict:
        return {
            "lambda_max": self.lambda_max,
            "const": f"{Fraction(self.const).numerator}/{Fraction(self.const).denominator}",
            "c": str(Fraction(self.c)),
            "gamma": str(Fraction(self.gamma)),
            "sparsify": self.sparsify,
            "seed": self.seed,
        }


# -- 1-respecting cuts --------------------------------------------------------------


class TreeCuts:
    """Cut value of every tree edge of one spanning tree over a fixed edge set."""

    __slots__ = ("parent", "pedge", "depth", "cut", "tree_edges")

    def __init__(self, n: int, tree_edges: Iterable[int], ends: dict[int, tuple[int, int]],
                 graph_edges: Iterable[int]):
        self.tree_edges = set(tree_edges)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e in self.tree_edges:
            u, v = ends[e]
            adj[u].append((v, e))
            adj[v].append((u, e))
        parent = [-1] * n
        pedge = [-1] * n
        depth = [0] * n
        tin = [0] * n
        tout = [0] * n
        seen = [False] * n
        seen[0] = True
        order = []
        stack = [(0, 0)]
        clock = 0
        # iterative dfs with entry/exit times
        while stack:
            x, state = stack.pop()
            if state == 0:
                tin[x] = clock
                clock += 1
                order.append(x)
                stack.append((x, 1))
                for y, e in sorted(adj[x], reverse=True):
                    if not seen[y]:
                        seen[y] = True
                        parent[y] = x
                        pedge[y] = e
                        depth[y] = depth[x] + 1
                        stack.append((y, 0))
            else:
                tout[x] = clock - 1
        if not all(seen):
            raise ValueError("tree is not spanning")
        self.parent, self.pedge, self.depth = parent, pedge, depth
        cut = [0] * n
        ge = [e for e in graph_edges if ends[e][0] != ends[e][1]]
        if ge and n > 1:
            tin_a = np.array(tin)
            tout_a = np.array(tout)
            eu = tin_a[[ends[e][0] for e in ge]]
            ev = tin_a[[ends[e][1] for e in ge]]
            lo = tin_a[:, None]
            hi = tout_a[:, None]
            inu = (eu[None, :] >= lo) & (eu[None, :] <= hi)
            inv = (ev[None, :] >= lo) & (ev[None, :] <= hi)
            cut = (inu != inv).sum(axis=1).tolist()
        self.cut = cut

    def path_add(self, u: int, v: int, delta: int) -> None:
        parent, depth, cut = self.parent, self.depth, self.cut
        while u != v:
            if depth[u] < depth[v]:
                u, v = v, u
            cut[u] += delta
            u = parent[u]

    def best(self) -> tuple[int | float, int, int]:
        """(value, tree edge id, child vertex) minimising (value, edge id)."""
        best = (INF, -1, -1)
        for x in range(len(self.parent)):
            if self.parent[x] < 0:
                continue
            cand = (self.cut[x], self.pedge[x], x)
            if cand < best:
                best = cand
        return best

    def subtree(self, x: int) -> set[int]:
        n = len(self.parent)
        children: list[list[int]] = [[] for _ in range(n)]
        for y in range(n):
            if self.parent[y] >= 0:
                children[self.parent[y]].append(y)
        out = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for z in children[y]:
                out.add(z)
                stack.append(z)
        return out


def one_respecting_min(g: MultiGraph, tree: Iterable[int]) -> tuple[int | float, int]:
    """Smallest cut crossing `tree` exactly once: (value, tree edge)."""
    tree = list(tree)
    if len(tree) != g.n - 1:
        raise ValueError("tree is not spanning")
    if g.n < 2:
        return INF, -1
    tc = TreeCuts(g.n, tree, g.edges, g.edges)
    val, e, _x = tc.best()
    return val, e


# -- contraction tracker --------------------------------------------------------------


class TrackerError(ValueError):
    pass


class ContractionView:
    """Trivial cuts of G_a, kept under edge and load-crossing events.

    Low edges (load < a) live in a spanning-forest structure Gamma; each
    vertex weight counts its endpoints of high edges, so a component's weight
    sum is the degree of its vertex in G_a (loops twice).
    """

    def __init__(self, n: int, a: Fraction, seed: int = 0):
        self.n = n
        self.a = Fraction(a)
        self.gamma = SpanningForest(n, seed)
        self.ett = self.gamma.ett
        self.side: dict[int, bool] = {}  # eid -> is high
        self.ends: dict[int, tuple[int, int]] = {}
        self.high_inc: list[dict[int, int]] = [dict() for _ in range(n)]
        self._heap: list[tuple[int, int]] = [(0, v) for v in range(n)]
        heapq.heapify(self._heap)

    def _push(self, v: int) -> None:
        k = self.ett.component_key(v)
        heapq.heappush(self._heap, (self.ett.total_weight(k), k))

    def _add_high(self, e: int, u: int, v: int) -> None:
        self.ett.add_weight(u, 1)
        self.ett.add_weight(v, 1)
        self.high_inc[u][e] = v
        self.high_inc[v][e] = u
        self._push(u)
        self._push(v)

    def _drop_high(self, e: int, u: int, v: int) -> None:
        self.ett.add_weight(u, -1)
        self.ett.add_weight(v, -1)
        del self.high_inc[u][e]
        self.high_inc[v].pop(e, None)
        self._push(u)
        self._push(v)

    def _add_low(self, e: int, u: int, v: int) -> None:
        self.gamma.insert(e, u, v)
        self._push(u)

    def _drop_low(self, e: int, u: int, v: int) -> None:
        self.gamma.delete(e)
        self._push(u)
        self._push(v)

    def insert(self, e: int, u: int, v: int, high: bool) -> None:
        if e in self.side:
            raise TrackerError(f"edge {e} already tracked")
        self.side[e] = high
        self.ends[e] = (u, v)
        if high:
            self._add_high(e, u, v)
        else:
            self._add_low(e, u, v)

    def delete(self, e: int) -> None:
        try:
            high = self.side.pop(e)
        except KeyError:
            raise TrackerError(f"edge {e} not tracked") from None
        u, v = self.ends.pop(e)
        if high:
            self._drop_high(e, u, v)
        else:
            self._drop_low(e, u, v)

    def cross(self, e: int, to_high: bool) -> None:
        if e not in self.side:
            raise TrackerError(f"edge {e} not tracked")
        if self.side[e] == to_high:
            raise TrackerError(f"edge {e} already on that side")
        u, v = self.ends[e]
        self.side[e] = to_high
        if to_high:
            self._drop_low(e, u, v)
            self._add_high(e, u, v)
        else:
            self._drop_high(e, u, v)
            self._add_low(e, u, v)

    def set_side(self, e: int, high: bool) -> bool:
        """Emit a crossing event if needed; True when one was applied."""
        if self.side[e] != high:
            self.cross(e, high)
            return True
        return False

    def load_event(self, e: int, load: Fraction) -> bool:
        return self.set_side(e, load >= self.a)

    def min(self) -> tuple[int | float, int]:
        """(mu, component key); mu is inf when G_a has a single vertex."""
        if self.ett.tree_size(0) == self.n:
            return INF, 0
        heap = self._heap
        while True:
            s, k = heap[0]
            if self.ett.component_key(k) == k and self.ett.total_weight(k) == s:
                return s, k
            heapq.heappop(heap)

    def component(self, k: int) -> list[int]:
        return sorted(self.ett.tree_vertices(k))

    def edges(self, k: int) -> Iterator[int]:
        """High edges at the component of k; internal ones (loops of G_a) twice."""
        for x in self.ett.list_positive(k):
            for e in sorted(self.high_inc[x]):
                u, v = self.ends[e]
                if u == v:
                    yield e
                    yield e
                else:
                    yield e

    def external_edges(self, k: int) -> list[int]:
        key = self.ett.component_key(k)
        out = []
        for e in self.edges(k):
            u, v = self.ends[e]
            if (self.ett.component_key(u) == key) != (self.ett.component_key(v) == key):
                out.append(e)
        return sorted(set(out))

    def is_loop_free(self, k: int) -> bool:
        return len(self.external_edges(k)) == self.ett.total_weight(k)

    def degrees(self) -> list:
        if self.ett.tree_size(0) == self.n:
            return [INF]
        return sorted(
            self.ett.total_weight(v) for v in range(self.n) if self.ett.component_key(v) == v
        )


# -- sparsifier ------------------------------------------------------------------------


def ni_sparsify(g: MultiGraph, k: int) -> tuple[MultiGraph, list[list[int]]]:
    """Union of k successively peeled maximal spanning forests (ids preserved)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    rest = [e for e in g.edge_ids() if g.edges[e][0] != g.edges[e][1]]
    forests = []
    for _ in range(k):
        uf = UnionFind(g.n)
        f, nxt = [], []
        for e in rest:
            u, v = g.edges[e]
            (f if uf.union(u, v) else nxt).append(e)
        forests.append(f)
        rest = nxt
    h = MultiGraph(g.n)
    for e in sorted(x for f in forests for x in f):
        h.add_edge_with_id(e, *g.edges[e])
    h.next_id = max(h.next_id, g.next_id)
    return h, forests


class DynamicSparsifier:
    """Cascade of k spanning forests; H is the union of their tree edges.

    Level l holds the graph G minus the forests of levels < l. Each G update
    changes H by at most two edges; additions are reported before removals so
    H never disconnects while G stays connected.
    """

    def __init__(self, n: int, k: int, seed: int = 0):
        self.n = n
        self.k = k
        self.levels = [SpanningForest(n, seed + l) for l in range(k)]
        self.ends: dict[int, tuple[int, int]] = {}

    def in_h(self, e: int) -> bool:
        return any(e in sf.tree_edges for sf in self.levels)

    def h_edges(self) -> list[int]:
        return sorted(e for sf in self.levels for e in sf.tree_edges)

    def _insert_from(self, l: int, e: int, u: int, v: int) -> None:
        while l < self.k:
            d = self.levels[l].insert(e, u, v)
            if d.added:
                return
            l += 1

    def _delete_from(self, l: int, e: int) -> None:
        while l < self.k:
            sf = self.levels[l]
            if e not in sf.edges:
                return
            d = sf.delete(e)
            if d.added:
                # the replacement leaves the deeper levels
                e = d.added[0]
            l += 1

    def insert(self, e: int, u: int, v: int) -> list[tuple]:
        before = self.in_h_set()
        self.ends[e] = (u, v)
        self._insert_from(0, e, u, v)
        return self._delta(before)

    def delete(self, e: int) -> list[tuple]:
        before = self.in_h_set()
        self._delete_from(0, e)
        self.ends.pop(e)
        return self._delta(before)

    def in_h_set(self) -> set[int]:
        return {e for sf in self.levels for e in sf.tree_edges}

    def _delta(self, before: set[int]) -> list[tuple]:
        after = self.in_h_set()
        ops: list[tuple] = [("+", e, *self.ends[e]) for e in sorted(after - before)]
        ops += [("-", e) for e in sorted(before - after)]
        return ops


# -- estimator ---------------------------------------------------------------------------


@dataclass
class CutReport:
    value: int | float
    source: str
    detail: dict = field(default_factory=dict)
    edges: list[int] = field(default_factory=list)


class _Level:
    def __init__(self, i: int, lp: LeveledPacking):
        self.i = i
        self.lp = lp
        self.cuts: list[TreeCuts] = []
        self.views: dict[int, ContractionView] = {}


class MinCutEstimator:
    """Reports lambda exactly whenever lambda <= lambda_max.

    While G is disconnected the value is 0 and packings are dropped; they are
    rebuilt when G reconnects.
    """

    def __init__(self, cfg: MinCutConfig, g: MultiGraph):
        self.cfg = cfg
        self.g = g.copy()
        self.n = g.n
        self.sparsifier = DynamicSparsifier(g.n, cfg.lambda_max + 1, cfg.seed) if cfg.sparsify else None
        self.w: dict[int, tuple[int, int]] = {}  # working graph edges (G or H)
        self.conn = SpanningForest(g.n, cfg.seed)
        for e, u, v in self.g.iter_edges():
            self._w_ops_apply_static(self._to_w_ops(("+", e, u, v)))
        self.levels: list[_Level] | None = None
        self.suspended = True
        self.rebuilds = 0
        self._refresh_state()

    # -- working graph ------------------------------------------------------------
    def _to_w_ops(self, op: tuple) -> list[tuple]:
        if self.sparsifier is None:
            return [op]
        if op[0] == "+":
            _, e, u, v = op
            if u == v:
                self.sparsifier.ends[e] = (u, v)
                return []
            return self.sparsifier.insert(e, u, v)
        _, e = op[:2]
        if e not in self.sparsifier.ends:
            return []
        u, v = self.sparsifier.ends[e]
        if u == v:
            self.sparsifier.ends.pop(e)
            return []
        return self.sparsifier.delete(e)

    def _w_ops_apply_static(self, ops: list[tuple]) -> None:
        for op in ops:
            if op[0] == "+":
                _, e, u, v = op
                self.w[e] = (u, v)
                self.conn.insert(e, u, v)
            else:
                e = op[1]
                del self.w[e]
                self.conn.delete(e)

    def _w_connected(self) -> bool:
        return self.conn.is_connected()

    # -- construction ----------------------------------------------------------------
    def _build(self) -> None:
        self.rebuilds += 1
        levels = []
        wedges = [(e, u, v) for e, (u, v) in sorted(self.w.items())]
        for i in self.cfg.levels():
            lp = LeveledPacking(i, "mincut", self.n, wedges, const=self.cfg.const)
            lv = _Level(i, lp)
            self._recompute_all_cuts(lv)
            for mu in range(max(1, 2**i), min(self.cfg.lambda_max, 2 ** (i + 1) - 1) + 1):
                view = ContractionView(self.n, a_mu(mu), self.cfg.seed)
                N = lp.size
                for e, u, v in wedges:
                    view.insert(e, u, v, Fraction(lp.L[e], N) >= view.a)
                lv.views[mu] = view
            levels.append(lv)
        self.levels = levels

    def _recompute_all_cuts(self, lv: _Level) -> None:
        lp = lv.lp
        lv.cuts = [
            TreeCuts(self.n, t.edges, lp.engine.edges, self.w) for t in lp.engine.trees
        ]

    def _refresh_state(self) -> None:
        if self.n < 2:
            self.suspended = False
            self.levels = []
            return
        if not self._w_connected():
            self.suspended = True
            self.levels = None
            return
        if self.suspended or self.levels is None:
            self.suspended = False
            self._build()

    # -- updates ------------------------------------------------------------------------
    def apply(self, up: Update) -> tuple[str, int, int, int]:
        rec = apply_update(self.g, up)
        self.apply_op(rec)
        return rec

    def apply_op(self, rec: tuple) -> None:
        """Feed an update already applied to the estimator's own graph."""
        op, e, u, v = rec
        wops = self._to_w_ops(("+", e, u, v) if op == "+" else ("-", e))
        was_suspended = self.suspended or self.levels is None
        self._w_ops_apply_static(wops)
        if self.n < 2:
            return
        if not self._w_connected():
            self.suspended = True
            self.levels = None
            return
        if was_suspended:
            self._refresh_state()
            return
        for wop in wops:
            for lv in self.levels:
                self._level_op(lv, wop)

    def _level_op(self, lv: _Level, wop: tuple) -> None:
        lp = lv.lp
        if wop[0] == "+":
            _, e, u, v = wop
            rep = lp.insert(e, u, v)
        else:
            e = wop[1]
            u, v = lp.real[e]
            rep = lp.delete(e)
        size_changed = rep.new_size != rep.old_size
        if size_changed:
            self._recompute_all_cuts(lv)
        else:
            changed = rep.changed_trees
            for j, tc in enumerate(lv.cuts):
                if j in changed:
                    lv.cuts[j] = TreeCuts(self.n, lp.engine.trees[j].edges, lp.engine.edges, self.w)
                elif u != v:
                    tc.path_add(u, v, 1 if wop[0] == "+" else -1)
        N = lp.size
        for view in lv.views.values():
            if wop[0] == "+":
                view.insert(e, u, v, Fraction(lp.L[e], N) >= view.a)
            else:
                view.delete(e)
            if size_changed:
                targets = self.w
            else:
                targets = [x for x in rep.load_changes if x in self.w and x != e]
            for x in targets:
                view.load_event(x, Fraction(lp.L[x], N))

    # -- queries ----------------------------------------------------------------------------
    def _best(self) -> tuple:
        if self.n < 2:
            return (INF, 9, ())
        if self.suspended or self.levels is None:
            return (0, 0, ())
        best = (INF, 9, ())
        for lv in self.levels:
            for j, tc in enumerate(lv.cuts):
                val, f, x = tc.best()
                cand = (val, 1, (lv.i, j, f, x))
                if cand < best:
                    best = cand
            for mu, view in sorted(lv.views.items()):
                s, k = view.min()
                cand = (s, 2, (lv.i, mu, k))
                if cand < best:
                    best = cand
        return best

    def value(self) -> int | float:
        return self._best()[0]

    def cut(self) -> CutReport:
        val, kind, info = self._best()
        if kind == 0:
            comp = set(self.g.components()[0])
            return CutReport(0, "disconnected", {"component_size": len(comp)}, [])
        if val == INF:
            return CutReport(INF, "none", {}, [])
        if kind == 1:
            i, j, f, x = info
            side = self.levels[i].cuts[j].subtree(x)
            src = "one_respecting"
            detail = {"level": i, "tree": j, "tree_edge": f}
        else:
            i, mu, k = info
            side = set(self.levels[i].views[mu].component(k))
            src = "trivial"
            detail = {"level": i, "mu": mu, "component_key": k}
        edges = sorted(e for e, (a, b) in self.g.edges.items() if (a in side) != (b in side))
        return CutReport(val, src, detail, edges)

    def queues(self) -> dict[int, int]:
        if not self.levels:
            return {}
        return {lv.i: len(lv.lp.queue) for lv in self.levels}


# -- cut existence --------------------------------------------------------------------------


@dataclass
class CutExistenceVerdict:
    lam: int
    trees: int
    branch_one_respecting: bool
    branch_trivial: bool
    mu: int | float
    witness_loop_free: bool
    distinct_trees_checked: int

    @property
    def holds(self) -> bool:
        return self.branch_one_respecting or self.branch_trivial


def cut_existence_check(g: MultiGraph, const: Fraction | int = 1536, lam: int | None = None,
                        early_exit: bool = True) -> CutExistenceVerdict:
    from .oracles import stoer_wagner

    if lam is None:
        lam, _ = stoer_wagner(g)
    if lam < 1:
        raise ValueError("graph must be connected")
    N = int(-(-Fraction(const) * lam**3 * ceil_log2(g.m()) // 1))
    P = build_greedy(g, N)
    # branch (ii): tracker over the packing loads at a_lambda
    view = ContractionView(g.n, a_mu(lam))
    for e, u, v in g.iter_edges():
        view.insert(e, u, v, Fraction(P.L[e], N) >= view.a)
    mu, k = view.min()
    loop_free = mu != INF and view.is_loop_free(k)
    trivial = mu == lam and loop_free
    # branch (i): any packed tree 1-respecting a cut of value lambda
    found = False
    checked = 0
    seen: set = set()
    for t in P.trees:
        if t in seen:
            continue
        seen.add(t)
        checked += 1
        val, _f = one_respecting_min(g, t)
        if val == lam:
            found = True
            if early_exit:
                break
    return CutExistenceVerdict(lam, N, found, trivial, mu, loop_free, checked)
