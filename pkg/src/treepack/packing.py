"""Greedy tree packings: construction, verification and dynamic maintenance.

Every tree is a minimum spanning tree under the key (load of the packing
before it, edge id). That key is a strict total order, so the greedy
packing of a graph is unique and a dynamically maintained packing can be
compared exactly against a from-scratch build.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from ._common import UnionFind, ceil_log2
from .multigraph import MultiGraph


class PackingError(ValueError):
    pass


class DisconnectedError(PackingError):
    pass


@dataclass
class TreePacking:
    trees: list[tuple[int, ...]]
    L: dict[int, int]

    @property
    def size(self) -> int:
        return len(self.trees)

    def rel_load(self, e: int) -> Fraction:
        if not self.trees:
            raise PackingError("empty packing has no relative loads")
        return Fraction(self.L.get(e, 0), len(self.trees))

    def loads(self) -> dict[int, Fraction]:
        if not self.trees:
            raise PackingError("empty packing has no relative loads")
        N = len(self.trees)
        return {e: Fraction(c, N) for e, c in self.L.items()}

    def min_load(self) -> tuple[Fraction, int]:
        if not self.L:
            raise PackingError("no edges")
        e = min(self.L, key=lambda x: (self.L[x], x))
        return self.rel_load(e), e

    def max_load(self) -> tuple[Fraction, int]:
        if not self.L:
            raise PackingError("no edges")
        e = min(self.L, key=lambda x: (-self.L[x], x))
        return self.rel_load(e), e

    def dump(self) -> str:
        return "".join(" ".join(map(str, t)) + "\n" for t in self.trees)


def parse_packing_dump(text: str) -> list[tuple[int, ...]]:
    return [tuple(sorted(int(x) for x in line.split())) for line in text.splitlines()]


def loads_of(trees: Iterable[Iterable[int]], edge_ids: Iterable[int]) -> dict[int, int]:
    L = {e: 0 for e in edge_ids}
    for t in trees:
        for e in t:
            L[e] += 1
    return L


def build_greedy(g: MultiGraph, N: int, start: TreePacking | None = None) -> TreePacking:
    """Greedy packing of N trees (Kruskal under key (load, id)).

    With ``start`` the new trees are appended after an existing packing.
    """
    if N < 0:
        raise PackingError("N must be non-negative")
    if not g.is_connected():
        raise DisconnectedError("graph is disconnected")
    ids = g.edge_ids()
    m = len(ids)
    ends = [g.edges[e] for e in ids]
    trees = [] if start is None else list(start.trees)
    L = {e: 0 for e in ids} if start is None else {e: start.L.get(e, 0) for e in ids}
    key = [L[e] * m + i for i, e in enumerate(ids)]
    order = list(range(m))
    n = g.n
    intern: dict[tuple[int, ...], tuple[int, ...]] = {}
    for _ in range(N):
        order.sort(key=key.__getitem__)
        parent = list(range(n))
        picked = []
        need = n - 1
        for i in order:
            if need == 0:
                break
            u, v = ends[i]
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            if u != v:
                parent[u] = v
                picked.append(i)
                need -= 1
        for i in picked:
            key[i] += m
        t = tuple(sorted(ids[i] for i in picked))
        trees.append(intern.setdefault(t, t))
    for i, e in enumerate(ids):
        L[e] = key[i] // m
    return TreePacking(trees, L)


# -- verification ----------------------------------------------------------------


@dataclass(frozen=True)
class GreedyWitness:
    tree_index: int
    nontree_edge: int | None
    tree_edge: int | None
    reason: str = "cycle"


@dataclass(frozen=True)
class GreedyCheck:
    ok: bool
    witness: GreedyWitness | None = None

    def __bool__(self) -> bool:
        return self.ok


def _spanning_tree_parents(
    vertices: list[int], edges: dict[int, tuple[int, int]], tree: Iterable[int]
) -> tuple[dict[int, tuple[int, int]], dict[int, int]] | None:
    """BFS parents (vertex -> (parent, eid)) and depths, or None if not a spanning tree."""
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in vertices}
    cnt = 0
    for e in tree:
        if e not in edges:
            return None
        u, v = edges[e]
        if u == v or u not in adj or v not in adj:
            return None
        adj[u].append((v, e))
        adj[v].append((u, e))
        cnt += 1
    if cnt != len(vertices) - 1:
        return None
    if not vertices:
        return {}, {}
    root = vertices[0]
    par = {root: (root, -1)}
    depth = {root: 0}
    q = deque([root])
    while q:
        x = q.popleft()
        for y, e in adj[x]:
            if y not in par:
                par[y] = (x, e)
                depth[y] = depth[x] + 1
                q.append(y)
    if len(par) != len(vertices):
        return None
    return par, depth


def check_next_tree(
    vertices: list[int],
    edges: dict[int, tuple[int, int]],
    prefix: dict[int, int],
    tree: Iterable[int],
    index: int = 0,
) -> GreedyCheck:
    """Is `tree` a minimum spanning tree under the loads `prefix` (ties allowed)?"""
    tree = set(tree)
    res = _spanning_tree_parents(vertices, edges, tree)
    if res is None:
        return GreedyCheck(False, GreedyWitness(index, None, None, "not a spanning tree"))
    par, depth = res
    for e, (u, v) in edges.items():
        if e in tree or u == v:
            continue
        le = prefix.get(e, 0)
        a, b = u, v
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            p, f = par[a]
            if prefix.get(f, 0) > le:
                return GreedyCheck(False, GreedyWitness(index, e, f))
            a = p
    return GreedyCheck(True)


def is_greedy(g: MultiGraph, P: TreePacking | Iterable[Iterable[int]]) -> GreedyCheck:
    trees = P.trees if isinstance(P, TreePacking) else list(P)
    vertices = list(range(g.n))
    prefix: dict[int, int] = {e: 0 for e in g.edges}
    for j, t in enumerate(trees):
        chk = check_next_tree(vertices, g.edges, prefix, t, j)
        if not chk.ok:
            return chk
        for e in t:
            prefix[e] += 1
    return GreedyCheck(True)


def packing_size_log(m: int) -> int:
    return ceil_log2(m)


# -- dynamic maintenance ----------------------------------------------------------


class _Tree:
    __slots__ = ("edges", "adj")

    def __init__(self, edges: set[int], adj: dict[int, dict[int, int]]):
        self.edges = edges
        self.adj = adj  # vertex -> {eid: other endpoint}

    def copy(self) -> _Tree:
        return _Tree(set(self.edges), {v: dict(d) for v, d in self.adj.items()})

    def add(self, e: int, u: int, v: int) -> None:
        self.edges.add(e)
        self.adj.setdefault(u, {})[e] = v
        self.adj.setdefault(v, {})[e] = u

    def remove(self, e: int, u: int, v: int) -> None:
        self.edges.discard(e)
        del self.adj[u][e]
        del self.adj[v][e]

    def path(self, s: int, t: int) -> list[int] | None:
        """Edge path from s to t, or None when they lie in different trees."""
        par = {s: (s, -1)}
        q = deque([s])
        while q:
            x = q.popleft()
            if x == t:
                break
            for e, y in self.adj.get(x, {}).items():
                if y not in par:
                    par[y] = (x, e)
                    q.append(y)
        if t not in par:
            return None
        out = []
        x = t
        while x != s:
            p, e = par[x]
            out.append(e)
            x = p
        return out

    def component(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in self.adj.get(x, {}).values():
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen


@dataclass
class TreeChange:
    index: int
    removed: list[int]
    added: list[int]


@dataclass
class UpdateReport:
    changes: list[TreeChange] = field(default_factory=list)
    trees_added: int = 0
    trees_removed: int = 0
    old_size: int = 0
    new_size: int = 0
    load_changes: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def recourse(self) -> int:
        return sum(len(c.removed) + len(c.added) for c in self.changes)

    @property
    def changed_trees(self) -> list[int]:
        return [c.index for c in self.changes]


@dataclass
class _Plan:
    vertices: set[int]
    edges: dict[int, tuple[int, int]]
    inc: dict[int, set[int]]
    trees: list[_Tree]
    L: dict[int, int]
    report: UpdateReport


class DynamicGreedyPacking:
    """Maintains the unique greedy packing of a dynamic multigraph.

    Vertices may be added (they must arrive with edges to the current vertex
    set), edges inserted and deleted, and the number of trees changed. Each
    tree is repaired one key change at a time, which keeps it the minimum
    spanning tree of an intermediate graph at every step.

    With ``forest=True`` the packed graph may be disconnected and every
    "tree" is a greedy spanning forest instead.
    """

    def __init__(
        self,
        vertices: Iterable[int],
        edges: dict[int, tuple[int, int]],
        size: int,
        forest: bool = False,
    ):
        self.forest = forest
        self.vertices: set[int] = set(vertices)
        self.edges: dict[int, tuple[int, int]] = {}
        self.inc: dict[int, set[int]] = {v: set() for v in self.vertices}
        for e, (u, v) in edges.items():
            if u not in self.vertices or v not in self.vertices:
                raise PackingError(f"edge {e} has an endpoint outside the vertex set")
            self.edges[e] = (u, v)
            if u != v:
                self.inc[u].add(e)
                self.inc[v].add(e)
        self.L: dict[int, int] = {e: 0 for e in self.edges}
        self.trees: list[_Tree] = []
        for _ in range(size):
            t = self._kruskal(self.vertices, self.edges, self.L, forest)
            self.trees.append(t)
            for e in t.edges:
                self.L[e] += 1

    # -- queries --------------------------------------------------------------
    @property
    def size(self) -> int:
        return len(self.trees)

    def tree_edges(self, j: int) -> set[int]:
        return self.trees[j].edges

    def rel_load(self, e: int) -> Fraction:
        return Fraction(self.L[e], len(self.trees))

    def as_packing(self) -> TreePacking:
        return TreePacking([tuple(sorted(t.edges)) for t in self.trees], dict(self.L))

    def tree_path(self, j: int, u: int, v: int) -> list[int]:
        return self.trees[j].path(u, v)

    # -- construction ----------------------------------------------------------
    @staticmethod
    def _kruskal(vertices, edges, loads, forest: bool = False) -> _Tree:
        index = {v: i for i, v in enumerate(sorted(vertices))}
        uf = UnionFind(len(index))
        t = _Tree(set(), {v: {} for v in vertices})
        need = len(index) - 1
        for e in sorted(edges, key=lambda x: (loads.get(x, 0), x)):
            if need <= 0:
                break
            u, v = edges[e]
            if uf.union(index[u], index[v]):
                t.add(e, u, v)
                need -= 1
        if need > 0 and not forest:
            raise DisconnectedError("packed graph is disconnected")
        return t

    # -- updates ---------------------------------------------------------------
    def plan(
        self,
        inserts: Iterable[tuple[int, int, int]] = (),
        deletes: Iterable[int] = (),
        new_vertices: Iterable[int] = (),
        size: int | None = None,
    ) -> _Plan:
        ins = {e: (u, v) for e, u, v in inserts}
        dels = set(deletes)
        newv = sorted(set(new_vertices) - self.vertices)
        for e in dels:
            if e not in self.edges:
                raise PackingError(f"edge {e} not in packed graph")
        for e in ins:
            if e in self.edges:
                raise PackingError(f"edge {e} already in packed graph")
        vertices = self.vertices | set(newv)
        for e, (u, v) in ins.items():
            if u not in vertices or v not in vertices:
                raise PackingError(f"edge {e} has an endpoint outside the vertex set")
        edges = {e: uv for e, uv in self.edges.items() if e not in dels}
        edges.update(ins)
        # incidence over old and new edges; filtering by presence happens per tree
        inc_all = {v: set(s) for v, s in self.inc.items()}
        for v in newv:
            inc_all[v] = set()
        for e, (u, v) in ins.items():
            if u != v:
                inc_all[u].add(e)
                inc_all[v].add(e)
        all_ends = dict(self.edges)
        all_ends.update(ins)

        N_old = len(self.trees)
        N_new = N_old if size is None else size
        pre_old: dict[int, int] = {}
        pre_new: dict[int, int] = {}
        delta: dict[int, int] = {}  # pre_new - pre_old where nonzero
        new_trees: list[_Tree] = []
        report = UpdateReport(old_size=N_old, new_size=N_new)
        ins_sorted = sorted(ins)
        del_sorted = sorted(dels)

        for j in range(min(N_old, N_new)):
            T = self.trees[j]
            copied = False
            tverts = set(self.vertices)
            pending = set(ins)
            done_del: set[int] = set()
            applied: set[int] = set()

            def key(e: int) -> tuple[int, int]:
                if e in ins or e in applied:
                    return (pre_new.get(e, 0), e)
                return (pre_old.get(e, 0), e)

            def present(e: int) -> bool:
                if e in ins:
                    return e not in pending
                return e not in done_del

            def min_crossing(side: set[int]) -> int | None:
                # the crossing set is symmetric, so scan the smaller side
                if 2 * len(side) > len(tverts):
                    side = tverts - side
                best = None
                bkey = None
                for x in side:
                    for e in inc_all[x]:
                        if e in ins:
                            if e in pending:
                                continue
                            k = (pre_new.get(e, 0), e)
                        elif e in done_del:
                            continue
                        else:
                            k = ((pre_new if e in applied else pre_old).get(e, 0), e)
                        if bkey is not None and k >= bkey:
                            continue
                        a, b = all_ends[e]
                        y = b if a == x else a
                        if y in side or y not in tverts:
                            continue
                        best, bkey = e, k
                return best

            def own() -> None:
                nonlocal T, copied
                if not copied:
                    T = T.copy()
                    copied = True

            # A: key changes of surviving old edges, in id order
            for e in sorted(delta):
                if e in dels or e in ins:
                    continue
                old_k, new_k = pre_old.get(e, 0), pre_new.get(e, 0)
                u, v = all_ends[e]
                if e in T.edges:
                    applied.add(e)
                    if new_k > old_k:
                        own()
                        T.remove(e, u, v)
                        side = T.component(u)
                        g = min_crossing(side)
                        if g is not None:
                            a, b = all_ends[g]
                            T.add(g, a, b)
                else:
                    applied.add(e)
                    if new_k < old_k and u != v:
                        p = T.path(u, v)
                        if p is None:
                            own()
                            T.add(e, u, v)
                            continue
                        f = max(p, key=key)
                        if key(f) > key(e):
                            own()
                            a, b = all_ends[f]
                            T.remove(f, a, b)
                            T.add(e, u, v)
            # C: vertex activations
            waiting = list(newv)
            if waiting and not tverts:
                # first vertex of an empty packed graph needs no attaching edge
                own()
                x = waiting.pop(0)
                tverts.add(x)
                T.adj.setdefault(x, {})
            while waiting:
                chosen = None
                for x in waiting:
                    cands = []
                    for e in inc_all[x]:
                        a, b = all_ends[e]
                        y = b if a == x else a
                        if y in tverts:
                            cands.append(e)
                    if cands:
                        chosen = (x, min(cands, key=key))
                        break
                if chosen is None:
                    if not self.forest:
                        raise DisconnectedError("new vertices cannot be attached")
                    # start a new component
                    own()
                    x = waiting.pop(0)
                    tverts.add(x)
                    T.adj.setdefault(x, {})
                    continue
                x, e = chosen
                own()
                waiting.remove(x)
                tverts.add(x)
                T.adj.setdefault(x, {})
                pending.discard(e)
                a, b = all_ends[e]
                T.add(e, a, b)
            # D: insertions
            for e in ins_sorted:
                if e not in pending:
                    continue
                pending.discard(e)
                u, v = all_ends[e]
                if u == v:
                    continue
                p = T.path(u, v)
                if p is None:
                    own()
                    T.add(e, u, v)
                    continue
                f = max(p, key=key)
                if key(f) > key(e):
                    own()
                    a, b = all_ends[f]
                    T.remove(f, a, b)
                    T.add(e, u, v)
            # B: deletions
            for e in del_sorted:
                done_del.add(e)
                if e not in T.edges:
                    continue
                own()
                u, v = all_ends[e]
                T.remove(e, u, v)
                side = T.component(u)
                g = min_crossing(side)
                if g is None:
                    if self.forest:
                        continue
                    raise DisconnectedError(f"deleting edge {e} disconnects the packed graph")
                a, b = all_ends[g]
                T.add(g, a, b)
            new_trees.append(T)
            old_edges = self.trees[j].edges
            if copied:
                rem = sorted(old_edges - T.edges)
                add = sorted(T.edges - old_edges)
                if rem or add:
                    report.changes.append(TreeChange(j, rem, add))
            for e in old_edges:
                pre_old[e] = pre_old.get(e, 0) + 1
                d = delta.get(e, 0) - 1
                if d:
                    delta[e] = d
                else:
                    delta.pop(e, None)
            for e in T.edges:
                pre_new[e] = pre_new.get(e, 0) + 1
                d = delta.get(e, 0) + 1
                if d:
                    delta[e] = d
                else:
                    delta.pop(e, None)

        for _j in range(N_old, N_new):
            t = self._kruskal(vertices, edges, pre_new, self.forest)
            new_trees.append(t)
            for e in t.edges:
                pre_new[e] = pre_new.get(e, 0) + 1
            report.trees_added += 1
        report.trees_removed = max(0, N_old - N_new)

        L = {e: pre_new.get(e, 0) for e in edges}
        for e in set(self.L) | set(L):
            a, b = self.L.get(e, 0), L.get(e, 0)
            if a != b or (e in ins) or (e in dels):
                report.load_changes[e] = (a, b)
        inc = {v: {e for e in s if e in edges} for v, s in inc_all.items()}
        return _Plan(vertices, edges, inc, new_trees, L, report)

    def commit(self, plan: _Plan) -> UpdateReport:
        self.vertices = plan.vertices
        self.edges = plan.edges
        self.inc = plan.inc
        self.trees = plan.trees
        self.L = plan.L
        return plan.report

    def update(self, inserts=(), deletes=(), new_vertices=(), size=None) -> UpdateReport:
        return self.commit(self.plan(inserts, deletes, new_vertices, size))

    def insert(self, e: int, u: int, v: int) -> UpdateReport:
        return self.update(inserts=[(e, u, v)])

    def delete(self, e: int) -> UpdateReport:
        return self.update(deletes=[e])

    def resize(self, size: int) -> UpdateReport:
        return self.update(size=size)


# -- leveled packings with virtual edges -------------------------------------------


@dataclass
class LevelReport:
    changed_trees: set[int] = field(default_factory=set)
    old_size: int = 0
    new_size: int = 0
    load_changes: dict[int, tuple[int, int]] = field(default_factory=dict)
    recourse: int = 0
    kept_virtual: int | None = None
    popped: int | None = None
    activated: list[int] = field(default_factory=list)

    def absorb(self, rep: UpdateReport) -> None:
        self.changed_trees.update(rep.changed_trees)
        self.recourse += rep.recourse
        self.new_size = rep.new_size
        for e, (a, b) in rep.load_changes.items():
            if e in self.load_changes:
                self.load_changes[e] = (self.load_changes[e][0], b)
            else:
                self.load_changes[e] = (a, b)


def mincut_level_size(i: int, m: int, const: Fraction | int = 1536) -> int:
    return max(1, int(-(-Fraction(const) * 2 ** (3 * i) * ceil_log2(m) // 1)))


def arb_level_size(i: int, m: int, eps: Fraction, const: Fraction | int = 24) -> int:
    val = Fraction(const) * 2**i * ceil_log2(m) / (Fraction(eps) ** 2)
    return max(1, int(-(-val // 1)))


class LeveledPacking:
    """Greedy packing of G plus virtual edges, for one level i.

    flavor "mincut": every vertex of G is packed; a virtual path seeds the
    packed graph at initialization. flavor "arboricity": a vertex joins once
    its degree reaches ceil(2^(i-1)), padded with virtual edges, and the
    packing consists of spanning forests, so G may be disconnected.

    A deletion that would disconnect the packed graph or break the load cap is
    absorbed by keeping the edge as virtual. Virtual edges with small load
    wait in a FIFO queue; at most one is removed per external update.
    """

    def __init__(
        self,
        level: int,
        flavor: str,
        n: int,
        edges: Iterable[tuple[int, int, int]] = (),
        const: Fraction | int | None = None,
        eps: Fraction | None = None,
        add_virtual_path: bool = True,
    ):
        if flavor not in ("mincut", "arboricity"):
            raise ValueError(f"unknown flavor {flavor!r}")
        self.level = level
        self.flavor = flavor
        self.n = n
        self.eps = None if eps is None else Fraction(eps)
        if flavor == "arboricity" and self.eps is None:
            raise ValueError("arboricity flavor needs eps")
        self.const = Fraction(const if const is not None else (1536 if flavor == "mincut" else 24))
        self.real: dict[int, tuple[int, int]] = {}
        self.virtual: set[int] = set()
        self.queue: deque[int] = deque()
        self._next_virtual = -1
        self.deg = [0] * n
        self._radj: list[dict[int, int]] = [dict() for _ in range(n)]
        for e, u, v in edges:
            self._add_real(e, u, v)
        if flavor == "mincut":
            self._init_mincut(add_virtual_path)
        else:
            self._init_arb()

    # -- sizes and thresholds -----------------------------------------------
    def target_size(self) -> int:
        m = len(self.real)
        if self.flavor == "mincut":
            return mincut_level_size(self.level, m, self.const)
        return arb_level_size(self.level, m, self.eps, self.const)

    @property
    def size(self) -> int:
        return self.engine.size

    @property
    def L(self) -> dict[int, int]:
        return self.engine.L

    def _queue_ok(self, load: int, size: int) -> bool:
        # mincut: L <= 8|T|/2^i ; arboricity: l < 8/2^i
        if self.flavor == "mincut":
            return load * 2**self.level <= 8 * size
        return load * 2**self.level < 8 * size

    def _cap_broken(self, plan: _Plan) -> bool:
        size = len(plan.trees)
        cap = 16 * size
        scale = 2**self.level
        if self.flavor == "mincut":
            return any(x * scale > cap for x in plan.L.values())
        return any(x * scale >= cap for x in plan.L.values())

    def cap_violations(self) -> list[int]:
        """Edges over the mincut-flavor cap L(e) <= 16|T|/2^i (empty when fine)."""
        cap = 16 * self.size
        return sorted(e for e, x in self.L.items() if x * 2**self.level > cap)

    # -- bookkeeping ------------------------------------------------------------
    def _add_real(self, e: int, u: int, v: int) -> None:
        self.real[e] = (u, v)
        self.deg[u] += 1
        self.deg[v] += 1
        self._radj[u][e] = v
        self._radj[v][e] = u

    def _drop_real(self, e: int) -> tuple[int, int]:
        u, v = self.real.pop(e)
        self.deg[u] -= 1
        self.deg[v] -= 1
        del self._radj[u][e]
        self._radj[v].pop(e, None)
        return u, v

    def _new_virtual_id(self) -> int:
        e = self._next_virtual
        self._next_virtual -= 1
        return e

    def packed_edges(self) -> dict[int, tuple[int, int]]:
        return self.engine.edges

    # -- initialization -------------------------------------------------------------
    def _init_mincut(self, add_path: bool) -> None:
        edges = {e: uv for e, uv in self.real.items()}
        if add_path:
            mult = max(1, 2 ** (self.level - 4))
            for v in range(self.n - 1):
                for _ in range(mult):
                    e = self._new_virtual_id()
                    edges[e] = (v, v + 1)
                    self.virtual.add(e)
        self.engine = DynamicGreedyPacking(range(self.n), edges, self.target_size())
        self._prune_all()

    def _init_arb(self) -> None:
        self.active: set[int] = set()
        self.engine = DynamicGreedyPacking([], {}, self.target_size(), forest=True)
        # the initial graph is known in full, so all eligible vertices join in one batch
        eligible = [v for v in range(self.n) if self.deg[v] >= self._act_threshold()]
        if eligible:
            self._activate_batch(eligible, LevelReport())
        self._prune_all()

    def _prune_all(self) -> None:
        changed = True
        while changed:
            changed = False
            for e in sorted(self.virtual):
                if not self._queue_ok(self.engine.L[e], self.engine.size):
                    continue
                try:
                    plan = self.engine.plan(deletes=[e])
                except DisconnectedError:
                    continue
                if self._cap_broken(plan):
                    continue
                self.engine.commit(plan)
                self.virtual.discard(e)
                changed = True

    # -- arboricity activation --------------------------------------------------------
    def _act_threshold(self) -> int:
        return 1 if self.level == 0 else 2 ** (self.level - 1)

    def _activate_batch(self, xs: list[int], rep: LevelReport) -> None:
        inserts = []
        active = set(self.active)
        batch = set(xs)
        for x in sorted(xs):
            if x in active:
                continue
            real_to_active = []
            credit = 0
            for e, y in sorted(self._radj[x].items()):
                if y in active and y != x:
                    real_to_active.append((e, x, y))
                elif y in batch and y != x:
                    credit += 1  # joins when its batch-mate is processed
            need = self._act_threshold() - len(real_to_active) - credit
            if active and need > 0:
                targets = sorted(active)
                for k in range(need):
                    e = self._new_virtual_id()
                    inserts.append((e, x, targets[k % len(targets)]))
                    self.virtual.add(e)
            inserts.extend(real_to_active)
            active.add(x)
            rep.activated.append(x)
        newv = sorted(active - self.active)
        self.active = active
        rep.absorb(
            self.engine.update(inserts=inserts, new_vertices=newv, size=self.target_size())
        )

    # -- external updates ------------------------------------------------------------
    def insert(self, e: int, u: int, v: int) -> LevelReport:
        rep = LevelReport(old_size=self.engine.size, new_size=self.engine.size)
        self._add_real(e, u, v)
        if self.flavor == "mincut":
            rep.absorb(self.engine.update(inserts=[(e, u, v)], size=self.target_size()))
        else:
            if u == v:
                raise ValueError("arboricity packings take loopless graphs")
            acts = [x for x in (u, v) if x not in self.active and self.deg[x] >= self._act_threshold()]
            if acts:
                self._activate_batch(acts, rep)
            elif u in self.active and v in self.active:
                rep.absorb(self.engine.update(inserts=[(e, u, v)], size=self.target_size()))
            else:
                rep.absorb(self.engine.update(size=self.target_size()))
        self._settle(rep)
        return rep

    def delete(self, e: int) -> LevelReport:
        rep = LevelReport(old_size=self.engine.size, new_size=self.engine.size)
        self._drop_real(e)
        size = self.target_size()
        if e in self.engine.edges:
            try:
                plan = self.engine.plan(deletes=[e], size=size)
                broken = self._cap_broken(plan)
            except DisconnectedError:
                plan, broken = None, True
            if broken:
                self.virtual.add(e)
                rep.kept_virtual = e
                rep.absorb(self.engine.update(size=size))
            else:
                rep.absorb(self.engine.commit(plan))
        else:
            rep.absorb(self.engine.update(size=size))
        self._settle(rep)
        return rep

    def _settle(self, rep: LevelReport) -> None:
        L, N = self.engine.L, self.engine.size
        queued = set(self.queue)
        for e in list(self.queue):
            if not self._queue_ok(L[e], N):
                self.queue.remove(e)
                queued.discard(e)
        for e in sorted(self.virtual):
            if e not in queued and self._queue_ok(L[e], N):
                self.queue.append(e)
        if not self.queue:
            return
        e = self.queue.popleft()
        try:
            plan = self.engine.plan(deletes=[e])
            ok = not self._cap_broken(plan)
        except DisconnectedError:
            ok = False
        if ok:
            rep.absorb(self.engine.commit(plan))
            self.virtual.discard(e)
            rep.popped = e
            # loads moved; drop queue entries that no longer qualify
            L, N = self.engine.L, self.engine.size
            for x in list(self.queue):
                if not self._queue_ok(L[x], N):
                    self.queue.remove(x)
        else:
            self.queue.append(e)

    # -- estimates ----------------------------------------------------------------------
    def min_load(self) -> tuple[int, int] | None:
        """(load, eid) of the least loaded packed edge, or None without edges."""
        if not self.engine.edges:
            return None
        e = min(self.engine.edges, key=lambda x: (self.engine.L[x], x))
        return self.engine.L[e], e

    def packed_graph(self) -> tuple[list[int], dict[int, tuple[int, int]]]:
        return sorted(self.engine.vertices), dict(self.engine.edges)
