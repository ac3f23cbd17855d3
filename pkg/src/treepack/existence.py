"""Constructive small packings.

``kaiser_pack`` splits a graph whose trivial partition is minimum into
floor(Phi) disjoint spanning trees plus one forest, improving a k-decomposition
by exchanges until the last part is acyclic. ``small_packing`` applies it on
every node of the ideal decomposition and unions the per-node trees.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from ._common import UnionFind
from .ideal import ideal_loads, phi
from .multigraph import MultiGraph
from .packing import TreePacking


class ExistenceError(ValueError):
    pass


# -- k-decompositions -----------------------------------------------------------------

Partition = tuple[frozenset[int], ...]


def _components(vertices: frozenset[int], edges: list[tuple[int, int]]) -> list[frozenset[int]]:
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    out = []
    for s in sorted(vertices):
        if s in seen:
            continue
        comp = {s}
        dq = deque([s])
        seen.add(s)
        while dq:
            x = dq.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    dq.append(y)
        out.append(frozenset(comp))
    return out


def _canon(p) -> Partition:
    return tuple(sorted((frozenset(c) for c in p), key=lambda c: min(c)))


def refines(p: Partition, q: Partition) -> bool:
    """Every class of p lies inside a class of q."""
    where = {}
    for i, c in enumerate(q):
        for v in c:
            where[v] = i
    return all(len({where[v] for v in c}) == 1 for c in p)


@dataclass
class KDecomposition:
    """k spanning subgraphs (edge-id sets) partitioning E; index 0 is T_1."""

    graph: MultiGraph
    parts: list[set[int]]
    seq: list[Partition] = field(default_factory=list)
    cs: list[int] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.recompute()

    @property
    def k(self) -> int:
        return len(self.parts)

    def recompute(self) -> None:
        g = self.graph
        cur: Partition = (frozenset(range(g.n)),)
        seq, cs = [cur], []
        while True:
            chosen = None
            for c in range(self.k):
                es = [g.edges[e] for e in self.parts[c]]
                for X in cur:
                    inner = [(u, v) for u, v in es if u in X and v in X]
                    if len(_components(X, inner)) > 1:
                        chosen = c
                        break
                if chosen is not None:
                    break
            if chosen is None:
                break
            es = [g.edges[e] for e in self.parts[chosen]]
            nxt = []
            for X in cur:
                inner = [(u, v) for u, v in es if u in X and v in X]
                nxt.extend(_components(X, inner))
            cs.append(chosen + 1)
            cur = _canon(nxt)
            seq.append(cur)
        self.seq, self.cs = seq, cs

    def P(self, i: int) -> Partition:
        return self.seq[min(i, len(self.seq) - 1)]

    def c(self, i: int) -> int:
        return self.cs[i] if i < len(self.cs) else self.k + 1

    def level(self, e: int) -> float:
        u, v = self.graph.edges[e]
        lev = 0
        for i, p in enumerate(self.seq):
            if any(u in X and v in X for X in p):
                lev = i
            else:
                break
        else:
            return math.inf
        return lev


def decomposition_order_less(a: KDecomposition, b: KDecomposition) -> bool:
    """a strictly below b in the order on k-decompositions."""
    depth = max(len(a.seq), len(b.seq)) + 1
    for j in range(depth):
        pa, pb = a.P(j), b.P(j)
        ca, cb = a.c(j), b.c(j)
        if pa == pb and ca == cb:
            continue
        if pa != pb:
            return refines(pa, pb)
        return ca < cb
    return False


# -- matroid partition ----------------------------------------------------------------


class _Forest:
    def __init__(self, n: int):
        self.adj: list[dict[int, int]] = [dict() for _ in range(n)]
        self.edges: set[int] = set()

    def add(self, e: int, u: int, v: int) -> None:
        self.edges.add(e)
        self.adj[u][e] = v
        self.adj[v][e] = u

    def remove(self, e: int, u: int, v: int) -> None:
        self.edges.discard(e)
        del self.adj[u][e]
        del self.adj[v][e]

    def path(self, s: int, t: int) -> list[int] | None:
        if s == t:
            return []
        prev: dict[int, tuple[int, int]] = {s: (-1, -1)}
        dq = deque([s])
        while dq:
            x = dq.popleft()
            for e, y in self.adj[x].items():
                if y not in prev:
                    prev[y] = (x, e)
                    if y == t:
                        out = []
                        while y != s:
                            y, f = prev[y]
                            out.append(f)
                        return out
                    dq.append(y)
        return None


def disjoint_forests(g: MultiGraph, k: int) -> list[set[int]]:
    """k edge-disjoint forests of maximum total size (matroid partition).

    Edges are offered in id order; each is placed by a shortest augmenting
    exchange path, which keeps every forest acyclic.
    """
    forests = [_Forest(g.n) for _ in range(k)]
    where: dict[int, int] = {}
    for x0 in g.edge_ids():
        u0, v0 = g.edges[x0]
        if u0 == v0:
            continue
        # BFS over edges; label[y] = (prev edge, forest y moves into)
        label: dict[int, tuple[int, int]] = {x0: (-1, -1)}
        dq = deque([x0])
        end = None
        while dq and end is None:
            x = dq.popleft()
            a, b = g.edges[x]
            for i in range(k):
                if where.get(x) == i:
                    continue
                cyc = forests[i].path(a, b)
                if cyc is None:
                    end = (x, i)
                    break
                for y in sorted(cyc):
                    if y not in label:
                        label[y] = (x, i)
                        dq.append(y)
        if end is None:
            continue
        x, i = end
        while x != -1:
            a, b = g.edges[x]
            old = where.get(x)
            if old is not None:
                forests[old].remove(x, a, b)
            forests[i].add(x, a, b)
            where[x] = i
            px, pi = label[x]
            # the previous edge on the path moves into the forest x just left
            x, i = px, old if old is not None else -1
            if x != -1 and i == -1:
                raise ExistenceError("broken augmenting path")
    return [set(f.edges) for f in forests]


def _is_forest(g: MultiGraph, es) -> bool:
    uf = UnionFind(g.n)
    return all(uf.union(*g.edges[e]) for e in es)


def _tree_path(g: MultiGraph, es: set[int], s: int, t: int) -> list[int]:
    f = _Forest(g.n)
    for e in es:
        f.add(e, *g.edges[e])
    p = f.path(s, t)
    if p is None:
        raise ExistenceError("tree is not spanning")
    return p


@dataclass
class KaiserResult:
    trees: list[set[int]]
    forest: set[int]
    phi: Fraction
    exchanges: int


def kaiser_pack(g: MultiGraph, phi_value: Fraction | None = None, check: bool = True) -> KaiserResult:
    """floor(Phi) disjoint spanning trees plus a forest on (Phi - floor Phi)(n-1) edges.

    Requires a connected loopless graph whose trivial partition is a minimum
    partition, so Phi = m/(n-1).
    """
    n, m = g.n, g.m()
    if n < 2:
        raise ExistenceError("need at least two vertices")
    if any(u == v for u, v in g.edges.values()):
        raise ExistenceError("loops are not allowed")
    ph = Fraction(m, n - 1)
    if phi_value is not None and Fraction(phi_value) != ph:
        raise ExistenceError(f"trivial partition not minimum: Phi={phi_value}, m/(n-1)={ph}")
    if phi_value is None and check:
        real = phi(g)
        if real != ph:
            raise ExistenceError(f"trivial partition not minimum: Phi={real}, m/(n-1)={ph}")
    t = math.floor(ph)
    fsize = (ph - t) * (n - 1)
    parts = disjoint_forests(g, t)
    if any(len(p) != n - 1 or not _is_forest(g, p) for p in parts):
        raise ExistenceError("could not pack floor(Phi) disjoint spanning trees")
    used = set().union(*parts) if parts else set()
    F = set(g.edges) - used
    if len(F) != fsize:
        raise ExistenceError("forest size mismatch")
    swaps = 0
    if F:
        D, swaps = improve_decomposition(KDecomposition(g, [set(p) for p in parts] + [F]))
        parts, F = D.parts[:-1], D.parts[-1]
    return KaiserResult([set(p) for p in parts], set(F), ph, swaps)


def improve_decomposition(D: KDecomposition) -> tuple[KDecomposition, int]:
    """Exchange until the last part is a forest; each step must climb the order."""
    g = D.graph
    bound = g.n * D.k * max(1, g.m())
    swaps = 0
    while not _is_forest(g, D.parts[-1]):
        swaps += 1
        if swaps > bound:
            raise ExistenceError("exchange loop did not terminate")
        D2 = _exchange(D)
        if not decomposition_order_less(D, D2):
            raise ExistenceError("exchange did not increase the decomposition order")
        D = D2
    return D, swaps


def _exchange(D: KDecomposition) -> KDecomposition:
    g = D.graph
    F = D.parts[-1]
    on_cycle = []
    for e in sorted(F):
        uf = UnionFind(g.n)
        for f in F:
            if f != e:
                uf.union(*g.edges[f])
        u, v = g.edges[e]
        if uf.find(u) == uf.find(v):
            on_cycle.append(e)
    e = min(on_cycle, key=lambda x: (D.level(x), x))
    lev = D.level(e)
    if lev == math.inf:
        raise ExistenceError("cycle edge at infinite level")
    c = D.c(int(lev))
    if c == D.k or c > D.k:
        raise ExistenceError("exchange reached the forest part")
    tree = D.parts[c - 1]
    u, v = g.edges[e]
    C = _tree_path(g, tree, u, v)
    e2 = min(C, key=lambda x: (D.level(x), x))
    if not D.level(e2) < lev:
        raise ExistenceError("no lower-level edge on the cycle")
    parts = [set(p) for p in D.parts]
    parts[c - 1] = (tree | {e}) - {e2}
    parts[-1] = (F - {e}) | {e2}
    return KDecomposition(g, parts)


def extend_to_tree(g: MultiGraph, forest: set[int]) -> set[int]:
    """Forest plus lowest-id edges that join its components."""
    uf = UnionFind(g.n)
    out = set(forest)
    for e in forest:
        uf.union(*g.edges[e])
    for e in g.edge_ids():
        u, v = g.edges[e]
        if uf.union(u, v):
            out.add(e)
    return out


# -- small packing ------------------------------------------------------------------------


@dataclass
class SmallPackingReport:
    phi: Fraction
    eps: Fraction
    size: int
    bound: int
    max_error: Fraction
    padded_nodes: int
    nodes: int

    def as_dict(self) -> dict:
        def q(x: Fraction) -> str:
            return f"{x.numerator}/{x.denominator}"

        return {
            "phi": q(self.phi),
            "eps": q(self.eps),
            "size": self.size,
            "bound": self.bound,
            "max_error": q(self.max_error),
            "padded_nodes": self.padded_nodes,
            "nodes": self.nodes,
        }


def _quotient(g: MultiGraph, vertices: tuple[int, ...], blocks) -> MultiGraph:
    block_of = {}
    for bi, b in enumerate(blocks):
        for v in b:
            block_of[v] = bi
    q = MultiGraph(len(blocks))
    vs = set(vertices)
    for e in g.edge_ids():
        u, v = g.edges[e]
        if u in vs and v in vs and block_of[u] != block_of[v]:
            q.add_edge_with_id(e, block_of[u], block_of[v])
    return q


def _node_trees(q: MultiGraph, phi_v: Fraction, N: int) -> tuple[list[set[int]], bool]:
    """N spanning trees of the quotient q with loads in {c, c+1, c+2}, c = floor(N/phi_v)."""
    c = math.floor(N / phi_v)
    trees: list[set[int]] = []
    if c >= 1:
        dup = q.duplicate_edges(c)
        back = {}
        for e, copies in q.copy_map(c).items():
            for x in copies:
                back[x] = e
        res = kaiser_pack(dup, phi_value=phi_v * c)
        for t in res.trees:
            trees.append({back[x] for x in t})
        if res.forest:
            trees.append({back[x] for x in extend_to_tree(dup, res.forest)})
    if len(trees) > N:
        raise ExistenceError("node produced more trees than the common size")
    padded = len(trees) < N
    if padded:
        one = kaiser_pack(q, phi_value=phi_v)
        pool = [set(t) for t in one.trees]
        if len(pool) < N - len(trees):
            raise ExistenceError("not enough disjoint trees to pad a node")
        trees.extend(pool[: N - len(trees)])
    return trees, padded


def small_packing(g: MultiGraph, eps: Fraction) -> tuple[TreePacking, SmallPackingReport]:
    """ceil(2 Phi/eps) trees with |l^T(e) - l*(e)| <= eps/Phi on every edge."""
    eps = Fraction(eps)
    if not (0 < eps <= 1):
        raise ExistenceError("eps must lie in (0, 1]")
    il = ideal_loads(g)
    if not il.nodes:
        raise ExistenceError("graph has fewer than two vertices")
    root = il.nodes[0]
    Phi = root.phi
    N = math.ceil(2 * Phi / eps)
    combined: list[set[int]] = [set() for _ in range(N)]
    padded = 0
    for nd in il.nodes:
        q = _quotient(g, nd.vertices, nd.blocks)
        trees, pad = _node_trees(q, nd.phi, N)
        padded += pad
        for t, extra in zip(combined, trees):
            t.update(extra)
    L = {e: 0 for e in g.edges}
    for t in combined:
        if len(t) != g.n - 1 or not _is_forest(g, t):
            raise ExistenceError("combined tree is not a spanning tree")
        for e in t:
            L[e] += 1
    P = TreePacking([tuple(sorted(t)) for t in combined], L)
    err = max(abs(Fraction(L[e], N) - il.loads[e]) for e in g.edges) if g.edges else Fraction(0)
    rep = SmallPackingReport(Phi, eps, N, 8 * math.ceil(Phi / eps), err, padded, len(il.nodes))
    return P, rep


__all__ = [
    "ExistenceError",
    "KDecomposition",
    "KaiserResult",
    "SmallPackingReport",
    "decomposition_order_less",
    "disjoint_forests",
    "extend_to_tree",
    "improve_decomposition",
    "kaiser_pack",
    "refines",
    "small_packing",
]
