"""Undirected multigraph with stable edge ids, contraction and induced views."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from pathlib import Path

from ._common import UnionFind

EdgeId = int
VertexId = int


class GraphError(ValueError):
    pass


@dataclass
class QuotientMap:
    class_of: list[int]
    classes: list[list[int]]


@dataclass
class MultiGraph:
    n: int
    edges: dict[EdgeId, tuple[int, int]] = field(default_factory=dict)
    next_id: int = 0
    # labels[i] = vertex of the parent graph (set by induced); None means identity
    labels: list[int] | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        self._deg = [0] * self.n
        self._adj: list[dict[EdgeId, int]] = [dict() for _ in range(self.n)]
        edges, self.edges = self.edges, {}
        for eid in sorted(edges):
            u, v = edges[eid]
            self._insert(eid, u, v)
        if edges:
            self.next_id = max(self.next_id, max(edges) + 1)

    # -- mutation ---------------------------------------------------------
    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def _insert(self, eid: EdgeId, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if eid in self.edges:
            raise GraphError(f"edge id {eid} already live")
        self.edges[eid] = (u, v)
        self._deg[u] += 1
        self._deg[v] += 1
        self._adj[u][eid] = v
        self._adj[v][eid] = u

    def add_edge(self, u: int, v: int) -> EdgeId:
        eid = self.next_id
        self._insert(eid, u, v)
        self.next_id += 1
        return eid

    def add_edge_with_id(self, eid: EdgeId, u: int, v: int) -> EdgeId:
        """Insert with a caller-chosen id (must be fresh); used by derived graphs."""
        self._insert(eid, u, v)
        self.next_id = max(self.next_id, eid + 1)
        return eid

    def remove_edge(self, eid: EdgeId) -> tuple[int, int]:
        try:
            u, v = self.edges.pop(eid)
        except KeyError:
            raise GraphError(f"edge id {eid} is not live") from None
        self._deg[u] -= 1
        self._deg[v] -= 1
        del self._adj[u][eid]
        self._adj[v].pop(eid, None)
        return u, v

    def find_edge(self, u: int, v: int) -> EdgeId | None:
        """Lowest-id live copy of an edge between u and v."""
        self._check_vertex(u)
        self._check_vertex(v)
        best = None
        for eid, w in self._adj[u].items():
            if w == v and (best is None or eid < best):
                best = eid
        return best

    # -- queries ------------------------------------------------------------
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self._deg[v]

    def incident(self, v: int) -> dict[EdgeId, int]:
        """Map eid -> other endpoint (a loop maps to v itself)."""
        return self._adj[v]

    def endpoints(self, eid: EdgeId) -> tuple[int, int]:
        return self.edges[eid]

    def edge_ids(self) -> list[EdgeId]:
        return sorted(self.edges)

    def iter_edges(self) -> Iterator[tuple[EdgeId, int, int]]:
        for eid in sorted(self.edges):
            u, v = self.edges[eid]
            yield eid, u, v

    def copy(self) -> MultiGraph:
        g = MultiGraph(self.n, dict(self.edges), self.next_id)
        g.labels = None if self.labels is None else list(self.labels)
        return g

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        uf = UnionFind(self.n)
        comps = self.n
        for u, v in self.edges.values():
            if uf.union(u, v):
                comps -= 1
        return comps == 1

    def components(self) -> list[list[int]]:
        uf = UnionFind(self.n)
        for u, v in self.edges.values():
            uf.union(u, v)
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(uf.find(v), []).append(v)
        return sorted(groups.values())

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges.values():
            if u == v:
                return False
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    # -- derived graphs --------------------------------------------------------
    def contract(self, low: Iterable[EdgeId]) -> tuple[MultiGraph, QuotientMap]:
        """Contract every edge in `low`; other edges survive (possibly as loops)."""
        low = set(low)
        uf = UnionFind(self.n)
        for eid in low:
            if eid not in self.edges:
                raise GraphError(f"edge id {eid} is not live")
            u, v = self.edges[eid]
            uf.union(u, v)
        # classes numbered by their minimum vertex
        class_of = [-1] * self.n
        classes: list[list[int]] = []
        root_class: dict[int, int] = {}
        for v in range(self.n):
            r = uf.find(v)
            if r not in root_class:
                root_class[r] = len(classes)
                classes.append([])
            class_of[v] = root_class[r]
            classes[root_class[r]].append(v)
        g = MultiGraph(len(classes))
        for eid in sorted(self.edges):
            if eid in low:
                continue
            u, v = self.edges[eid]
            g.add_edge_with_id(eid, class_of[u], class_of[v])
        g.next_id = max(g.next_id, self.next_id)
        return g, QuotientMap(class_of, classes)

    def induced(self, S: Iterable[int]) -> MultiGraph:
        verts = sorted(set(S))
        for v in verts:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(verts)}
        g = MultiGraph(len(verts))
        for eid in sorted(self.edges):
            u, v = self.edges[eid]
            if u in index and v in index:
                g.add_edge_with_id(eid, index[u], index[v])
        g.next_id = max(g.next_id, self.next_id)
        base = self.labels
        g.labels = [v if base is None else base[v] for v in verts]
        return g

    def duplicate_edges(self, s: int) -> MultiGraph:
        """Replace each edge by s parallel copies; copy 0 keeps the original id."""
        if s < 1:
            raise GraphError("duplication factor must be >= 1")
        g = MultiGraph(self.n)
        ids = sorted(self.edges)
        for eid in ids:
            u, v = self.edges[eid]
            g.add_edge_with_id(eid, u, v)
        nxt = self.next_id
        for _c in range(1, s):
            for eid in ids:
                u, v = self.edges[eid]
                g.add_edge_with_id(nxt, u, v)
                nxt += 1
        g.next_id = nxt
        return g

    def copy_map(self, s: int) -> dict[EdgeId, list[EdgeId]]:
        """Ids of the s copies of each edge, matching duplicate_edges(s)."""
        ids = sorted(self.edges)
        out = {eid: [eid] for eid in ids}
        nxt = self.next_id
        for _c in range(1, s):
            for eid in ids:
                out[eid].append(nxt)
                nxt += 1
        return out


# -- text formats ---------------------------------------------------------------


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_graph(text: str) -> MultiGraph:
    g: MultiGraph | None = None
    declared_m = 0
    for lineno, tok in _content_lines(text):
        if tok[0] == "p":
            if g is not None or len(tok) != 4 or tok[1] != "mgraph":
                raise GraphError(f"line {lineno}: bad header")
            g = MultiGraph(int(tok[2]))
            declared_m = int(tok[3])
        elif tok[0] == "e":
            if g is None or len(tok) != 3:
                raise GraphError(f"line {lineno}: edge before header or malformed")
            g.add_edge(int(tok[1]), int(tok[2]))
        else:
            raise GraphError(f"line {lineno}: unknown record {tok[0]!r}")
    if g is None:
        raise GraphError("missing 'p mgraph n m' header")
    if g.m() != declared_m:
        raise GraphError(f"header declares {declared_m} edges, found {g.m()}")
    return g


def format_graph(g: MultiGraph) -> str:
    lines = [f"p mgraph {g.n} {g.m()}"]
    lines += [f"e {u} {v}" for _, u, v in g.iter_edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> MultiGraph:
    return parse_graph(Path(path).read_text())


@dataclass(frozen=True)
class Update:
    op: str  # "+" or "-"
    u: int
    v: int


def parse_stream(text: str) -> list[Update]:
    out = []
    for lineno, tok in _content_lines(text):
        if len(tok) != 3 or tok[0] not in "+-":
            raise GraphError(f"line {lineno}: expected '+ u v' or '- u v'")
        out.append(Update(tok[0], int(tok[1]), int(tok[2])))
    return out


def format_stream(updates: Iterable[Update]) -> str:
    return "".join(f"{up.op} {up.u} {up.v}\n" for up in updates)


def read_stream(path: str | Path) -> list[Update]:
    return parse_stream(Path(path).read_text())


def apply_update(g: MultiGraph, up: Update) -> tuple[str, EdgeId, int, int]:
    """Apply one stream record; returns (op, eid, u, v)."""
    if up.op == "+":
        return "+", g.add_edge(up.u, up.v), up.u, up.v
    eid = g.find_edge(up.u, up.v)
    if eid is None:
        raise GraphError(f"delete of absent edge {up.u}-{up.v}")
    u, v = g.remove_edge(eid)
    return "-", eid, u, v
