"""(1+eps)-approximate fractional arboricity from greedy tree packings.

The deterministic estimator keeps one leveled packing per scale 2^i and reads
|T| / min L off the level that matches the previous estimate. Two sampling
front ends shrink large-alpha inputs before handing them to that estimator,
and a combinator switches to exact density for dense simple graphs.
"""

from __future__ import annotations

import hashlib
import math
from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from ._common import INF, ceil_log2
from .multigraph import GraphError, MultiGraph, Update, apply_update
from .packing import LeveledPacking, TreePacking

MODES = ("det", "simple", "oblivious", "adaptive")


class ArbConfigError(ValueError):
    pass


@dataclass(frozen=True)
class ArbConfig:
    eps: Fraction
    alpha_max: int = 8
    c: Fraction = Fraction(2)
    mode: str = "det"
    seed: int = 0
    # tree-count constant of each level: const * 2^i * log m / eps^2
    const: Fraction = Fraction(24)
    # multiplier on the sampling probabilities (1 = the stated formulas)
    sample_scale: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        eps = Fraction(self.eps)
        if not (0 < eps < 1):
            raise ArbConfigError("eps must lie in (0, 1)")
        if Fraction(self.c) < 1:
            raise ArbConfigError("c must be >= 1")
        if self.mode not in MODES:
            raise ArbConfigError(f"mode must be one of {MODES}")
        if self.alpha_max < 1:
            raise ArbConfigError("alpha_max must be >= 1")
        if Fraction(self.const) <= 0 or Fraction(self.sample_scale) <= 0:
            raise ArbConfigError("constants must be positive")

    def as_dict(self) -> dict:
        def q(x) -> str:
            x = Fraction(x)
            return f"{x.numerator}/{x.denominator}"

        return {
            "eps": q(self.eps),
            "alpha_max": self.alpha_max,
            "c": q(self.c),
            "mode": self.mode,
            "seed": self.seed,
            "const": q(self.const),
            "sample_scale": q(self.sample_scale),
        }


def oblivious_probability(i: int, m: int, eps: Fraction, c: Fraction = Fraction(2)) -> Fraction:
    return Fraction(24) * Fraction(c) * ceil_log2(m) / (2**i * Fraction(eps) ** 2)


def adaptive_probability(i: int, m: int, eps: Fraction, c: Fraction = Fraction(2)) -> Fraction:
    return 8 * (Fraction(c) + 3) * ceil_log2(m) / (2**i * Fraction(eps) ** 4)


def estimate_from_packing(P: TreePacking) -> Fraction | float:
    """1 / min relative load; inf when an edge is in no tree."""
    if P.size < 1:
        raise ValueError("packing has no trees")
    lo, _e = P.min_load()
    return INF if lo == 0 else 1 / lo


def level_of(x, top: int) -> int:
    """Level whose range [2^i, 2^(i+1)) holds x, clamped to 0..top."""
    if x == INF:
        return top
    if x < 2:
        return 0
    i = math.floor(x).bit_length() - 1
    return min(i, top)


class _Streamed:
    """Owns a MultiGraph and turns stream records into insert/delete calls."""

    graph: MultiGraph

    def apply(self, up: Update) -> tuple[str, int, int, int]:
        rec = apply_update(self.graph, up)
        op, e, u, v = rec
        if op == "+":
            self._insert(e, u, v)
        else:
            self._delete(e)
        return rec

    def delete_id(self, e: int) -> tuple[int, int]:
        """Delete one specific edge copy (the stream format can only name endpoints)."""
        u, v = self.graph.remove_edge(e)
        self._delete(e)
        return u, v

    def _insert(self, e: int, u: int, v: int) -> None:
        raise NotImplementedError

    def _delete(self, e: int) -> None:
        raise NotImplementedError


# -- deterministic estimator -------------------------------------------------------


class DetArboricityEstimator(_Streamed):
    """Leveled greedy packings for levels 0..floor(log2 alpha_max).

    Edge ids are supplied by the caller. Loops are ignored.
    """

    def __init__(
        self,
        n: int,
        eps: Fraction,
        alpha_max: int,
        const: Fraction | int = 24,
        edges: Iterable[tuple[int, int, int]] = (),
    ):
        self.n = n
        self.eps = Fraction(eps)
        self.alpha_max = alpha_max
        self.const = Fraction(const)
        self.graph = MultiGraph(n)
        self.loops: set[int] = set()
        edges = list(edges)
        for e, u, v in edges:
            self.graph.add_edge_with_id(e, u, v)
        plain = [(e, u, v) for e, u, v in edges if u != v]
        self.loops = {e for e, u, v in edges if u == v}
        self.top = max(0, alpha_max.bit_length() - 1)
        self.levels = [
            LeveledPacking(i, "arboricity", n, plain, self.const, self.eps)
            for i in range(self.top + 1)
        ]
        self.selected_level = 0
        self._value: Fraction | float = Fraction(0)
        self._refresh(bootstrap=True)

    @classmethod
    def from_graph(cls, g: MultiGraph, eps, alpha_max: int, const=24) -> DetArboricityEstimator:
        return cls(g.n, eps, alpha_max, const, list(g.iter_edges()))

    def level_estimate(self, i: int) -> Fraction | float:
        lp = self.levels[i]
        lo = lp.min_load()
        if lo is None:
            return Fraction(0)
        load, _e = lo
        return INF if load == 0 else Fraction(lp.size, load)

    def _pick(self, start: int) -> tuple[int, Fraction | float]:
        # highest level <= start whose packed graph has edges
        i = start
        while i > 0 and not self.levels[i].packed_edges():
            i -= 1
        return i, self.level_estimate(i)

    def _refresh(self, bootstrap: bool = False) -> None:
        if self.graph.m() == len(self.loops):
            self.selected_level, self._value = 0, Fraction(0)
            return
        i = 0 if bootstrap else level_of(self._value, self.top)
        seen: set[int] = set()
        # follow the level each estimate points to; oscillation resolves downward
        for _ in range(self.top + 2):
            _j, val = self._pick(i)
            nxt = level_of(val, self.top)
            if nxt == i:
                break
            if nxt in seen:
                i = min(i, nxt)
                break
            seen.add(i)
            i = nxt
        self.selected_level, self._value = self._pick(i)

    def _insert(self, e: int, u: int, v: int) -> None:
        if u == v:
            self.loops.add(e)
        else:
            for lp in self.levels:
                lp.insert(e, u, v)
        self._refresh()

    def _delete(self, e: int) -> None:
        if e in self.loops:
            self.loops.discard(e)
        else:
            for lp in self.levels:
                lp.delete(e)
        self._refresh()

    def insert(self, e: int, u: int, v: int) -> None:
        self.graph.add_edge_with_id(e, u, v)
        self._insert(e, u, v)

    def delete(self, e: int) -> None:
        self.graph.remove_edge(e)
        self._delete(e)

    def value(self) -> Fraction | float:
        return self._value

    def packed_graph(self, i: int) -> MultiGraph:
        """Packed graph of level i (real plus virtual edges), active vertices relabelled."""
        verts, edges = self.levels[i].packed_graph()
        idx = {v: k for k, v in enumerate(verts)}
        h = MultiGraph(len(verts))
        for e in sorted(edges):
            u, v = edges[e]
            h.add_edge(idx[u], idx[v])
        return h

    def sizes(self) -> list[int]:
        return [lp.size for lp in self.levels]

    def loads(self) -> dict[int, int]:
        """Loads of the real packed edges at the selected level."""
        lp = self.levels[self.selected_level]
        return {e: lp.engine.L.get(e, 0) for e in lp.packed_edges() if e not in lp.virtual}


# -- simple-graph combinator --------------------------------------------------------


class SimpleCombinator(_Streamed):
    """Low-alpha regime: deterministic estimator. High regime: exact density.

    With eps' = eps/3 the switch happens at (1+eps')/eps; above it the
    density rho satisfies alpha - 1/2 <= rho <= alpha on simple graphs.
    """

    def __init__(self, n: int, eps: Fraction, const: Fraction | int = 24, edges=()):
        from .oracles import density_exact

        self._density = density_exact
        self.eps = Fraction(eps)
        self.eps_inner = self.eps / 3
        self.threshold = (1 + self.eps_inner) / self.eps
        amax = max(2, math.ceil(2 * self.threshold))
        edges = list(edges)
        g = MultiGraph(n)
        for e, u, v in edges:
            g.add_edge_with_id(e, u, v)
        if not g.is_simple():
            raise GraphError("simple mode needs a simple graph")
        self.det = DetArboricityEstimator(n, self.eps_inner, amax, const, edges)
        self.graph = self.det.graph
        self.regime = "low"

    def _check_simple(self, u: int, v: int) -> None:
        if u == v or self.graph.find_edge(u, v) is not None:
            raise GraphError(f"edge {u}-{v} would make the graph non-simple")

    def apply(self, up: Update) -> tuple[str, int, int, int]:
        if up.op == "+":
            self._check_simple(up.u, up.v)
        rec = apply_update(self.graph, up)
        op, e, u, v = rec
        if op == "+":
            self.det._insert(e, u, v)
        else:
            self.det._delete(e)
        return rec

    def insert(self, e: int, u: int, v: int) -> None:
        self._check_simple(u, v)
        self.det.insert(e, u, v)

    def delete(self, e: int) -> None:
        self.det.delete(e)

    @property
    def selected_level(self) -> int:
        return self.det.selected_level

    def value(self) -> Fraction | float:
        a = self.det.value()
        if a < self.threshold:
            self.regime = "low"
            return a
        self.regime = "high"
        return self._density(self.graph)


# -- orientation ----------------------------------------------------------------------


class Orientation:
    """Out-orientation kept optimal by path reversal.

    Invariant after every repair: no directed path leads from a vertex of
    maximum out-degree D to a vertex of out-degree <= D-2, which makes D the
    least possible value, ceil(max |E(S)|/|S|).
    """

    def __init__(self, n: int):
        self.n = n
        self.owner: dict[int, int] = {}
        self.ends: dict[int, tuple[int, int]] = {}
        self.out: list[set[int]] = [set() for _ in range(n)]

    @classmethod
    def orient(cls, g: MultiGraph) -> Orientation:
        o = cls(g.n)
        for e, u, v in g.iter_edges():
            o.insert(e, u, v)
        return o

    def dplus(self, v: int) -> int:
        return len(self.out[v])

    def max_out(self) -> int:
        return max((len(s) for s in self.out), default=0)

    def _set_owner(self, e: int, x: int, changed: set[int]) -> None:
        old = self.owner.get(e)
        if old is not None:
            self.out[old].discard(e)
            changed.add(old)
        self.owner[e] = x
        self.out[x].add(e)
        changed.add(x)

    def insert(self, e: int, u: int, v: int) -> set[int]:
        changed: set[int] = set()
        self.ends[e] = (u, v)
        du, dv = len(self.out[u]), len(self.out[v])
        x = u if (du, u) <= (dv, v) else v
        self._set_owner(e, x, changed)
        self._repair(changed)
        return changed

    def delete(self, e: int) -> set[int]:
        x = self.owner.pop(e)
        del self.ends[e]
        self.out[x].discard(e)
        changed = {x}
        self._repair(changed)
        return changed

    def _find_path(self, s: int, limit: int) -> list[int] | None:
        """Edges of a shortest directed path from s to a vertex with d+ <= limit."""
        prev: dict[int, tuple[int, int] | None] = {s: None}
        dq = deque([s])
        while dq:
            x = dq.popleft()
            if x != s and len(self.out[x]) <= limit:
                path = []
                while prev[x] is not None:
                    p, e = prev[x]
                    path.append(e)
                    x = p
                return path[::-1]
            for e in sorted(self.out[x]):
                a, b = self.ends[e]
                y = b if a == x else a
                if y not in prev:
                    prev[y] = (x, e)
                    dq.append(y)
        return None

    def _repair(self, changed: set[int]) -> None:
        while True:
            D = self.max_out()
            if D < 2:
                return
            moved = False
            for s in range(self.n):
                if len(self.out[s]) != D:
                    continue
                path = self._find_path(s, D - 2)
                if path is None:
                    continue
                x = s
                for e in path:
                    a, b = self.ends[e]
                    y = b if a == x else a
                    self._set_owner(e, y, changed)
                    x = y
                moved = True
                break
            if not moved:
                return


# -- sampling front ends -----------------------------------------------------------------


def _coin(seed: int, *key: int) -> int:
    """Uniform 64-bit value from a hash of (seed, key); stable across runs."""
    h = hashlib.blake2b(digest_size=8)
    h.update(repr((seed,) + tuple(key)).encode())
    return int.from_bytes(h.digest(), "big")


def _flip(p: Fraction, seed: int, *key: int) -> bool:
    return _coin(seed, *key) * p.denominator < p.numerator * (1 << 64)


class _Sampler(_Streamed):
    kind = "oblivious"

    def __init__(self, g: MultiGraph, cfg: ArbConfig, m_max: int | None = None):
        self.cfg = cfg
        self.eps = Fraction(cfg.eps)
        self.graph = g.copy()
        self.m_max = max(g.m(), m_max or 0, 2)
        self.logm = ceil_log2(self.m_max)
        top = max(0, cfg.alpha_max.bit_length() - 1)
        self.probs: dict[int, Fraction] = {}
        for i in range(top + 1):
            p = self.probability(i)
            if p < 1:
                self.probs[i] = p
        self.active = sorted(self.probs)
        if self.active:
            fb_max = min(cfg.alpha_max, 2 ** (self.active[0] + 1))
        else:
            fb_max = cfg.alpha_max
        self.fallback = DetArboricityEstimator(
            g.n, self.eps, fb_max, cfg.const, list(g.iter_edges())
        )
        self.sampled: dict[int, set[int]] = {i: set() for i in self.active}
        self.h_est: dict[int, DetArboricityEstimator] = {}
        self._init_samples()
        self.selected_level = -1
        self._value: Fraction | float = Fraction(0)
        self._refresh(bootstrap=True)

    def probability(self, i: int) -> Fraction:
        f = oblivious_probability if self.kind == "oblivious" else adaptive_probability
        return f(i, self.m_max, self.eps, self.cfg.c) * Fraction(self.cfg.sample_scale)

    def _h_alpha_max(self, i: int) -> int:
        return max(1, math.ceil(self.probs[i] * 2 ** (i + 2)))

    def _init_samples(self) -> None:
        raise NotImplementedError

    def _build_level(self, i: int) -> None:
        es = [(e, *self.graph.edges[e]) for e in sorted(self.sampled[i])]
        self.h_est[i] = DetArboricityEstimator(
            self.graph.n, self.eps, self._h_alpha_max(i), self.cfg.const, es
        )

    def _candidate(self, lev: int) -> Fraction | float:
        if lev < 0:
            return self.fallback.value()
        v = self.h_est[lev].value()
        return v if v == INF else v / self.probs[lev]

    def _choose(self, x) -> int:
        """Sampled level for estimate x, or -1 for the fallback."""
        if not self.active:
            return -1
        i = level_of(x, max(self.active))
        if i < self.active[0]:
            return -1
        return i

    def _refresh(self, bootstrap: bool = False) -> None:
        x = Fraction(0) if bootstrap else self._value
        if bootstrap:
            x = self.fallback.value()
        lev = self._choose(x)
        seen = set()
        while lev not in seen:
            seen.add(lev)
            val = self._candidate(lev)
            nxt = self._choose(val)
            if nxt == lev:
                break
            lev = nxt
        self.selected_level = lev
        self._value = self._candidate(lev)

    def value(self) -> Fraction | float:
        return self._value

    def heaviest_sample(self) -> int | None:
        """Sampled edge of largest load at the selected level (lowest id on ties).

        With the fallback selected, the fallback's packed edges stand in.
        """
        lev = self.selected_level
        loads = self.fallback.loads() if lev < 0 else self.h_est[lev].loads()
        if not loads:
            return None
        return min(loads, key=lambda e: (-loads[e], e))

    def sampled_edges(self, i: int | None = None) -> set[int]:
        i = self.selected_level if i is None else i
        return set() if i < 0 else set(self.sampled[i])


class ObliviousSampler(_Sampler):
    """Each level keeps every edge independently with probability p_i."""

    kind = "oblivious"

    def _init_samples(self) -> None:
        for i in self.active:
            p = self.probs[i]
            self.sampled[i] = {e for e in self.graph.edges if _flip(p, self.cfg.seed, i, e)}
            self._build_level(i)

    def _insert(self, e: int, u: int, v: int) -> None:
        self.fallback.insert(e, u, v)
        for i in self.active:
            if _flip(self.probs[i], self.cfg.seed, i, e):
                self.sampled[i].add(e)
                self.h_est[i].insert(e, u, v)
        self._refresh()

    def _delete(self, e: int) -> None:
        self.fallback.delete(e)
        for i in self.active:
            if e in self.sampled[i]:
                self.sampled[i].discard(e)
                self.h_est[i].delete(e)
        self._refresh()


class AdaptiveSampler(_Sampler):
    """Samples out-edges per owner and redraws an owner's whole out-set
    whenever that set changes, so deleting sampled edges reveals nothing.
    """

    kind = "adaptive"

    def _init_samples(self) -> None:
        self.orientation = Orientation.orient(self.graph)
        self.epoch: dict[tuple[int, int], int] = {}
        self.skipped = 0
        self.events = 0
        self.rebuilds = 0
        for i in self.active:
            self.sampled[i] = set()
            for u in range(self.graph.n):
                self._draw(i, u, self.sampled[i])
            self._build_level(i)

    def resample_cap(self, i: int) -> int:
        return max(1, math.ceil(self.probs[i] * 2 ** (i + 3)))

    def _draw(self, i: int, u: int, into: set[int]) -> set[int]:
        k = self.epoch.get((i, u), 0)
        self.epoch[(i, u)] = k + 1
        new = {
            e for e in self.orientation.out[u]
            if _flip(self.probs[i], self.cfg.seed, i, u, k, e)
        }
        into.update(new)
        return new

    def _resample(self, changed: set[int], dead: int | None) -> None:
        for i in self.active:
            S = self.sampled[i]
            h = self.h_est[i]
            if dead is not None and dead in S:
                S.discard(dead)
                h.delete(dead)
            for u in sorted(changed):
                out = self.orientation.out[u]
                old = S & out
                new = self._draw(i, u, set())
                add, rem = sorted(new - old), sorted(old - new)
                if len(add) + len(rem) > self.resample_cap(i):
                    self.skipped += 1
                    continue
                for e in rem:
                    S.discard(e)
                    h.delete(e)
                for e in add:
                    S.add(e)
                    h.insert(e, *self.graph.edges[e])

    def _tick(self) -> None:
        self.events += 1
        m = max(self.graph.m(), 2)
        if self.events >= m * m:
            self.events = 0
            self.rebuilds += 1
            for i in self.active:
                self.sampled[i] = set()
                for u in range(self.graph.n):
                    self._draw(i, u, self.sampled[i])
                self._build_level(i)

    def _insert(self, e: int, u: int, v: int) -> None:
        self.fallback.insert(e, u, v)
        changed = self.orientation.insert(e, u, v)
        self._resample(changed, None)
        self._tick()
        self._refresh()

    def _delete(self, e: int) -> None:
        self.fallback.delete(e)
        changed = self.orientation.delete(e)
        self._resample(changed, e)
        self._tick()
        self._refresh()


def make_estimator(g: MultiGraph, cfg: ArbConfig, m_max: int | None = None):
    """Estimator for cfg.mode over a private copy of g, driven by apply()."""
    if cfg.mode == "det":
        return DetArboricityEstimator.from_graph(g, cfg.eps, cfg.alpha_max, cfg.const)
    if cfg.mode == "simple":
        return SimpleCombinator(g.n, cfg.eps, cfg.const, list(g.iter_edges()))
    if cfg.mode == "oblivious":
        return ObliviousSampler(g, cfg, m_max)
    return AdaptiveSampler(g, cfg, m_max)


__all__ = [
    "AdaptiveSampler",
    "ArbConfig",
    "ArbConfigError",
    "DetArboricityEstimator",
    "MODES",
    "ObliviousSampler",
    "Orientation",
    "SimpleCombinator",
    "adaptive_probability",
    "estimate_from_packing",
    "level_of",
    "make_estimator",
    "oblivious_probability",
]
