"""The witness family G_{n,k} and its scripted greedy packing.

Vertices u_1..u_{2k+2} carry ids 0..2k+1. Pair Y_l holds e^l_1 = u_l u_{l+1}
and e^l_2 = u_l u_{l+2}. A tail of parallel pairs runs
u_{2k+2} -f^1- z_1 -f^2- ... -f^T- z_T -g- u_{2k+1} with T = n - 2k - 2.
Edge ids: e^1_1, e^1_2, ..., e^{2k}_2, then f^1_1, f^1_2, ..., then g_1, g_2.

Every scripted tree is checked to be a minimum spanning tree under the
loads of the trees before it, so the schedule is validated rather than trusted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .multigraph import MultiGraph
from .packing import TreePacking, check_next_tree


class LowerBoundError(ValueError):
    pass


class CapacityError(LowerBoundError):
    """The tail ran out of f-pairs for the next build step."""


@dataclass
class LowerBoundInstance:
    n: int
    k: int
    graph: MultiGraph
    labels: dict[int, str]
    vertex_labels: dict[int, str]

    @property
    def tail(self) -> int:
        return self.n - 2 * self.k - 2

    def e(self, l: int, a: int) -> int:
        if not (1 <= l <= 2 * self.k and a in (1, 2)):
            raise LowerBoundError(f"no edge e^{l}_{a}")
        return 2 * (l - 1) + (a - 1)

    def f(self, p: int, a: int) -> int:
        if not (1 <= p <= self.tail and a in (1, 2)):
            raise CapacityError(f"no tail edge f^{p}_{a} (tail length {self.tail})")
        return 4 * self.k + 2 * (p - 1) + (a - 1)

    def g(self, a: int) -> int:
        return 4 * self.k + 2 * self.tail + (a - 1)


def build_instance(n: int, k: int) -> LowerBoundInstance:
    if k < 1:
        raise LowerBoundError("k must be >= 1")
    if n < 2 * (k + 1):
        raise LowerBoundError(f"n={n} < 2(k+1)={2 * (k + 1)}")
    tail = n - 2 * k - 2
    g = MultiGraph(n)
    labels: dict[int, str] = {}
    vlabels = {l - 1: f"u{l}" for l in range(1, 2 * k + 3)}
    for l in range(1, 2 * k + 1):
        labels[g.add_edge(l - 1, l)] = f"e{l}_1"
        labels[g.add_edge(l - 1, l + 1)] = f"e{l}_2"
    prev = 2 * k + 1  # u_{2k+2}
    for p in range(1, tail + 1):
        z = 2 * k + 1 + p
        vlabels[z] = f"z{p}"
        labels[g.add_edge(prev, z)] = f"f{p}_1"
        labels[g.add_edge(prev, z)] = f"f{p}_2"
        prev = z
    labels[g.add_edge(prev, 2 * k)] = "g_1"
    labels[g.add_edge(prev, 2 * k)] = "g_2"
    return LowerBoundInstance(n, k, g, labels, vlabels)


def seed_graph() -> MultiGraph:
    """K3 with one doubled edge: the smallest member before any split."""
    g = MultiGraph(3)
    g.add_edge(0, 1)
    g.add_edge(0, 2)
    g.add_edge(1, 2)
    g.add_edge(1, 2)
    return g


@dataclass
class StandardCheck:
    ok: bool
    bullet: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class ScheduleState:
    inst: LowerBoundInstance
    trees: list[tuple[int, ...]] = field(default_factory=list)
    loads: Counter = field(default_factory=Counter)
    iota: int = 1
    trace: list[dict] = field(default_factory=list)

    @property
    def j(self) -> int:
        return len(self.trees) // 2

    def profile(self) -> list[int]:
        """Level profile (beta_1..beta_2k); raises if some pair is at no level."""
        prof = []
        j = self.j
        for l in range(1, 2 * self.inst.k + 1):
            a = self.loads[self.inst.e(l, 1)]
            b = self.loads[self.inst.e(l, 2)]
            if a == b:
                prof.append(2 * (a - j))
            elif a == b + 1:
                prof.append(2 * (b - j) + 1)
            else:
                raise LowerBoundError(f"Y_{l} has loads {a},{b}: not at a level")
        return prof

    def add_tree(self, tree: set[int]) -> None:
        inst = self.inst
        chk = check_next_tree(
            list(range(inst.n)), inst.graph.edges, self.loads, tree, len(self.trees)
        )
        if not chk:
            raise LowerBoundError(f"scripted tree {len(self.trees)} is not greedy: {chk.witness}")
        for e in tree:
            self.loads[e] += 1
        self.trees.append(tuple(sorted(tree)))

    def packing(self) -> TreePacking:
        L = {e: self.loads[e] for e in self.inst.graph.edges}
        return TreePacking(list(self.trees), L)


def verify_standard_position(st: ScheduleState) -> StandardCheck:
    """Checks the six defining conditions; reports the first failing one (1-based)."""
    inst = st.inst
    if len(st.trees) % 2:
        return StandardCheck(False, 1, "odd number of trees")
    try:
        beta = st.profile()
    except LowerBoundError as exc:
        return StandardCheck(False, 2, str(exc))
    for l in range(1, len(beta)):
        if beta[l] > beta[l - 1] or beta[l - 1] - beta[l] > 1:
            return StandardCheck(False, 3, f"profile {beta} at {l}")
    if beta[2 * inst.k - 2] < 0:
        return StandardCheck(False, 4, f"beta_(2k-1) = {beta[2 * inst.k - 2]}")
    j = st.j
    for p in range(1, inst.tail + 1):
        if st.loads[inst.f(p, 2)] != j:
            return StandardCheck(False, 5, f"f^{p}_2 packed {st.loads[inst.f(p, 2)]} != {j}")
    for p in range(1, inst.tail + 1):
        want = j - 1 if p < st.iota else j
        if st.loads[inst.f(p, 1)] != want:
            return StandardCheck(False, 6, f"f^{p}_1 packed {st.loads[inst.f(p, 1)]} != {want}")
    return StandardCheck(True)


# -- scripted trees --------------------------------------------------------------------


def normal_pair(st: ScheduleState, beta: list[int]) -> tuple[set[int], set[int]]:
    inst = st.inst
    T: set[int] = set()
    Tp: set[int] = set()
    for l in range(1, 2 * inst.k + 1):
        even = beta[l - 1] % 2 == 0
        T.add(inst.e(l, 1 if even else 2))
        Tp.add(inst.e(l, 2 if even else 1))
    for p in range(1, inst.tail + 1):
        T.add(inst.f(p, 1))
        Tp.add(inst.f(p, 2))
    T.add(inst.g(1))
    Tp.add(inst.g(2))
    return T, Tp


def _toggle(tree: set[int], x: int, y: int) -> set[int]:
    """Exchange x and y: whichever one the tree holds is replaced by the other."""
    t = set(tree)
    if x in t and y not in t:
        t.discard(x)
        t.add(y)
    elif y in t and x not in t:
        t.discard(y)
        t.add(x)
    else:
        raise LowerBoundError(f"exchange of {x} and {y} is undefined for this tree")
    return t


def _swaps(base: set[int], pairs: list[tuple[int, int]]) -> set[int]:
    t = base
    for x, y in pairs:
        t = _toggle(t, x, y)
    return t


def _block_extent(beta: list[int], i: int) -> int:
    """Largest s with beta_i = ... = beta_{i+s} (1-based, capped at 2k)."""
    s = 0
    while i + s < len(beta) and beta[i + s] == beta[i - 1]:
        s += 1
    return s


def _check_augment_pre(beta: list[int], i: int, s: int) -> None:
    K = len(beta)
    if not (1 <= i and s >= 1 and i + s <= K):
        raise LowerBoundError(f"bad block (i={i}, s={s}) for 2k={K}")
    if any(beta[l - 1] != beta[i - 1] for l in range(i, i + s + 1)):
        raise LowerBoundError(f"beta_{i}..beta_{i + s} not constant in {beta}")
    if i + s < K and not beta[i + s - 1] > beta[i + s]:
        raise LowerBoundError(f"beta_{i + s} <= beta_{i + s + 1} in {beta}")
    if i > 1 and not beta[i - 2] > beta[i - 1]:
        raise LowerBoundError(f"beta_{i - 1} <= beta_{i} in {beta}")


def one_augment(st: ScheduleState, i: int, s: int) -> None:
    """Adds 2(floor(s/2)+1) trees; profile gains +1 at i and -1 at i+s."""
    inst = st.inst
    beta = st.profile()
    _check_augment_pre(beta, i, s)
    e = inst.e
    T, Tp = normal_pair(st, beta)
    if beta[i - 1] % 2 == 0:
        last = (s + 1) // 2
        for p in range(1, last + 1):
            if p == 1:
                a = _swaps(T, [(e(i, 2), e(i + 1, 1))])
            else:
                a = _swaps(T, [(e(i, 1), e(i, 2)), (e(i + 2 * p - 1, 1), e(i + 2 * p - 2, 2))])
            if s % 2 == 1 and p == last:
                b_sw = [(e(i, 2), e(i, 1)), (e(i + s, 2), e(i + s, 1))]
            elif p == 1:
                b_sw = [(e(i, 1), e(i, 2)), (e(i + 1, 1), e(i + 2, 2))]
            else:
                b_sw = [(e(i, 2), e(i, 1)), (e(i + 2 * p, 2), e(i + 2 * p - 1, 1))]
            st.add_tree(a)
            st.add_tree(_swaps(Tp, b_sw))
        if s % 2 == 0:
            nT, nTp = normal_pair(st, st.profile())
            st.add_tree(nT)
            st.add_tree(nTp)
    else:
        last = (s + 1) // 2 if s % 2 == 1 else s // 2 + 1
        for p in range(1, last + 1):
            if p == 1:
                a = set(T)
                b = _swaps(Tp, [(e(i + 1, 1), e(i, 2))])
            else:
                a = _swaps(T, [(e(i, 2), e(i, 1)), (e(i + 2 * p - 2, 2), e(i + 2 * p - 3, 1))])
                if s % 2 == 0 and p == last:
                    b = _swaps(Tp, [(e(i, 1), e(i, 2)), (e(i + s, 1), e(i + s, 2))])
                else:
                    b = _swaps(Tp, [(e(i, 1), e(i, 2)), (e(i + 2 * p - 1, 1), e(i + 2 * p - 2, 2))])
            st.add_tree(a)
            st.add_tree(b)
    want = list(beta)
    want[i - 1] += 1
    want[i + s - 1] -= 1
    got = st.profile()
    if got != want:
        raise LowerBoundError(f"one_augment({i},{s}) gave profile {got}, expected {want}")


def build_packing_step(st: ScheduleState, i: int) -> None:
    """Adds exactly 2(2k+1) trees; profile gains +1 at i; iota advances by one."""
    inst = st.inst
    K = 2 * inst.k
    if not (1 <= i <= K):
        raise LowerBoundError(f"i={i} out of range 1..{K}")
    beta0 = st.profile()
    if beta0[K - 1] not in (0, 1):
        raise LowerBoundError(f"beta_2k = {beta0[K - 1]} not in {{0, 1}}")
    if st.iota > inst.tail:
        raise CapacityError(
            f"build step needs f^{st.iota} but the tail has {inst.tail} pairs (n={inst.n}, k={inst.k})"
        )
    start = len(st.trees)
    t = i
    s = _block_extent(beta0, t)
    if s < 1:
        raise LowerBoundError(f"no constant block of length >= 2 starts at {i} in {beta0}")
    while True:
        one_augment(st, t, s)
        if t + s == K:
            break
        t = t + s
        s = _block_extent(st.profile(), t)
    T, Tp = normal_pair(st, st.profile())
    fi = inst.f(st.iota, 1)
    if beta0[K - 1] == 1:
        T = _toggle(T, inst.e(K, 2), fi)
    else:
        T = _toggle(T, inst.e(K, 1), fi)
    Tp = _toggle(Tp, inst.e(K, 1), inst.e(K, 2))
    st.add_tree(T)
    st.add_tree(Tp)
    st.iota += 1
    total = 2 * (2 * inst.k + 1)
    if len(st.trees) - start > total:
        raise LowerBoundError("build step overran its tree budget")
    while len(st.trees) - start < total:
        T, Tp = normal_pair(st, st.profile())
        st.add_tree(T)
        st.add_tree(Tp)
    want = list(beta0)
    want[i - 1] += 1
    if st.profile() != want:
        raise LowerBoundError(f"build step at {i} gave {st.profile()}, expected {want}")
    chk = verify_standard_position(st)
    if not chk:
        raise LowerBoundError(f"left standard position: bullet {chk.bullet}: {chk.detail}")


def schedule_calls(k: int) -> list[int]:
    """Build-step positions reaching (2k-1, ..., 1, 0): round r raises 1..2k-1-r."""
    return [j for r in range(2 * k - 1) for j in range(1, 2 * k - r)]


@dataclass
class ScheduleReport:
    n: int
    k: int
    size: int
    max_load: int
    error: Fraction
    witness_edge: int
    profile: list[int]
    trace: list[dict]
    greedy: bool

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "size": self.size,
            "max_load": self.max_load,
            "error": f"{self.error.numerator}/{self.error.denominator}",
            "witness_edge": self.witness_edge,
            "profile": self.profile,
            "trace": self.trace,
            "greedy": self.greedy,
        }


def target_size(k: int) -> int:
    return 2 * k * (2 * k + 1) ** 2


def full_schedule(inst: LowerBoundInstance) -> tuple[TreePacking, ScheduleReport]:
    """Runs the build steps, then pads with normal pairs to 2k(2k+1)^2 trees.

    Raises CapacityError when the tail is too short for the number of steps
    (each step consumes one f-pair, so n >= 2k^2 + k + 2 is needed).
    """
    from .packing import is_greedy

    st = ScheduleState(inst)
    for step, i in enumerate(schedule_calls(inst.k)):
        build_packing_step(st, i)
        st.trace.append({"step": step, "i": i, "size": len(st.trees), "profile": st.profile()})
    target = target_size(inst.k)
    while len(st.trees) < target:
        T, Tp = normal_pair(st, st.profile())
        st.add_tree(T)
        st.add_tree(Tp)
    P = st.packing()
    N = len(st.trees)
    witness = max(sorted(P.L), key=lambda e: P.L[e])
    err = abs(Fraction(P.L[witness], N) - Fraction(1, 2))
    rep = ScheduleReport(
        inst.n, inst.k, N, P.L[witness], err, witness, st.profile(), st.trace,
        bool(is_greedy(inst.graph, P)),
    )
    return P, rep


def scaled(inst: LowerBoundInstance, P: TreePacking, s: int) -> tuple[MultiGraph, TreePacking]:
    """Edge-duplicated graph (lambda = 2s) with the packing copied onto each layer.

    Layer c of tree t is tree t mapped to copy c of every edge; trees are
    interleaved layer by layer. Each copy keeps the original load count, so
    relative loads halve along with the ideal loads.
    """
    if s < 1:
        raise LowerBoundError("scale must be >= 1")
    h = inst.graph.duplicate_edges(s)
    cmap = inst.graph.copy_map(s)
    trees = []
    for t in P.trees:
        for c in range(s):
            trees.append(tuple(sorted(cmap[e][c] for e in t)))
    L = {e: 0 for e in h.edges}
    for t in trees:
        for e in t:
            L[e] += 1
    return h, TreePacking(trees, L)


def min_tail(k: int) -> int:
    """Vertex count the schedule needs: one f-pair per build step."""
    return 2 * k + 2 + k * (2 * k - 1)


__all__ = [
    "CapacityError",
    "LowerBoundError",
    "LowerBoundInstance",
    "ScheduleReport",
    "ScheduleState",
    "build_instance",
    "build_packing_step",
    "full_schedule",
    "min_tail",
    "normal_pair",
    "one_augment",
    "scaled",
    "schedule_calls",
    "seed_graph",
    "target_size",
    "verify_standard_position",
]
