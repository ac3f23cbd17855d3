"""Small shared helpers: rationals, logarithms, union-find, oracle bounds."""

from __future__ import annotations

import math
import os
from fractions import Fraction

INF = math.inf

# Hard ceilings for the exhaustive oracles, independent of TREEPACK_MAX_N.
SUBSET_HARD_CAP = 20
PARTITION_HARD_CAP = 12
SUBSET_DEFAULT = 15
PARTITION_DEFAULT = 12


def ceil_log2(m: int) -> int:
    """Return ceil(log2(max(m, 2)))."""
    m = max(int(m), 2)
    return (m - 1).bit_length()


def fmt_rational(x) -> str:
    if x == INF:
        return "inf"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def env_bound(default: int, hard_cap: int) -> int:
    """Oracle size bound, optionally overridden by TREEPACK_MAX_N (clamped)."""
    raw = os.environ.get("TREEPACK_MAX_N")
    if raw is None or raw.strip() == "":
        return default
    try:
        val = int(raw)
    except ValueError as exc:
        raise ValueError(f"TREEPACK_MAX_N must be an integer, got {raw!r}") from exc
    if val < 1:
        raise ValueError("TREEPACK_MAX_N must be positive")
    return min(val, hard_cap)


def subset_bound() -> int:
    return env_bound(SUBSET_DEFAULT, SUBSET_HARD_CAP)


def partition_bound() -> int:
    return env_bound(PARTITION_DEFAULT, PARTITION_HARD_CAP)


class UnionFind:
    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True
