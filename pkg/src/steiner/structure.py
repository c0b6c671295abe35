"""Pair cycle structure, independent sets, block intersection graph.

For a point pair x, y with block {x, y, z}, the pair graph has vertex
set V minus {x, y, z} and an edge u-w whenever {x, u, w} or {y, u, w}
is a block.  Each vertex has exactly one x-edge and one y-edge, so the
graph is a disjoint union of even cycles of length >= 4; the sorted
cycle lengths form the pair's cycle list.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .core import TripleSystem

CycleList = tuple[int, ...]


def pair_cycles(sys: TripleSystem, x: int, y: int) -> list[list[int]]:
    """Cycles of the pair graph, each as an ordered vertex list.

    Cycles start at their smallest vertex and step along that vertex's
    x-edge first, so the output is deterministic.
    """
    if x == y:
        raise ValueError("need two distinct points")
    third = sys.third
    z = third[x][y]
    v = sys.v
    seen = [False] * v
    seen[x] = seen[y] = seen[z] = True
    cycles = []
    for start in range(v):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        cur, use_x = start, True
        while True:
            nxt = third[x][cur] if use_x else third[y][cur]
            if nxt == start:
                break
            cyc.append(nxt)
            seen[nxt] = True
            cur, use_x = nxt, not use_x
        cycles.append(cyc)
    return cycles


def cycle_list(sys: TripleSystem, x: int, y: int) -> CycleList:
    lengths = sorted(len(c) for c in pair_cycles(sys, x, y))
    assert sum(lengths) == sys.v - 3
    return tuple(lengths)


@dataclass(frozen=True)
class CycleCensus:
    counts: dict[CycleList, int]
    uniform: bool
    perfect: bool

    def total_pairs(self) -> int:
        return sum(self.counts.values())


def cycle_census(sys: TripleSystem) -> CycleCensus:
    """Cycle lists over all point pairs, with uniform/perfect flags."""
    counts: Counter[CycleList] = Counter()
    for x in range(sys.v):
        for y in range(x + 1, sys.v):
            counts[cycle_list(sys, x, y)] += 1
    uniform = len(counts) == 1
    perfect = uniform and next(iter(counts)) == (sys.v - 3,)
    return CycleCensus(dict(counts), uniform, perfect)


def max_independent_set(sys: TripleSystem) -> tuple[int, tuple[int, ...]]:
    """Largest point set containing no block, by branch and bound."""
    v = sys.v
    third = sys.third
    best_size = 0
    best: tuple[int, ...] = ()
    chosen: list[int] = []
    banned = [0] * v  # an entry > 0 bans the point from the current branch

    def grow(start: int):
        nonlocal best_size, best
        if len(chosen) > best_size:
            best_size = len(chosen)
            best = tuple(chosen)
        for p in range(start, v):
            if v - p + len(chosen) <= best_size:
                return
            if banned[p]:
                continue
            bumped = []
            for q in chosen:
                r = third[p][q]
                banned[r] += 1
                bumped.append(r)
            chosen.append(p)
            grow(p + 1)
            chosen.pop()
            for r in bumped:
                banned[r] -= 1

    grow(0)
    picked = set(best)
    for (a, b, c) in sys.blocks:
        assert not (a in picked and b in picked and c in picked)
    return best_size, best


@dataclass(frozen=True)
class IntersectionGraph:
    n: int
    adj: tuple[int, ...]  # vertex bitmask per vertex, no self-loop

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()


def block_intersection_graph(sys: TripleSystem) -> IntersectionGraph:
    """One vertex per block; edges between intersecting blocks."""
    n = len(sys.blocks)
    adj = [0] * n
    for p in range(sys.v):
        for i, j in combinations(sys.blocks_at[p], 2):
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    g = IntersectionGraph(n, tuple(adj))
    want = 3 * (sys.replication() - 1)
    assert all(g.degree(u) == want for u in range(n))
    return g


def ec_failure_witness(g: IntersectionGraph, n: int):
    """First (S, T) violating n-existential closure, or None.

    S is scanned in lexicographic order; for every T subseteq S some
    vertex outside S must be adjacent to all of T and none of S - T.
    """
    full = (1 << g.n) - 1
    for S in combinations(range(g.n), n):
        s_mask = 0
        for u in S:
            s_mask |= 1 << u
        outside = full & ~s_mask
        for tsel in range(1 << n):
            cand = outside
            for i, u in enumerate(S):
                cand &= g.adj[u] if tsel >> i & 1 else ~g.adj[u]
                if not cand:
                    break
            if not cand:
                T = tuple(u for i, u in enumerate(S) if tsel >> i & 1)
                return S, T
    return None


def is_n_existentially_closed(g: IntersectionGraph, n: int) -> bool:
    return ec_failure_witness(g, n) is None
