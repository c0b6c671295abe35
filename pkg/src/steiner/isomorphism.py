"""Automorphism groups and isomorphism testing for triple systems.

The search maps points of one system onto another, branching only where
necessary: once two points are mapped, the third point of their block is
forced, and assignments cascade until the map closes or a conflict
appears.  Candidate images are restricted to points with an equal
invariant signature (pasch count, mitre count, multiset of pair cycle
lists), which is cheap and highly discriminating at v = 21.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .core import BudgetExceededError, TripleSystem
from .configurations import _mitre_sets, _pasch_sets
from .structure import cycle_list

Permutation = tuple[int, ...]


def identity(v: int) -> Permutation:
    return tuple(range(v))


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, q in enumerate(p):
        out[q] = i
    return tuple(out)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Permutation applying q first, then p."""
    return tuple(p[q[i]] for i in range(len(p)))


def cycle_type(p: Permutation) -> tuple[int, ...]:
    """Sorted cycle lengths, fixed points included as 1s."""
    seen = [False] * len(p)
    lengths = []
    for i in range(len(p)):
        if seen[i]:
            continue
        n, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths))


def apply(sys: TripleSystem, p: Permutation) -> TripleSystem:
    """Relabel the system by p and re-canonicalize."""
    if len(p) != sys.v or sorted(p) != list(range(sys.v)):
        raise ValueError("not a permutation of the point set")
    return TripleSystem(sys.v, [(p[x], p[y], p[z]) for x, y, z in sys.blocks])


def is_automorphism(sys: TripleSystem, p: Permutation) -> bool:
    third = sys.third
    for x, y, z in sys.blocks:
        if third[p[x]][p[y]] != p[z]:
            return False
    return True


def block_permutation(sys: TripleSystem, p: Permutation) -> tuple[int, ...]:
    """Induced permutation of block indices (p must be an automorphism)."""
    out = []
    for (x, y, z) in sys.blocks:
        a, b = p[x], p[y]
        out.append(sys.pair_index[(a, b) if a < b else (b, a)])
    return tuple(out)


@lru_cache(maxsize=512)
def point_signatures(sys: TripleSystem) -> tuple:
    v = sys.v
    pas = [0] * v
    for inst in _pasch_sets(sys):
        pts = set()
        for b in inst:
            pts.update(sys.blocks[b])
        for p in pts:
            pas[p] += 1
    mit = [0] * v
    for inst in _mitre_sets(sys):
        pts = set()
        for b in inst:
            pts.update(sys.blocks[b])
        for p in pts:
            mit[p] += 1
    cyc: list[list] = [[] for _ in range(v)]
    for x in range(v):
        for y in range(x + 1, v):
            cl = cycle_list(sys, x, y)
            cyc[x].append(cl)
            cyc[y].append(cl)
    return tuple((pas[p], mit[p], tuple(sorted(cyc[p]))) for p in range(v))


def _search_maps(a: TripleSystem, b: TripleSystem, on_found) -> None:
    """Enumerate block-preserving bijections a -> b.

    on_found(img tuple) returns False to stop the search.
    """
    v = a.v
    sig_a = point_signatures(a)
    sig_b = point_signatures(b)
    if Counter(sig_a) != Counter(sig_b):
        return
    cand = [tuple(q for q in range(v) if sig_b[q] == sig_a[p]) for p in range(v)]
    third_a, third_b = a.third, b.third
    img = [-1] * v
    used = [False] * v
    mapped: list[int] = []

    def assign(p0: int, q0: int):
        """Force-propagate p0 -> q0; returns the trail or None on conflict."""
        trail: list[int] = []
        stack = [(p0, q0)]
        while stack:
            p, q = stack.pop()
            if img[p] != -1:
                if img[p] != q:
                    _undo(trail)
                    return None
                continue
            if used[q]:
                _undo(trail)
                return None
            img[p] = q
            used[q] = True
            mapped.append(p)
            trail.append(p)
            tap, tbq = third_a[p], third_b[q]
            for r in mapped:
                if r == p:
                    continue
                s = tap[r]
                t = tbq[img[r]]
                if img[s] != t:
                    stack.append((s, t))
        return trail

    def _undo(trail):
        for p in reversed(trail):
            used[img[p]] = False
            img[p] = -1
            mapped.pop()

    def rec() -> bool:
        if len(mapped) == v:
            return on_found(tuple(img))
        best_p, best_opts = -1, None
        for p in range(v):
            if img[p] != -1:
                continue
            opts = [q for q in cand[p] if not used[q]]
            if best_opts is None or len(opts) < len(best_opts):
                best_p, best_opts = p, opts
                if not opts:
                    return True
        for q in best_opts:
            trail = assign(best_p, q)
            if trail is not None:
                keep_going = rec()
                _undo(trail)
                if not keep_going:
                    return False
        return True

    rec()


@dataclass(frozen=True)
class AutGroup:
    generators: tuple[Permutation, ...]
    order: int
    orbits: tuple[tuple[int, ...], ...]
    elements: tuple[Permutation, ...]

    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(sorted(len(o) for o in self.orbits))


def _closure(gens, v: int) -> set[Permutation]:
    ident = identity(v)
    known = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                e = compose(h, g)
                if e not in known:
                    known.add(e)
                    nxt.append(e)
        frontier = nxt
    return known


def _minimal_generators(elements: list[Permutation], v: int) -> tuple[Permutation, ...]:
    gens: list[Permutation] = []
    known: set[Permutation] = {identity(v)}
    for g in sorted(elements):
        if g not in known:
            gens.append(g)
            known = _closure(gens, v)
            if len(known) == len(elements):
                break
    return tuple(gens)


@lru_cache(maxsize=256)
def automorphism_group(sys: TripleSystem) -> AutGroup:
    found: list[Permutation] = []

    def keep(p):
        found.append(p)
        return True

    _search_maps(sys, sys, keep)
    assert found, "identity is always an automorphism"
    gens = _minimal_generators(found, sys.v)
    # orbits under the generators
    parent = list(range(sys.v))

    def root(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for p in range(sys.v):
            a, b = root(p), root(g[p])
            if a != b:
                parent[a] = b
    buckets: dict[int, list[int]] = {}
    for p in range(sys.v):
        buckets.setdefault(root(p), []).append(p)
    orbits = tuple(tuple(o) for o in sorted(buckets.values()))
    return AutGroup(gens, len(found), orbits, tuple(sorted(found)))


def are_isomorphic(a: TripleSystem, b: TripleSystem) -> Permutation | None:
    """A witnessing point bijection, or None."""
    if a.v != b.v:
        return None
    hit: list[Permutation] = []

    def first(p):
        hit.append(p)
        return False

    _search_maps(a, b, first)
    if not hit:
        return None
    w = hit[0]
    assert apply(a, w) == b
    return w


def has_automorphism_of_cycle_type(sys: TripleSystem, lengths,
                                   max_group_order: int = 200_000) -> bool:
    """True iff the full group contains an element of this cycle type.

    `lengths` is a multiset of cycle lengths including fixed points as
    1s; it must sum to v.
    """
    want = tuple(sorted(lengths))
    if sum(want) != sys.v:
        raise ValueError(f"cycle lengths must sum to v={sys.v}")
    group = automorphism_group(sys)
    if group.order > max_group_order:
        raise BudgetExceededError(
            f"group order {group.order} exceeds bound {max_group_order}")
    return any(cycle_type(g) == want for g in group.elements)
