"""Small-configuration censuses: pasch, mitre, hexagon, crown, grid, prism.

Every configuration is a set of blocks of the host system; instances are
identified with the sorted tuple of host block indices, so internal
symmetries of a shape never double count.  Each kind has a dedicated
structural enumerator anchored on a feature that is unique within the
shape (shared points, degree-3 points, block triangles), rather than a
scan over all block subsets.

Shape data, written with one abstract labelling each:

    pasch   (6,4)   {x,y,z} {x,b,c} {a,y,c} {a,b,z}
    mitre   (7,5)   {x,a,d} {x,b,e} {x,c,f} {a,b,c} {d,e,f}
    hexagon (8,6)   {x,a,b} {x,c,d} {x,e,f} {y,a,f} {y,b,c} {y,d,e}
    crown   (8,6)   {x,y,z} {x,a,b} {y,c,d} {z,a,c} {w,x,d} {w,y,b}
    grid    (9,6)   {a,b,c} {l,m,n} {x,y,z} {a,l,x} {b,m,y} {c,n,z}
    prism   (9,6)   {a,b,n} {a,c,m} {b,c,l} {l,y,z} {m,x,z} {n,x,y}
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import TripleSystem
from .structure import pair_cycles

KINDS = ("pasch", "mitre", "hexagon", "crown", "grid", "prism")

# (point count, block count) per kind
SHAPE_SIZES = {
    "pasch": (6, 4),
    "mitre": (7, 5),
    "hexagon": (8, 6),
    "crown": (8, 6),
    "grid": (9, 6),
    "prism": (9, 6),
}

# abstract block lists matching the docstring labellings (points 0..k-1)
SHAPE_BLOCKS = {
    "pasch": ((0, 1, 2), (0, 4, 5), (3, 1, 5), (3, 4, 2)),
    "mitre": ((0, 1, 4), (0, 2, 5), (0, 3, 6), (1, 2, 3), (4, 5, 6)),
    "hexagon": ((0, 2, 3), (0, 4, 5), (0, 6, 7),
                (1, 2, 7), (1, 3, 4), (1, 5, 6)),
    "crown": ((0, 1, 2), (0, 4, 5), (1, 6, 7), (2, 4, 6), (3, 0, 7), (3, 1, 5)),
    "grid": ((0, 1, 2), (3, 4, 5), (6, 7, 8), (0, 3, 6), (1, 4, 7), (2, 5, 8)),
    "prism": ((0, 1, 5), (0, 2, 4), (1, 2, 3), (3, 7, 8), (4, 6, 8), (5, 6, 7)),
}


@dataclass(frozen=True)
class ConfigInstance:
    kind: str
    blocks: tuple[int, ...]


def _pasch_sets(sys: TripleSystem) -> set[tuple[int, ...]]:
    third = sys.third
    pair_index = sys.pair_index
    blocks = sys.blocks
    found = set()
    for x in range(sys.v):
        bs = sys.blocks_at[x]
        for bi, bj in combinations(bs, 2):
            y, z = (p for p in blocks[bi] if p != x)
            b, c = (p for p in blocks[bj] if p != x)
            for u1, w1, u2, w2 in ((y, c, z, b), (y, b, z, c)):
                if third[u1][w1] == third[u2][w2]:
                    k1 = pair_index[(u1, w1) if u1 < w1 else (w1, u1)]
                    k2 = pair_index[(u2, w2) if u2 < w2 else (w2, u2)]
                    found.add(tuple(sorted((bi, bj, k1, k2))))
    return found


def _mitre_sets(sys: TripleSystem) -> set[tuple[int, ...]]:
    third = sys.third
    pair_index = sys.pair_index
    blocks = sys.blocks
    found = set()
    for x in range(sys.v):
        arms = [tuple(p for p in blocks[b] if p != x) for b in sys.blocks_at[x]]
        idxs = sys.blocks_at[x]
        for i, j, k in combinations(range(len(arms)), 3):
            (p1, q1), (p2, q2), (p3, q3) = arms[i], arms[j], arms[k]
            for s1, t1 in ((p1, q1), (q1, p1)):
                for s2, t2 in ((p2, q2), (q2, p2)):
                    for s3, t3 in ((p3, q3), (q3, p3)):
                        if third[s1][s2] == s3 and third[t1][t2] == t3:
                            cap1 = pair_index[(s1, s2) if s1 < s2 else (s2, s1)]
                            cap2 = pair_index[(t1, t2) if t1 < t2 else (t2, t1)]
                            found.add(tuple(sorted(
                                (idxs[i], idxs[j], idxs[k], cap1, cap2))))
    return found


def _hexagon_sets(sys: TripleSystem) -> set[tuple[int, ...]]:
    # the two degree-3 points of a hexagon are a unique anchor pair;
    # every 6-cycle of their pair graph is one hexagon and vice versa
    pair_index = sys.pair_index
    found = set()
    for x in range(sys.v):
        for y in range(x + 1, sys.v):
            for cyc in pair_cycles(sys, x, y):
                if len(cyc) != 6:
                    continue
                idxs = []
                for i, u in enumerate(cyc):
                    w = cyc[(i + 1) % 6]
                    idxs.append(pair_index[(u, w) if u < w else (w, u)])
                found.add(tuple(sorted(idxs)))
    return found


def _crown_sets(sys: TripleSystem) -> set[tuple[int, ...]]:
    third = sys.third
    pair_index = sys.pair_index
    blocks = sys.blocks
    found = set()
    for b0, (p0, p1, p2) in enumerate(blocks):
        for x, y, z in ((p0, p1, p2), (p0, p2, p1), (p1, p2, p0)):
            in_b0 = (p0, p1, p2)
            for w in range(sys.v):
                if w in in_b0:
                    continue
                d = third[w][x]
                b = third[w][y]
                a = third[x][b]
                c = third[y][d]
                if third[z][a] != c:
                    continue
                pts = {x, y, z, w, a, b, c, d}
                if len(pts) != 8:
                    continue
                k = (
                    b0,
                    pair_index[(x, b) if x < b else (b, x)],
                    pair_index[(y, d) if y < d else (d, y)],
                    pair_index[(z, a) if z < a else (a, z)],
                    pair_index[(w, x) if w < x else (x, w)],
                    pair_index[(w, y) if w < y else (y, w)],
                )
                if len(set(k)) == 6:
                    found.add(tuple(sorted(k)))
    return found


def _grid_sets(sys: TripleSystem) -> set[tuple[int, ...]]:
    blocks = sys.blocks
    masks = sys.block_masks
    third = sys.third
    pair_index = sys.pair_index
    nb = len(blocks)
    disjoint = [0] * nb
    for i in range(nb):
        for j in range(i + 1, nb):
            if masks[i] & masks[j] == 0:
                disjoint[i] |= 1 << j
    found = set()
    for i in range(nb):
        mi = disjoint[i]
        mj = mi
        while mj:
            low = mj & -mj
            j = low.bit_length() - 1
            mj ^= low
            both = disjoint[j] & mi
            mk = both & ~((1 << (j + 1)) - 1)
            while mk:
                lk = mk & -mk
                k = lk.bit_length() - 1
                mk ^= lk
                r1, r2, r3 = blocks[i], blocks[j], blocks[k]
                r3set = set(r3)
                u0, u1, u2 = r1
                for v0 in r2:
                    t0 = third[u0][v0]
                    if t0 not in r3set:
                        continue
                    rest2 = [p for p in r2 if p != v0]
                    for v1 in rest2:
                        t1 = third[u1][v1]
                        if t1 not in r3set or t1 == t0:
                            continue
                        v2 = rest2[0] if rest2[1] == v1 else rest2[1]
                        t2 = (r3set - {t0, t1}).pop()
                        if third[u2][v2] != t2:
                            continue
                        cols = (
                            pair_index[(u0, v0) if u0 < v0 else (v0, u0)],
                            pair_index[(u1, v1) if u1 < v1 else (v1, u1)],
                            pair_index[(u2, v2) if u2 < v2 else (v2, u2)],
                        )
                        found.add(tuple(sorted((i, j, k) + cols)))
    return found


def _block_triangles(sys: TripleSystem) -> list[tuple[int, ...]]:
    """Triples of blocks pairwise meeting in three distinct points."""
    blocks = sys.blocks
    pair_index = sys.pair_index
    third = sys.third
    tris = set()
    for x in range(sys.v):
        bs = sys.blocks_at[x]
        for bi, bj in combinations(bs, 2):
            others_i = [p for p in blocks[bi] if p != x]
            others_j = [p for p in blocks[bj] if p != x]
            for u in others_i:
                for w in others_j:
                    t = third[u][w]
                    if t == x or t in others_i or t in others_j:
                        continue
                    bk = pair_index[(u, w) if u < w else (w, u)]
                    tris.add(tuple(sorted((bi, bj, bk))))
    return sorted(tris)


def _prism_sets(sys: TripleSystem) -> set[tuple[int, ...]]:
    # a prism is two block triangles whose degree-1 (free) point sets
    # coincide and whose shared-point sets are disjoint
    blocks = sys.blocks
    by_free: dict[frozenset[int], list[tuple[tuple[int, ...], frozenset[int]]]] = {}
    for tri in _block_triangles(sys):
        count: dict[int, int] = {}
        for b in tri:
            for p in blocks[b]:
                count[p] = count.get(p, 0) + 1
        free = frozenset(p for p, c in count.items() if c == 1)
        shared = frozenset(p for p, c in count.items() if c == 2)
        by_free.setdefault(free, []).append((tri, shared))
    found = set()
    for group in by_free.values():
        for (t1, s1), (t2, s2) in combinations(group, 2):
            if s1 & s2:
                continue
            merged = tuple(sorted(t1 + t2))
            if len(set(merged)) == 6:
                found.add(merged)
    return found


_ENUMERATORS = {
    "pasch": _pasch_sets,
    "mitre": _mitre_sets,
    "hexagon": _hexagon_sets,
    "crown": _crown_sets,
    "grid": _grid_sets,
    "prism": _prism_sets,
}


def enumerate_configs(sys: TripleSystem, kind: str, visitor=None) -> int:
    """Visit each instance of `kind` once (sorted block-index tuples)."""
    if kind not in _ENUMERATORS:
        raise ValueError(f"unknown configuration kind {kind!r}")
    sets = _ENUMERATORS[kind](sys)
    if visitor is not None:
        for inst in sorted(sets):
            visitor(ConfigInstance(kind, inst))
    return len(sets)


def config_instances(sys: TripleSystem, kind: str) -> list[ConfigInstance]:
    out: list[ConfigInstance] = []
    enumerate_configs(sys, kind, out.append)
    return out


def census(sys: TripleSystem, kinds=KINDS) -> dict[str, int]:
    return {kind: enumerate_configs(sys, kind) for kind in kinds}


def is_n_sparse(sys: TripleSystem, n: int) -> bool:
    """No (l+2, l)-configuration for 4 <= l <= n.

    6-sparse reduces to 5-sparse plus no hexagon and no crown: the three
    non-full (8,6)-configurations all extend a pasch, a mia or a mitre,
    which 5-sparseness already rules out.
    """
    if n not in (4, 5, 6):
        raise ValueError("sparseness is defined here for n in (4, 5, 6)")
    if enumerate_configs(sys, "pasch"):
        return False
    if n >= 5 and enumerate_configs(sys, "mitre"):
        return False
    if n >= 6 and (enumerate_configs(sys, "hexagon")
                   or enumerate_configs(sys, "crown")):
        return False
    return True
