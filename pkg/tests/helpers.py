"""Independent brute-force oracles shared by the test modules.

Everything here recomputes results by exhaustive scans over subsets or
assignments, deliberately avoiding the structural search paths in the
package, so the two routes can be compared on small systems.
"""

from __future__ import annotations

from itertools import combinations, product

from steiner.configurations import SHAPE_BLOCKS, SHAPE_SIZES


def _shape_degrees(shape_blocks):
    deg = {}
    for blk in shape_blocks:
        for p in blk:
            deg[p] = deg.get(p, 0) + 1
    return sorted(deg.values())


def _embeds(cand_blocks, shape_blocks):
    """Is the candidate block set isomorphic to the shape, as set systems?"""
    cand_pts = sorted({p for blk in cand_blocks for p in blk})
    shape_pts = sorted({p for blk in shape_blocks for p in blk})
    if len(cand_pts) != len(shape_pts):
        return False
    cand_deg = {p: 0 for p in cand_pts}
    for blk in cand_blocks:
        for p in blk:
            cand_deg[p] += 1
    shape_deg = {p: 0 for p in shape_pts}
    for blk in shape_blocks:
        for p in blk:
            shape_deg[p] += 1
    cand_set = {frozenset(b) for b in cand_blocks}

    # map shape points to candidate points, degree-compatible, block-consistent
    def extend(mapping, used):
        if len(mapping) == len(shape_pts):
            mapped = {frozenset(mapping[p] for p in blk) for blk in shape_blocks}
            return mapped == cand_set
        p = shape_pts[len(mapping)]
        for q in cand_pts:
            if q in used or cand_deg[q] != shape_deg[p]:
                continue
            mapping[p] = q
            used.add(q)
            ok = True
            for blk in shape_blocks:
                if all(r in mapping for r in blk):
                    if frozenset(mapping[r] for r in blk) not in cand_set:
                        ok = False
                        break
            if ok and extend(mapping, used):
                return True
            del mapping[p]
            used.discard(q)
        return False

    return extend({}, set())


def brute_config_count(sys, kind) -> int:
    """Count instances by scanning all block subsets of the right size."""
    k_points, n_blocks = SHAPE_SIZES[kind]
    shape = SHAPE_BLOCKS[kind]
    sdeg = _shape_degrees(shape)
    count = 0
    blocks = sys.blocks
    pt_sets = [set(b) for b in blocks]
    for idxs in combinations(range(len(blocks)), n_blocks):
        pts = set()
        for i in idxs:
            pts |= pt_sets[i]
        if len(pts) != k_points:
            continue
        cand = [blocks[i] for i in idxs]
        deg = {}
        for blk in cand:
            for p in blk:
                deg[p] = deg.get(p, 0) + 1
        if sorted(deg.values()) != sdeg:
            continue
        if _embeds(cand, shape):
            count += 1
    return count


def brute_parallel_classes(sys):
    """All parallel classes by scanning block subsets of size v/3."""
    n = sys.v // 3
    out = []
    for idxs in combinations(range(len(sys.blocks)), n):
        pts = set()
        ok = True
        for i in idxs:
            blk = set(sys.blocks[i])
            if pts & blk:
                ok = False
                break
            pts |= blk
        if ok and len(pts) == sys.v:
            out.append(tuple(idxs))
    return out


def brute_colour_profiles(sys, m=3):
    """Class-size profiles over all proper colourings, by full enumeration."""
    profiles = set()
    blocks = sys.blocks
    for assign in product(range(m), repeat=sys.v):
        if any(assign[x] == assign[y] == assign[z] for (x, y, z) in blocks):
            continue
        sizes = [0] * m
        for c in assign:
            sizes[c] += 1
        if 0 in sizes:
            continue
        profiles.add(tuple(sorted(sizes, reverse=True)))
    return profiles


def brute_max_independent(sys) -> int:
    """Independence number over all 2^v subsets."""
    best = 0
    blocks = [(1 << x) | (1 << y) | (1 << z) for (x, y, z) in sys.blocks]
    for mask in range(1 << sys.v):
        if any(mask & b == b for b in blocks):
            continue
        best = max(best, mask.bit_count())
    return best


def brute_cycle_list(sys, x, y):
    """Cycle lengths of the pair graph via union-find over its edges."""
    z = sys.third[x][y]
    verts = [u for u in range(sys.v) if u not in (x, y, z)]
    idx = {u: i for i, u in enumerate(verts)}
    parent = list(range(len(verts)))

    def root(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    degree = [0] * len(verts)
    for hub in (x, y):
        for (a, b, c) in sys.blocks:
            if hub == a:
                u, w = b, c
            elif hub == b:
                u, w = a, c
            elif hub == c:
                u, w = a, b
            else:
                continue
            if u in idx and w in idx:
                degree[idx[u]] += 1
                degree[idx[w]] += 1
                ra, rb = root(idx[u]), root(idx[w])
                if ra != rb:
                    parent[ra] = rb
    assert all(d == 2 for d in degree)
    sizes = {}
    for i in range(len(verts)):
        r = root(i)
        sizes[r] = sizes.get(r, 0) + 1
    return tuple(sorted(sizes.values()))


def random_permutation(v, rng):
    p = list(range(v))
    rng.shuffle(p)
    return tuple(p)
