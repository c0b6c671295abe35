"""Parallel classes, resolutions, Kirkman counting, double resolvability.

Both enumeration problems are exact covers: a parallel class covers the
points by blocks, and a resolution covers the blocks by parallel
classes.  A resolution is stored as a sorted tuple of parallel classes,
each a sorted tuple of block indices.
"""

from __future__ import annotations

from itertools import combinations

from .core import BudgetExceededError, TripleSystem
from .exact_cover import ExactCoverInstance, enumerate_covers
from .isomorphism import automorphism_group, block_permutation

ParallelClass = tuple[int, ...]
Resolution = tuple[ParallelClass, ...]


def _require_admissible(sys: TripleSystem):
    if sys.v % 6 != 3:
        raise ValueError(f"parallel classes need v = 3 (mod 6), got v={sys.v}")


def parallel_classes(sys: TripleSystem) -> list[ParallelClass]:
    """All parallel classes, in deterministic order."""
    _require_admissible(sys)
    inst = ExactCoverInstance(sys.v, sys.blocks)
    out: list[ParallelClass] = []
    enumerate_covers(inst, out.append)
    return sorted(out)


def resolutions(sys: TripleSystem, limit: int | None = None,
                classes: list[ParallelClass] | None = None) -> list[Resolution]:
    """All resolutions (partitions of the blocks into parallel classes)."""
    _require_admissible(sys)
    if classes is None:
        classes = parallel_classes(sys)
    if not classes:
        return []
    inst = ExactCoverInstance(len(sys.blocks), tuple(classes))
    out: list[Resolution] = []

    def visit(rows):
        out.append(tuple(sorted(classes[r] for r in rows)))

    enumerate_covers(inst, visit, limit=limit)
    return sorted(out)


def kts_count(sys: TripleSystem, res: list[Resolution] | None = None) -> int:
    """Number of Kirkman systems underlain by sys.

    Two resolutions give isomorphic Kirkman systems exactly when an
    automorphism maps one to the other, so this is the number of orbits
    of the resolution set under the automorphism group.
    """
    if res is None:
        res = resolutions(sys)
    if not res:
        return 0
    group = automorphism_group(sys)
    gen_block_perms = [block_permutation(sys, g) for g in group.generators]
    remaining = set(res)
    orbits = 0
    while remaining:
        seed = remaining.pop()
        orbits += 1
        frontier = [seed]
        while frontier:
            nxt = []
            for r in frontier:
                for bp in gen_block_perms:
                    image = tuple(sorted(
                        tuple(sorted(bp[b] for b in cls)) for cls in r))
                    if image in remaining:
                        remaining.remove(image)
                        nxt.append(image)
            frontier = nxt
    return orbits


def _class_masks(r: Resolution) -> list[int]:
    masks = []
    for cls in r:
        m = 0
        for b in cls:
            m |= 1 << b
        masks.append(m)
    return masks


def is_orthogonal_pair(r1: Resolution, r2: Resolution) -> bool:
    """True iff every class of r1 meets every class of r2 in <= 1 block."""
    m1 = _class_masks(r1)
    m2 = _class_masks(r2)
    for a in m1:
        for b in m2:
            if (a & b).bit_count() > 1:
                return False
    return True


def is_doubly_resolvable(sys: TripleSystem, budget: int = 10**8) -> bool:
    """Scan resolution pairs for an orthogonal pair.

    The budget counts resolution pairs examined; exceeding it raises
    BudgetExceededError rather than answering.
    """
    if sys.v % 6 != 3:
        return False
    res = resolutions(sys)
    if len(res) < 2:
        return False
    masks = [_class_masks(r) for r in res]
    examined = 0
    for i, j in combinations(range(len(res)), 2):
        examined += 1
        if examined > budget:
            raise BudgetExceededError(
                f"examined {examined - 1} resolution pairs without a decision")
        ok = True
        for a in masks[i]:
            for b in masks[j]:
                if (a & b).bit_count() > 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def format_resolution(r: Resolution) -> str:
    """One line: semicolon-separated classes of comma-separated block indices."""
    return ";".join(",".join(str(b) for b in cls) for cls in r)
