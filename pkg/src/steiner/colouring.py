"""Weak colourings: chromatic number, class-size profiles, rainbow sets.

A weak m-colouring assigns one of m colours to every point so that no
block is monochromatic.  The search assigns points in fail-first order
(fewest available colours), keeping a per-point count of blocks whose
other two points already share a colour.  Colour classes may carry size
caps; since the caps of a profile sum to v, a completed assignment
matches the profile exactly.  Colour relabelling symmetry is broken per
cap group: a colour may be used for the first time only if it is the
lowest unused colour among those with the same cap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ALPHABET, BudgetExceededError, TripleSystem
from .structure import max_independent_set

ColourProfile = tuple[int, ...]


@dataclass(frozen=True)
class Colouring:
    colours: tuple[int, ...]
    m: int

    def profile(self) -> ColourProfile:
        sizes = [0] * self.m
        for c in self.colours:
            sizes[c] += 1
        return tuple(sorted(sizes, reverse=True))

    def to_string(self) -> str:
        """One symbol per point, same alphabet as compact codes."""
        return "".join(ALPHABET[c] for c in self.colours)


def check_colouring(sys: TripleSystem, col: Colouring) -> None:
    if len(col.colours) != sys.v:
        raise ValueError("colouring length != v")
    if any(not 0 <= c < col.m for c in col.colours):
        raise ValueError("colour out of range")
    if len(set(col.colours)) != col.m:
        raise ValueError("not every colour is used")
    for (x, y, z) in sys.blocks:
        if col.colours[x] == col.colours[y] == col.colours[z]:
            raise ValueError(f"block ({x},{y},{z}) is monochromatic")


def _enumerate_colourings(sys: TripleSystem, m: int,
                          caps: tuple[int, ...] | None,
                          visitor, budget: int | None = None) -> bool:
    """Drive `visitor` over proper m-colourings (one per colour relabelling).

    Returns True when the search space was exhausted, False when the
    visitor stopped early.  Raises BudgetExceededError when the node
    budget runs out first.
    """
    v = sys.v
    if caps is not None:
        if len(caps) != m or sum(caps) != v or min(caps) < 1:
            raise ValueError(f"bad caps {caps} for v={v}, m={m}")
    colour = [-1] * v
    size = [0] * m
    forb = [[0] * m for _ in range(v)]
    other: list[list[tuple[int, int]]] = [[] for _ in range(v)]
    for (x, y, z) in sys.blocks:
        other[x].append((y, z))
        other[y].append((x, z))
        other[z].append((x, y))
    # colours sharing a cap are interchangeable
    if caps is None:
        group_prev = [c - 1 for c in range(m)]
    else:
        group_prev = [-1] * m
        for c in range(1, m):
            if caps[c] == caps[c - 1]:
                group_prev[c] = c - 1
    nodes = 0

    def allowed(p: int, c: int) -> bool:
        if forb[p][c]:
            return False
        if caps is not None and size[c] >= caps[c]:
            return False
        if size[c] == 0:
            prev = group_prev[c]
            if prev >= 0 and size[prev] == 0:
                return False
        return True

    def rec(unassigned: int) -> bool:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceededError(f"colouring search exceeded {budget} nodes")
        if unassigned == 0:
            if caps is None and any(s == 0 for s in size):
                return True
            return visitor(tuple(colour))
        if caps is None:
            unused = sum(1 for s in size if s == 0)
            if unused > unassigned:
                return True
        best_p, best_dom = -1, None
        for p in range(v):
            if colour[p] != -1:
                continue
            dom = [c for c in range(m) if allowed(p, c)]
            if best_dom is None or len(dom) < len(best_dom):
                best_p, best_dom = p, dom
                if not dom:
                    return True
                if len(dom) == 1:
                    break
        for c in best_dom:
            colour[best_p] = c
            size[c] += 1
            touched = []
            for (q, r) in other[best_p]:
                cq, cr = colour[q], colour[r]
                if cq == c and cr == -1:
                    forb[r][c] += 1
                    touched.append(r)
                elif cr == c and cq == -1:
                    forb[q][c] += 1
                    touched.append(q)
            keep_going = rec(unassigned - 1)
            for t in touched:
                forb[t][c] -= 1
            size[c] -= 1
            colour[best_p] = -1
            if not keep_going:
                return False
        return True

    return rec(v)


def find_colouring(sys: TripleSystem, m: int,
                   profile: ColourProfile | None = None,
                   budget: int | None = None) -> Colouring | None:
    """First proper m-colouring (with the given class sizes, if any)."""
    if m < 2:
        raise ValueError("need at least two colours")
    caps = None
    if profile is not None:
        caps = tuple(sorted(profile, reverse=True))
    hit: list[tuple[int, ...]] = []

    def first(cols):
        hit.append(cols)
        return False

    _enumerate_colourings(sys, m, caps, first, budget)
    if not hit:
        return None
    col = Colouring(hit[0], m)
    check_colouring(sys, col)
    if profile is not None:
        assert col.profile() == caps
    return col


def chromatic_number(sys: TripleSystem, budget: int | None = None) -> int:
    m = 2
    while True:
        if find_colouring(sys, m, budget=budget) is not None:
            return m
        m += 1


def _partitions(total: int, parts: int, largest: int):
    if parts == 1:
        if 1 <= total <= largest:
            yield (total,)
        return
    for a in range(min(largest, total - parts + 1), 0, -1):
        for rest in _partitions(total - a, parts - 1, a):
            yield (a,) + rest


def achievable_profiles(sys: TripleSystem, m: int = 3,
                        budget: int | None = None) -> set[ColourProfile]:
    """All realizable colour-class size profiles for proper m-colourings.

    Candidate parts are bounded by the independence number, since each
    colour class is an independent set.
    """
    alpha, _ = max_independent_set(sys)
    out: set[ColourProfile] = set()
    for profile in _partitions(sys.v, m, alpha):
        if find_colouring(sys, m, profile, budget) is not None:
            out.add(profile)
    return out


def is_balanced(sys: TripleSystem, m: int = 3,
                budget: int | None = None) -> bool:
    """True iff every proper m-colouring is equitable."""
    eq = equitable_profile(sys.v, m)
    profiles = achievable_profiles(sys, m, budget)
    return profiles == {eq}


def equitable_profile(v: int, m: int = 3) -> ColourProfile:
    base, rem = divmod(v, m)
    return tuple(sorted((base + (1 if i < rem else 0) for i in range(m)),
                        reverse=True))


def rainbow_blocks(sys: TripleSystem, col: Colouring) -> tuple[int, ...]:
    """Indices of blocks that see all three colour classes."""
    cols = col.colours
    return tuple(i for i, (x, y, z) in enumerate(sys.blocks)
                 if len({cols[x], cols[y], cols[z]}) == 3)


@dataclass(frozen=True)
class RainbowAnalysis:
    """Existence flags over equitable 3-colourings; None = budget ran out."""

    parallel_class_rainbow: bool | None
    non_parallel_rainbow: bool | None


def rainbow_parallel_analysis(sys: TripleSystem,
                              budget: int | None = 5_000_000) -> RainbowAnalysis:
    """Can the rainbow set of an equitable 3-colouring be a parallel class?

    Scans equitable colourings once, classifying each rainbow set; stops
    as soon as both flags are witnessed.  A system without parallel
    classes settles the first flag immediately.
    """
    from .resolvability import parallel_classes

    caps = equitable_profile(sys.v, 3)
    has_classes = sys.v % 6 == 3 and bool(parallel_classes(sys))
    found_parallel = False
    found_nonparallel = False

    def visit(cols):
        nonlocal found_parallel, found_nonparallel
        col = Colouring(cols, 3)
        rb = rainbow_blocks(sys, col)
        assert len(rb) == sys.v // 3
        mask = 0
        disjoint = True
        for b in rb:
            if mask & sys.block_masks[b]:
                disjoint = False
                break
            mask |= sys.block_masks[b]
        if disjoint:
            found_parallel = True
        else:
            found_nonparallel = True
        done_parallel = found_parallel or not has_classes
        return not (done_parallel and found_nonparallel)

    try:
        exhausted = _enumerate_colourings(sys, 3, caps, visit, budget)
    except BudgetExceededError:
        exhausted = None
    flag1: bool | None
    flag2: bool | None
    if not has_classes:
        flag1 = False
    elif found_parallel:
        flag1 = True
    else:
        flag1 = False if exhausted else None
    if found_nonparallel:
        flag2 = True
    else:
        flag2 = False if exhausted else None
    return RainbowAnalysis(flag1, flag2)
