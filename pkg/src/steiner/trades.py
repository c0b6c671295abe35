"""Pasch and hexagon trades, twin classification, two-pasch analysis.

A pasch {x,y,z} {x,b,c} {a,y,c} {a,b,z} covers the same twelve pairs as
{a,b,c} {a,y,z} {x,y,c} {x,b,z}, so swapping one quadruple for the other
inside a system yields another valid system on the same pair set.  The
hexagon trade swaps the roles of its two degree-3 points.  Both switches
are involutions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SteinerError, Triple, TripleSystem, from_triples
from .configurations import ConfigInstance, config_instances, enumerate_configs
from .isomorphism import are_isomorphic, automorphism_group, block_permutation


class NotAConfigError(SteinerError):
    """The supplied instance is not of the expected kind in this system."""


@dataclass(frozen=True)
class SwitchResult:
    system: TripleSystem
    removed: tuple[Triple, ...]
    added: tuple[Triple, ...]


def _pair_set(triples) -> set[tuple[int, int]]:
    pairs = set()
    for t in triples:
        x, y, z = sorted(t)
        pairs.update(((x, y), (x, z), (y, z)))
    return pairs


def _do_switch(sys: TripleSystem, removed, added) -> SwitchResult:
    if _pair_set(removed) != _pair_set(added):
        raise NotAConfigError("replacement does not preserve the pair set")
    removed_set = {tuple(sorted(t)) for t in removed}
    new_blocks = [b for b in sys.blocks if b not in removed_set]
    new_blocks.extend(tuple(sorted(t)) for t in added)
    return SwitchResult(
        from_triples(sys.v, new_blocks),
        tuple(sorted(removed_set)),
        tuple(sorted(tuple(sorted(t)) for t in added)),
    )


def switch_pasch(sys: TripleSystem, inst: ConfigInstance) -> SwitchResult:
    """Replace a pasch by the complementary quadruple on its six points."""
    if inst.kind != "pasch" or len(set(inst.blocks)) != 4:
        raise NotAConfigError("need four distinct block indices of kind pasch")
    quad = [sys.blocks[b] for b in inst.blocks]
    degree: dict[int, int] = {}
    for t in quad:
        for p in t:
            degree[p] = degree.get(p, 0) + 1
    if len(degree) != 6 or any(d != 2 for d in degree.values()):
        raise NotAConfigError("blocks do not span six points twice each")
    x, y, z = quad[0]
    b2 = next(t for t in quad[1:] if x in t)
    b_or_c = [p for p in b2 if p != x]
    b3 = next(t for t in quad[1:] if y in t and t != b2)
    c = next(p for p in b_or_c if p in b3)
    b = next(p for p in b_or_c if p != c)
    a = next(p for p in b3 if p not in (y, c))
    b4 = next(t for t in quad[1:] if t not in (b2, b3))
    if set(b4) != {a, b, z}:
        raise NotAConfigError("blocks do not form a pasch")
    return _do_switch(sys, quad, [(a, b, c), (a, y, z), (x, y, c), (x, b, z)])


def switch_hexagon(sys: TripleSystem, inst: ConfigInstance) -> SwitchResult:
    """Swap the two degree-3 points of a hexagon."""
    if inst.kind != "hexagon" or len(set(inst.blocks)) != 6:
        raise NotAConfigError("need six distinct block indices of kind hexagon")
    six = [sys.blocks[b] for b in inst.blocks]
    degree: dict[int, int] = {}
    for t in six:
        for p in t:
            degree[p] = degree.get(p, 0) + 1
    hubs = sorted(p for p, d in degree.items() if d == 3)
    if len(degree) != 8 or len(hubs) != 2:
        raise NotAConfigError("blocks do not form a hexagon")
    x, y = hubs
    swap = {x: y, y: x}
    added = [tuple(sorted(swap.get(p, p) for p in t)) for t in six]
    return _do_switch(sys, six, added)


@dataclass(frozen=True)
class TwinReport:
    classification: str  # not-one-pasch | unpaired | twin | identical-twin
    partner: TripleSystem | None
    partner_pasch_count: int | None
    partner_aut_order: int | None


def classify_twins(sys: TripleSystem) -> TwinReport:
    """Twin classification of a system via its pasch count.

    A system with exactly one pasch switches to a partner; if the
    partner also has exactly one pasch the two are twins (identical
    twins when isomorphic).  A one-pasch system whose partner has a
    different pasch count is reported as unpaired.
    """
    paschs = config_instances(sys, "pasch")
    if len(paschs) != 1:
        return TwinReport("not-one-pasch", None, None, None)
    partner = switch_pasch(sys, paschs[0]).system
    partner_count = enumerate_configs(partner, "pasch")
    order = automorphism_group(partner).order
    if partner_count != 1:
        return TwinReport("unpaired", partner, partner_count, order)
    kind = "identical-twin" if are_isomorphic(sys, partner) else "twin"
    return TwinReport(kind, partner, partner_count, order)


@dataclass(frozen=True)
class TwoPaschReport:
    pasch_count: int
    shared_blocks: tuple[int, ...] | None
    switched_pasch_counts: tuple[int, int] | None
    switched_isomorphic: bool | None
    exchanging_automorphism: bool | None
    switched: tuple[TripleSystem, TripleSystem] | None


def two_pasch_analysis(sys: TripleSystem) -> TwoPaschReport:
    """Behaviour of a two-pasch system under switching either pasch."""
    paschs = config_instances(sys, "pasch")
    if len(paschs) != 2:
        return TwoPaschReport(len(paschs), None, None, None, None, None)
    p, q = paschs
    shared = tuple(sorted(set(p.blocks) & set(q.blocks)))
    sp = switch_pasch(sys, p).system
    sq = switch_pasch(sys, q).system
    counts = (enumerate_configs(sp, "pasch"), enumerate_configs(sq, "pasch"))
    iso = are_isomorphic(sp, sq) is not None
    group = automorphism_group(sys)
    p_set, q_set = set(p.blocks), set(q.blocks)
    exchanges = False
    for g in group.elements:
        bp = block_permutation(sys, g)
        if {bp[b] for b in p_set} == q_set:
            exchanges = True
            break
    return TwoPaschReport(2, shared, counts, iso, exchanges, (sp, sq))


def switched_system(sys: TripleSystem, kind: str, index: int) -> SwitchResult:
    """Switch the index-th instance (deterministic order) of the given kind."""
    instances = config_instances(sys, kind)
    if not 0 <= index < len(instances):
        raise IndexError(
            f"instance {index} out of range: {len(instances)} {kind} instances")
    if kind == "pasch":
        return switch_pasch(sys, instances[index])
    if kind == "hexagon":
        return switch_hexagon(sys, instances[index])
    raise ValueError(f"no switch defined for kind {kind!r}")
