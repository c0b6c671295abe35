"""Data model for Steiner triple systems, plus codecs and generators.

A Steiner triple system of order v, STS(v), is a set of triples (blocks)
over the points 0..v-1 such that every pair of distinct points lies in
exactly one block.  Systems exist iff v = 1 or 3 (mod 6).

Blocks are always stored sorted, and the block list is kept in
lexicographic order; block indices used throughout the package refer to
that canonical order.  TripleSystem instances are immutable once built,
so they can be shared freely between concurrent tasks.

The compact notation encodes an STS as one symbol per block: walking the
blocks in lexicographic order, the i-th symbol is the largest point of
the i-th block, written '0'-'9' then 'a', 'b', ... for 10, 11, ...
The two smaller points are implicit: they are the lexicographically
least pair not covered by any earlier block.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

Triple = tuple[int, int, int]

# '0'-'9' then lowercase letters; supports v <= 36
ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
_SYMBOL_VALUE = {c: i for i, c in enumerate(ALPHABET)}


class SteinerError(Exception):
    """Base class for errors raised by this package."""


class InvalidSystemError(SteinerError):
    """A block collection is not a valid Steiner triple system."""


class MalformedCodeError(SteinerError):
    """A compact code cannot be decoded.  `step` is the 1-based symbol index."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


class InvalidBaseBlocksError(SteinerError):
    """Base blocks do not develop into a Steiner triple system."""


class BudgetExceededError(SteinerError):
    """A bounded search ran out of budget before reaching a decision."""


def block_count(v: int) -> int:
    return v * (v - 1) // 6


class TripleSystem:
    """An STS(v) with its derived lookup tables.

    Attributes:
        v           point count
        blocks      tuple of sorted triples, lexicographically ordered
        pair_index  {(x, y): block index} for every pair x < y
        third       third[x][y] = third point of the block through x, y
        blocks_at   blocks_at[p] = tuple of indices of blocks containing p
        block_masks point bitmask per block
    """

    __slots__ = ("v", "blocks", "pair_index", "third", "blocks_at",
                 "block_masks", "_hash")

    def __init__(self, v: int, triples):
        if v % 6 not in (1, 3):
            raise InvalidSystemError(f"no STS of order {v}: need v = 1 or 3 (mod 6)")
        blocks = tuple(sorted(tuple(sorted(t)) for t in triples))
        if len(blocks) != block_count(v):
            raise InvalidSystemError(
                f"expected {block_count(v)} blocks for v={v}, got {len(blocks)}")
        pair_index: dict[tuple[int, int], int] = {}
        third = [[-1] * v for _ in range(v)]
        blocks_at: list[list[int]] = [[] for _ in range(v)]
        masks = []
        for i, (x, y, z) in enumerate(blocks):
            if not (0 <= x < y < z < v):
                raise InvalidSystemError(f"block {blocks[i]} out of range for v={v}")
            for a, b, c in ((x, y, z), (x, z, y), (y, z, x)):
                if (a, b) in pair_index:
                    raise InvalidSystemError(
                        f"pair ({a},{b}) covered twice: blocks "
                        f"{blocks[pair_index[(a, b)]]} and {blocks[i]}")
                pair_index[(a, b)] = i
                third[a][b] = third[b][a] = c
            for p in (x, y, z):
                blocks_at[p].append(i)
            masks.append((1 << x) | (1 << y) | (1 << z))
        # block count + no duplicated pair already forces full coverage,
        # but report a concrete missing pair if something slipped through
        if len(pair_index) != v * (v - 1) // 2:
            for a in range(v):
                for b in range(a + 1, v):
                    if (a, b) not in pair_index:
                        raise InvalidSystemError(f"pair ({a},{b}) not covered")
        self.v = v
        self.blocks = blocks
        self.pair_index = pair_index
        self.third = tuple(tuple(row) for row in third)
        self.blocks_at = tuple(tuple(bs) for bs in blocks_at)
        self.block_masks = tuple(masks)
        self._hash = hash((v, blocks))

    def __eq__(self, other):
        return (isinstance(other, TripleSystem)
                and self.v == other.v and self.blocks == other.blocks)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"TripleSystem(v={self.v}, blocks={len(self.blocks)})"

    def replication(self) -> int:
        """Number of blocks through each point, (v-1)/2."""
        return (self.v - 1) // 2


@dataclass(frozen=True)
class CyclicSpec:
    """Base blocks to be developed under i -> i+1 (mod v)."""

    v: int
    base_blocks: tuple[Triple, ...]


def from_triples(v: int, triples) -> TripleSystem:
    """Validate a block collection and build the canonical TripleSystem."""
    return TripleSystem(v, triples)


def symbol_value(c: str) -> int:
    try:
        return _SYMBOL_VALUE[c]
    except KeyError:
        raise MalformedCodeError(f"invalid symbol {c!r}") from None


def point_symbol(p: int) -> str:
    if not 0 <= p < len(ALPHABET):
        raise ValueError(f"point {p} not representable (v <= 36)")
    return ALPHABET[p]


def decode_compact(code: str, v: int) -> TripleSystem:
    """Decode a compact code into an STS(v).

    Walks the symbols in order; at each step the two implicit points are
    the least pair not yet covered, and the symbol names the largest
    point of the new block.
    """
    want = block_count(v)
    if len(code) != want:
        raise MalformedCodeError(
            f"code length {len(code)} != {want} required for v={v}")
    covered = [[False] * v for _ in range(v)]
    triples = []
    x = y = 0
    for i, sym in enumerate(code, start=1):
        # least uncovered pair; never moves backwards
        found = False
        for a in range(x, v):
            b0 = y + 1 if a == x else a + 1
            for b in range(b0, v):
                if not covered[a][b]:
                    x, y = a, b
                    found = True
                    break
            if found:
                break
        if not found:
            raise MalformedCodeError(
                f"step {i}: all pairs already covered", step=i)
        z = symbol_value(sym)
        if z >= v:
            raise MalformedCodeError(
                f"step {i}: symbol {sym!r} decodes to point {z} >= v={v}", step=i)
        if z <= y:
            raise MalformedCodeError(
                f"step {i}: largest point {z} must exceed {y}", step=i)
        if covered[x][z] or covered[y][z]:
            raise MalformedCodeError(
                f"step {i}: block ({x},{y},{z}) repeats a covered pair", step=i)
        covered[x][y] = covered[x][z] = covered[y][z] = True
        triples.append((x, y, z))
    for a in range(v):
        for b in range(a + 1, v):
            if not covered[a][b]:
                raise MalformedCodeError(f"pair ({a},{b}) left uncovered")
    return TripleSystem(v, triples)


def encode_compact(sys: TripleSystem) -> str:
    """Exact inverse of decode_compact."""
    v = sys.v
    covered = [[False] * v for _ in range(v)]
    out = []
    x = y = 0
    for _ in range(len(sys.blocks)):
        found = False
        for a in range(x, v):
            b0 = y + 1 if a == x else a + 1
            for b in range(b0, v):
                if not covered[a][b]:
                    x, y = a, b
                    found = True
                    break
            if found:
                break
        assert found
        bx, by, bz = sys.blocks[sys.pair_index[(x, y)]]
        covered[bx][by] = covered[bx][bz] = covered[by][bz] = True
        out.append(point_symbol(bz))
    return "".join(out)


def generate_cyclic(spec: CyclicSpec) -> TripleSystem:
    """Develop base blocks under i -> i+1 (mod v), deduplicating short orbits."""
    v = spec.v
    seen: set[Triple] = set()
    for base in spec.base_blocks:
        for i in range(v):
            seen.add(tuple(sorted((p + i) % v for p in base)))
    try:
        return TripleSystem(v, seen)
    except InvalidSystemError as e:
        raise InvalidBaseBlocksError(
            f"base blocks {spec.base_blocks} do not develop into an STS({v}): {e}"
        ) from e


def direct_product(a: TripleSystem, b: TripleSystem) -> TripleSystem:
    """Product system on (points of a) x (points of b).

    Point (x, p) is encoded as x * b.v + p.  Blocks: a-blocks at constant
    second coordinate, b-blocks at constant first coordinate, and mixed
    blocks pairing an a-block with a b-block in all 6 alignments.
    """
    bv = b.v
    triples = []
    for (x, y, z) in a.blocks:
        for p in range(bv):
            triples.append((x * bv + p, y * bv + p, z * bv + p))
    for x in range(a.v):
        for (p, q, r) in b.blocks:
            triples.append((x * bv + p, x * bv + q, x * bv + r))
    for (x, y, z) in a.blocks:
        for (p, q, r) in b.blocks:
            for s, t, u in permutations((p, q, r)):
                triples.append((x * bv + s, y * bv + t, z * bv + u))
    return TripleSystem(a.v * bv, triples)


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------
# (a) compact-code lines, one system per line ('#' comments, blank lines ok)
# (b) cyclic line:   cyclic v=21 0,1,5;0,2,10;0,3,9;0,7,14
# (c) triple list:   "v=N" header, then one "x y z" per line


def infer_order(code_length: int) -> int:
    """Order v with v(v-1)/6 == code_length."""
    v = 3
    while block_count(v) < code_length:
        v += 1
    if block_count(v) != code_length:
        raise MalformedCodeError(
            f"length {code_length} is not v(v-1)/6 for any v")
    return v


def parse_cyclic_line(line: str) -> CyclicSpec:
    parts = line.split()
    if len(parts) != 3 or parts[0] != "cyclic" or not parts[1].startswith("v="):
        raise MalformedCodeError(f"bad cyclic line: {line!r}")
    v = int(parts[1][2:])
    bases = []
    for chunk in parts[2].split(";"):
        pts = tuple(int(s) for s in chunk.split(","))
        if len(pts) != 3:
            raise MalformedCodeError(f"base block {chunk!r} is not a triple")
        bases.append(pts)
    return CyclicSpec(v, tuple(bases))


def format_cyclic_line(spec: CyclicSpec) -> str:
    bases = ";".join(",".join(str(p) for p in t) for t in spec.base_blocks)
    return f"cyclic v={spec.v} {bases}"


def parse_triple_list(text: str) -> TripleSystem:
    v = None
    triples = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("v="):
            if v is not None:
                raise MalformedCodeError("duplicate v= header")
            v = int(line[2:])
            continue
        parts = line.split()
        if len(parts) != 3:
            raise MalformedCodeError(f"bad triple line: {raw!r}")
        triples.append(tuple(int(s) for s in parts))
    if v is None:
        raise MalformedCodeError("missing v= header")
    return from_triples(v, triples)


def format_triple_list(sys: TripleSystem) -> str:
    lines = [f"v={sys.v}"]
    lines.extend(" ".join(str(p) for p in t) for t in sys.blocks)
    return "\n".join(lines) + "\n"


def load_systems(text: str, v: int | None = None) -> list[TripleSystem]:
    """Parse any of the three text formats.

    A file with a v= header is one explicit triple list; otherwise each
    non-comment line is either a cyclic spec or a compact code.
    """
    stripped = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in stripped if ln]
    if any(ln.startswith("v=") for ln in lines):
        return [parse_triple_list(text)]
    systems = []
    for ln in lines:
        if ln.startswith("cyclic "):
            systems.append(generate_cyclic(parse_cyclic_line(ln)))
        else:
            systems.append(decode_compact(ln, v if v is not None else infer_order(len(ln))))
    return systems
