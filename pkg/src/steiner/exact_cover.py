"""Generic exact-cover engine (Algorithm X on bitmask state).

Rows are subsets of a universe [0, n); a cover is a set of pairwise
disjoint rows whose union is the whole universe.  The search branches on
the column with the fewest remaining candidate rows (ties to the lowest
column index) and tries rows in index order, so enumeration order is
deterministic.  State lives in big-int bitmasks: one mask of uncovered
columns and one of still-available rows.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ExactCoverInstance:
    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for r, row in enumerate(self.rows):
            if not row:
                raise ValueError(f"row {r} is empty")
            if any(not 0 <= c < self.n for c in row):
                raise ValueError(f"row {r} has an index outside [0,{self.n})")
        object.__setattr__(self, "rows", tuple(tuple(sorted(set(r))) for r in self.rows))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_covers(inst: ExactCoverInstance, visitor=None,
                     limit: int | None = None) -> int:
    """Visit every exact cover exactly once; returns the number visited.

    The visitor receives each solution as a sorted tuple of row indices.
    Stops early once `limit` solutions have been visited.
    """
    n, rows = inst.n, inst.rows
    row_mask = [0] * len(rows)
    col_rows = [0] * n
    for r, row in enumerate(rows):
        m = 0
        for c in row:
            m |= 1 << c
            col_rows[c] |= 1 << r
        row_mask[r] = m
    # rows knocked out when row r is chosen: everything meeting r's columns
    conflict = [0] * len(rows)
    for r, row in enumerate(rows):
        m = 0
        for c in row:
            m |= col_rows[c]
        conflict[r] = m

    count = 0
    partial: list[int] = []
    all_rows = (1 << len(rows)) - 1

    def search(uncovered: int, active: int) -> bool:
        nonlocal count
        if uncovered == 0:
            count += 1
            if visitor is not None:
                visitor(tuple(sorted(partial)))
            return limit is None or count < limit
        best_c = -1
        best_cands = 0
        best_n = -1
        m = uncovered
        while m:
            low = m & -m
            c = low.bit_length() - 1
            m ^= low
            cands = col_rows[c] & active
            k = cands.bit_count()
            if k == 0:
                return True
            if best_n < 0 or k < best_n:
                best_c, best_cands, best_n = c, cands, k
                if k == 1:
                    break
        for r in _bits(best_cands):
            partial.append(r)
            ok = search(uncovered & ~row_mask[r], active & ~conflict[r])
            partial.pop()
            if not ok:
                return False
        return True

    search((1 << n) - 1, all_rows)
    return count


def count_covers(inst: ExactCoverInstance) -> int:
    return enumerate_covers(inst)
