"""Parallel class, resolution, and Kirkman-count tests."""

import pytest

from helpers import brute_parallel_classes
from steiner import fixtures
from steiner.core import BudgetExceededError
from steiner.isomorphism import automorphism_group
from steiner.resolvability import (format_resolution, is_doubly_resolvable,
                                   is_orthogonal_pair, kts_count,
                                   parallel_classes, resolutions)


def test_sts9_classes_match_brute_force():
    s9 = fixtures.sts9()
    classes = parallel_classes(s9)
    assert len(classes) == 4
    assert sorted(classes) == sorted(brute_parallel_classes(s9))


def test_sts15_classes_match_brute_force():
    s15 = fixtures.sts15_pg32()
    classes = parallel_classes(s15)
    assert sorted(classes) == sorted(brute_parallel_classes(s15))
    # the 56 spreads of PG(3,2)
    assert len(classes) == 56


def test_sts9_has_unique_resolution():
    s9 = fixtures.sts9()
    res = resolutions(s9)
    assert len(res) == 1
    assert kts_count(s9, res) == 1


def test_sts15_resolution_count_is_240():
    # the 240 packings of PG(3,2)
    assert len(resolutions(fixtures.sts15_pg32())) == 240


def test_class_and_resolution_invariants():
    s9 = fixtures.sts9()
    for cls in parallel_classes(s9):
        pts = set()
        for b in cls:
            blk = set(s9.blocks[b])
            assert not pts & blk
            pts |= blk
        assert pts == set(range(9))
    for res in resolutions(s9):
        seen = set()
        for cls in res:
            assert not seen & set(cls)
            seen |= set(cls)
        assert seen == set(range(len(s9.blocks)))


def test_wrong_order_rejected():
    with pytest.raises(ValueError):
        parallel_classes(fixtures.sts7())


def test_non_resolvable_systems():
    assert resolutions(fixtures.get("FNOPC1")) == []
    assert kts_count(fixtures.get("FNOPC1")) == 0


def test_orthogonality_self_pair_is_false():
    s9 = fixtures.sts9()
    r = resolutions(s9)[0]
    assert not is_orthogonal_pair(r, r)


def test_sts9_not_doubly_resolvable():
    assert not is_doubly_resolvable(fixtures.sts9())


def test_not_resolvable_means_not_doubly_resolvable():
    assert not is_doubly_resolvable(fixtures.get("F72"))


def test_double_resolvability_budget():
    c3 = fixtures.get("C3")
    with pytest.raises(BudgetExceededError):
        is_doubly_resolvable(c3, budget=10)


def test_kts_orbit_arithmetic_on_pg32():
    # PG(3,2) is the classical case: 240 packings in exactly two classes
    from steiner.isomorphism import block_permutation

    s15 = fixtures.sts15_pg32()
    res = resolutions(s15)
    group = automorphism_group(s15)
    assert group.order == 20160
    assert kts_count(s15, res) == 2
    # explicit orbit of the first resolution under the full group
    orbit = set()
    for g in group.elements:
        bp = block_permutation(s15, g)
        orbit.add(tuple(sorted(tuple(sorted(bp[b] for b in cls))
                               for cls in res[0])))
    assert group.order % len(orbit) == 0
    assert orbit <= set(res)


def test_format_resolution():
    s9 = fixtures.sts9()
    line = format_resolution(resolutions(s9)[0])
    classes = line.split(";")
    assert len(classes) == 4
    idxs = sorted(int(tok) for cls in classes for tok in cls.split(","))
    assert idxs == list(range(12))
