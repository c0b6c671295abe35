"""Codec, validation, and generator tests."""

import pytest

from steiner import fixtures
from steiner.core import (CyclicSpec, InvalidBaseBlocksError,
                          InvalidSystemError, MalformedCodeError,
                          decode_compact, direct_product, encode_compact,
                          format_cyclic_line, format_triple_list,
                          from_triples, generate_cyclic, infer_order,
                          load_systems, parse_cyclic_line, parse_triple_list)
from steiner.isomorphism import apply, are_isomorphic


def test_decode_first_ten_blocks_of_pasch_maximal_listing():
    sysm = fixtures.get("F108")
    assert sysm.blocks[:10] == (
        (0, 1, 2), (0, 3, 4), (0, 5, 6), (0, 7, 8), (0, 9, 11),
        (0, 10, 12), (0, 13, 15), (0, 14, 16), (0, 17, 19), (0, 18, 20))


def test_all_listings_decode_and_roundtrip():
    for name, code in fixtures.LISTINGS.items():
        sysm = decode_compact(code, 21)
        assert sysm.v == 21 and len(sysm.blocks) == 70, name
        assert encode_compact(sysm) == code, name


def test_decode_rejects_bad_first_symbol():
    with pytest.raises(MalformedCodeError) as err:
        decode_compact("1" + "0" * 69, 21)
    assert err.value.step == 1


def test_decode_rejects_wrong_length():
    with pytest.raises(MalformedCodeError):
        decode_compact("2468", 21)


def test_decode_rejects_point_out_of_range():
    # 'k' = 20 is out of range for v = 9
    with pytest.raises(MalformedCodeError):
        decode_compact("k" * 12, 9)


def test_decode_rejects_covered_pair():
    good = fixtures.LISTINGS["F108"]
    # corrupting one symbol must be caught at or after that step
    with pytest.raises(MalformedCodeError):
        decode_compact(good[:1] + "2" + good[2:], 21)


def test_encode_decode_are_mutual_inverses_on_cyclic_c3():
    c3 = fixtures.get("C3")
    assert decode_compact(encode_compact(c3), 21) == c3


def test_sts7_roundtrip():
    s7 = fixtures.sts7()
    assert decode_compact(encode_compact(s7), 7) == s7


def test_from_triples_accepts_ag23():
    assert fixtures.sts9().v == 9


def test_from_triples_accepts_cyclic_sts7():
    blocks = [tuple(sorted(((i, (i + 1) % 7, (i + 3) % 7)))) for i in range(7)]
    assert from_triples(7, blocks).v == 7


def test_from_triples_rejects_repeated_block():
    blocks = list(fixtures.sts7().blocks)
    blocks[-1] = blocks[0]
    with pytest.raises(InvalidSystemError, match="covered twice"):
        from_triples(7, blocks)


def test_from_triples_rejects_out_of_range_point():
    with pytest.raises(InvalidSystemError):
        from_triples(3, [(0, 1, 3)])


def test_from_triples_rejects_bad_order():
    with pytest.raises(InvalidSystemError):
        from_triples(6, [(0, 1, 2)] * 5)


def test_generate_cyclic_c3_and_fano():
    assert len(fixtures.get("C3").blocks) == 70
    fano = generate_cyclic(CyclicSpec(7, ((0, 1, 3),)))
    assert len(fano.blocks) == 7


def test_generate_cyclic_difference_clash():
    spec = CyclicSpec(21, ((0, 1, 2), (0, 3, 6), (0, 4, 8), (0, 7, 14)))
    with pytest.raises(InvalidBaseBlocksError):
        generate_cyclic(spec)


def test_cyclic_system_invariant_under_shift():
    for name, spec in fixtures.CYCLIC_SPECS.items():
        sysm = fixtures.get(name)
        shift = tuple((i + 1) % spec.v for i in range(spec.v))
        assert apply(sysm, shift) == sysm, name


def test_replication_number():
    for sysm in (fixtures.sts7(), fixtures.sts9(), fixtures.get("C3")):
        want = (sysm.v - 1) // 2
        for p in range(sysm.v):
            assert len(sysm.blocks_at[p]) == want


def test_direct_product_shape_and_isomorphism_class():
    prod = direct_product(fixtures.sts7(), fixtures.sts3())
    assert prod.v == 21 and len(prod.blocks) == 70
    s9 = direct_product(fixtures.sts3(), fixtures.sts3())
    assert are_isomorphic(s9, fixtures.sts9()) is not None


def test_pair_index_consistency():
    sysm = fixtures.get("C5")
    for (pair, idx) in sysm.pair_index.items():
        assert set(pair) <= set(sysm.blocks[idx])


def test_text_formats_roundtrip():
    spec = fixtures.CYCLIC_SPECS["C3"]
    assert parse_cyclic_line(format_cyclic_line(spec)) == spec
    s9 = fixtures.sts9()
    assert parse_triple_list(format_triple_list(s9)) == s9


def test_load_systems_dispatch():
    text = "\n".join([
        "# a comment",
        fixtures.LISTINGS["F108"],
        "cyclic v=7 0,1,3",
        "",
    ])
    systems = load_systems(text)
    assert [s.v for s in systems] == [21, 7]
    only = load_systems(format_triple_list(fixtures.sts9()))
    assert len(only) == 1 and only[0] == fixtures.sts9()


def test_infer_order():
    assert infer_order(70) == 21
    assert infer_order(7) == 7
    with pytest.raises(MalformedCodeError):
        infer_order(69)
