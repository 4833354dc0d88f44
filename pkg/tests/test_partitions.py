import numpy as np
import pytest

from hychroma.errors import ConstructionError, ParseError, UsageError
from hychroma.gf2 import full_space_code, hamming_7_4, repetition_code
from hychroma.partitions import (
    ColoringCertificate,
    ForbiddenDistance,
    HypercubePartition,
    MinDistanceAtLeast,
    coloring_to_partition,
    format_certificate,
    from_binary_linear,
    parity_coloring,
    parse_certificate,
    partition_to_coloring,
    product_partition,
    z4_coset_partition,
    z4_punctured_partition,
)
from hychroma.verify import exact_A_small, verify_coloring, verify_partition
from hychroma.z4 import z4_code


def block_sets(p):
    return {frozenset(int(v) for v in b) for b in p.blocks}


def test_hamming_cosets_give_eight_blocks():
    p = from_binary_linear(hamming_7_4(), 2)
    assert p.n == 7
    assert p.block_count == 8
    assert all(b.size == 16 for b in p.blocks)
    assert p.mode == MinDistanceAtLeast(3)


def test_hamming_coset_count_meets_packing_floor():
    # 2^7 vertices, pairwise balls of radius 1: no coloring can use fewer
    # than 128 / A(7,3) colors, and the coset construction meets that floor.
    p = from_binary_linear(hamming_7_4(), 2)
    assert p.block_count == (1 << 7) // exact_A_small(7, 3)


def test_repetition_cosets():
    p = from_binary_linear(repetition_code(3), 2)
    assert p.block_count == 4
    assert block_sets(p) == {
        frozenset({0b000, 0b111}), frozenset({0b001, 0b110}),
        frozenset({0b010, 0b101}), frozenset({0b011, 0b100})}


def test_full_space_single_block():
    p = from_binary_linear(full_space_code(4), 0)
    assert p.block_count == 1
    assert p.blocks[0].size == 16


def test_binary_coset_rejects_weak_code():
    with pytest.raises(ConstructionError, match="111"):
        from_binary_linear(repetition_code(3), 3)


def test_z4_cosets_of_preparata3(preparata3_partition):
    p = preparata3_partition
    assert p.n == 16
    assert p.block_count == 256
    assert all(b.size == 256 for b in p.blocks)
    assert p.mode == MinDistanceAtLeast(6)


def test_z4_cosets_reject_low_lee_weight():
    two_only = z4_code(1, [[2]])
    with pytest.raises(ConstructionError):
        z4_coset_partition(two_only)


def test_z4_cosets_of_zero_code_are_singletons():
    p = z4_coset_partition(z4_code(2, []))
    assert p.n == 4
    assert p.block_count == 16
    assert all(b.size == 1 for b in p.blocks)


def test_punctured_preparata3(preparata3_punctured):
    p = preparata3_punctured
    assert p.n == 15
    assert p.block_count == 128
    assert all(b.size == 256 for b in p.blocks)
    assert p.mode == MinDistanceAtLeast(5)
    assert 128 * 256 == 1 << 15


def test_punctured_rejects_zero_code():
    with pytest.raises(ConstructionError):
        z4_punctured_partition(z4_code(2, []))


def test_punctured_blocks_cover_half_cube(preparata3_punctured):
    joined = np.sort(np.concatenate(preparata3_punctured.blocks))
    assert np.array_equal(joined, np.arange(1 << 15, dtype=np.uint64))


def test_product_partition_example():
    left = from_binary_linear(hamming_7_4(), 2)
    right = HypercubePartition(
        2, ForbiddenDistance(2), [[0b00, 0b01], [0b10, 0b11]], "halves")
    p = product_partition(left, right)
    assert p.n == 9
    assert p.block_count == 16
    assert p.mode == ForbiddenDistance(2)
    assert verify_partition(p).passed


def test_product_with_singletons_gives_translates():
    left = from_binary_linear(repetition_code(3), 2)
    right = HypercubePartition(
        1, ForbiddenDistance(2), [[0], [1]], "singletons")
    p = product_partition(left, right)
    assert p.block_count == 8
    sets = block_sets(p)
    for block in left.blocks:
        plain = frozenset(int(v) for v in block)
        lifted = frozenset(int(v) | (1 << 3) for v in block)
        assert plain in sets and lifted in sets


def test_product_rejects_odd_distance():
    left = from_binary_linear(repetition_code(3), 1)
    right = HypercubePartition(
        1, ForbiddenDistance(1), [[0, 1]], "all")
    with pytest.raises(UsageError):
        product_partition(left, right)


def test_product_rejects_mode_mismatch():
    left = from_binary_linear(repetition_code(3), 2)
    with pytest.raises(UsageError):
        product_partition(left, left)


def test_product_rejects_weak_first_factor():
    # first factor only guarantees pairwise distance >= 2, need >= 3
    left = from_binary_linear(repetition_code(3), 1)
    right = HypercubePartition(
        2, ForbiddenDistance(2), [[0b00, 0b01], [0b10, 0b11]], "halves")
    with pytest.raises(UsageError):
        product_partition(left, right)


def test_parity_coloring_cube3():
    c = parity_coloring(3, 3)
    assert c.color_count == 2
    assert c.mode == "exact"
    assert list(c.assignment) == [0, 1, 1, 0, 1, 0, 0, 1]


def test_parity_coloring_cube10():
    c = parity_coloring(10, 5)
    assert c.color_count == 2
    assert verify_coloring(c).passed


def test_parity_coloring_rejects_even_distance():
    with pytest.raises(UsageError):
        parity_coloring(4, 2)


def test_parity_coloring_rejects_overlong_distance():
    with pytest.raises(UsageError):
        parity_coloring(3, 5)


def test_partition_to_coloring_small():
    p = from_binary_linear(repetition_code(3), 2)
    c = partition_to_coloring(p)
    assert c.color_count == 4
    assert c.mode == "atmost" and c.d == 2
    assert verify_coloring(c).passed


def test_round_trip_preserves_blocks(preparata3_partition):
    c = partition_to_coloring(preparata3_partition)
    q = coloring_to_partition(c)
    assert q.n == preparata3_partition.n
    assert q.block_count == preparata3_partition.block_count
    for a, b in zip(preparata3_partition.blocks, q.blocks):
        assert np.array_equal(np.sort(a), b)


def test_singleton_partition_coloring():
    p = HypercubePartition(
        2, MinDistanceAtLeast(3), [[0], [1], [2], [3]], "singletons")
    c = partition_to_coloring(p)
    assert c.color_count == 4
    assert c.d == 2 and c.mode == "atmost"


def test_exact_mode_round_trip():
    c = parity_coloring(4, 3)
    p = coloring_to_partition(c)
    assert p.mode == ForbiddenDistance(3)
    assert p.block_count == 2
    back = partition_to_coloring(p)
    assert np.array_equal(back.assignment, c.assignment)


def test_certificate_format_round_trip():
    c = parity_coloring(3, 3)
    text = format_certificate(c)
    lines = text.splitlines()
    assert lines[0] == "hychroma-coloring v1 n=3 d=3 mode=exact colors=2"
    assert lines[1] == "provenance: parity n=3 d=3"
    assert len(lines) == 2 + 8
    back = parse_certificate(text)
    assert back.n == 3 and back.d == 3 and back.mode == "exact"
    assert back.color_count == 2
    assert np.array_equal(back.assignment, c.assignment)
    assert back.provenance == c.provenance


def test_certificate_format_is_deterministic():
    a = format_certificate(parity_coloring(5, 3))
    b = format_certificate(parity_coloring(5, 3))
    assert a == b


def test_parse_certificate_rejects_bad_header():
    with pytest.raises(ParseError):
        parse_certificate("hychroma-coloring v2 n=3 d=3 mode=exact colors=2\n"
                          "provenance: x\n" + "0\n" * 8)
    with pytest.raises(ParseError):
        parse_certificate("not a certificate\nprovenance: x\n" + "0\n" * 8)


def test_parse_certificate_rejects_wrong_line_count():
    text = ("hychroma-coloring v1 n=3 d=3 mode=exact colors=2\n"
            "provenance: x\n" + "0\n" * 7)
    with pytest.raises(ParseError, match="8"):
        parse_certificate(text)


def test_parse_certificate_rejects_non_integer():
    text = ("hychroma-coloring v1 n=1 d=1 mode=exact colors=2\n"
            "provenance: x\n0\nq\n")
    with pytest.raises(ParseError):
        parse_certificate(text)


def test_certificate_rejects_bad_mode():
    with pytest.raises(UsageError):
        ColoringCertificate(2, 1, "between", 2, [0, 1, 0, 1], "x")
