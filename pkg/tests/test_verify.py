import numpy as np
import pytest

from hychroma.errors import GuardError, UsageError
from hychroma.gf2 import hamming_7_4, repetition_code
from hychroma.partitions import (
    ColoringCertificate,
    ForbiddenDistance,
    HypercubePartition,
    MinDistanceAtLeast,
    from_binary_linear,
    parity_coloring,
    partition_to_coloring,
)
from hychroma.verify import (
    exact_A_small,
    exact_chi_small,
    exact_Q_small,
    verify_coloring,
    verify_partition,
)


def test_parity_coloring_passes():
    report = verify_coloring(parity_coloring(3, 3))
    assert report.passed
    assert report.counterexample is None


def test_preparata_certificate_passes(preparata3_partition):
    c = partition_to_coloring(preparata3_partition)
    report = verify_coloring(c)
    assert report.passed
    assert c.color_count == 256 and c.d == 5 and c.mode == "atmost"


def test_undersized_coloring_fails_with_recheckable_pair():
    c = ColoringCertificate(2, 2, "atmost", 2, [0, 1, 1, 0], "bogus")
    report = verify_coloring(c)
    assert not report.passed
    ce = report.counterexample
    u, v = ce.vertices
    assert int(u ^ v).bit_count() == ce.distance <= 2
    assert c.assignment[u] == c.assignment[v]


def test_shape_mismatch_reported():
    c = ColoringCertificate(3, 1, "atmost", 2, [0, 1], "short")
    report = verify_coloring(c)
    assert not report.passed
    assert report.counterexample.kind == "shape"


def test_color_out_of_range_reported():
    c = ColoringCertificate(2, 1, "atmost", 2, [0, 1, 2, 1], "overflow")
    report = verify_coloring(c)
    assert not report.passed
    assert report.counterexample.kind == "colors"


def test_unused_color_reported():
    c = ColoringCertificate(2, 1, "atmost", 3, [0, 1, 1, 0], "gap")
    report = verify_coloring(c)
    assert not report.passed
    assert "never used" in report.counterexample.detail


def test_verify_guard_blocks_large_n():
    c = ColoringCertificate(
        25, 1, "atmost", 2, np.zeros(4, dtype=np.uint32), "huge")
    with pytest.raises(GuardError):
        verify_coloring(c)


def test_partition_verifier_passes_cosets(preparata3_partition):
    report = verify_partition(preparata3_partition)
    assert report.passed
    assert set(report.checks) == {"cover", "disjoint", "block-distance"}


def test_partition_verifier_passes_punctured(preparata3_punctured):
    assert verify_partition(preparata3_punctured).passed


def test_overlapping_blocks_fail():
    p = HypercubePartition(
        2, MinDistanceAtLeast(1), [[0, 1], [1, 2], [3]], "overlap")
    report = verify_partition(p)
    assert not report.passed
    assert report.counterexample.kind == "overlap"
    assert report.counterexample.vertices == (1,)


def test_missing_vertex_fails():
    p = HypercubePartition(
        2, MinDistanceAtLeast(1), [[0, 1], [3]], "missing")
    report = verify_partition(p)
    assert not report.passed
    assert report.counterexample.kind == "cover"


def test_close_pair_fails_with_distance():
    p = HypercubePartition(
        2, MinDistanceAtLeast(2), [[0b00, 0b01], [0b10, 0b11]], "close")
    report = verify_partition(p)
    assert not report.passed
    ce = report.counterexample
    u, v = ce.vertices
    assert int(u ^ v).bit_count() == ce.distance == 1


def test_forbidden_distance_pair_fails():
    p = HypercubePartition(
        2, ForbiddenDistance(2), [[0b00, 0b11], [0b01, 0b10]], "bad")
    report = verify_partition(p)
    assert not report.passed
    assert report.counterexample.distance == 2


def test_strategies_agree_on_valid_colorings():
    subjects = [
        partition_to_coloring(from_binary_linear(hamming_7_4(), 2)),
        partition_to_coloring(from_binary_linear(repetition_code(3), 2)),
        parity_coloring(9, 5),
        parity_coloring(12, 3),
    ]
    for c in subjects:
        a = verify_coloring(c, strategy="neighbor")
        b = verify_coloring(c, strategy="pairwise")
        assert a.passed and b.passed
        assert a.strategy == "neighbor" and b.strategy == "pairwise"


def test_strategies_agree_on_invalid_colorings():
    c = ColoringCertificate(
        4, 2, "atmost", 2,
        [i & 1 for i in range(16)], "undersized")
    a = verify_coloring(c, strategy="neighbor")
    b = verify_coloring(c, strategy="pairwise")
    assert not a.passed and not b.passed
    for report in (a, b):
        u, v = report.counterexample.vertices
        assert c.assignment[u] == c.assignment[v]
        assert int(u ^ v).bit_count() <= 2


def test_unknown_strategy_rejected():
    with pytest.raises(UsageError):
        verify_coloring(parity_coloring(3, 3), strategy="psychic")


def test_parallel_neighbor_scan_matches_serial(monkeypatch):
    c = parity_coloring(12, 5)
    monkeypatch.delenv("HYCHROMA_THREADS", raising=False)
    serial = verify_coloring(c, strategy="neighbor")
    monkeypatch.setenv("HYCHROMA_THREADS", "4")
    parallel = verify_coloring(c, strategy="neighbor")
    assert serial.passed and parallel.passed
    assert serial.pairs_checked == parallel.pairs_checked


def test_parallel_failure_is_deterministic(monkeypatch):
    bad = ColoringCertificate(
        12, 5, "atmost", 2,
        np.arange(1 << 12, dtype=np.uint32) & 1, "undersized")
    monkeypatch.delenv("HYCHROMA_THREADS", raising=False)
    serial = verify_coloring(bad, strategy="neighbor")
    monkeypatch.setenv("HYCHROMA_THREADS", "4")
    parallel = verify_coloring(bad, strategy="neighbor")
    assert not serial.passed and not parallel.passed
    assert serial.counterexample.vertices == parallel.counterexample.vertices


def test_parallel_partition_verify_matches(preparata3_punctured, monkeypatch):
    monkeypatch.setenv("HYCHROMA_THREADS", "4")
    report = verify_partition(preparata3_punctured)
    assert report.passed


def test_report_render_text_excludes_timing_on_request():
    report = verify_coloring(parity_coloring(3, 3))
    with_timing = report.render_text()
    without = report.render_text(include_timing=False)
    assert "elapsed-seconds" in with_timing
    assert "elapsed-seconds" not in without
    assert "result: pass" in without


def test_report_render_csv():
    report = verify_coloring(parity_coloring(3, 3))
    text = report.render_csv(include_timing=False)
    head, row = text.splitlines()
    assert head == "subject,result,strategy,pairs_checked,counterexample"
    assert row.startswith("coloring n=3 d=3 mode=exact,pass,")


def test_exact_chi_atmost_values():
    assert exact_chi_small(3, 2, "atmost") == 4
    assert exact_chi_small(4, 2, "atmost") == 8
    assert exact_chi_small(5, 2, "atmost") == 8
    assert exact_chi_small(4, 3, "atmost") == 8
    assert exact_chi_small(5, 4, "atmost") == 16


def test_exact_chi_distance_one_is_two():
    for n in range(1, 6):
        assert exact_chi_small(n, 1, "atmost") == 2


def test_exact_chi_exact_mode_values():
    assert exact_chi_small(2, 2, "exact") == 2
    assert exact_chi_small(4, 2, "exact") == 4
    assert exact_chi_small(5, 2, "exact") == 8
    assert exact_chi_small(3, 3, "exact") == 2
    assert exact_chi_small(5, 3, "exact") == 2
    assert exact_chi_small(4, 4, "exact") == 2


def test_exact_chi_guard():
    with pytest.raises(GuardError):
        exact_chi_small(7, 2, "atmost")
    with pytest.raises(UsageError):
        exact_chi_small(3, 0, "atmost")
    with pytest.raises(UsageError):
        exact_chi_small(3, 2, "sideways")


def test_exact_A_values():
    assert exact_A_small(3, 3) == 2
    assert exact_A_small(5, 3) == 4
    assert exact_A_small(7, 3) == 16
    assert exact_A_small(4, 1) == 16
    assert exact_A_small(4, 4) == 2


def test_exact_Q_values():
    assert exact_Q_small(2, 2) == 2
    assert exact_Q_small(4, 2) == 4
    assert exact_Q_small(5, 2) == 4
    assert exact_Q_small(3, 4) == 8


def test_exact_set_guard():
    with pytest.raises(GuardError):
        exact_A_small(9, 3)
    with pytest.raises(GuardError):
        exact_Q_small(9, 2)


def test_constructions_never_beat_the_oracle():
    # verified constructive color counts are upper bounds on the exact value
    rep3 = from_binary_linear(repetition_code(3), 2)
    assert rep3.block_count >= exact_chi_small(3, 2, "atmost")
    rep5 = from_binary_linear(repetition_code(5), 2)
    assert rep5.block_count >= exact_chi_small(5, 2, "atmost")
    assert parity_coloring(5, 3).color_count >= exact_chi_small(5, 3, "exact")


def test_coset_meets_oracle_exactly():
    assert from_binary_linear(repetition_code(3), 2).block_count == \
        exact_chi_small(3, 2, "atmost")
