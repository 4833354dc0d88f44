"""Partitions of the hypercube vertex set and their coloring certificates.

A partition carries ordered, disjoint vertex blocks covering all 2^n
vertices, together with its mode: either every block has pairwise Hamming
distance at least delta, or no block contains a pair at one exact distance.
The first kind certifies colorings where all words within distance d get
distinct colors (d = delta - 1); the second certifies colorings where only
pairs at distance exactly d must differ.

Every constructor in this module runs the exhaustive verifier on its result
before returning it; objects are never emitted unverified.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .bitops import lo_mask, np_z4_add, np_z4_gray
from .errors import (
    ConstructionError,
    GuardError,
    IntegrityError,
    ParseError,
    UsageError,
)
from .gf2 import (
    BinaryLinearCode,
    BitVector,
    codewords,
    enumerate_cosets,
    min_hamming_weight,
    puncture_last_indices,
)
from .z4 import Z4LinearCode, min_lee_weight, z4_codewords

Z4_PARTITION_GUARD = 24  # cap on the binary dimension 2n being materialized


@dataclass(frozen=True)
class MinDistanceAtLeast:
    """Block mode: every pair inside a block is at distance >= delta."""
    delta: int


@dataclass(frozen=True)
class ForbiddenDistance:
    """Block mode: no pair inside a block is at distance exactly d."""
    d: int


PartitionMode = MinDistanceAtLeast | ForbiddenDistance


class HypercubePartition:
    """Ordered disjoint vertex blocks covering the n-cube."""

    def __init__(self, n: int, mode: PartitionMode, blocks, provenance: str,
                 _verified: bool = False):
        if not isinstance(mode, (MinDistanceAtLeast, ForbiddenDistance)):
            raise UsageError("mode must be MinDistanceAtLeast or ForbiddenDistance")
        self.n = n
        self.mode = mode
        self.blocks = tuple(np.asarray(b, dtype=np.uint64) for b in blocks)
        self.provenance = provenance
        self._verified = _verified

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def __repr__(self) -> str:
        return (f"HypercubePartition(n={self.n}, blocks={self.block_count}, "
                f"mode={self.mode})")


class ColoringCertificate:
    """A color id for each of the 2^n vertices plus the claimed constraint.

    mode 'atmost': any two vertices within Hamming distance d differ.
    mode 'exact': any two vertices at distance exactly d differ.
    """

    def __init__(self, n: int, d: int, mode: str, color_count: int,
                 assignment, provenance: str):
        if mode not in ("atmost", "exact"):
            raise UsageError(f"mode must be 'atmost' or 'exact', got {mode!r}")
        if d < 0:
            raise UsageError("distance parameter must be nonnegative")
        self.n = n
        self.d = d
        self.mode = mode
        self.color_count = color_count
        self.assignment = np.asarray(assignment, dtype=np.uint32)
        self.provenance = provenance

    def __repr__(self) -> str:
        return (f"ColoringCertificate(n={self.n}, d={self.d}, "
                f"mode={self.mode}, colors={self.color_count})")


def _checked(partition: HypercubePartition) -> HypercubePartition:
    """Run the exhaustive verifier; raise if the construction is broken."""
    from .verify import verify_partition

    report = verify_partition(partition)
    if not report.passed:
        raise IntegrityError(
            f"constructed partition failed verification: {report.counterexample}")
    partition._verified = True
    return partition


# ---------------------------------------------------------------------------
# Constructors

def from_binary_linear(code: BinaryLinearCode, d: int,
                       force: bool = False) -> HypercubePartition:
    """Cosets of a binary [n,k] code with minimum weight >= d+1.

    Yields 2^(n-k) blocks of pairwise distance >= d+1, certifying that
    d-distance colorings of the n-cube need at most 2^(n-k) colors.
    """
    if d < 0:
        raise UsageError("d must be nonnegative")
    if code.dimension > 0:
        weight = min_hamming_weight(code, force=force)
        if weight < d + 1:
            witness = next(
                w for w in codewords(code, force=force)
                if int(w) and int(w).bit_count() == weight)
            raise ConstructionError(
                f"code has minimum weight {weight} < {d + 1}; violating "
                f"codeword {BitVector(code.length, int(witness))}")
    blocks = enumerate_cosets(code, force=force)
    provenance = (f"linear-coset n={code.length} k={code.dimension} d={d}")
    return _checked(HypercubePartition(
        code.length, MinDistanceAtLeast(d + 1), blocks, provenance))


def _z4_coset_blocks(code: Z4LinearCode, force: bool):
    """Shared coset scan over the packed mod-4 space.

    Returns (packed codeword array, coset minimum representatives in
    ascending order, per-vector label array mapping each packed vector to
    its coset's minimum representative).
    """
    n = code.length
    if 2 * n > Z4_PARTITION_GUARD and not force:
        raise GuardError(
            f"materializing 2^{2 * n} vertices exceeds the exhaustive limit "
            f"2^{Z4_PARTITION_GUARD}; pass force=True to override")
    words = z4_codewords(code, force=force)
    words = np.asarray(words, dtype=np.uint64)
    total = 1 << (2 * n)
    lo = lo_mask(n)
    labels = np.full(total, total, dtype=np.uint64)
    reps = []
    rep = 0
    count = total // code.size()
    for _ in range(count):
        while labels[rep] != total:
            rep += 1
        coset = np_z4_add(words, np.uint64(rep), lo)
        labels[coset] = rep
        reps.append(rep)
    return words, reps, labels


def z4_coset_partition(code: Z4LinearCode, force: bool = False) -> HypercubePartition:
    """Gray images of the cosets of a mod-4 code with minimum Lee weight >= 3.

    A code of type 4^k1 2^k2 and length n yields 2^(2n-2k1-k2) blocks
    partitioning the 2n-cube, each with pairwise Hamming distance at least
    the code's minimum Lee weight.  The zero code is allowed: its blocks
    are singletons, so any distance bound holds vacuously.
    """
    if code.size() == 1:
        lee = 2 * code.length
    else:
        lee = min_lee_weight(code, force=force)
        if lee < 3:
            raise ConstructionError(f"minimum Lee weight {lee} < 3")
    n = code.length
    lo = lo_mask(n)
    words, reps, _ = _z4_coset_blocks(code, force)
    blocks = []
    for rep in reps:
        coset = np_z4_add(words, np.uint64(rep), lo)
        gray = np.sort(np_z4_gray(coset, lo))
        blocks.append(gray)
    provenance = f"z4-coset n={n} k1={code.k1} k2={code.k2} dlee={lee}"
    return _checked(HypercubePartition(
        2 * n, MinDistanceAtLeast(lee), blocks, provenance))


def z4_punctured_partition(code: Z4LinearCode,
                           force: bool = False) -> HypercubePartition:
    """Last-coordinate puncturing of the Gray coset partition.

    Cosets are grouped into classes of four under translation by
    (0, ..., 0, s); each class contributes two blocks: the punctured Gray
    images of the representative coset and of its translate by
    (0, ..., 0, 2).  The result halves the dimension count: 2^(2n-1-2k1-k2)
    blocks of the (2n-1)-cube with pairwise distance >= (min Lee weight) - 1.
    """
    if code.size() == 1:
        raise ConstructionError(
            "puncturing needs a code with nonzero words (min Lee weight >= 3)")
    lee = min_lee_weight(code, force=force)
    if lee < 3:
        raise ConstructionError(f"minimum Lee weight {lee} < 3")
    n = code.length
    lo = lo_mask(n)
    words, reps, labels = _z4_coset_blocks(code, force)
    e_last = 1 << (2 * (n - 1))
    from .bitops import z4_add, z4_scale

    blocks = []
    classes = 0
    for rep in reps:
        orbit = [int(labels[z4_add(rep, z4_scale(e_last, s, lo), lo)])
                 for s in range(4)]
        if len(set(orbit)) != 4:
            raise IntegrityError(
                f"translation class of coset {rep} has size {len(set(orbit))}, "
                f"expected 4")
        if rep != min(orbit):
            continue
        classes += 1
        sides = []
        for s in range(4):
            shifted = z4_add(rep, z4_scale(e_last, s, lo), lo)
            coset = np_z4_add(words, np.uint64(shifted), lo)
            gray = np_z4_gray(coset, lo)
            sides.append(np.sort(puncture_last_indices(gray, 2 * n)))
        emitted = np.sort(np.concatenate([sides[0], sides[2]]))
        mirror = np.sort(np.concatenate([sides[1], sides[3]]))
        if not np.array_equal(emitted, mirror):
            raise IntegrityError(
                f"punctured union identity fails for class of coset {rep}")
        blocks.append(sides[0])
        blocks.append(sides[2])
    if 4 * classes != len(reps):
        raise IntegrityError("class accounting does not cover all cosets")
    provenance = f"z4-punctured n={n} k1={code.k1} k2={code.k2} dlee={lee}"
    return _checked(HypercubePartition(
        2 * n - 1, MinDistanceAtLeast(lee - 1), blocks, provenance))


def product_partition(p1: HypercubePartition,
                      p2: HypercubePartition) -> HypercubePartition:
    """Blockwise product of a distance partition with an exact-distance one.

    p1 must have blocks of pairwise distance >= d+1 on the n1-cube and p2
    must forbid distance exactly d on the n2-cube, with d even.  The L1*L2
    product blocks forbid distance exactly d on the (n1+n2)-cube.
    """
    if not isinstance(p2.mode, ForbiddenDistance):
        raise UsageError("second factor must forbid one exact distance")
    d = p2.mode.d
    if d % 2:
        raise UsageError("the forbidden distance must be even")
    if not isinstance(p1.mode, MinDistanceAtLeast):
        raise UsageError("first factor must be a minimum-distance partition")
    if p1.mode.delta < d + 1:
        raise UsageError(
            f"first factor guarantees distance >= {p1.mode.delta}, "
            f"need >= {d + 1}")
    n1, n2 = p1.n, p2.n
    blocks = []
    for left in p1.blocks:
        for right in p2.blocks:
            grid = left[None, :] | (right[:, None] << np.uint64(n1))
            blocks.append(np.sort(grid.ravel()))
    provenance = f"product n1={n1} n2={n2} d={d}"
    return _checked(HypercubePartition(
        n1 + n2, ForbiddenDistance(d), blocks, provenance))


def parity_coloring(n: int, d: int) -> ColoringCertificate:
    """Two colors by weight parity; valid whenever the exact distance is odd."""
    if d % 2 == 0:
        raise UsageError("parity coloring needs an odd distance")
    if not 1 <= d <= n:
        raise UsageError(f"need 1 <= d <= n, got d={d}, n={n}")
    vertices = np.arange(1 << n, dtype=np.uint64)
    assignment = (np.bitwise_count(vertices) & 1).astype(np.uint32)
    certificate = ColoringCertificate(
        n, d, "exact", 2, assignment, f"parity n={n} d={d}")
    from .verify import verify_coloring

    report = verify_coloring(certificate)
    if not report.passed:
        raise IntegrityError(
            f"parity coloring failed verification: {report.counterexample}")
    return certificate


# ---------------------------------------------------------------------------
# Conversions

def partition_to_coloring(p: HypercubePartition) -> ColoringCertificate:
    """Color i = block index i; the mode carries over."""
    assignment = np.zeros(1 << p.n, dtype=np.uint32)
    for i, block in enumerate(p.blocks):
        assignment[block] = i
    if isinstance(p.mode, MinDistanceAtLeast):
        d, mode = p.mode.delta - 1, "atmost"
    else:
        d, mode = p.mode.d, "exact"
    return ColoringCertificate(p.n, d, mode, p.block_count, assignment,
                               p.provenance)


def coloring_to_partition(c: ColoringCertificate) -> HypercubePartition:
    """Block i = the vertices of color i, sorted ascending."""
    order = np.argsort(c.assignment, kind="stable").astype(np.uint64)
    counts = np.bincount(c.assignment, minlength=c.color_count)
    blocks = []
    start = 0
    for count in counts:
        blocks.append(np.sort(order[start:start + count]))
        start += count
    mode: PartitionMode
    if c.mode == "atmost":
        mode = MinDistanceAtLeast(c.d + 1)
    else:
        mode = ForbiddenDistance(c.d)
    return HypercubePartition(c.n, mode, blocks, c.provenance)


# ---------------------------------------------------------------------------
# Certificate file format

_CERT_HEADER = re.compile(
    r"^hychroma-coloring v1 n=(\d+) d=(\d+) mode=(atmost|exact) colors=(\d+)$")
_PROVENANCE = re.compile(r"^provenance: (.*)$")


def format_certificate(c: ColoringCertificate) -> str:
    """Render the certificate file: header, provenance, one color per line."""
    head = (f"hychroma-coloring v1 n={c.n} d={c.d} mode={c.mode} "
            f"colors={c.color_count}")
    body = "\n".join(str(int(x)) for x in c.assignment)
    return f"{head}\nprovenance: {c.provenance}\n{body}\n"


def parse_certificate(text: str) -> ColoringCertificate:
    lines = text.splitlines()
    if len(lines) < 2:
        raise ParseError("certificate needs a header and a provenance line")
    header = _CERT_HEADER.match(lines[0])
    if not header:
        raise ParseError(f"bad certificate header: {lines[0]!r}")
    n, d = int(header.group(1)), int(header.group(2))
    mode, colors = header.group(3), int(header.group(4))
    provenance = _PROVENANCE.match(lines[1])
    if not provenance:
        raise ParseError(f"bad provenance line: {lines[1]!r}")
    body = lines[2:]
    if len(body) != 1 << n:
        raise ParseError(
            f"expected {1 << n} color lines for n={n}, found {len(body)}")
    try:
        assignment = np.array([int(x) for x in body], dtype=np.uint32)
    except ValueError as exc:
        raise ParseError(f"non-integer color id: {exc}") from None
    return ColoringCertificate(n, d, mode, colors, assignment,
                               provenance.group(1))


__all__ = [
    "MinDistanceAtLeast", "ForbiddenDistance", "HypercubePartition",
    "ColoringCertificate",
    "from_binary_linear", "z4_coset_partition", "z4_punctured_partition",
    "product_partition", "parity_coloring",
    "partition_to_coloring", "coloring_to_partition",
    "format_certificate", "parse_certificate",
]
