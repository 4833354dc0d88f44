"""Exhaustive verification of colorings and partitions, plus tiny-cube
brute-force oracles used as independent ground truth.

Two verification strategies are available and agree everywhere both run:

* neighbor enumeration: for every vertex and every offset word of the
  constrained weight range, compare the two endpoint colors; cost is
  2^n times the number of offsets.
* per-class pairwise: for every color class, compute all pairwise
  distances; cost is the sum of C(class size, 2).

verify_coloring picks whichever is cheaper unless told otherwise.  Scans
can be split across threads (numpy releases the interpreter lock); the
HYCHROMA_THREADS environment variable caps the worker count and results
are merged deterministically, so reports never depend on scheduling.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .bitops import worker_count
from .errors import GuardError, UsageError
from .partitions import (
    ColoringCertificate,
    ForbiddenDistance,
    HypercubePartition,
    MinDistanceAtLeast,
)

VERIFY_DIM_GUARD = 24
CHI_ORACLE_GUARD = 64     # vertex cap for the exact coloring search
SET_ORACLE_GUARD = 256    # vertex cap for the exact max-code searches
_PARALLEL_THRESHOLD = 1 << 20


@dataclass(frozen=True)
class Counterexample:
    """A re-checkable witness of a failed check."""

    kind: str                      # pair | overlap | cover | colors | shape
    detail: str
    vertices: tuple[int, ...] = ()
    distance: int | None = None

    def __str__(self) -> str:
        parts = [f"{self.kind}: {self.detail}"]
        if self.vertices:
            parts.append(f"vertices={self.vertices}")
        if self.distance is not None:
            parts.append(f"distance={self.distance}")
        return " ".join(parts)


@dataclass
class VerificationReport:
    subject: str
    checks: tuple[str, ...]
    passed: bool
    counterexample: Counterexample | None
    pairs_checked: int
    strategy: str
    elapsed: float = field(default=0.0)

    def render_text(self, include_timing: bool = True) -> str:
        lines = [
            f"subject: {self.subject}",
            f"checks: {' '.join(self.checks)}",
            f"strategy: {self.strategy}",
            f"pairs-checked: {self.pairs_checked}",
            f"result: {'pass' if self.passed else 'fail'}",
        ]
        if self.counterexample is not None:
            lines.append(f"counterexample: {self.counterexample}")
        if include_timing:
            lines.append(f"elapsed-seconds: {self.elapsed:.3f}")
        return "\n".join(lines) + "\n"

    def render_csv(self, include_timing: bool = True) -> str:
        head = ["subject", "result", "strategy", "pairs_checked", "counterexample"]
        row = [self.subject, "pass" if self.passed else "fail", self.strategy,
               str(self.pairs_checked),
               "" if self.counterexample is None else str(self.counterexample)]
        if include_timing:
            head.append("elapsed_seconds")
            row.append(f"{self.elapsed:.3f}")
        quoted = [f'"{cell}"' if "," in cell else cell for cell in row]
        return ",".join(head) + "\n" + ",".join(quoted) + "\n"


def _offsets(n: int, d: int, mode: str) -> np.ndarray:
    """Constrained offset words: weights 1..d (atmost) or exactly d (exact)."""
    all_words = np.arange(1, 1 << n, dtype=np.uint64)
    weights = np.bitwise_count(all_words)
    if mode == "atmost":
        return all_words[weights <= d]
    return all_words[weights == d]


def _chunks(items, count: int):
    size = (len(items) + count - 1) // count
    return [items[i:i + size] for i in range(0, len(items), size)] if size else []


def _neighbor_scan(assignment: np.ndarray, offsets: np.ndarray):
    """First clash as (offset position, vertex) or None, plus comparisons."""
    vertices = np.arange(assignment.size, dtype=np.uint64)
    for pos, off in enumerate(offsets):
        clash = assignment == assignment[vertices ^ off]
        if clash.any():
            return (pos, int(np.flatnonzero(clash)[0])), (pos + 1) * assignment.size
    return None, offsets.size * assignment.size


def _block_pair_scan(block: np.ndarray, test: str, d: int,
                     chunk: int = 1 << 22):
    """First in-block pair violating the mode, as (u, v, distance)."""
    size = block.size
    if size < 2:
        return None
    rows_per_chunk = max(1, chunk // size)
    for start in range(0, size - 1, rows_per_chunk):
        stop = min(start + rows_per_chunk, size - 1)
        weights = np.bitwise_count(block[start:stop, None] ^ block[None, :])
        local = np.arange(start, stop)
        col = np.arange(size)
        upper = col[None, :] > local[:, None]
        if test == "min-distance":
            bad = upper & (weights < d)
        else:
            bad = upper & (weights == d)
        if bad.any():
            i, j = np.argwhere(bad)[0]
            u, v = int(block[start + i]), int(block[j])
            return u, v, int(np.bitwise_count(np.uint64(u ^ v)))
    return None


def _block_pairs(sizes) -> int:
    return sum(comb(int(s), 2) for s in sizes)


def verify_coloring(certificate: ColoringCertificate, force: bool = False,
                    strategy: str = "auto") -> VerificationReport:
    """Exhaustively check a coloring certificate against its claimed mode."""
    start_time = time.perf_counter()
    n, d = certificate.n, certificate.d
    subject = f"coloring n={n} d={d} mode={certificate.mode}"
    if n > VERIFY_DIM_GUARD and not force:
        raise GuardError(
            f"verifying 2^{n} vertices exceeds the exhaustive limit "
            f"2^{VERIFY_DIM_GUARD}; pass force=True to override")
    checks = ("shape", "color-range", "colors-used", "constraint")
    assignment = certificate.assignment

    def finish(passed, counterexample, pairs, strat):
        return VerificationReport(
            subject, checks, passed, counterexample, pairs, strat,
            time.perf_counter() - start_time)

    if assignment.size != 1 << n:
        return finish(False, Counterexample(
            "shape", f"{assignment.size} entries, expected {1 << n}"),
            0, "structural")
    if assignment.size and int(assignment.max()) >= certificate.color_count:
        vertex = int(np.flatnonzero(assignment >= certificate.color_count)[0])
        return finish(False, Counterexample(
            "colors", f"vertex {vertex} has color {int(assignment[vertex])} "
            f">= {certificate.color_count}", (vertex,)), 0, "structural")
    counts = np.bincount(assignment, minlength=certificate.color_count)
    if (counts == 0).any():
        missing = int(np.flatnonzero(counts == 0)[0])
        return finish(False, Counterexample(
            "colors", f"color {missing} is never used"), 0, "structural")

    offsets = _offsets(n, d, certificate.mode)
    neighbor_cost = int(offsets.size) * (1 << n)
    pairwise_cost = _block_pairs(counts)
    if strategy == "auto":
        strategy = "neighbor" if neighbor_cost <= pairwise_cost else "pairwise"
    if strategy not in ("neighbor", "pairwise"):
        raise UsageError(f"unknown strategy {strategy!r}")

    if strategy == "neighbor":
        workers = worker_count()
        if workers > 1 and neighbor_cost >= _PARALLEL_THRESHOLD and offsets.size > 1:
            pieces = _chunks(offsets, workers)
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(
                    lambda piece: _neighbor_scan(assignment, piece), pieces))
            pairs = 0
            hit = None
            base = 0
            for piece, (found, counted) in zip(pieces, results):
                pairs += counted
                if found is not None and hit is None:
                    hit = (base + found[0], found[1])
                base += len(piece)
        else:
            hit, pairs = _neighbor_scan(assignment, offsets)
        if hit is not None:
            pos, u = hit
            v = u ^ int(offsets[pos])
            dist = int(u ^ v).bit_count()
            return finish(False, Counterexample(
                "pair", "two vertices in the constrained range share a color",
                (u, v), dist), pairs, strategy)
        return finish(True, None, pairs, strategy)

    test = "min-distance" if certificate.mode == "atmost" else "forbidden"
    limit = d + 1 if certificate.mode == "atmost" else d
    order = np.argsort(assignment, kind="stable").astype(np.uint64)
    blocks = []
    at = 0
    for count in counts:
        blocks.append(order[at:at + int(count)])
        at += int(count)
    pairs = 0
    for block in blocks:
        pairs += comb(block.size, 2)
        found = _block_pair_scan(block, test, limit)
        if found is not None:
            u, v, dist = found
            return finish(False, Counterexample(
                "pair", "two vertices in the constrained range share a color",
                (u, v), dist), pairs, strategy)
    return finish(True, None, pairs, strategy)


def verify_partition(partition: HypercubePartition,
                     force: bool = False) -> VerificationReport:
    """Check disjointness, exact cover, and the per-block distance mode."""
    start_time = time.perf_counter()
    n = partition.n
    subject = f"partition n={n} blocks={partition.block_count}"
    if n > VERIFY_DIM_GUARD and not force:
        raise GuardError(
            f"verifying 2^{n} vertices exceeds the exhaustive limit "
            f"2^{VERIFY_DIM_GUARD}; pass force=True to override")
    checks = ("cover", "disjoint", "block-distance")

    def finish(passed, counterexample, pairs, strat="pairwise"):
        return VerificationReport(
            subject, checks, passed, counterexample, pairs, strat,
            time.perf_counter() - start_time)

    total = 1 << n
    joined = (np.concatenate(partition.blocks) if partition.blocks
              else np.zeros(0, dtype=np.uint64))
    ordered = np.sort(joined)
    duplicates = np.flatnonzero(ordered[1:] == ordered[:-1])
    if duplicates.size:
        value = int(ordered[int(duplicates[0])])
        return finish(False, Counterexample(
            "overlap", f"vertex {value} appears in two blocks", (value,)), 0)
    if joined.size != total:
        return finish(False, Counterexample(
            "cover", f"blocks hold {joined.size} vertices, expected {total}"), 0)
    expected = np.arange(total, dtype=np.uint64)
    if not np.array_equal(ordered, expected):
        mismatch = int(np.flatnonzero(ordered != expected)[0])
        return finish(False, Counterexample(
            "cover", f"vertex {int(expected[mismatch])} is missing",
            (int(expected[mismatch]),)), 0)

    if isinstance(partition.mode, MinDistanceAtLeast):
        test, limit = "min-distance", partition.mode.delta
    else:
        test, limit = "forbidden", partition.mode.d

    def scan(indexed_block):
        index, block = indexed_block
        return index, _block_pair_scan(block, test, limit)

    items = list(enumerate(partition.blocks))
    workers = worker_count()
    pairs = _block_pairs(b.size for b in partition.blocks)
    first = None
    if workers > 1 and pairs >= _PARALLEL_THRESHOLD:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for index, found in pool.map(scan, items):
                if found is not None and first is None:
                    first = (index, found)
    else:
        for index, found in map(scan, items):
            if found is not None:
                first = (index, found)
                break
    if first is not None:
        index, (u, v, dist) = first
        word = ("closer than the declared minimum"
                if test == "min-distance" else "at the forbidden distance")
        return finish(False, Counterexample(
            "pair", f"block {index} holds a vertex pair {word}",
            (u, v), dist), pairs)
    return finish(True, None, pairs)


# ---------------------------------------------------------------------------
# Exact brute-force oracles on tiny cubes

def _conflict_masks(n: int, d: int, mode: str) -> list[int]:
    """Adjacency bitmasks of the conflict graph on all 2^n vertices."""
    total = 1 << n
    offs = [e for e in range(1, total)
            if (e.bit_count() <= d if mode == "atmost" else e.bit_count() == d)]
    masks = []
    for v in range(total):
        mask = 0
        for e in offs:
            mask |= 1 << (v ^ e)
        masks.append(mask)
    return masks


def _max_clique(adjacency: list[int], candidates: int) -> int:
    """Largest clique inside the candidate set, greedy-coloring bounded."""
    best = 0
    cand = candidates
    while cand:
        v = (cand & -cand).bit_length() - 1
        best += 1
        cand &= adjacency[v]

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        order: list[int] = []
        colors: list[int] = []
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            available = uncolored
            while available:
                v = (available & -available).bit_length() - 1
                bit = 1 << v
                available &= ~bit & ~adjacency[v]
                uncolored &= ~bit
                order.append(v)
                colors.append(color)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best:
                return
            v = order[i]
            expand(size + 1, cand & adjacency[v])
            cand &= ~(1 << v)

    expand(0, candidates)
    return best


def _independence_number(adjacency: list[int], total: int) -> int:
    """Largest independent set; uses translation symmetry through vertex 0."""
    full = (1 << total) - 1
    complement = [~a & full & ~(1 << v) for v, a in enumerate(adjacency)]
    return 1 + _max_clique(complement, complement[0])


def _k_colorable(adjacency: list[int], total: int, k: int) -> bool:
    """Branch and bound: saturation-first vertex order, canonical colors."""
    colors = [-1] * total
    saturation = [0] * total
    degrees = [a.bit_count() for a in adjacency]

    def pick() -> int:
        chosen, key = -1, None
        for v in range(total):
            if colors[v] >= 0:
                continue
            entry = (saturation[v].bit_count(), degrees[v], -v)
            if key is None or entry > key:
                key, chosen = entry, v
        return chosen

    def descend(done: int, used: int) -> bool:
        if done == total:
            return True
        v = pick()
        if saturation[v].bit_count() >= k:
            return False
        for c in range(min(used + 1, k)):
            if saturation[v] >> c & 1:
                continue
            colors[v] = c
            touched = []
            rest = adjacency[v]
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                if colors[u] < 0 and not saturation[u] >> c & 1:
                    saturation[u] |= 1 << c
                    touched.append(u)
            if descend(done + 1, max(used, c + 1)):
                return True
            for u in touched:
                saturation[u] &= ~(1 << c)
            colors[v] = -1
        return False

    return descend(0, 0)


def exact_chi_small(n: int, d: int, mode: str, force: bool = False) -> int:
    """Exact minimum color count on the tiny conflict graph (2^n <= 64)."""
    if mode not in ("atmost", "exact"):
        raise UsageError(f"mode must be 'atmost' or 'exact', got {mode!r}")
    if d < 1:
        raise UsageError("d must be at least 1")
    total = 1 << n
    if total > CHI_ORACLE_GUARD and not force:
        raise GuardError(
            f"exact coloring search capped at {CHI_ORACLE_GUARD} vertices; "
            f"pass force=True to override")
    adjacency = _conflict_masks(n, d, mode)
    if not any(adjacency):
        return 1
    clique = 1 + _max_clique(adjacency, adjacency[0])
    alpha = _independence_number(adjacency, total)
    lower = max(clique, -(-total // alpha))
    for k in range(lower, total):
        if _k_colorable(adjacency, total, k):
            return k
    return total


def exact_A_small(n: int, d: int, force: bool = False) -> int:
    """Exact largest code of length n with minimum distance >= d (2^n <= 256)."""
    if d < 1:
        raise UsageError("d must be at least 1")
    total = 1 << n
    if total > SET_ORACLE_GUARD and not force:
        raise GuardError(
            f"exact set search capped at {SET_ORACLE_GUARD} vertices; "
            f"pass force=True to override")
    if d == 1:
        return total
    adjacency = _conflict_masks(n, d - 1, "atmost")
    return _independence_number(adjacency, total)


def exact_Q_small(n: int, d: int, force: bool = False) -> int:
    """Exact largest code of length n avoiding distance exactly d (2^n <= 256)."""
    if d < 1:
        raise UsageError("d must be at least 1")
    total = 1 << n
    if total > SET_ORACLE_GUARD and not force:
        raise GuardError(
            f"exact set search capped at {SET_ORACLE_GUARD} vertices; "
            f"pass force=True to override")
    if d > n:
        return total
    adjacency = _conflict_masks(n, d, "exact")
    return _independence_number(adjacency, total)


__all__ = [
    "Counterexample", "VerificationReport",
    "verify_coloring", "verify_partition",
    "exact_chi_small", "exact_A_small", "exact_Q_small",
]
