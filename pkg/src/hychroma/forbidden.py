"""Binary linear codes with one forbidden nonzero weight, and their cosets.

An [n, k] code in which no nonzero codeword has Hamming weight exactly d
splits the n-cube into 2^(n-k) cosets, none of which holds a pair of words
at distance exactly d.  Larger k means fewer cosets, so these codes drive
the exact-distance coloring bounds.  Three constructions are provided: a
greedy parity-check build that works for every even d, the closed-form
optimum for d = 2, and a direct sum extending a minimum-distance code by a
forbidden-distance code of the same d.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

import numpy as np

from .bitops import ceil_log2
from .errors import (
    ConstructionError,
    GuardError,
    IntegrityError,
    UsageError,
)
from .gf2 import (
    BinaryLinearCode,
    BinaryMatrix,
    BitVector,
    binary_code,
    codewords,
    enumerate_cosets,
    format_code_file,
    full_space_code,
    kernel_basis,
    min_hamming_weight,
    parse_code_file,
)
from .partitions import ForbiddenDistance, HypercubePartition

GREEDY_COLUMN_GUARD = 28        # cap on the column height m
GREEDY_MEMORY_GUARD = 10 ** 7   # cap on the stored subset-sum count
COLUMN_CHECK_GUARD = 10 ** 7    # cap on directly enumerated column subsets
SCAN_DIM_GUARD = 24             # codeword weight scans cover 2^k words


@dataclass(frozen=True)
class ForbiddenLinearCode:
    """A binary linear code whose nonzero words never hit one weight.

    When the code came from a parity-check matrix, that matrix rides along
    so the defining column condition stays auditable.
    """

    base: BinaryLinearCode
    forbidden_d: int
    parity_check: BinaryMatrix | None = None

    @property
    def length(self) -> int:
        return self.base.length

    @property
    def dimension(self) -> int:
        return self.base.dimension

    def __repr__(self) -> str:
        return (f"ForbiddenLinearCode(n={self.length}, k={self.dimension}, "
                f"forbidden={self.forbidden_d})")


def forbidden_code(base: BinaryLinearCode, d: int,
                   parity_check: BinaryMatrix | None = None,
                   force: bool = False) -> ForbiddenLinearCode:
    """Wrap a code after scanning every codeword weight against d."""
    if d < 1:
        raise UsageError("the forbidden distance must be positive")
    if base.dimension > SCAN_DIM_GUARD and not force:
        raise GuardError(
            f"weight scan over 2^{base.dimension} codewords exceeds the "
            f"exhaustive limit 2^{SCAN_DIM_GUARD}; pass force=True to override")
    if base.dimension > 0:
        words = codewords(base, force=force)
        weights = np.bitwise_count(words)
        bad = np.flatnonzero(weights == d)
        if bad.size:
            word = int(words[int(bad[0])])
            raise ConstructionError(
                f"codeword {BitVector(base.length, word)} has the forbidden "
                f"weight {d}")
    return ForbiddenLinearCode(base, d, parity_check)


def greedy_forbidden_matrix(n: int, d: int) -> BinaryMatrix:
    """Parity-check matrix whose kernel avoids weight d, built greedily.

    Candidate columns are tried in increasing integer order; a candidate is
    rejected only if it equals the sum of d-1 already placed columns at
    distinct positions, which is exactly what a weight-d kernel word would
    need.  With column height m = ceil(log2(1 + C(n-1, d-1))) a feasible
    candidate always exists, so the kernel dimension is at least n - m.
    """
    if d % 2:
        raise UsageError("the forbidden distance must be even")
    if not 2 <= d <= n:
        raise UsageError(f"need 2 <= d <= n, got d={d}, n={n}")
    m = ceil_log2(1 + comb(n - 1, d - 1))
    if m > GREEDY_COLUMN_GUARD:
        raise GuardError(
            f"column height {m} exceeds the limit {GREEDY_COLUMN_GUARD}")
    if comb(n, d - 1) > GREEDY_MEMORY_GUARD:
        raise GuardError(
            f"tracking C({n},{d - 1}) subset sums exceeds the memory limit "
            f"{GREEDY_MEMORY_GUARD}")
    space = 1 << m
    # sums[t] holds the sums of every t-subset of the columns placed so far
    sums: list[set[int]] = [set() for _ in range(d)]
    sums[0].add(0)
    columns: list[int] = []
    blocked = sums[d - 1]
    for _ in range(n):
        candidate = next((x for x in range(space) if x not in blocked), None)
        if candidate is None:
            raise IntegrityError(
                f"no feasible column among {space} candidates; the counting "
                f"bound should have prevented this")
        columns.append(candidate)
        for t in range(d - 1, 0, -1):
            sums[t] |= {s ^ candidate for s in sums[t - 1]}
    rows = [sum(((col >> i) & 1) << j for j, col in enumerate(columns))
            for i in range(m)]
    return BinaryMatrix.from_ints(rows, n)


def code_from_parity(h: BinaryMatrix, d: int,
                     force: bool = False) -> ForbiddenLinearCode:
    """Kernel of the given matrix, validated against the forbidden weight.

    A kernel word of weight d exists exactly when some d columns of the
    matrix sum to zero, so the columns are checked directly while the
    subset count stays enumerable; beyond that the codeword weight scan
    takes over.
    """
    if d < 1:
        raise UsageError("the forbidden distance must be positive")
    n = h.col_count
    base = kernel_basis(h)
    if comb(n, d) > COLUMN_CHECK_GUARD:
        return forbidden_code(base, d, parity_check=h, force=force)
    cols = [h.column(j) for j in range(1, n + 1)]
    if d == 2:
        seen: dict[int, int] = {}
        for j, col in enumerate(cols):
            if col in seen:
                raise ConstructionError(
                    f"columns {seen[col] + 1} and {j + 1} are equal, so "
                    f"their sum is zero")
            seen[col] = j
    else:
        for subset in combinations(range(n), d):
            acc = 0
            for j in subset:
                acc ^= cols[j]
            if acc == 0:
                raise ConstructionError(
                    f"columns {tuple(j + 1 for j in subset)} sum to zero")
    return ForbiddenLinearCode(base, d, h)


def exact_k_d2(n: int) -> int:
    """Largest dimension of a length-n linear code avoiding weight 2.

    Equals n - ceil(log2 n).  The greedy parity-check construction attains
    it, and the witness is rebuilt and checked on every call.
    """
    if n < 2:
        raise UsageError("need n >= 2")
    value = n - ceil_log2(n)
    witness = code_from_parity(greedy_forbidden_matrix(n, 2), 2)
    if witness.dimension != value:
        raise IntegrityError(
            f"greedy witness has dimension {witness.dimension}, "
            f"expected {value}")
    return value


def tail_full_space(d: int) -> ForbiddenLinearCode:
    """The full space of length d-1; weight d is impossible there."""
    if d < 2:
        raise UsageError("need d >= 2")
    return forbidden_code(full_space_code(d - 1), d)


def direct_sum(c1: BinaryLinearCode, c2: ForbiddenLinearCode,
               force: bool = False) -> ForbiddenLinearCode:
    """Stack a minimum-distance code beside a forbidden-distance code.

    Every word is (a, b) with a from c1 and b from c2, so its weight is
    w(a) + w(b) where w(a) is 0 or at least d+1 and w(b) is never d; the
    total therefore never lands on d.  Requires even d and a verified
    minimum distance of at least d+1 on c1.  The result is rescanned
    whenever its codeword count permits.
    """
    d = c2.forbidden_d
    if d % 2:
        raise UsageError("the forbidden distance must be even")
    if c1.dimension > 0:
        weight = min_hamming_weight(c1, force=force)
        if weight < d + 1:
            raise ConstructionError(
                f"first code has minimum weight {weight} < {d + 1}")
    n1 = c1.length
    rows = list(c1.generator_ints())
    rows += [g << n1 for g in c2.base.generator_ints()]
    base = binary_code(n1 + c2.length, rows)
    if base.dimension != c1.dimension + c2.dimension:
        raise IntegrityError("direct sum dimensions did not add")
    if base.dimension <= SCAN_DIM_GUARD:
        return forbidden_code(base, d)
    return ForbiddenLinearCode(base, d, None)


def forbidden_coset_partition(code: ForbiddenLinearCode,
                              force: bool = False) -> HypercubePartition:
    """Cosets of the code as blocks avoiding the forbidden distance.

    2^(n-k) blocks of the n-cube; two words in a coset differ by a nonzero
    codeword, so no in-block pair sits at distance exactly d.
    """
    blocks = enumerate_cosets(code.base, force=force)
    provenance = (f"forbidden-coset n={code.length} k={code.dimension} "
                  f"d={code.forbidden_d}")
    partition = HypercubePartition(
        code.length, ForbiddenDistance(code.forbidden_d), blocks, provenance)
    from .verify import verify_partition

    report = verify_partition(partition, force=force)
    if not report.passed:
        raise IntegrityError(
            f"constructed partition failed verification: {report.counterexample}")
    partition._verified = True
    return partition


def format_forbidden_code_file(code: ForbiddenLinearCode) -> str:
    """Code file with the forbidden-distance trailer line."""
    return format_code_file(code.base, forbidden_d=code.forbidden_d)


def parse_forbidden_code_file(text: str,
                              force: bool = False) -> ForbiddenLinearCode:
    """Parse a code file and re-validate the forbidden-weight property."""
    base, forbidden_d = parse_code_file(text)
    if forbidden_d is None:
        raise UsageError("code file has no forbidden-distance trailer")
    return forbidden_code(base, forbidden_d, force=force)


def _rref_generator_rows(n: int, k: int):
    """Every dimension-k subspace of the n-cube, one canonical basis each."""
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        free = [[j for j in range(n) if j > p and j not in pivot_set]
                for p in pivots]
        total = sum(len(cells) for cells in free)
        for mask in range(1 << total):
            rows = []
            at = 0
            for i, pivot in enumerate(pivots):
                row = 1 << pivot
                for j in free[i]:
                    if mask >> at & 1:
                        row |= 1 << j
                    at += 1
                rows.append(row)
            yield rows


def max_forbidden_dimension_small(n: int, d: int) -> int:
    """Exact best dimension avoiding weight d, by exhausting subspaces.

    Walks dimensions from n downward; for each, enumerates every subspace
    through its unique reduced-row-echelon basis and scans the codeword
    weights.  Only feasible for n <= 6.
    """
    if not 1 <= n <= 6:
        raise GuardError("subspace enumeration is capped at n <= 6")
    if d < 1:
        raise UsageError("the forbidden distance must be positive")
    for k in range(n, 0, -1):
        for rows in _rref_generator_rows(n, k):
            words = [0]
            for g in rows:
                words += [w ^ g for w in words]
            if all(w.bit_count() != d for w in words[1:]):
                return k
    return 0


__all__ = [
    "ForbiddenLinearCode", "forbidden_code",
    "greedy_forbidden_matrix", "code_from_parity", "exact_k_d2",
    "tail_full_space", "direct_sum", "forbidden_coset_partition",
    "format_forbidden_code_file", "parse_forbidden_code_file",
    "max_forbidden_dimension_small",
]
