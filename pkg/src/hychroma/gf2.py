"""Binary vectors, matrices, and linear codes, bit-packed into integers.

Words are read LSB-first: coordinate i is bit i-1 of the packed integer, so
a hypercube vertex and its vertex index are the same number.  Matrices store
one packed integer per row.  Enumeration-heavy operations (minimum weight,
coset listing) run on numpy arrays of packed words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .bitops import ceil_log2, popcount
from .errors import GuardError, IntegrityError, ParseError, UsageError

MAX_WORD_BITS = 64
MIN_WEIGHT_DIM_GUARD = 28
COSET_DIM_GUARD = 24
_DOUBLING_DIM = 20


@dataclass(frozen=True)
class BitVector:
    """A binary word of fixed length (1..64), packed LSB-first."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_WORD_BITS:
            raise UsageError(f"word length {self.length} outside 1..{MAX_WORD_BITS}")
        if self.bits < 0 or self.bits >> self.length:
            raise UsageError("bits outside the declared length")

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        if not text or set(text) - {"0", "1"}:
            raise UsageError(f"not a 0/1 word: {text!r}")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
        return cls(len(text), bits)

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))

    def weight(self) -> int:
        return popcount(self.bits)

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise UsageError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    def coordinate(self, i: int) -> int:
        """Value of coordinate i, 1-based."""
        if not 1 <= i <= self.length:
            raise UsageError(f"coordinate {i} outside 1..{self.length}")
        return self.bits >> (i - 1) & 1


def unit_vector(length: int, i: int) -> BitVector:
    """The word with a single 1 at coordinate i (1-based)."""
    if not 1 <= i <= length:
        raise UsageError(f"coordinate {i} outside 1..{length}")
    return BitVector(length, 1 << (i - 1))


def hamming_distance(a: BitVector, b: BitVector) -> int:
    """Number of coordinates where the two words differ."""
    if a.length != b.length:
        raise UsageError("length mismatch")
    return popcount(a.bits ^ b.bits)


@dataclass(frozen=True)
class BinaryMatrix:
    """A matrix over GF(2), one packed integer per row."""

    rows: tuple[BitVector, ...]
    col_count: int

    def __post_init__(self) -> None:
        for row in self.rows:
            if row.length != self.col_count:
                raise UsageError("ragged matrix: row length != col_count")

    @classmethod
    def from_ints(cls, rows: Iterable[int], col_count: int) -> "BinaryMatrix":
        return cls(tuple(BitVector(col_count, r) for r in rows), col_count)

    @property
    def row_count(self) -> int:
        return len(self.rows)

    def row_ints(self) -> list[int]:
        return [r.bits for r in self.rows]

    def column(self, j: int) -> int:
        """Column j (1-based) packed as an integer over row positions."""
        if not 1 <= j <= self.col_count:
            raise UsageError(f"column {j} outside 1..{self.col_count}")
        out = 0
        for i, row in enumerate(self.rows):
            out |= (row.bits >> (j - 1) & 1) << i
        return out


def _rref_ints(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Row-reduce packed rows; returns (reduced rows, pivot column indices)."""
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        mask = 1 << col
        pivot = next((i for i in range(r, len(work)) if work[i] & mask), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and work[i] & mask:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
    return work, pivots


def rref(m: BinaryMatrix) -> tuple[BinaryMatrix, int]:
    """Reduced row-echelon form spanning the same row space, plus its rank."""
    reduced, pivots = _rref_ints(m.row_ints(), m.col_count)
    return BinaryMatrix.from_ints(reduced, m.col_count), len(pivots)


def kernel_basis(m: BinaryMatrix) -> "BinaryLinearCode":
    """The null space {c : m c^T = 0} as a code of length col_count."""
    n = m.col_count
    reduced, pivots = _rref_ints(m.row_ints(), n)
    pivot_set = set(pivots)
    free_cols = [c for c in range(n) if c not in pivot_set]
    basis = []
    for free in free_cols:
        word = 1 << free
        for r, piv in enumerate(pivots):
            if reduced[r] >> free & 1:
                word |= 1 << piv
        basis.append(word)
    return binary_code(n, basis)


class BinaryLinearCode:
    """An [n, k] linear code held by a reduced-row-echelon generator matrix.

    Instances are immutable apart from the one-shot minimum-weight cache.
    """

    def __init__(self, generator: BinaryMatrix, _reduced: bool = False):
        if not _reduced:
            raise UsageError("use binary_code() to build codes from raw rows")
        self.length = generator.col_count
        self.generator = generator
        self.dimension = generator.row_count
        self._min_weight: int | None = None

    def __repr__(self) -> str:
        return f"BinaryLinearCode(n={self.length}, k={self.dimension})"

    def generator_ints(self) -> list[int]:
        return self.generator.row_ints()


def binary_code(n: int, rows: Iterable[int | BitVector]) -> BinaryLinearCode:
    """Build the code spanned by the given rows (independence not required)."""
    ints = [r.bits if isinstance(r, BitVector) else int(r) for r in rows]
    for r in ints:
        if r < 0 or r >> n:
            raise UsageError(f"row 0b{r:b} does not fit length {n}")
    reduced, pivots = _rref_ints(ints, n)
    gen = BinaryMatrix.from_ints(reduced[: len(pivots)], n)
    return BinaryLinearCode(gen, _reduced=True)


def codewords(c: BinaryLinearCode, force: bool = False) -> np.ndarray:
    """All 2^k codewords as packed uint64, in generator-doubling order."""
    if c.dimension > COSET_DIM_GUARD and not force:
        raise GuardError(
            f"materializing 2^{c.dimension} codewords exceeds the exhaustive "
            f"limit 2^{COSET_DIM_GUARD}; pass force=True to override")
    words = np.zeros(1, dtype=np.uint64)
    for g in c.generator_ints():
        words = np.concatenate([words, words ^ np.uint64(g)])
    return words


def min_hamming_weight(c: BinaryLinearCode, force: bool = False) -> int:
    """Minimum weight over the 2^k - 1 nonzero codewords (cached)."""
    if c._min_weight is not None:
        return c._min_weight
    if c.dimension == 0:
        raise UsageError("the zero code has no nonzero codewords")
    if c.dimension > MIN_WEIGHT_DIM_GUARD and not force:
        raise GuardError(
            f"enumerating 2^{c.dimension} codewords exceeds the exhaustive "
            f"limit 2^{MIN_WEIGHT_DIM_GUARD}; pass force=True to override")
    gens = c.generator_ints()
    head, tail = gens[:_DOUBLING_DIM], gens[_DOUBLING_DIM:]
    base = np.zeros(1, dtype=np.uint64)
    for g in head:
        base = np.concatenate([base, base ^ np.uint64(g)])
    prefixes = [0]
    for g in tail:
        prefixes += [p ^ g for p in prefixes]
    best = c.length + 1
    for i, p in enumerate(prefixes):
        weights = np.bitwise_count(base ^ np.uint64(p))
        if i == 0:
            weights = weights[1:]  # drop the zero codeword
        if weights.size:
            best = min(best, int(weights.min()))
    c._min_weight = best
    return best


def enumerate_cosets(c: BinaryLinearCode, force: bool = False) -> tuple[np.ndarray, ...]:
    """All 2^(n-k) cosets of the code as sorted vertex-index arrays.

    Blocks are ordered by their minimum vertex index; block 0 is the code
    itself.  Each block is a translate of block 0.
    """
    n = c.length
    if n > COSET_DIM_GUARD and not force:
        raise GuardError(
            f"materializing 2^{n} vertices exceeds the exhaustive limit "
            f"2^{COSET_DIM_GUARD}; pass force=True to override")
    words = np.sort(codewords(c, force=force))
    total = 1 << n
    seen = np.zeros(total, dtype=bool)
    blocks = []
    rep = 0
    for _ in range(1 << (n - c.dimension)):
        while seen[rep]:
            rep += 1
        block = words ^ np.uint64(rep)
        block.sort()
        seen[block] = True
        blocks.append(block)
    return tuple(blocks)


def puncture_last(words: Iterable[BitVector]) -> tuple[BitVector, ...]:
    """Delete the last coordinate of every word in a block.

    The block must have pairwise distance at least 2, otherwise two words
    collide after deletion and an integrity error is raised.
    """
    items = list(words)
    if not items:
        return ()
    n = items[0].length
    if n < 2:
        raise UsageError("puncturing needs length >= 2")
    mask = (1 << (n - 1)) - 1
    out = []
    seen: set[int] = set()
    for w in items:
        if w.length != n:
            raise UsageError("length mismatch inside block")
        shortened = w.bits & mask
        if shortened in seen:
            raise IntegrityError(
                f"deleting the last coordinate collapses two words onto "
                f"{BitVector(n - 1, shortened)}")
        seen.add(shortened)
        out.append(BitVector(n - 1, shortened))
    return tuple(out)


def puncture_last_indices(block: np.ndarray, n: int) -> np.ndarray:
    """Array variant of puncture_last on vertex indices of length-n words."""
    if n < 2:
        raise UsageError("puncturing needs length >= 2")
    shortened = block & np.uint64((1 << (n - 1)) - 1)
    if np.unique(shortened).size != shortened.size:
        raise IntegrityError("deleting the last coordinate collapses two words")
    return shortened


def pairwise_min_distance(block: np.ndarray, chunk: int = 1 << 22) -> int:
    """Minimum pairwise Hamming distance inside a sorted vertex array."""
    size = block.size
    if size < 2:
        raise UsageError("need at least two words")
    best = 64
    rows_per_chunk = max(1, chunk // size)
    for start in range(0, size - 1, rows_per_chunk):
        stop = min(start + rows_per_chunk, size - 1)
        diffs = block[start:stop, None] ^ block[None, :]
        weights = np.bitwise_count(diffs)
        tri = np.triu_indices(stop - start, k=1 + start, m=size)
        if tri[0].size:
            best = min(best, int(weights[tri].min()))
    return best


# ---------------------------------------------------------------------------
# Named codes

def repetition_code(n: int) -> BinaryLinearCode:
    """[n, 1] code {all-zeros, all-ones}; minimum weight n."""
    if n < 1:
        raise UsageError("length must be positive")
    return binary_code(n, [(1 << n) - 1])


def full_space_code(n: int) -> BinaryLinearCode:
    """[n, n] code equal to the whole space; minimum weight 1."""
    if n < 1:
        raise UsageError("length must be positive")
    return binary_code(n, [1 << i for i in range(n)])


def zero_code(n: int) -> BinaryLinearCode:
    """[n, 0] code containing only the zero word."""
    if n < 1:
        raise UsageError("length must be positive")
    return binary_code(n, [])


def even_weight_code(n: int) -> BinaryLinearCode:
    """[n, n-1] code of all even-weight words; minimum weight 2."""
    if n < 2:
        raise UsageError("length must be at least 2")
    top = 1 << (n - 1)
    return binary_code(n, [(1 << i) | top for i in range(n - 1)])


def hamming_7_4() -> BinaryLinearCode:
    """[7, 4] Hamming code, minimum weight 3.

    Built as the kernel of the 3x7 check matrix whose column j is the
    binary expansion of j.
    """
    rows = []
    for bit in range(3):
        row = 0
        for j in range(1, 8):
            if j >> bit & 1:
                row |= 1 << (j - 1)
        rows.append(row)
    return kernel_basis(BinaryMatrix.from_ints(rows, 7))


GOLAY_GENERATOR_POLY = 0b110001110101  # x^11+x^10+x^6+x^5+x^4+x^2+1


def golay_23_12() -> BinaryLinearCode:
    """[23, 12] Golay code, minimum weight 7, from its generator polynomial."""
    return binary_code(23, [GOLAY_GENERATOR_POLY << i for i in range(12)])


NAMED_CODES = {
    "hamming-7-4": lambda n: hamming_7_4(),
    "golay-23-12": lambda n: golay_23_12(),
    "repetition": repetition_code,
    "even-weight": even_weight_code,
    "full-space": full_space_code,
}


def named_code(name: str, n: int | None = None) -> BinaryLinearCode:
    """Resolve one of the stock codes by name; n is required for families."""
    if name not in NAMED_CODES:
        raise UsageError(
            f"unknown code name {name!r}; choose from {sorted(NAMED_CODES)}")
    if name in ("hamming-7-4", "golay-23-12"):
        return NAMED_CODES[name](None)
    if n is None:
        raise UsageError(f"code family {name!r} needs a length")
    return NAMED_CODES[name](n)


# ---------------------------------------------------------------------------
# Code file format

_CODE_HEADER = re.compile(r"^code n=(\d+) k=(\d+)$")
_FORBIDDEN_TRAILER = re.compile(r"^forbidden d=(\d+)$")


def format_code_file(c: BinaryLinearCode, forbidden_d: int | None = None) -> str:
    """Render a code as its text file: header, k generator rows, trailer."""
    lines = [f"code n={c.length} k={c.dimension}"]
    for row in c.generator.rows:
        lines.append(str(row))
    if forbidden_d is not None:
        lines.append(f"forbidden d={forbidden_d}")
    return "\n".join(lines) + "\n"


def parse_code_file(text: str) -> tuple[BinaryLinearCode, int | None]:
    """Parse the code file format; returns (code, forbidden distance or None)."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty code file")
    header = _CODE_HEADER.match(lines[0])
    if not header:
        raise ParseError(f"bad code header: {lines[0]!r}")
    n, k = int(header.group(1)), int(header.group(2))
    if not 1 <= n <= MAX_WORD_BITS:
        raise ParseError(f"length {n} outside 1..{MAX_WORD_BITS}")
    if k > n:
        raise ParseError(f"dimension {k} exceeds length {n}")
    body = lines[1:]
    forbidden_d: int | None = None
    if body and _FORBIDDEN_TRAILER.match(body[-1]):
        forbidden_d = int(_FORBIDDEN_TRAILER.match(body[-1]).group(1))
        body = body[:-1]
    if len(body) != k:
        raise ParseError(f"expected {k} generator rows, found {len(body)}")
    rows = []
    for line in body:
        if len(line) != n or set(line) - {"0", "1"}:
            raise ParseError(f"bad generator row: {line!r}")
        rows.append(BitVector.from_string(line))
    code = binary_code(n, rows)
    if code.dimension != k:
        raise ParseError(
            f"header claims dimension {k} but rows span dimension {code.dimension}")
    return code, forbidden_d


def binomial_sum(n: int, low: int, high: int) -> int:
    """Sum of C(n, i) for low <= i <= high, clamped to 0..n."""
    return sum(comb(n, i) for i in range(max(low, 0), min(high, n) + 1))


__all__ = [
    "BitVector", "BinaryMatrix", "BinaryLinearCode",
    "binary_code", "unit_vector", "hamming_distance", "rref", "kernel_basis",
    "codewords", "min_hamming_weight", "enumerate_cosets",
    "puncture_last", "puncture_last_indices", "pairwise_min_distance",
    "repetition_code", "full_space_code", "zero_code", "even_weight_code",
    "hamming_7_4", "golay_23_12", "named_code",
    "format_code_file", "parse_code_file", "binomial_sum", "ceil_log2",
]
