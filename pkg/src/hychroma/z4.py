"""Vectors, polynomials, and linear codes over the integers mod 4.

Vectors are packed two bits per entry (entry i at bits 2i and 2i+1) into
arbitrary-precision integers, so long construction-only vectors work even
though the Gray map image must fit a 64-bit binary word (entry count <= 32
for Gray-map operations).

The module covers Lee weight and distance, the Gray map and its inverse,
the mod-2 reduction map, Hensel lifting of binary polynomials, standard-form
reduction of generator matrices, duality, and the Kerdock/Preparata code
family built from lifted primitive trinomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .bitops import (
    lo_mask,
    np_z4_add,
    np_z4_lee,
    popcount,
    z4_add,
    z4_gray,
    z4_gray_inverse,
    z4_lee_weight,
    z4_neg,
    z4_scale,
)
from .errors import (
    ConstructionError,
    GuardError,
    IntegrityError,
    ParseError,
    UsageError,
)
from .gf2 import BitVector

MAX_Z4_LENGTH = 256
MAX_GRAY_LENGTH = 32
LEE_ENUM_GUARD = 24  # guard on 2*k1 + k2 for codeword enumeration
_NUMPY_LENGTH = 32   # lengths packable into uint64 use vectorized paths


@dataclass(frozen=True)
class Z4Vector:
    """A fixed-length vector over {0,1,2,3}, packed two bits per entry."""

    length: int
    packed: int

    def __post_init__(self) -> None:
        if not 1 <= self.length <= MAX_Z4_LENGTH:
            raise UsageError(f"vector length {self.length} outside 1..{MAX_Z4_LENGTH}")
        if self.packed < 0 or self.packed >> (2 * self.length):
            raise UsageError("packed value outside the declared length")

    @classmethod
    def from_entries(cls, entries: Sequence[int]) -> "Z4Vector":
        packed = 0
        for i, e in enumerate(entries):
            packed |= (int(e) % 4) << (2 * i)
        return cls(len(entries), packed)

    @classmethod
    def from_string(cls, text: str) -> "Z4Vector":
        if not text or set(text) - set("0123"):
            raise UsageError(f"not a mod-4 digit string: {text!r}")
        return cls.from_entries([int(ch) for ch in text])

    def entries(self) -> tuple[int, ...]:
        return tuple(self.packed >> (2 * i) & 3 for i in range(self.length))

    def __str__(self) -> str:
        return "".join(str(e) for e in self.entries())

    def _lo(self) -> int:
        return lo_mask(self.length)

    def __add__(self, other: "Z4Vector") -> "Z4Vector":
        if self.length != other.length:
            raise UsageError("length mismatch")
        return Z4Vector(self.length, z4_add(self.packed, other.packed, self._lo()))

    def __neg__(self) -> "Z4Vector":
        return Z4Vector(self.length, z4_neg(self.packed, self._lo()))

    def __sub__(self, other: "Z4Vector") -> "Z4Vector":
        return self + (-other)

    def scale(self, s: int) -> "Z4Vector":
        return Z4Vector(self.length, z4_scale(self.packed, s, self._lo()))


def z4_from_bits(v: BitVector) -> Z4Vector:
    """Embed a binary word entrywise as a 0/1 vector mod 4."""
    return Z4Vector.from_entries([v.bits >> i & 1 for i in range(v.length)])


def lee_weight(x: Z4Vector) -> int:
    """Sum of entry weights 0, 1, 2, 1 for entries 0, 1, 2, 3."""
    return z4_lee_weight(x.packed, x._lo())


def lee_distance(x: Z4Vector, y: Z4Vector) -> int:
    """Lee weight of the entrywise difference mod 4."""
    if x.length != y.length:
        raise UsageError("length mismatch")
    return lee_weight(x - y)


def gray_map(x: Z4Vector) -> BitVector:
    """Entrywise 0->00, 1->01, 2->11, 3->10, concatenated in entry order.

    An isometry from the Lee metric to the Hamming metric on words of
    twice the length.
    """
    if x.length > MAX_GRAY_LENGTH:
        raise UsageError(f"Gray map limited to length {MAX_GRAY_LENGTH}")
    return BitVector(2 * x.length, z4_gray(x.packed, x._lo()))


def gray_inverse(v: BitVector) -> Z4Vector:
    """Inverse of gray_map on binary words of even length."""
    if v.length % 2:
        raise UsageError("Gray inverse needs an even-length word")
    n = v.length // 2
    return Z4Vector(n, z4_gray_inverse(v.bits, lo_mask(n)))


def alpha_map(x: Z4Vector) -> BitVector:
    """Entrywise reduction mod 2 (0,2 -> 0 and 1,3 -> 1)."""
    if x.length > 64:
        raise UsageError("mod-2 reduction to a 64-bit word needs length <= 64")
    bits = 0
    for i in range(x.length):
        bits |= (x.packed >> (2 * i) & 1) << i
    return BitVector(x.length, bits)


def z4_inner_product(a: Z4Vector, b: Z4Vector) -> int:
    """Entrywise dot product mod 4."""
    if a.length != b.length:
        raise UsageError("length mismatch")
    return _inner_packed(a.packed, b.packed, a._lo())


def _inner_packed(a: int, b: int, lo: int) -> int:
    alo, ahi = a & lo, (a >> 1) & lo
    blo, bhi = b & lo, (b >> 1) & lo
    return (popcount(alo & blo)
            + 2 * popcount(alo & bhi)
            + 2 * popcount(ahi & blo)) % 4


# ---------------------------------------------------------------------------
# Polynomials over the integers mod 4

@dataclass(frozen=True)
class Z4Polynomial:
    """Coefficients over {0,1,2,3}, lowest degree first, normalized."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(c) % 4 for c in self.coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @classmethod
    def from_binary_mask(cls, mask: int) -> "Z4Polynomial":
        return cls(tuple(mask >> i & 1 for i in range(mask.bit_length())))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coefficients[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xi = "x" if i == 1 else f"x^{i}"
                parts.append(xi if c == 1 else f"{c}{xi}")
        return " + ".join(parts)


def poly_mul(a: Z4Polynomial, b: Z4Polynomial) -> Z4Polynomial:
    if a.is_zero() or b.is_zero():
        return Z4Polynomial(())
    out = [0] * (a.degree + b.degree + 1)
    for i, ca in enumerate(a.coefficients):
        if not ca:
            continue
        for j, cb in enumerate(b.coefficients):
            out[i + j] = (out[i + j] + ca * cb) % 4
    return Z4Polynomial(tuple(out))


def poly_divmod(a: Z4Polynomial, b: Z4Polynomial) -> tuple[Z4Polynomial, Z4Polynomial]:
    """Long division; the divisor's leading coefficient must be a unit."""
    if b.is_zero():
        raise UsageError("division by the zero polynomial")
    lead = b.coefficients[-1]
    if lead not in (1, 3):
        raise UsageError("divisor must have a unit leading coefficient")
    inv_lead = lead  # 1 and 3 are self-inverse mod 4
    rem = list(a.coefficients)
    quot = [0] * max(0, a.degree - b.degree + 1)
    for shift in range(a.degree - b.degree, -1, -1):
        top = rem[shift + b.degree] if shift + b.degree < len(rem) else 0
        if not top:
            continue
        factor = (top * inv_lead) % 4
        quot[shift] = factor
        for j, cb in enumerate(b.coefficients):
            rem[shift + j] = (rem[shift + j] - factor * cb) % 4
    return Z4Polynomial(tuple(quot)), Z4Polynomial(tuple(rem))


def poly_substitute_negative(a: Z4Polynomial) -> Z4Polynomial:
    """a(-x): negate the odd-degree coefficients."""
    return Z4Polynomial(tuple((-c if i % 2 else c) % 4
                              for i, c in enumerate(a.coefficients)))


def _binary_gcd(a: int, b: int) -> int:
    """gcd of binary polynomials given as bit masks."""
    while b:
        while a.bit_length() >= b.bit_length() and a:
            a ^= b << (a.bit_length() - b.bit_length())
        a, b = b, a
    return a


def hensel_lift(f: Z4Polynomial) -> Z4Polynomial:
    """Lift a square-free binary polynomial to a mod-4 factor of x^m - 1.

    Only f mod 2 matters.  The lift h satisfies h = f (mod 2) and is
    computed in one quadratic step: h(x^2) equals f(x) * f(-x) up to the
    sign (-1)^deg(f).
    """
    if f.is_zero():
        raise UsageError("cannot lift the zero polynomial")
    fbits = 0
    for i, c in enumerate(f.coefficients):
        fbits |= (c & 1) << i
    if fbits == 0:
        raise ConstructionError("polynomial vanishes mod 2")
    deriv = (fbits >> 1) & lo_mask(max(1, fbits.bit_length()))
    if _binary_gcd(fbits, deriv) != 1:
        raise ConstructionError("polynomial is not square-free mod 2")
    fbin = Z4Polynomial.from_binary_mask(fbits)
    product = poly_mul(fbin, poly_substitute_negative(fbin))
    if fbin.degree % 2:
        product = Z4Polynomial(tuple((-c) % 4 for c in product.coefficients))
    coeffs = list(product.coefficients) + [0]
    if any(coeffs[1::2]):
        raise IntegrityError("lift produced nonzero odd-degree coefficients")
    h = Z4Polynomial(tuple(coeffs[0::2]))
    if h.degree != fbin.degree:
        raise IntegrityError("lift changed the degree")
    for i in range(h.degree + 1):
        if (h.coefficients[i] - fbin.coefficients[i]) % 2:
            raise IntegrityError("lift disagrees with the input mod 2")
    return h


# ---------------------------------------------------------------------------
# Linear codes over the integers mod 4

class Z4LinearCode:
    """An additive code of type 4^k1 2^k2 in standard form.

    Attributes:
        length: entry count n.
        k1, k2: counts of order-4 and order-2 generators.
        generators: reduced basis rows in the original coordinate order,
            packed; the first k1 have order 4, the remaining k2 order 2.
        block_a, block_b, block_c: the standard-form blocks, as row tuples
            of entry tuples (A and C over {0,1}, B over {0,1,2,3}).
        permutation: permutation[t] = original column index occupying
            standard-form position t.
    """

    def __init__(self, length, k1, k2, generators, block_a, block_b, block_c,
                 permutation, _internal=False):
        if not _internal:
            raise UsageError("use z4_code() to build codes from raw rows")
        self.length = length
        self.k1 = k1
        self.k2 = k2
        self.generators = tuple(generators)
        self.block_a = block_a
        self.block_b = block_b
        self.block_c = block_c
        self.permutation = tuple(permutation)
        self._min_lee: int | None = None

    def __repr__(self) -> str:
        return f"Z4LinearCode(n={self.length}, type=4^{self.k1} 2^{self.k2})"

    def size(self) -> int:
        return 4 ** self.k1 * 2 ** self.k2

    def generator_vectors(self) -> tuple[Z4Vector, ...]:
        return tuple(Z4Vector(self.length, g) for g in self.generators)


def _eliminate(rows: list[list[int]], n: int):
    """In-place reduction to [[I A B], [0 2I 2C]]; returns (k1, k2, perm)."""
    perm = list(range(n))
    work = [r for r in rows if any(v % 4 for v in r)]
    pos = 0

    def swap_columns(t: int) -> None:
        if t != pos:
            for r in work:
                r[t], r[pos] = r[pos], r[t]
            perm[t], perm[pos] = perm[pos], perm[t]

    def find_pivot(values: tuple[int, ...]) -> tuple[int, int] | None:
        for t in range(pos, n):
            for i in range(pos, len(work)):
                if work[i][t] in values:
                    return i, t
        return None

    k1 = 0
    while True:
        hit = find_pivot((1, 3))
        if hit is None:
            break
        i, t = hit
        work[pos], work[i] = work[i], work[pos]
        swap_columns(t)
        if work[pos][pos] == 3:
            work[pos] = [(3 * v) % 4 for v in work[pos]]
        for j in range(len(work)):
            if j != pos and work[j][pos]:
                factor = work[j][pos]
                work[j] = [(work[j][c] - factor * work[pos][c]) % 4
                           for c in range(n)]
        pos += 1
        k1 += 1

    k2 = 0
    while True:
        hit = find_pivot((2,))
        if hit is None:
            break
        i, t = hit
        work[pos], work[i] = work[i], work[pos]
        swap_columns(t)
        for j in range(len(work)):
            if j != pos and work[j][pos] in (2, 3):
                work[j] = [(work[j][c] - work[pos][c]) % 4 for c in range(n)]
        pos += 1
        k2 += 1

    for r in work[pos:]:
        if any(v % 4 for v in r):
            raise IntegrityError("reduction left an unprocessed nonzero row")
    del rows[:]
    rows.extend(work[:pos])
    return k1, k2, perm


def z4_code(n: int, rows: Iterable[Z4Vector | Sequence[int] | int]) -> Z4LinearCode:
    """Build the mod-4 code generated by the given rows.

    Rows may be Z4Vector values, entry sequences, or packed integers.
    Redundant rows are allowed; the stored basis is the reduced one.
    """
    if not 1 <= n <= MAX_Z4_LENGTH:
        raise UsageError(f"length {n} outside 1..{MAX_Z4_LENGTH}")
    entry_rows: list[list[int]] = []
    for row in rows:
        if isinstance(row, Z4Vector):
            if row.length != n:
                raise UsageError("row length mismatch")
            entry_rows.append(list(row.entries()))
        elif isinstance(row, int):
            entry_rows.append(list(Z4Vector(n, row).entries()))
        else:
            if len(row) != n:
                raise UsageError("row length mismatch")
            entry_rows.append([int(v) % 4 for v in row])
    k1, k2, perm = _eliminate(entry_rows, n)
    block_a = tuple(tuple(entry_rows[i][k1:k1 + k2]) for i in range(k1))
    block_b = tuple(tuple(entry_rows[i][k1 + k2:]) for i in range(k1))
    block_c = tuple(tuple(v // 2 for v in entry_rows[i][k1 + k2:])
                    for i in range(k1, k1 + k2))
    for row in block_a:
        if any(v not in (0, 1) for v in row):
            raise IntegrityError("order-4/order-2 mixing block left non-binary entries")
    for row in block_c:
        if any(v not in (0, 1) for v in row):
            raise IntegrityError("order-2 tail block left non-binary entries")
    generators = []
    for std_row in entry_rows:
        packed = 0
        for t, v in enumerate(std_row):
            packed |= v << (2 * perm[t])
        generators.append(packed)
    return Z4LinearCode(n, k1, k2, generators, block_a, block_b, block_c,
                        perm, _internal=True)


def z4_codewords(c: Z4LinearCode, force: bool = False):
    """All 4^k1 2^k2 codewords, packed.

    Returns a numpy uint64 array for lengths up to 32, else a Python list.
    The zero word always comes first.
    """
    cost = 2 * c.k1 + c.k2
    if cost > LEE_ENUM_GUARD and not force:
        raise GuardError(
            f"enumerating 2^{cost} codewords exceeds the exhaustive limit "
            f"2^{LEE_ENUM_GUARD}; pass force=True to override")
    lo = lo_mask(c.length)
    unit_rows = c.generators[:c.k1]
    two_rows = c.generators[c.k1:]
    if c.length <= _NUMPY_LENGTH:
        words = np.zeros(1, dtype=np.uint64)
        lo64 = np.uint64(lo)
        for g in unit_rows:
            parts = [words]
            for s in (1, 2, 3):
                parts.append(np_z4_add(words, np.uint64(z4_scale(g, s, lo)), lo64))
            words = np.concatenate(parts)
        for g in two_rows:
            words = np.concatenate([words, np_z4_add(words, np.uint64(g), lo64)])
        return words
    words_list = [0]
    for g in unit_rows:
        multiples = [z4_scale(g, s, lo) for s in (1, 2, 3)]
        words_list = words_list + [z4_add(w, m, lo)
                                   for m in multiples for w in words_list]
    for g in two_rows:
        words_list = words_list + [z4_add(w, g, lo) for w in words_list]
    return words_list


def min_lee_weight(c: Z4LinearCode, force: bool = False) -> int:
    """Minimum Lee weight over nonzero codewords (cached)."""
    if c._min_lee is not None:
        return c._min_lee
    if c.k1 == 0 and c.k2 == 0:
        raise UsageError("the zero code has no nonzero codewords")
    words = z4_codewords(c, force=force)
    lo = lo_mask(c.length)
    if isinstance(words, np.ndarray):
        weights = np_z4_lee(words, lo)
        best = int(weights[1:].min())
    else:
        best = min(z4_lee_weight(w, lo) for w in words[1:])
    c._min_lee = best
    return best


def z4_dual(c: Z4LinearCode) -> Z4LinearCode:
    """The dual code under the entrywise mod-4 inner product.

    Built from the standard-form blocks, then re-verified: every pair of
    generators across the two codes must have inner product 0 mod 4, and
    the sizes must multiply to 4^n.
    """
    n, k1, k2 = c.length, c.k1, c.k2
    free = n - k1 - k2
    a, b, cc = c.block_a, c.block_b, c.block_c
    dual_rows_std: list[list[int]] = []
    for i in range(free):
        row = [0] * n
        for j in range(k1):
            acc = b[j][i]
            for l in range(k2):
                acc += cc[l][i] * a[j][l]
            row[j] = (-acc) % 4
        for l in range(k2):
            row[k1 + l] = cc[l][i]
        row[k1 + k2 + i] = 1
        dual_rows_std.append(row)
    for l in range(k2):
        row = [0] * n
        for j in range(k1):
            row[j] = (2 * a[j][l]) % 4
        row[k1 + l] = 2
        dual_rows_std.append(row)
    dual_rows = []
    for std_row in dual_rows_std:
        orig = [0] * n
        for t, v in enumerate(std_row):
            orig[c.permutation[t]] = v
        dual_rows.append(orig)
    dual = z4_code(n, dual_rows)
    if dual.k1 != free or dual.k2 != k2:
        raise IntegrityError(
            f"dual reduced to type 4^{dual.k1} 2^{dual.k2}, "
            f"expected 4^{free} 2^{k2}")
    lo = lo_mask(n)
    for g in c.generators:
        for h in dual.generators:
            if _inner_packed(g, h, lo):
                raise IntegrityError("dual generator fails the orthogonality check")
    return dual


# ---------------------------------------------------------------------------
# The Kerdock/Preparata family

PRIMITIVE_POLY_MASKS = {
    3: 0b1011,       # x^3 + x + 1
    5: 0b100101,     # x^5 + x^2 + 1
    7: 0b10000011,   # x^7 + x + 1
}


def kerdock_code(r: int) -> Z4LinearCode:
    """Length-2^r code of type 4^(r+1) from the lifted primitive trinomial.

    The cyclic part has parity-check polynomial hensel_lift of the degree-r
    primitive binary polynomial; each cyclic generator row is extended by an
    overall parity entry (the negated row sum), and the all-ones row is
    appended.  Requires odd r covered by the builtin table.
    """
    if r % 2 == 0 or r < 3:
        raise UsageError("r must be an odd integer >= 3")
    if r not in PRIMITIVE_POLY_MASKS:
        raise UsageError(
            f"no builtin primitive polynomial for r={r}; "
            f"supported: {sorted(PRIMITIVE_POLY_MASKS)}")
    h = hensel_lift(Z4Polynomial.from_binary_mask(PRIMITIVE_POLY_MASKS[r]))
    m = (1 << r) - 1
    xm1 = Z4Polynomial((3,) + (0,) * (m - 1) + (1,))
    g, rem = poly_divmod(xm1, h)
    if not rem.is_zero():
        raise IntegrityError("lifted polynomial does not divide x^m - 1")
    rows = []
    for shift in range(r):
        entries = [0] * m
        for i, coeff in enumerate(g.coefficients):
            entries[i + shift] = coeff
        entries.append((-sum(entries)) % 4)
        rows.append(entries)
    rows.append([1] * (m + 1))
    code = z4_code(m + 1, rows)
    if code.k1 != r + 1 or code.k2 != 0:
        raise IntegrityError(
            f"construction reduced to type 4^{code.k1} 2^{code.k2}, "
            f"expected 4^{r + 1}")
    return code


def preparata_code(r: int) -> Z4LinearCode:
    """The dual of kerdock_code(r): type 4^(2^r - r - 1), length 2^r."""
    dual = z4_dual(kerdock_code(r))
    expected = (1 << r) - r - 1
    if dual.k1 != expected or dual.k2 != 0:
        raise IntegrityError(
            f"dual has type 4^{dual.k1} 2^{dual.k2}, expected 4^{expected}")
    return dual


def octacode() -> Z4LinearCode:
    """The self-dual length-8 code; both ends of the r=3 duality."""
    return kerdock_code(3)


# ---------------------------------------------------------------------------
# Z4-code file format

_Z4_HEADER = re.compile(r"^z4code n=(\d+) k1=(\d+) k2=(\d+)$")


def format_z4_code_file(c: Z4LinearCode) -> str:
    """Render as text: header, then k1+k2 generator rows of mod-4 digits."""
    lines = [f"z4code n={c.length} k1={c.k1} k2={c.k2}"]
    for g in c.generator_vectors():
        lines.append(str(g))
    return "\n".join(lines) + "\n"


def parse_z4_code_file(text: str) -> Z4LinearCode:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty z4 code file")
    header = _Z4_HEADER.match(lines[0])
    if not header:
        raise ParseError(f"bad z4 code header: {lines[0]!r}")
    n, k1, k2 = (int(header.group(i)) for i in (1, 2, 3))
    if not 1 <= n <= MAX_Z4_LENGTH:
        raise ParseError(f"length {n} outside 1..{MAX_Z4_LENGTH}")
    body = lines[1:]
    if len(body) != k1 + k2:
        raise ParseError(f"expected {k1 + k2} generator rows, found {len(body)}")
    rows = []
    for line in body:
        if len(line) != n or set(line) - set("0123"):
            raise ParseError(f"bad generator row: {line!r}")
        rows.append(Z4Vector.from_string(line))
    code = z4_code(n, rows)
    if code.k1 != k1 or code.k2 != k2:
        raise ParseError(
            f"header claims type 4^{k1} 2^{k2} but rows span "
            f"type 4^{code.k1} 2^{code.k2}")
    return code


__all__ = [
    "Z4Vector", "Z4Polynomial", "Z4LinearCode",
    "z4_from_bits", "lee_weight", "lee_distance",
    "gray_map", "gray_inverse", "alpha_map", "z4_inner_product",
    "poly_mul", "poly_divmod", "poly_substitute_negative", "hensel_lift",
    "z4_code", "z4_codewords", "min_lee_weight", "z4_dual",
    "kerdock_code", "preparata_code", "octacode",
    "format_z4_code_file", "parse_z4_code_file",
    "MAX_GRAY_LENGTH",
]
