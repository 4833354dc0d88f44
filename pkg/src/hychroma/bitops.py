"""Low-level bit manipulation shared by the binary and quaternary modules.

Binary words are plain Python integers read LSB-first: coordinate i of a
length-n word sits at bit position i-1, so the vertex index of a hypercube
vertex is simply the integer value of its word.

Quaternary (mod-4) vectors are packed two bits per entry: entry i occupies
bit 2i (low half) and bit 2i+1 (high half).  All packed helpers work on
arbitrary-precision Python integers, so vector length is not limited by a
machine word.  numpy variants for 64-bit-packable lengths live next to the
scalar ones and are used by the enumeration-heavy call sites.
"""

from __future__ import annotations

import os

import numpy as np


def popcount(x: int) -> int:
    return x.bit_count()


def ceil_log2(x: int) -> int:
    """Smallest t with 2**t >= x, for x >= 1.  Exact integer arithmetic."""
    if x < 1:
        raise ValueError("ceil_log2 requires a positive argument")
    return (x - 1).bit_length()


def lo_mask(n: int) -> int:
    """Mask selecting the low bit of each of n packed mod-4 entries."""
    return ((1 << (2 * n)) - 1) // 3


def z4_add(a: int, b: int, lo: int) -> int:
    """Entrywise sum mod 4 of two packed vectors (lo = lo_mask(n))."""
    return a ^ b ^ ((a & b & lo) << 1)


def z4_neg(a: int, lo: int) -> int:
    """Entrywise negation mod 4 of a packed vector."""
    return a ^ ((a & lo) << 1)


def z4_scale(a: int, s: int, lo: int) -> int:
    """Entrywise multiple s*a mod 4 for a scalar s in 0..3."""
    s %= 4
    if s == 0:
        return 0
    if s == 1:
        return a
    if s == 2:
        return (a & lo) << 1
    return z4_neg(a, lo)


def z4_lee_weight(a: int, lo: int) -> int:
    """Total Lee weight (entry weights 0,1,2,1 for 0,1,2,3) of a packed vector."""
    hi = (a >> 1) & lo
    low = a & lo
    return hi.bit_count() + (hi ^ low).bit_count()


def z4_gray(a: int, lo: int) -> int:
    """Packed vector -> binary word of twice the length.

    Entry map 0->00, 1->01, 2->11, 3->10, first image bit at the lower
    position; the images concatenate in entry order.
    """
    hi = (a >> 1) & lo
    low = a & lo
    return hi | ((hi ^ low) << 1)


def z4_gray_inverse(v: int, lo: int) -> int:
    """Inverse of z4_gray on a binary word of even length."""
    return ((v & lo) << 1) | ((v ^ (v >> 1)) & lo)


def np_z4_add(a: np.ndarray, b, lo: int) -> np.ndarray:
    return a ^ b ^ ((a & b & lo) << np.uint64(1))


def np_z4_lee(a: np.ndarray, lo: int) -> np.ndarray:
    one = np.uint64(1)
    hi = (a >> one) & np.uint64(lo)
    low = a & np.uint64(lo)
    return np.bitwise_count(hi) + np.bitwise_count(hi ^ low)


def np_z4_gray(a: np.ndarray, lo: int) -> np.ndarray:
    one = np.uint64(1)
    hi = (a >> one) & np.uint64(lo)
    low = a & np.uint64(lo)
    return hi | ((hi ^ low) << one)


def worker_count() -> int:
    """Worker cap for parallelizable scans, from HYCHROMA_THREADS.

    Defaults to 1 (sequential); values below 1 are clamped to 1.
    """
    raw = os.environ.get("HYCHROMA_THREADS", "")
    try:
        count = int(raw)
    except ValueError:
        return 1
    return max(1, count)
