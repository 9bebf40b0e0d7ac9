"""Bitmask kernel for subsets of a finite ground set {0, ..., n-1}.

Bit i of a mask is set exactly when point i belongs to the subset, which
fixes a canonical point ordering: file formats and examples are bit-exact.
All functions here are pure and safe for unrestricted concurrent use.
"""

from __future__ import annotations

import os
from typing import Iterator

from .errors import CapExceeded, MaskOutOfRange, NotASubset, PtopError

# Absolute ground-size cap. Every core algorithm is O(4^n) or worse, so
# tables above 2^20 entries stop being desk-scale; individual operations
# document tighter caps of their own.
N_MAX = 20


def max_ground_size() -> int:
    """Effective ground-size cap: N_MAX, lowered (never raised) by PTOP_MAX_N."""
    raw = os.environ.get("PTOP_MAX_N")
    if raw is None:
        return N_MAX
    try:
        value = int(raw)
    except ValueError:
        raise PtopError(f"PTOP_MAX_N must be an integer, got {raw!r}") from None
    return max(0, min(N_MAX, value))


def check_ground_size(n: int) -> None:
    if n < 0:
        raise MaskOutOfRange(f"ground size must be non-negative, got {n}")
    cap = max_ground_size()
    if n > cap:
        raise CapExceeded(f"ground size {n} exceeds cap {cap}")


def check_mask(mask: int, n: int) -> None:
    if not 0 <= mask < (1 << n):
        raise MaskOutOfRange(f"mask {mask} out of range for ground size {n}")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask`` exactly once, ending with 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def is_partition(a: int, b: int, n: int) -> bool:
    """True when ``a`` and ``b`` are disjoint and together cover the ground set.

    Either side may be empty; whoever needs non-emptiness checks it separately.
    """
    check_mask(a, n)
    check_mask(b, n)
    return (a | b) == full_mask(n) and (a & b) == 0


def compress(a: int, y: int) -> int:
    """Re-index a subset ``a`` of ``y`` onto the ground set {0, ..., |y|-1}.

    The k-th lowest set bit of ``y`` maps to bit k of the result, so the
    relative order of points is preserved; bijective from the subsets of
    ``y`` onto the masks below 2^|y|.
    """
    if a & ~y:
        raise NotASubset(f"mask {a} is not contained in {y}")
    out = 0
    k = 0
    while y:
        low = y & -y
        if a & low:
            out |= 1 << k
        y ^= low
        k += 1
    return out


def decompress(a: int, y: int) -> int:
    """Inverse of :func:`compress`: deposit bit k of ``a`` at the k-th bit of ``y``."""
    if a >> y.bit_count():
        raise MaskOutOfRange(f"mask {a} out of range for a subspace of size {y.bit_count()}")
    out = 0
    k = 0
    while y:
        low = y & -y
        if a >> k & 1:
            out |= low
        y ^= low
        k += 1
    return out
