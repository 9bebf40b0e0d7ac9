"""Covers, compactness and connectedness at a probability threshold.

A q-cover is a family of subsets covering the ground set, every member of
which has value at least q.  Compactness at q is trivially true on a
finite ground set (any cover is already finite), so the interesting
computational companion is exact minimal subcover extraction.  A space is
q-connected when no two-block partition of the ground set has both blocks
nonempty with value at least q; the connectivity threshold is the largest
q at which such a partition exists, so the space is q-connected exactly
for q strictly above it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import PSpace
from .errors import DimensionMismatch, DuplicateMask, NotACover
from .masks import check_ground_size, check_mask, full_mask


@dataclass(frozen=True)
class Cover:
    """A duplicate-free list of subset masks used as a candidate cover."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        check_ground_size(self.n)
        object.__setattr__(self, "members", tuple(int(m) for m in self.members))
        seen = set()
        for m in self.members:
            check_mask(m, self.n)
            if m in seen:
                raise DuplicateMask(f"cover member {m} listed twice")
            seen.add(m)

    def union(self) -> int:
        out = 0
        for m in self.members:
            out |= m
        return out


@dataclass(frozen=True)
class CoverDefect:
    """Why a family is not a q-cover.

    ``uncovered-point`` carries the lowest point missed by the union;
    ``low-probability`` carries the smallest member mask below threshold.
    """

    kind: Literal["uncovered-point", "low-probability"]
    point: int | None = None
    mask: int | None = None


def qcover_witness(p: PSpace, cover: Cover, q: float) -> CoverDefect | None:
    """None when ``cover`` is a q-cover of ``p``'s ground set, else the defect.

    Coverage is checked before member values, so an uncovered point wins
    when both conditions fail.
    """
    if cover.n != p.n:
        raise DimensionMismatch(
            f"cover on {cover.n} points used with a space on {p.n} points"
        )
    missed = full_mask(p.n) & ~cover.union()
    if missed:
        return CoverDefect("uncovered-point", point=(missed & -missed).bit_length() - 1)
    for m in sorted(cover.members):
        if p.table[m] < q:
            return CoverDefect("low-probability", mask=m)
    return None


def is_qcover(p: PSpace, cover: Cover, q: float) -> bool:
    return qcover_witness(p, cover, q) is None


@dataclass(frozen=True)
class CompactnessVerdict:
    compact: bool
    rationale: str

    def __bool__(self) -> bool:
        return self.compact


def is_qcompact(p: PSpace, q: float) -> CompactnessVerdict:
    """Always compact: a cover of a finite ground set is its own finite subcover.

    The operation exists for API completeness; the verdict carries the
    machine-readable rationale code ``finite-trivial``.
    """
    del p, q
    return CompactnessVerdict(True, "finite-trivial")


def min_subcover(cover: Cover) -> Cover:
    """A minimum-cardinality sub-list of members whose union is the full set.

    Exact branch and bound over member indices in ascending order; among
    covers of minimum size the one with the lexicographically smallest
    sorted index tuple wins.  Practical up to a couple dozen members.
    Raises :class:`NotACover` when the members do not cover.
    """
    full = full_mask(cover.n)
    members = cover.members
    if cover.union() != full:
        missed = full & ~cover.union()
        raise NotACover(f"members do not cover point {(missed & -missed).bit_length() - 1}")
    m = len(members)
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | members[i]
    widest = max((mask.bit_count() for mask in members), default=1) or 1
    best: tuple[int, ...] | None = None

    def search(i: int, chosen: list[int], covered: int) -> None:
        nonlocal best
        if covered == full:
            if best is None or len(chosen) < len(best):
                best = tuple(chosen)
            return
        if i == m or covered | suffix[i] != full:
            return
        need = -((full & ~covered).bit_count() // -widest)  # ceil division
        if best is not None and len(chosen) + need >= len(best):
            return
        if covered | members[i] != covered:  # a useless member is never optimal
            chosen.append(i)
            search(i + 1, chosen, covered | members[i])
            chosen.pop()
        search(i + 1, chosen, covered)

    search(0, [], 0)
    assert best is not None
    return Cover(cover.n, tuple(members[i] for i in best))


def disconnection_witness(p: PSpace, q: float) -> tuple[int, int] | None:
    """A two-block partition with both blocks nonempty at value >= q, or None.

    The returned witness is the smallest qualifying mask containing point 0,
    paired with its complement.  Scans 2^(n-1) partitions.
    """
    if p.n <= 1:
        return None
    full = full_mask(p.n)
    table = p.table
    for a in range(1, full, 2):
        if table[a] >= q and table[full ^ a] >= q:
            return a, full ^ a
    return None


def is_qconnected(p: PSpace, q: float) -> bool:
    """True when no partition into two nonempty blocks has both values >= q."""
    return disconnection_witness(p, q) is None


def connectivity_threshold(p: PSpace) -> float:
    """Largest q admitting a disconnecting partition; -inf when none exists.

    The space is q-connected exactly for q strictly above the returned
    value; at the threshold itself the maximizing partition still
    disconnects.  Ground sets with at most one point have no partitions
    and give -inf (connected at every q).
    """
    if p.n <= 1:
        return float("-inf")
    full = full_mask(p.n)
    t = np.asarray(p.table, dtype=np.float64)
    a = np.arange(1, full, 2, dtype=np.int64)
    return float(np.minimum(t[a], t[full ^ a]).max())
