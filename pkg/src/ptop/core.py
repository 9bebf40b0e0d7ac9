"""Probability-of-openness tables on finite ground sets.

A table assigns every subset of {0, ..., n-1} a value in [0, 1], read as
the probability that the subset is open.  A table is a valid space when
the empty and full subsets sit at 1 and the value of any union or
intersection dominates the minimum value of the parts.  On a finite
ground set the arbitrary-family axioms reduce to their two-set forms:
the two-set inequality gives the k-set inequality by induction on k, so
the O(4^n) pair scan of :func:`verify_pairwise` decides them, and
:func:`verify_exhaustive` re-checks that reduction by enumerating every
family outright.

Probabilities are binary64 values that are only ever compared, copied,
min-ed and max-ed, never combined arithmetically, so they survive every
operation bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

import numpy as np

from .errors import (
    CapExceeded,
    DuplicateMask,
    NotAPSpace,
    NotATopology,
    ProbabilityOutOfRange,
)
from .masks import check_ground_size, check_mask, full_mask

# Documented caps: the pair scan is O(4^n), the family scan O(2^(2^n)).
PAIRWISE_CAP = 13
EXHAUSTIVE_CAP = 4

# Cells per chunk when materialising pair grids; bounds peak memory.
_CHUNK_CELLS = 1 << 22


@dataclass(frozen=True)
class WeightTable:
    """A raw value-per-subset assignment; no axioms assumed.

    ``table[mask]`` is the value of the subset encoded by ``mask``.
    Instances are immutable; the in-range invariant is established by
    :func:`build` and checked by the verifiers, not by the constructor,
    so that invalid tables remain representable and testable.
    """

    n: int
    table: tuple[float, ...]

    def __post_init__(self):
        check_ground_size(self.n)
        object.__setattr__(self, "table", tuple(float(v) for v in self.table))
        if len(self.table) != 1 << self.n:
            raise ValueError(
                f"table for ground size {self.n} needs {1 << self.n} entries, "
                f"got {len(self.table)}"
            )


class PSpace(WeightTable):
    """A weight table satisfying the openness axioms.

    Constructing one directly performs no axiom check; instances coming
    out of :func:`complete`, :func:`from_topology`, :func:`as_pspace`,
    subspace construction or level-chain reconstruction are valid by
    construction (and assert so in debug runs).
    """


Kind = Literal["range", "boundary", "union", "intersection"]


@dataclass(frozen=True)
class ViolationReport:
    """One axiom violation found by the pair scan.

    ``witness_b`` is None for range and boundary reports.  ``required``
    exceeds ``actual`` in every report (for an out-of-range value above 1
    the pair is ``(value, 1.0)``; for a NaN it is ``(1.0, nan)``).
    """

    kind: Kind
    witness_a: int
    witness_b: int | None
    required: float
    actual: float


@dataclass(frozen=True)
class FamilyViolation:
    """One axiom violation found by the family scan.

    ``members`` lists the family (ascending masks); it is empty for the
    empty family, whose union must already have value 1, and a singleton
    for range reports.
    """

    kind: Literal["range", "union", "intersection"]
    members: tuple[int, ...]
    required: float
    actual: float


def build(n: int, entries: Iterable[tuple[int, float]]) -> WeightTable:
    """Build a weight table from sparse (mask, value) entries.

    Unlisted masks default to 0, except the empty and full subsets which
    default to 1.  Explicit entries override the defaults, including the
    boundary ones, so invalid boundaries can be written down and caught
    by the verifiers.
    """
    check_ground_size(n)
    size = 1 << n
    table = [0.0] * size
    table[0] = 1.0
    table[size - 1] = 1.0
    seen = set()
    for mask, value in entries:
        check_mask(mask, n)
        if mask in seen:
            raise DuplicateMask(f"mask {mask} listed twice")
        seen.add(mask)
        v = float(value)
        if not 0.0 <= v <= 1.0:
            raise ProbabilityOutOfRange(f"value {v!r} for mask {mask} not in [0, 1]")
        table[mask] = v if v != 0.0 else 0.0  # normalize -0.0
    return WeightTable(n, tuple(table))


def prob(p: WeightTable, a: int) -> float:
    """The value assigned to subset ``a``."""
    check_mask(a, p.n)
    return p.table[a]


def _range_pair(v: float) -> tuple[float, float]:
    # Encode an out-of-range value as (required, actual) with required > actual.
    if v < 0.0:
        return 0.0, v
    if v > 1.0:
        return v, 1.0
    return 1.0, v  # NaN


def verify_pairwise(w: WeightTable) -> list[ViolationReport]:
    """Scan all subset pairs for axiom violations; empty result == valid space.

    Report order is deterministic: range (ascending mask), boundary
    (empty then full), union pairs in lexicographic (A, B) order with
    A <= B, then intersection pairs likewise.  Boundary reports assert
    the at-least-1 side only; a boundary value above 1 is a range matter.
    """
    if w.n > PAIRWISE_CAP:
        raise CapExceeded(f"pair scan capped at n = {PAIRWISE_CAP}, got {w.n}")
    t = np.asarray(w.table, dtype=np.float64)
    size = t.size
    reports: list[ViolationReport] = []

    in_range = (t >= 0.0) & (t <= 1.0)
    for mask in np.nonzero(~in_range)[0]:
        required, actual = _range_pair(float(t[mask]))
        reports.append(ViolationReport("range", int(mask), None, required, actual))

    for mask in (0, size - 1) if size > 1 else (0,):
        v = float(t[mask])
        if not v >= 1.0:  # not >=, so NaN is reported too
            reports.append(ViolationReport("boundary", mask, None, 1.0, v))

    idx = np.arange(size, dtype=np.int64)
    unions: list[ViolationReport] = []
    inters: list[ViolationReport] = []
    rows = max(1, _CHUNK_CELLS // size)
    for start in range(0, size, rows):
        stop = min(size, start + rows)
        a = idx[start:stop, None]
        b = idx[None, :]
        req = np.minimum(t[start:stop, None], t[None, :])
        upper = b >= a
        for op, out in ((np.bitwise_or, unions), (np.bitwise_and, inters)):
            bad = (t[op(a, b)] < req) & upper
            for r, c in zip(*np.nonzero(bad)):
                mask_a = start + int(r)
                mask_b = int(c)
                target = op(mask_a, mask_b)
                out.append(
                    ViolationReport(
                        "union" if op is np.bitwise_or else "intersection",
                        mask_a,
                        mask_b,
                        float(req[r, c]),
                        float(t[target]),
                    )
                )
    reports.extend(unions)
    reports.extend(inters)
    return reports


def verify_exhaustive(w: WeightTable) -> list[FamilyViolation]:
    """Check the union and intersection axioms over every family of subsets.

    The empty family is included: its union is the empty set and its
    intersection the full set, with the infimum over no values taken as 1,
    so the boundary axiom falls out of it.  The result is empty exactly
    when :func:`verify_pairwise` is empty, which makes the two scans
    oracles for each other.  Report order: range (ascending mask), union
    families (ascending family bitmask), intersection families likewise.
    """
    if w.n > EXHAUSTIVE_CAP:
        raise CapExceeded(f"family scan capped at n = {EXHAUSTIVE_CAP}, got {w.n}")
    t = np.asarray(w.table, dtype=np.float64)
    size = t.size
    fam_count = 1 << size
    reports: list[FamilyViolation] = []

    in_range = (t >= 0.0) & (t <= 1.0)
    for mask in np.nonzero(~in_range)[0]:
        required, actual = _range_pair(float(t[mask]))
        reports.append(FamilyViolation("range", (int(mask),), required, actual))

    # Fold each family from the family without its lowest member: processing
    # lowest members in decreasing order makes every predecessor ready.
    unions = np.zeros(fam_count, dtype=np.int64)
    inters = np.full(fam_count, size - 1, dtype=np.int64)
    mins = np.ones(fam_count, dtype=np.float64)
    for member in range(size - 1, -1, -1):
        base = 1 << member
        prev = np.arange(0, fam_count, base << 1, dtype=np.int64)
        fams = prev + base
        unions[fams] = unions[prev] | member
        inters[fams] = inters[prev] & member
        mins[fams] = np.minimum(mins[prev], t[member])

    def _members(fam: int) -> tuple[int, ...]:
        return tuple(m for m in range(size) if fam >> m & 1)

    for kind, targets in (("union", unions), ("intersection", inters)):
        bad = t[targets] < mins
        for fam in np.nonzero(bad)[0]:
            reports.append(
                FamilyViolation(
                    kind,
                    _members(int(fam)),
                    float(mins[fam]),
                    float(t[targets[fam]]),
                )
            )
    return reports


def complete(w: WeightTable) -> PSpace:
    """The pointwise-least valid space dominating ``w``.

    Raises the boundary entries to 1, then repeatedly raises ``table[A|B]``
    and ``table[A&B]`` to ``min(table[A], table[B])`` over all pairs until a
    full pass changes nothing.  Values only move up and are always drawn
    from the input's value set plus 1, so the loop terminates at the least
    fixpoint; any fair update schedule reaches the same table.
    """
    if w.n > PAIRWISE_CAP:
        raise CapExceeded(f"completion capped at n = {PAIRWISE_CAP}, got {w.n}")
    t = np.array(w.table, dtype=np.float64)
    size = t.size
    t[0] = 1.0
    t[size - 1] = 1.0
    idx = np.arange(size, dtype=np.int64)
    rows = max(1, _CHUNK_CELLS // size)
    while True:
        before = t.copy()
        for start in range(0, size, rows):
            stop = min(size, start + rows)
            a = idx[start:stop, None]
            b = idx[None, :]
            req = np.minimum(t[start:stop, None], t[None, :])
            np.maximum.at(t, (a | b).ravel(), req.ravel())
            np.maximum.at(t, (a & b).ravel(), req.ravel())
        if np.array_equal(before, t):
            break
    return PSpace(w.n, tuple(float(v) for v in t))


def as_pspace(w: WeightTable) -> PSpace:
    """Validate ``w`` and return it as a :class:`PSpace`.

    Raises :class:`NotAPSpace` carrying the first violation otherwise.
    """
    violations = verify_pairwise(w)
    if violations:
        first = violations[0]
        raise NotAPSpace(
            f"table is not a valid space: {first.kind} violation at mask "
            f"{first.witness_a} (required {first.required}, got {first.actual}); "
            f"{len(violations)} violation(s) total",
            violation=first,
        )
    return PSpace(w.n, w.table)


def topology_defect(n: int, opens: Iterable[int]) -> tuple | None:
    """None when ``opens`` is a classical topology on n points, else a defect.

    Defects: ``("missing-empty",)``, ``("missing-full",)``, or
    ``("union", a, b)`` / ``("intersection", a, b)`` for the smallest pair
    (in lexicographic order over sorted members) whose combination escapes
    the family.  Union defects are searched before intersection defects.
    On a finite ground set pairwise closure implies closure under
    arbitrary unions, so nothing more is checked.
    """
    members = set(opens)
    for m in members:
        check_mask(m, n)
    if 0 not in members:
        return ("missing-empty",)
    if full_mask(n) not in members:
        return ("missing-full",)
    arr = np.fromiter(sorted(members), dtype=np.int64, count=len(members))
    lookup = np.zeros(1 << n, dtype=bool)
    lookup[arr] = True
    rows = max(1, _CHUNK_CELLS // arr.size)
    for op, kind in ((np.bitwise_or, "union"), (np.bitwise_and, "intersection")):
        for start in range(0, arr.size, rows):
            stop = min(arr.size, start + rows)
            bad = ~lookup[op(arr[start:stop, None], arr[None, :])]
            if bad.any():
                r, c = (int(v[0]) for v in np.nonzero(bad))
                return (kind, int(arr[start + r]), int(arr[c]))
    return None


def from_topology(n: int, opens: Iterable[int]) -> PSpace:
    """Embed a classical topology as the space with values 1 on opens, 0 off.

    Under this embedding map continuity in the probabilistic sense
    coincides with classical continuity.
    """
    check_ground_size(n)
    members = set(opens)
    defect = topology_defect(n, members)
    if defect is not None:
        raise NotATopology(f"not a topology: {' '.join(map(str, defect))}", defect)
    table = tuple(1.0 if mask in members else 0.0 for mask in range(1 << n))
    return PSpace(n, table)
