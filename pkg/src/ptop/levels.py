"""Level-cut structure of a space.

For any threshold q the cut {A : p(A) >= q} is a classical topology: the
union and intersection inequalities keep every cut closed, and the
boundary axiom puts the empty and full subsets in every cut.  A space is
therefore the same data as a shrinking chain of topologies indexed by its
distinct values, and :func:`decompose` / :func:`reconstruct` convert
between the two forms bit-exactly.

Two threshold conventions coexist on purpose and are named apart:
:func:`level_cut` collects subsets with value at least q (the cut that
yields topologies and matches the cover notion), while :func:`q_open`
answers the literal at-most-q openness predicate, under which a set only
becomes more open as q grows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import PAIRWISE_CAP, PSpace, prob, topology_defect, verify_pairwise
from .errors import (
    ChainNotNested,
    MissingBase,
    NotATopology,
    ProbabilityOutOfRange,
)
from .masks import check_ground_size, check_mask


@dataclass(frozen=True)
class LevelChain:
    """Strictly increasing levels paired with a shrinking chain of topologies.

    ``levels[-1]`` is always 1.  ``base`` is the value for subsets in no
    listed topology; it is None exactly when the first topology is the
    whole powerset, and otherwise satisfies 0 <= base < levels[0].
    """

    n: int
    levels: tuple[float, ...]
    topologies: tuple[frozenset[int], ...]
    base: float | None

    def validate(self) -> None:
        check_ground_size(self.n)
        if not self.levels:
            raise ValueError("a level chain needs at least one level")
        if len(self.levels) != len(self.topologies):
            raise ValueError("levels and topologies differ in length")
        last = None
        for q in self.levels:
            if not 0.0 <= q <= 1.0:
                raise ProbabilityOutOfRange(f"level {q!r} not in [0, 1]")
            if last is not None and not q > last:
                raise ValueError("levels must be strictly increasing")
            last = q
        if self.levels[-1] != 1.0:
            raise ValueError("the last level must be 1")
        for topo in self.topologies:
            defect = topology_defect(self.n, topo)
            if defect is not None:
                raise NotATopology(
                    f"chain member is not a topology: {' '.join(map(str, defect))}",
                    defect,
                )
        for higher, lower in zip(self.topologies, self.topologies[1:]):
            if not lower <= higher:
                raise ChainNotNested("each topology must contain the next one")
        if self.base is not None and not 0.0 <= self.base < self.levels[0]:
            raise ProbabilityOutOfRange(
                f"base {self.base!r} must lie in [0, {self.levels[0]!r})"
            )


def level_cut(p: PSpace, q: float) -> frozenset[int]:
    """The subsets whose value is at least q; always a classical topology."""
    if not 0.0 <= q <= 1.0:
        raise ProbabilityOutOfRange(f"threshold {q!r} not in [0, 1]")
    cut = frozenset(mask for mask, v in enumerate(p.table) if v >= q)
    assert topology_defect(p.n, cut) is None, "cut of a valid space must be a topology"
    return cut


def q_open(p: PSpace, a: int, q: float) -> bool:
    """The at-most convention: subset ``a`` is q-open when its value is <= q."""
    check_mask(a, p.n)
    if not 0.0 <= q <= 1.0:
        raise ProbabilityOutOfRange(f"threshold {q!r} not in [0, 1]")
    return prob(p, a) <= q


def decompose(p: PSpace) -> LevelChain:
    """Split a space into its chain of level cuts at the distinct values.

    Every distinct nonzero value becomes a level (even when adjacent cuts
    coincide as sets); the value 0, when present, becomes the base, since
    it marks exactly the subsets in no cut other than the trivial one.
    Round trip is exact: ``reconstruct(decompose(p))`` equals ``p``.
    """
    values = sorted(set(p.table))
    levels = tuple(v for v in values if v != 0.0)
    topologies = tuple(level_cut(p, q) for q in levels)
    base = 0.0 if values and values[0] == 0.0 else None
    return LevelChain(p.n, levels, topologies, base)


def reconstruct(chain: LevelChain) -> PSpace:
    """Rebuild the space whose value at A is the highest level whose cut holds A.

    Subsets in no listed topology receive the base value; if any exist and
    the base is absent, :class:`MissingBase` is raised.  The result always
    passes the pairwise verifier: nesting plus per-level closure gives the
    pair inequalities, and the last level being 1 gives the boundary axiom.
    """
    chain.validate()
    size = 1 << chain.n
    table: list[float | None] = [chain.base] * size
    for q, topo in zip(chain.levels, chain.topologies):
        for mask in topo:
            check_mask(mask, chain.n)
            table[mask] = q
    if any(v is None for v in table):
        uncovered = next(m for m, v in enumerate(table) if v is None)
        raise MissingBase(f"subset {uncovered} is in no topology and no base is set")
    result = PSpace(chain.n, tuple(table))  # type: ignore[arg-type]
    assert chain.n > PAIRWISE_CAP or not verify_pairwise(result)
    return result
