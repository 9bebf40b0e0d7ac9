"""Subspaces and maps between spaces.

The trace value of a subset A of Y is the best value among all subsets of
the ambient set that cut down to A; on finite ground sets that supremum
is attained, so it is computed as a maximum.  Equipping Y with its trace
gives a space again, the inclusion of Y is always continuous for it, and
continuity composes; all three facts are asserted here in debug runs and
machine-checked in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import PAIRWISE_CAP, PSpace, verify_pairwise
from .errors import (
    CapExceeded,
    DimensionMismatch,
    NotASubset,
    PointOutOfRange,
)
from .masks import bits, check_ground_size, check_mask, compress, full_mask, submasks


@dataclass(frozen=True)
class PointMap:
    """A total function between finite ground sets; ``image[x]`` is f(x)."""

    domain_n: int
    codomain_n: int
    image: tuple[int, ...]

    def __post_init__(self):
        check_ground_size(self.domain_n)
        check_ground_size(self.codomain_n)
        object.__setattr__(self, "image", tuple(int(y) for y in self.image))
        if len(self.image) != self.domain_n:
            raise ValueError(
                f"map on {self.domain_n} points needs {self.domain_n} images, "
                f"got {len(self.image)}"
            )
        for x, y in enumerate(self.image):
            if not 0 <= y < self.codomain_n:
                raise PointOutOfRange(
                    f"image {y} of point {x} outside ground set of size {self.codomain_n}"
                )


def identity_map(n: int) -> PointMap:
    return PointMap(n, n, tuple(range(n)))


def preimage(f: PointMap, b: int) -> int:
    """Mask of domain points whose image lies in ``b``."""
    check_mask(b, f.codomain_n)
    out = 0
    for x, y in enumerate(f.image):
        if b >> y & 1:
            out |= 1 << x
    return out


def compose(f: PointMap, g: PointMap) -> PointMap:
    """The map applying ``f`` first, then ``g``."""
    if f.codomain_n != g.domain_n:
        raise DimensionMismatch(
            f"cannot compose: first map lands in {f.codomain_n} points, "
            f"second starts from {g.domain_n}"
        )
    return PointMap(f.domain_n, g.codomain_n, tuple(g.image[y] for y in f.image))


def inclusion_map(y: int, n: int) -> PointMap:
    """The inclusion of the subspace ``y``, points renumbered in mask order."""
    check_mask(y, n)
    return PointMap(y.bit_count(), n, tuple(bits(y)))


def subspace_prob(p: PSpace, y: int, a: int) -> float:
    """Trace value of ``a`` inside the subspace ``y``.

    The maximum of ``p`` over all ambient subsets whose intersection with
    ``y`` is ``a``, i.e. over ``a | c`` for ``c`` ranging through the
    complement of ``y``; 2^(n - |y|) table lookups.
    """
    check_mask(y, p.n)
    if a & ~y:
        raise NotASubset(f"mask {a} is not contained in subspace {y}")
    comp = full_mask(p.n) ^ y
    if comp.bit_count() > 20:
        raise CapExceeded("trace enumeration capped at 2^20 ambient candidates")
    table = p.table
    best = 0.0
    for c in submasks(comp):
        v = table[a | c]
        if v > best:
            best = v
    return best


def subspace(p: PSpace, y: int) -> PSpace:
    """The subspace on the points of ``y``, carrying the trace of ``p``.

    Ground size is ``|y|`` with points renumbered by :func:`~ptop.masks.compress`,
    so point order is preserved.  Taking ``y`` to be the full mask returns
    a table bit-identical to ``p``'s.
    """
    check_mask(y, p.n)
    m = y.bit_count()
    table = [0.0] * (1 << m)
    for a in submasks(y):
        table[compress(a, y)] = subspace_prob(p, y, a)
    result = PSpace(m, tuple(table))
    assert m > PAIRWISE_CAP or not verify_pairwise(result)
    return result


def continuity_witness(f: PointMap, p: PSpace, q: PSpace) -> int | None:
    """The smallest codomain mask violating continuity, or None if continuous.

    ``f`` is continuous from ``p`` to ``q`` when every codomain subset's
    value is matched or beaten by the value of its preimage.  Comparison
    is exact; scanned in ascending mask order over 2^codomain subsets.
    """
    if f.domain_n != p.n or f.codomain_n != q.n:
        raise DimensionMismatch(
            f"map {f.domain_n}->{f.codomain_n} does not connect spaces "
            f"on {p.n} and {q.n} points"
        )
    point_pre = [0] * q.n
    for x, y in enumerate(f.image):
        point_pre[y] |= 1 << x
    pre = [0] * (1 << q.n)
    p_table = p.table
    q_table = q.table
    for a in range(1, 1 << q.n):
        low = a & -a
        pre[a] = pre[a ^ low] | point_pre[low.bit_length() - 1]
    for a in range(1 << q.n):
        if p_table[pre[a]] < q_table[a]:
            return a
    return None


def is_pcontinuous(f: PointMap, p: PSpace, q: PSpace) -> bool:
    """True when ``f`` is continuous from ``p`` to ``q``."""
    return continuity_witness(f, p, q) is None
