"""Brute-force oracles: small, slow, and independent of the library's scan paths.

Every oracle here recomputes its answer from the definitions with plain
loops (no numpy, no shared helpers from the package beyond data types),
so agreement with the library is meaningful.
"""

from itertools import combinations

from ptop import SplitMix64, WeightTable


def rng_for(*parts: int) -> SplitMix64:
    """Deterministic per-case generator derived from test identifiers."""
    rng = SplitMix64(0xA5A5_0000)
    for part in parts:
        rng.state = (rng.state * 0x100000001B3 + part + 1) & ((1 << 64) - 1)
    return rng


def random_weight_table(n: int, rng: SplitMix64, palette) -> WeightTable:
    """Arbitrary (usually invalid) table with entries drawn from a palette."""
    values = [palette[rng.below(len(palette))] for _ in range(1 << n)]
    return WeightTable(n, tuple(values))


def brute_pairwise(table, n):
    """All pair-scan violations as (kind, a, b, required, actual) tuples,
    in the documented report order, computed with plain loops."""
    size = 1 << n
    out = []
    for mask in range(size):
        v = table[mask]
        if not 0.0 <= v <= 1.0:
            if v < 0.0:
                out.append(("range", mask, None, 0.0, v))
            elif v > 1.0:
                out.append(("range", mask, None, v, 1.0))
            else:
                out.append(("range", mask, None, 1.0, v))
    for mask in sorted({0, size - 1}):
        if not table[mask] >= 1.0:
            out.append(("boundary", mask, None, 1.0, table[mask]))
    for kind in ("union", "intersection"):
        for a in range(size):
            for b in range(a, size):
                req = min(table[a], table[b])
                target = a | b if kind == "union" else a & b
                if table[target] < req:
                    out.append((kind, a, b, req, table[target]))
    return out


def brute_families(table, n):
    """All family-scan violations as (kind, members, required, actual),
    by direct enumeration of every family of subsets."""
    size = 1 << n
    out = []
    for mask in range(size):
        v = table[mask]
        if not 0.0 <= v <= 1.0:
            if v < 0.0:
                out.append(("range", (mask,), 0.0, v))
            elif v > 1.0:
                out.append(("range", (mask,), v, 1.0))
            else:
                out.append(("range", (mask,), 1.0, v))
    families = []
    for fam in range(1 << size):
        members = tuple(m for m in range(size) if fam >> m & 1)
        union = 0
        inter = size - 1
        low = 1.0
        for m in members:
            union |= m
            inter &= m
            low = min(low, table[m])
        families.append((members, union, inter, low))
    for kind in ("union", "intersection"):
        for members, union, inter, low in families:
            target = union if kind == "union" else inter
            if table[target] < low:
                out.append((kind, members, low, table[target]))
    return out


def is_classical_topology(n: int, members) -> bool:
    s = set(members)
    if 0 not in s or (1 << n) - 1 not in s:
        return False
    return all((a | b) in s and (a & b) in s for a in s for b in s)


def all_topologies(n: int):
    """Every classical topology on n labeled points, by raw enumeration."""
    size = 1 << n
    found = []
    for fam in range(1 << size):
        members = frozenset(m for m in range(size) if fam >> m & 1)
        if is_classical_topology(n, members):
            found.append(members)
    return found


def brute_subspace_prob(table, n, y, a):
    """Maximum of the table over all ambient subsets cutting down to ``a``."""
    return max(table[b] for b in range(1 << n) if b & y == a)


def classically_continuous(image, opens_dom, opens_cod) -> bool:
    for a in opens_cod:
        pre = 0
        for x, fx in enumerate(image):
            if a >> fx & 1:
                pre |= 1 << x
        if pre not in opens_dom:
            return False
    return True


def brute_min_cover_indices(members, n):
    """Smallest covering index tuple, lexicographically first among ties."""
    full = (1 << n) - 1
    for size in range(len(members) + 1):
        for picks in combinations(range(len(members)), size):
            union = 0
            for i in picks:
                union |= members[i]
            if union == full:
                return picks
    return None


def brute_disconnected(table, n, q) -> bool:
    full = (1 << n) - 1
    return any(
        table[a] >= q and table[full ^ a] >= q
        for a in range(1, full)
        if a != 0 and (full ^ a) != 0
    )


def brute_threshold(table, n):
    full = (1 << n) - 1
    best = None
    for a in range(1, full):
        m = min(table[a], table[full ^ a])
        if best is None or m > best:
            best = m
    return best
