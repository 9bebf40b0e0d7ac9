"""Text codecs for spaces and point maps.

PTOP v1 (space documents), line oriented, UTF-8, LF line endings, ``#``
starts a comment, blank lines ignored::

    ptop 1
    n <ground size>
    <mask> <probability>     # zero or more entry lines

Masks are decimal or ``0b``/``0x`` literals.  Unlisted masks default to 0,
the empty and full subsets to 1.  Probabilities are decimal text parsed to
binary64 exactly once and never rounded afterwards, so parse/serialize is
a bit-exact round trip.

PMAP v1 (point map documents)::

    pmap 1
    dom <domain size>
    cod <codomain size>
    <x> <f(x)>               # exactly one line per domain point

Canonical serialized form: no comments or blank lines, entries in
ascending mask (resp. point) order, only non-default entries written,
probabilities in shortest round-trip decimal (CPython ``repr`` with a
trailing ``.0`` trimmed).
"""

from __future__ import annotations

from .core import WeightTable, build
from .errors import ParseError, UnsupportedVersion
from .maps import PointMap

PTOP_VERSION = "1"
PMAP_VERSION = "1"


def format_probability(v: float) -> str:
    """Shortest decimal text that parses back to exactly ``v``."""
    s = repr(float(v))
    return s[:-2] if s.endswith(".0") else s


def parse_mask_token(token: str) -> int:
    """Parse a mask literal: decimal, or binary/hex with 0b/0x prefix."""
    t = token.lower()
    try:
        if t.startswith("0b"):
            return int(t[2:], 2)
        if t.startswith("0x"):
            return int(t[2:], 16)
        return int(t, 10)
    except ValueError:
        raise ValueError(f"bad mask literal {token!r}") from None


def _parse_probability_token(token: str) -> float:
    if "_" in token:
        raise ValueError(f"bad probability literal {token!r}")
    try:
        return float(token)
    except ValueError:
        raise ValueError(f"bad probability literal {token!r}") from None


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _check_header(tokens: list[str], lineno: int, name: str, version: str) -> None:
    if len(tokens) != 2 or tokens[0] != name:
        raise ParseError(f"expected header '{name} {version}'", lineno)
    if tokens[1] != version:
        raise UnsupportedVersion(f"unsupported {name} version {tokens[1]!r}", lineno)


def parse_pspace(text: str) -> WeightTable:
    """Parse a PTOP document; entry validation follows :func:`ptop.core.build`."""
    lines = _content_lines(text)
    lineno = 0
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("empty document, expected 'ptop 1' header", 1) from None
    _check_header(tokens, lineno, "ptop", PTOP_VERSION)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("missing 'n <ground size>' line", lineno + 1) from None
    if len(tokens) != 2 or tokens[0] != "n" or not tokens[1].isdigit():
        raise ParseError("expected 'n <ground size>'", lineno)
    n = int(tokens[1])
    entries = []
    for lineno, tokens in lines:
        if len(tokens) != 2:
            raise ParseError("expected '<mask> <probability>'", lineno)
        try:
            mask = parse_mask_token(tokens[0])
            value = _parse_probability_token(tokens[1])
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        entries.append((mask, value))
    return build(n, entries)


def serialize_pspace(p: WeightTable) -> str:
    """Canonical PTOP text for a table; parse(serialize(p)) == p bit-exactly."""
    lines = [f"ptop {PTOP_VERSION}", f"n {p.n}"]
    last = len(p.table) - 1
    for mask, v in enumerate(p.table):
        default = 1.0 if mask in (0, last) else 0.0
        if v != default:
            lines.append(f"{mask} {format_probability(v)}")
    return "\n".join(lines) + "\n"


def parse_pmap(text: str) -> PointMap:
    """Parse a PMAP document into a total point map."""
    lines = _content_lines(text)
    lineno = 0
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("empty document, expected 'pmap 1' header", 1) from None
    _check_header(tokens, lineno, "pmap", PMAP_VERSION)
    sizes = {}
    for key in ("dom", "cod"):
        try:
            lineno, tokens = next(lines)
        except StopIteration:
            raise ParseError(f"missing '{key} <size>' line", lineno + 1) from None
        if len(tokens) != 2 or tokens[0] != key or not tokens[1].isdigit():
            raise ParseError(f"expected '{key} <size>'", lineno)
        sizes[key] = int(tokens[1])
    image: dict[int, int] = {}
    for lineno, tokens in lines:
        if len(tokens) != 2 or not tokens[0].isdigit() or not tokens[1].isdigit():
            raise ParseError("expected '<point> <image>'", lineno)
        x, y = int(tokens[0]), int(tokens[1])
        if not 0 <= x < sizes["dom"]:
            raise ParseError(f"point {x} outside domain of size {sizes['dom']}", lineno)
        if x in image:
            raise ParseError(f"point {x} assigned twice", lineno)
        image[x] = y
    missing = [x for x in range(sizes["dom"]) if x not in image]
    if missing:
        raise ParseError(f"no image given for point {missing[0]}", lineno + 1)
    return PointMap(sizes["dom"], sizes["cod"], tuple(image[x] for x in range(sizes["dom"])))


def serialize_pmap(f: PointMap) -> str:
    """Canonical PMAP text for a point map."""
    lines = [f"pmap {PMAP_VERSION}", f"dom {f.domain_n}", f"cod {f.codomain_n}"]
    lines.extend(f"{x} {y}" for x, y in enumerate(f.image))
    return "\n".join(lines) + "\n"
