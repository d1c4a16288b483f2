"""Graph serialization: a plain edge-list text format and standard graph6.

Edge list layout: a header line ``n m`` followed by exactly m lines ``u v``
with 0-based endpoints.  Serialization writes edges sorted lexicographically
so output is canonical for a given labeled graph.
"""

from __future__ import annotations

from enum import Enum

from .graphs import Graph


class GraphFormat(str, Enum):
    EDGE_LIST = "edge-list"
    GRAPH6 = "graph6"


class GraphFormatError(ValueError):
    """Malformed graph text; message carries a 1-based line number when known."""


# ---------------------------------------------------------------------------
# edge list
# ---------------------------------------------------------------------------


def _parse_edge_list(text: str) -> Graph:
    lines = text.split("\n")
    entries = [
        (idx + 1, line.strip()) for idx, line in enumerate(lines) if line.strip()
    ]
    if not entries:
        raise GraphFormatError("line 1: missing 'n m' header")
    lineno, header = entries[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(
            f"line {lineno}: header must hold two integers, got {header!r}"
        ) from None
    if n < 1:
        raise GraphFormatError(f"line {lineno}: order must be at least 1, got {n}")
    if m < 0:
        raise GraphFormatError(f"line {lineno}: edge count must be nonnegative")
    body = entries[1:]
    if len(body) != m:
        raise GraphFormatError(
            f"header announces {m} edges but {len(body)} edge lines follow"
        )
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: edge must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(
                f"line {lineno}: edge endpoints must be integers, got {line!r}"
            ) from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: endpoint out of range 0..{n - 1}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {key}")
        seen.add(key)
        edges.append(key)
    return Graph(n, edges)


def _serialize_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# graph6 (printable ASCII, upper triangle column by column, 6 bits per char)
# ---------------------------------------------------------------------------


def _g6_encode_order(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    if n <= 68719476735:
        return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise ValueError("graph too large for graph6")


def _serialize_graph6(g: Graph) -> str:
    out = _g6_encode_order(g.n)
    bits: list[int] = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k : k + 6]:
            group = group << 1 | b
        out.append(group + 63)
    return "".join(chr(c) for c in out)


def _parse_graph6(text: str) -> Graph:
    data = text.strip()
    if not data:
        raise GraphFormatError("empty graph6 string")
    codes = []
    for ch in data:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise GraphFormatError(f"graph6 character {ch!r} out of range")
        codes.append(c - 63)
    pos = 0
    if codes[0] != 63:
        n = codes[0]
        pos = 1
    elif len(codes) >= 2 and codes[1] != 63:
        if len(codes) < 4:
            raise GraphFormatError("truncated graph6 order")
        n = codes[1] << 12 | codes[2] << 6 | codes[3]
        pos = 4
    else:
        if len(codes) < 8:
            raise GraphFormatError("truncated graph6 order")
        n = 0
        for c in codes[2:8]:
            n = n << 6 | c
        pos = 8
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(codes) - pos != expected:
        raise GraphFormatError(
            f"graph6 body for n={n} needs {expected} characters, got {len(codes) - pos}"
        )
    bits: list[int] = []
    for c in codes[pos:]:
        for s in range(5, -1, -1):
            bits.append(c >> s & 1)
    if any(bits[nbits:]):
        raise GraphFormatError("graph6 padding bits must be zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def parse_graph(text: str, fmt: GraphFormat = GraphFormat.EDGE_LIST) -> Graph:
    """Parse a graph from text in the given format."""
    fmt = GraphFormat(fmt)
    if fmt is GraphFormat.EDGE_LIST:
        return _parse_edge_list(text)
    return _parse_graph6(text)


def serialize_graph(g: Graph, fmt: GraphFormat = GraphFormat.EDGE_LIST) -> str:
    """Serialize a graph to canonical text; parse_graph inverts this exactly."""
    fmt = GraphFormat(fmt)
    if fmt is GraphFormat.EDGE_LIST:
        return _serialize_edge_list(g)
    return _serialize_graph6(g)
