"""Edge-list and graph6 reading and writing.

Edge-list files start with a ``n m`` header followed by ``m`` lines of
``tail head`` (0-based). The undirected variant has the same layout with
unordered pairs. graph6 support covers n <= 62.
"""

from __future__ import annotations

from pathlib import Path

from .graph import GraphError, OrientedGraph, UndirectedGraph

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 62


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _parse_pairs(text: str):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("missing 'n m' header", 1)
    header = lines[0].split()
    try:
        if len(header) != 2:
            raise ValueError
        n, m = int(header[0]), int(header[1])
        if n < 0 or m < 0:
            raise ValueError
    except ValueError:
        raise ParseError(f"malformed header {lines[0]!r}", 1) from None
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} pairs but {len(body)} follow", 1)
    pairs = []
    seen = set()
    for lineno, line in enumerate(body, start=2):
        fields = line.split()
        try:
            if len(fields) != 2:
                raise ValueError
            t, h = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno) from None
        if not (0 <= t < n and 0 <= h < n):
            raise ParseError(f"vertex index out of range for n={n}", lineno)
        if t == h:
            raise ParseError(f"loop at vertex {t}", lineno)
        key = frozenset((t, h))
        if key in seen:
            raise ParseError(f"duplicate or opposite pair ({t}, {h})", lineno)
        seen.add(key)
        pairs.append((t, h))
    return n, pairs


def parse_edge_list(text: str) -> OrientedGraph:
    n, arcs = _parse_pairs(text)
    return OrientedGraph(n, arcs)


def parse_undirected_edge_list(text: str) -> UndirectedGraph:
    n, edges = _parse_pairs(text)
    return UndirectedGraph(n, edges)


def format_edge_list(g) -> str:
    """Serialise an OrientedGraph (arcs) or UndirectedGraph (edges)."""
    pairs = g.arcs if isinstance(g, OrientedGraph) else g.edges
    return "".join([f"{g.n} {len(pairs)}\n"] + [f"{a} {b}\n" for a, b in pairs])


def parse_graph6(text: str) -> UndirectedGraph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string")
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise ParseError(f"invalid graph6 character in {s!r}")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_N:
        raise ParseError("graph6 strings with n > 62 are not supported")
    nbits = n * (n - 1) // 2
    if len(s) - 1 != (nbits + 5) // 6:
        raise ParseError(f"graph6 length mismatch for n={n}: {s!r}")
    bits = []
    for c in s[1:]:
        v = ord(c) - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return UndirectedGraph(n, edges)


def to_graph6(G: UndirectedGraph) -> str:
    if G.n > GRAPH6_MAX_N:
        raise GraphError("graph6 output limited to n <= 62")
    edges = set(G.edges)
    bits = [1 if (i, j) in edges else 0 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(G.n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return "".join(chars)


def read_graph6_file(path) -> list:
    graphs = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if line.strip():
            try:
                graphs.append(parse_graph6(line))
            except ParseError as exc:
                raise ParseError(str(exc), lineno) from None
    return graphs


def read_oriented(path) -> OrientedGraph:
    return parse_edge_list(Path(path).read_text())


def read_undirected(path) -> UndirectedGraph:
    """Undirected graph from an edge list, or from graph6 when the file ends in ``.g6``."""
    text = Path(path).read_text()
    if str(path).endswith(".g6"):
        return parse_graph6(text.splitlines()[0] if text.strip() else text)
    return parse_undirected_edge_list(text)
