"""Edge-list and graph6 serialization."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError


class GraphFormatError(GraphError):
    pass


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` with ``0 <= u < v < n``."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise GraphFormatError("empty edge list")
    try:
        header = [int(t) for t in rows[0]]
    except ValueError:
        raise GraphFormatError(f"bad header line {' '.join(rows[0])!r}") from None
    if len(header) != 2 or min(header) < 0:
        raise GraphFormatError("header must be 'n m' with non-negative integers")
    n, m = header
    if len(rows) - 1 != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(rows) - 1}")
    seen = set()
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(row[0]), int(row[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id") from None
        if not 0 <= u < v < n:
            raise GraphFormatError(f"line {lineno}: need 0 <= u < v < n, got {u} {v}")
        if (u, v) in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add((u, v))
    return Graph.from_edges(n, seen)


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 1 << 36:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise GraphFormatError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    """Standard graph6 string (no ``>>graph6<<`` header, no newline)."""
    out = bytearray(_encode_n(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii")
    if not data or any(not 63 <= b <= 126 for b in data):
        raise GraphFormatError("graph6 data must be printable bytes 63..126")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] != 126:
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for b in data[1:4]:
            n = n << 6 | (b - 63)
        pos = 4
    else:
        if len(data) < 8:
            raise GraphFormatError("truncated graph6 size field")
        n = 0
        for b in data[2:8]:
            n = n << 6 | (b - 63)
        pos = 8
    need = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (need + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_graph(path: str | Path, fmt: str | None = None) -> Graph:
    """Read a graph; ``fmt`` is ``"edgelist"`` or ``"graph6"`` (guessed from suffix)."""
    p = Path(path)
    text = p.read_text(encoding="utf-8")
    if fmt is None:
        fmt = "graph6" if p.suffix in (".g6", ".graph6") else "edgelist"
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edgelist":
        return from_edgelist(text)
    raise GraphFormatError(f"unknown format {fmt!r}")


def dump_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "graph6":
        return to_graph6(g) + "\n"
    if fmt == "edgelist":
        return to_edgelist(g)
    raise GraphFormatError(f"unknown format {fmt!r}")
