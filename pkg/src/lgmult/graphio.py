"""Reading and writing graphs: graph6 strings, edge-list text, adjacency JSON.

graph6 is the compact format used by the usual graph-enumeration tools: one
byte n+63 for the order (supported here up to 62), then the upper triangle of
the adjacency matrix in column-major order, packed into 6-bit groups, each
group stored as its value plus 63.  An optional ">>graph6<<" prefix is
accepted on input and never produced on output.
"""

from __future__ import annotations

import json
from typing import Iterable

from .graphs import Graph, GraphError, build_graph

_HEADER = ">>graph6<<"


class FormatError(GraphError):
    """Malformed serialized graph."""


def to_graph6(g: Graph) -> str:
    if g.vertex_count > 62:
        raise FormatError("graph6 writer here only covers orders up to 62")
    n = g.vertex_count
    bits: list[int] = []
    for col in range(1, n):
        for row in range(col):
            bits.append(1 if g.has_edge(row, col) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER) :]
    if not s:
        raise FormatError("empty graph6 string")
    n = ord(s[0]) - 63
    if not (0 <= n <= 62):
        raise FormatError(f"unsupported graph6 order byte {s[0]!r}")
    body = s[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise FormatError(f"graph6 body for n={n} needs {need} bytes, got {len(body)}")
    bits: list[int] = []
    for ch in body:
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise FormatError(f"byte {ch!r} outside graph6 range")
        for k in range(5, -1, -1):
            bits.append((val >> k) & 1)
    edges = []
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bits[i]:
                edges.append((row, col))
            i += 1
    return build_graph(n, edges)


def to_edge_text(g: Graph) -> str:
    """Plain text: first line "n m", then one "u v" line per edge."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_edge_text(text: str) -> Graph:
    rows = [ln for ln in (line.strip() for line in text.splitlines()) if ln]
    if not rows:
        raise FormatError("empty edge-list text")
    head = rows[0].split()
    if len(head) != 2:
        raise FormatError(f"header must be 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"non-integer header {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise FormatError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"edge line {ln!r} must be 'u v'")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"non-integer edge line {ln!r}") from exc
    return build_graph(n, edges)


def to_adjacency_json(g: Graph) -> str:
    payload = {
        "vertex_count": g.vertex_count,
        "adjacency": [list(g.adj[v]) for v in range(g.vertex_count)],
    }
    return json.dumps(payload)


def from_adjacency_json(text: str) -> Graph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"bad JSON: {exc}") from exc
    if not isinstance(payload, dict) or "vertex_count" not in payload or "adjacency" not in payload:
        raise FormatError("adjacency JSON needs 'vertex_count' and 'adjacency'")
    n = payload["vertex_count"]
    adj = payload["adjacency"]
    if not isinstance(n, int) or not isinstance(adj, list) or len(adj) != n:
        raise FormatError("adjacency list length must equal vertex_count")
    edges = []
    for u, nbrs in enumerate(adj):
        for v in nbrs:
            if not isinstance(v, int):
                raise FormatError(f"non-integer neighbor {v!r}")
            if u == v:
                raise FormatError(f"loop at vertex {u}")
            if not (0 <= v < n) or u not in adj[v]:
                raise FormatError(f"asymmetric adjacency between {u} and {v}")
            if u < v:
                edges.append((u, v))
    return build_graph(n, edges)


def write_graphs_graph6(graphs: Iterable[Graph]) -> str:
    return "\n".join(to_graph6(g) for g in graphs) + "\n"


def read_graphs_graph6(text: str) -> list[Graph]:
    return [from_graph6(ln) for ln in text.splitlines() if ln.strip()]
