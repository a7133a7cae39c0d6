"""graph6 and edge-list text formats.

graph6 covers simple loop-free graphs up to 62 vertices (single-byte order,
McKay's encoding).  Looped graphs (the total-graph constructions) use the
edge-list format instead: a header line ``n m`` followed by m lines ``u v``,
where ``u u`` denotes a loop.
"""

from __future__ import annotations

from pathlib import Path

from .errors import GraphInputError
from .graph import Graph

__all__ = [
    "parse_graph6",
    "emit_graph6",
    "parse_edge_list",
    "emit_edge_list",
    "load_graphs",
]

_HEADER = ">>graph6<<"


def _pair_index(i: int, j: int) -> int:
    # column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    return j * (j - 1) // 2 + i


def emit_graph6(g: Graph) -> str:
    if g.n == 0:
        raise GraphInputError("graph6 emission of the order-0 graph is not supported")
    if g.n > 62:
        raise GraphInputError("graph6 support here stops at 62 vertices")
    if not g.is_simple:
        raise GraphInputError("graph6 cannot represent loops")
    nbits = g.n * (g.n - 1) // 2
    bitvec = bytearray((nbits + 5) // 6)
    for j in range(g.n):
        row = g.adj[j] & ((1 << j) - 1)
        while row:
            low = row & -row
            i = low.bit_length() - 1
            row ^= low
            k = _pair_index(i, j)
            bitvec[k // 6] |= 1 << (5 - k % 6)
    return chr(g.n + 63) + "".join(chr(b + 63) for b in bitvec)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):].strip()
    if not s:
        raise GraphInputError("empty graph6 string")
    n = ord(s[0]) - 63
    if n < 1:
        raise GraphInputError("graph6 strings for order < 1 are not supported")
    if n > 62:
        raise GraphInputError("multi-byte graph6 orders (> 62) are not supported")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise GraphInputError(
            f"graph6 body length {len(body)} wrong for order {n}"
        )
    adj = [0] * n
    k = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphInputError(f"invalid graph6 byte {ch!r}")
        for b in range(5, -1, -1):
            if k >= nbits:
                if (val >> b) & 1:
                    raise GraphInputError("nonzero padding bits in graph6 string")
                continue
            if (val >> b) & 1:
                # invert _pair_index: find j with j(j-1)/2 <= k
                j = 1
                while (j + 1) * j // 2 <= k:
                    j += 1
                i = k - j * (j - 1) // 2
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines += [f"{e.u} {e.v}" for e in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise GraphInputError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise GraphInputError(f"edge-list header must be 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise GraphInputError(f"edge-list declares {m} edges but has {len(rows) - 1}")
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphInputError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph.from_edges(n, edges)


def load_graphs(path: str | Path) -> list[Graph]:
    """Read a graph file: edge-list if the first line is an 'n m' header,
    otherwise graph6 with one graph per line."""
    text = Path(path).read_text()
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise GraphInputError(f"no graphs in {path}")
    head = lines[0].split()
    if len(head) == 2 and all(p.isdigit() for p in head):
        return [parse_edge_list(text)]
    return [parse_graph6(ln) for ln in lines]
