"""Loop-capable undirected graph on dense integer vertices, plus cut primitives.

Vertices are ``0..n-1`` and every vertex set is a Python int used as a bit
set, which keeps the exhaustive cut enumerations downstream at a few machine
words per subset.  A self-loop at ``v`` is stored as bit ``v`` of ``adj[v]``
and contributes exactly 1 to ``degree(v)``; that convention makes the
neighbor-set product rule in :mod:`lplab.families` uniform for looped
factors.

Graphs are immutable; every operation here is a pure function.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import GraphInputError

__all__ = [
    "Graph",
    "Edge",
    "Bipartition",
    "mask_of",
    "bits",
    "components",
    "is_connected",
    "is_bipartite",
    "is_star",
    "edge_degree",
    "min_edge_degree",
    "cut_size",
    "cut_edge_set",
    "contract",
    "induced_subgraph",
]


def mask_of(vertices: Iterable[int], n: int) -> int:
    """Pack an iterable of vertices into a bit set, range-checking against n."""
    m = 0
    for v in vertices:
        if not 0 <= v < n:
            raise GraphInputError(f"vertex {v} out of range for order {n}")
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, order=True)
class Edge:
    """An unordered edge, normalized so ``u <= v``; ``u == v`` is a loop."""

    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u > self.v:
            u, v = self.u, self.v
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)
        if self.u < 0:
            raise GraphInputError(f"negative vertex in edge ({self.u}, {self.v})")

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class Graph:
    """Undirected graph of order ``n`` with per-vertex neighbor bit sets.

    ``adj[v]`` has bit ``w`` set iff ``vw`` is an edge; bit ``v`` of ``adj[v]``
    marks a self-loop.  No multi-edges.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphInputError("negative order")
        if len(self.adj) != self.n:
            raise GraphInputError(f"adjacency length {len(self.adj)} != order {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphInputError(f"neighbor of {v} out of range for order {self.n}")
        for v in range(self.n):
            for w in bits(self.adj[v]):
                if w != v and not (self.adj[w] >> v) & 1:
                    raise GraphInputError(f"asymmetric adjacency between {v} and {w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # -- basic accessors ----------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbor_mask(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} out of range for order {self.n}")
        return self.adj[v]

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(bits(self.neighbor_mask(v)))

    def degree(self, v: int) -> int:
        """|N(v)|; a looped vertex is its own neighbor and counts once."""
        return self.neighbor_mask(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.neighbor_mask(u) >> v) & 1) if 0 <= v < self.n else False

    def has_loop(self, v: int) -> bool:
        return bool((self.neighbor_mask(v) >> v) & 1)

    @property
    def loops(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if (self.adj[v] >> v) & 1)

    @property
    def is_simple(self) -> bool:
        return not any((self.adj[v] >> v) & 1 for v in range(self.n))

    def edges(self) -> list[Edge]:
        """All edges, loops included, sorted; each edge listed once."""
        out = []
        for v in range(self.n):
            row = self.adj[v] >> v
            for w in bits(row):
                out.append(Edge(v, v + w))
        return out

    def simple_edges(self) -> list[Edge]:
        return [e for e in self.edges() if not e.is_loop]

    @property
    def size(self) -> int:
        """Edge count, loops counted once each."""
        return (sum(row.bit_count() for row in self.adj) + len(self.loops)) // 2

    def min_degree(self) -> int | None:
        if self.n == 0:
            return None
        return min(self.degree(v) for v in range(self.n))


@dataclass(frozen=True)
class Bipartition:
    """A two-sided vertex partition together with its crossing edge set."""

    side_a: frozenset[int]
    side_b: frozenset[int]
    cut_edges: frozenset[Edge]

    @classmethod
    def of(cls, g: Graph, side_a: Iterable[int]) -> "Bipartition":
        mask = side_a if isinstance(side_a, int) else mask_of(side_a, g.n)
        if mask == 0 or mask == g.full_mask:
            raise GraphInputError("bipartition sides must both be nonempty")
        comp = g.full_mask & ~mask
        return cls(
            side_a=frozenset(bits(mask)),
            side_b=frozenset(bits(comp)),
            cut_edges=frozenset(cut_edge_set(g, mask)),
        )


# -- degree / cut primitives ------------------------------------------------


def edge_degree(g: Graph, e: Edge | tuple[int, int]) -> int:
    """d(u) + d(v) - 2 for a non-loop edge uv."""
    if not isinstance(e, Edge):
        e = Edge(*e)
    if e.is_loop:
        raise GraphInputError(f"edge-degree undefined for loop at {e.u}")
    if not g.has_edge(e.u, e.v):
        raise GraphInputError(f"({e.u}, {e.v}) is not an edge")
    return g.degree(e.u) + g.degree(e.v) - 2


def min_edge_degree(g: Graph) -> int:
    """Minimum of edge_degree over the non-loop edges; errors if there are none."""
    simple = g.simple_edges()
    if not simple:
        raise GraphInputError("minimum edge-degree undefined: no non-loop edge")
    return min(g.degree(e.u) + g.degree(e.v) - 2 for e in simple)


def _as_mask(g: Graph, side: Iterable[int] | int) -> int:
    return side if isinstance(side, int) else mask_of(side, g.n)


def cut_size(g: Graph, side_a: Iterable[int] | int) -> int:
    """Number of edges with exactly one endpoint in side_a; loops never cross."""
    mask = _as_mask(g, side_a)
    if mask == 0 or mask & ~g.full_mask or mask == g.full_mask:
        raise GraphInputError("cut side must be a nonempty proper vertex subset")
    comp = g.full_mask & ~mask
    return sum((g.adj[v] & comp).bit_count() for v in bits(mask))


def cut_edge_set(g: Graph, side_a: Iterable[int] | int) -> list[Edge]:
    mask = _as_mask(g, side_a)
    comp = g.full_mask & ~mask
    out = []
    for v in bits(mask):
        for w in bits(g.adj[v] & comp):
            out.append(Edge(v, w))
    return sorted(out)


# -- connectivity structure --------------------------------------------------


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex sets; loops are irrelevant to reachability."""
    seen = 0
    out = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            frontier = grow & ~comp
            comp |= frontier
        seen |= comp
        out.append(frozenset(bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_bipartite(g: Graph) -> bool:
    """Two-colorability; any loop is an odd closed walk and forces False."""
    if any((g.adj[v] >> v) & 1 for v in range(g.n)):
        return False
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in bits(g.adj[v]):
                if color[w] == -1:
                    color[w] = color[v] ^ 1
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def is_star(g: Graph) -> bool:
    """True iff g is K_{1,k} for some k >= 1 (no loops, no extra edges)."""
    if g.n < 2 or not g.is_simple:
        return False
    degs = [g.degree(v) for v in range(g.n)]
    center = max(range(g.n), key=degs.__getitem__)
    if degs[center] != g.n - 1:
        return False
    return all(degs[v] == 1 for v in range(g.n) if v != center)


# -- structural rewrites ------------------------------------------------------


def contract(
    g: Graph, blocks: Iterable[Iterable[int]]
) -> tuple[Graph, dict[int, int]]:
    """Merge each block to a single vertex; collapse parallels, drop loops.

    Unlisted vertices stay as singletons.  New labels are assigned by the
    smallest original vertex of each block, ascending, so the relabeling is
    deterministic.  Returns the contracted graph and the old->new map.
    Capacity multiplicities, when needed, are re-derived by the flow code
    from the original graph.
    """
    block_masks = []
    used = 0
    for block in blocks:
        m = _as_mask(g, block if isinstance(block, int) else mask_of(block, g.n))
        if m == 0:
            continue
        if m & used:
            raise GraphInputError("contraction blocks overlap")
        used |= m
        block_masks.append(m)
    for v in range(g.n):
        if not (used >> v) & 1:
            block_masks.append(1 << v)
    block_masks.sort(key=lambda m: (m & -m).bit_length())
    vmap = {}
    for new, m in enumerate(block_masks):
        for v in bits(m):
            vmap[v] = new
    adj = [0] * len(block_masks)
    for v in range(g.n):
        a = vmap[v]
        for w in bits(g.adj[v]):
            b = vmap[w]
            if a != b:
                adj[a] |= 1 << b
    return Graph(len(block_masks), tuple(adj)), vmap


def induced_subgraph(g: Graph, s: Iterable[int] | int) -> tuple[Graph, dict[int, int]]:
    """Subgraph on s (internal edges and loops kept), relabeled 0..|s|-1.

    Returns the subgraph and the old->new vertex map; relabeling preserves
    the original vertex order.
    """
    mask = _as_mask(g, s)
    if mask & ~g.full_mask:
        raise GraphInputError("induced set out of range")
    kept = list(bits(mask))
    vmap = {v: i for i, v in enumerate(kept)}
    adj = [0] * len(kept)
    for v in kept:
        for w in bits(g.adj[v] & mask):
            adj[vmap[v]] |= 1 << vmap[w]
    return Graph(len(kept), tuple(adj)), vmap
