"""Named graph families, random graphs, direct products, and small-graph enumeration.

The direct product uses the flat vertex layout ``(u, v) -> u * |V(G2)| + v``
so each G2-layer is a contiguous index range; the exhaustive generator
produces connected graphs up to isomorphism with counts pinned to
1, 1, 2, 6, 21, 112, 853 for orders 1..7.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from pathlib import Path

from .errors import GraphInputError, OverBudget
from .graph import Graph, bits, is_connected, is_star

__all__ = [
    "complete_graph",
    "total_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "complete_bipartite_graph",
    "petersen_graph",
    "named_family",
    "parse_family",
    "random_graph",
    "Product",
    "product",
    "direct_product",
    "canonical_key",
    "enumerate_connected_graphs",
    "CorpusSpec",
    "ENUMERATION_BUDGET",
    "CONNECTED_GRAPH_COUNTS",
]

ENUMERATION_BUDGET = 7

# Connected simple graphs up to isomorphism, orders 1..7.
CONNECTED_GRAPH_COUNTS = (1, 1, 2, 6, 21, 112, 853)


# -- named families -----------------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphInputError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def total_graph(n: int) -> Graph:
    """K_n with a self-loop added at every vertex; every degree is n."""
    if n < 1:
        raise GraphInputError("total graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, (full,) * n)


def path_graph(k: int) -> Graph:
    if k < 1:
        raise GraphInputError("path needs k >= 1")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphInputError("cycle needs k >= 3")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: center 0 joined to `leaves` degree-one vertices."""
    if leaves < 1:
        raise GraphInputError("star needs >= 1 leaf")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphInputError("complete bipartite needs both sides >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))        # outer cycle
        edges.append((5 + i, 5 + (i + 2) % 5))  # inner pentagram
        edges.append((i, 5 + i))              # spokes
    return Graph.from_edges(10, edges)


_FAMILIES = {
    "complete": lambda p: complete_graph(_one(p)),
    "total": lambda p: total_graph(_one(p)),
    "path": lambda p: path_graph(_one(p)),
    "cycle": lambda p: cycle_graph(_one(p)),
    "star": lambda p: star_graph(_one(p)),
    "bipartite": lambda p: complete_bipartite_graph(*_two(p)),
    "petersen": lambda p: petersen_graph(),
}


def _one(p) -> int:
    if isinstance(p, int):
        return p
    raise GraphInputError(f"family needs a single integer parameter, got {p!r}")


def _two(p) -> tuple[int, int]:
    if isinstance(p, tuple) and len(p) == 2:
        return p
    raise GraphInputError(f"family needs two integer parameters, got {p!r}")


def named_family(name: str, parameter: int | tuple[int, int] | None = None) -> Graph:
    key = name.lower()
    if key not in _FAMILIES:
        raise GraphInputError(
            f"unknown family {name!r}; known: {', '.join(sorted(_FAMILIES))}"
        )
    if key == "petersen":
        return petersen_graph()
    return _FAMILIES[key](parameter)


_SHORT = re.compile(r"^([KTCPS])_?\{?(\d+)(?:,(\d+))?\}?$", re.IGNORECASE)


def parse_family(spec: str, parameter: int | None = None) -> Graph:
    """Parse a compact family spec: K5, T3, C4, P4, K2,3, K1,4, petersen, path:4.

    ``K`` with two numbers is complete bipartite; ``S`` is a star given its
    leaf count.  A bare word may take its parameter from ``parameter``.
    """
    text = spec.strip()
    m = _SHORT.match(text)
    if m:
        kind, a, b = m.group(1).upper(), int(m.group(2)), m.group(3)
        if kind == "K":
            return complete_bipartite_graph(a, int(b)) if b else complete_graph(a)
        if b is not None:
            raise GraphInputError(f"{kind} takes a single parameter: {spec!r}")
        if kind == "T":
            return total_graph(a)
        if kind == "C":
            return cycle_graph(a)
        if kind == "P":
            return path_graph(a)
        if kind == "S":
            return star_graph(a)
    if ":" in text:
        word, _, rest = text.partition(":")
        nums = tuple(int(x) for x in rest.split(","))
        return named_family(word, nums[0] if len(nums) == 1 else nums)
    return named_family(text, parameter)


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    """Erdos-Renyi G(n, p) drawn with random.Random(seed) (Mersenne Twister).

    Pairs are visited in lexicographic order with one draw each, so a spec
    (n, p, seed) reproduces the same graph on every run.
    """
    if n < 0:
        raise GraphInputError("negative order")
    if not 0.0 <= p <= 1.0:
        raise GraphInputError("edge probability must be in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


# -- direct product -----------------------------------------------------------


@dataclass(frozen=True)
class Product:
    """A direct product with its factor context for layer/projection queries."""

    left: Graph
    right: Graph
    graph: Graph

    def flat(self, u: int, v: int) -> int:
        if not (0 <= u < self.left.n and 0 <= v < self.right.n):
            raise GraphInputError(f"product coordinate ({u}, {v}) out of range")
        return u * self.right.n + v

    def coords(self, flat: int) -> tuple[int, int]:
        """The two projections of a flat index: (p1, p2)."""
        if not 0 <= flat < self.graph.n:
            raise GraphInputError(f"flat index {flat} out of range")
        return divmod(flat, self.right.n)

    def layer(self, u: int) -> range:
        """Flat indices of the right-factor layer above vertex u of the left factor."""
        if not 0 <= u < self.left.n:
            raise GraphInputError(f"layer vertex {u} out of range")
        return range(u * self.right.n, (u + 1) * self.right.n)


def product(g1: Graph, g2: Graph) -> Product:
    """Direct (tensor) product: (u1,v1)(u2,v2) is an edge iff both coordinate
    pairs are edges in their factors.

    The left factor must be simple; loops are supported in the right factor
    only (that is all the total-graph constructions require), which keeps
    the product itself loop-free.
    """
    if g1.n == 0 or g2.n == 0:
        raise GraphInputError("product factors must be nonempty")
    if not g1.is_simple:
        raise GraphInputError("left product factor must be loop-free")
    n2 = g2.n
    adj = [0] * (g1.n * n2)
    for u in range(g1.n):
        for v in range(n2):
            row = 0
            for u2 in bits(g1.adj[u]):
                row |= g2.adj[v] << (u2 * n2)
            adj[u * n2 + v] = row
    return Product(g1, g2, Graph(g1.n * n2, tuple(adj)))


def direct_product(g1: Graph, g2: Graph) -> Graph:
    return product(g1, g2).graph


# -- canonical forms and exhaustive generation --------------------------------


def _refined_classes(g: Graph) -> list[list[int]]:
    """Stable 1-WL color classes, ordered by a canonical (iso-invariant) key."""
    color = {v: (g.degree(v), g.has_loop(v)) for v in range(g.n)}
    while True:
        new = {
            v: (color[v], tuple(sorted(color[w] for w in bits(g.adj[v] & ~(1 << v)))))
            for v in range(g.n)
        }
        if len(set(new.values())) == len(set(color.values())):
            break
        color = new
    classes: dict = {}
    for v in range(g.n):
        classes.setdefault(color[v], []).append(v)
    return [classes[k] for k in sorted(classes)]


def _certificate(g: Graph, labels: dict[int, int]) -> int:
    cert = 0
    for v in range(g.n):
        lv = labels[v]
        for w in bits(g.adj[v] >> v):
            lw = labels[v + w]
            a, b = (lv, lw) if lv <= lw else (lw, lv)
            cert |= 1 << (b * (b + 1) // 2 + a)   # loop bit when a == b
    return cert


def canonical_key(g: Graph) -> tuple[int, int]:
    """(order, minimal adjacency certificate); equal keys iff isomorphic.

    The minimum runs over the labelings compatible with the degree-refined
    color classes, so it is cheap except on highly symmetric graphs.
    """
    classes = _refined_classes(g)
    starts = []
    pos = 0
    for cls in classes:
        starts.append(pos)
        pos += len(cls)
    best = None

    def assign(i: int, labels: dict[int, int]):
        nonlocal best
        if i == len(classes):
            cert = _certificate(g, labels)
            if best is None or cert < best:
                best = cert
            return
        base = starts[i]
        for perm in permutations(classes[i]):
            for off, v in enumerate(perm):
                labels[v] = base + off
            assign(i + 1, labels)

    assign(0, {})
    return g.n, best if best is not None else 0


@lru_cache(maxsize=16)
def _connected_reps(k: int) -> tuple[Graph, ...]:
    if k == 1:
        return (Graph.empty(1),)
    reps: dict[tuple[int, int], Graph] = {}
    for smaller in _connected_reps(k - 1):
        # every connected graph has a non-cut vertex, so attaching a new
        # last vertex by each nonempty neighbor subset reaches everything
        for attach in range(1, 1 << (k - 1)):
            adj = list(smaller.adj) + [attach]
            for w in bits(attach):
                adj[w] |= 1 << (k - 1)
            g = Graph(k, tuple(adj))
            key = canonical_key(g)
            if key not in reps:
                reps[key] = g
    return tuple(reps[key] for key in sorted(reps))


def enumerate_connected_graphs(order: int, budget: int = ENUMERATION_BUDGET):
    """Yield all connected simple graphs of the given order up to isomorphism.

    Deterministic order (sorted canonical keys).  Orders beyond ``budget``
    raise OverBudget.
    """
    if order < 1:
        raise GraphInputError("order must be >= 1")
    if order > budget:
        raise OverBudget(f"enumeration of order {order} exceeds budget {budget}")
    yield from _connected_reps(order)


def clear_enumeration_cache() -> None:
    _connected_reps.cache_clear()
