"""Edge-connectivity, restricted edge-connectivity, and the super/optimal
classifications.

Two independent routes to lambda' are kept deliberately separate:

* ``restricted_edge_connectivity`` contracts every vertex-disjoint edge pair
  and runs unit-capacity augmenting-path flows (with cut repair so the
  returned witness is a genuine restricted cut);
* ``lambda_prime_oracle`` brute-forces all anchored bipartitions with a
  vectorized bit-set sweep, feasible up to the oracle budget (30 vertices).

The same sweep yields the minimum cut over bipartitions with both sides of
size >= 2 (for super-lambda) and the minimum restricted cut with both sides
of size >= 3 (for super-lambda'); beyond the budget those classifications
fall back to seeded flows and are flagged as flow-certified.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import GraphInputError, NotApplicable, OverBudget
from .graph import (
    Bipartition,
    Edge,
    Graph,
    bits,
    cut_size,
    is_connected,
    is_star,
    mask_of,
    min_edge_degree,
)

__all__ = [
    "INFINITE",
    "ORACLE_BUDGET",
    "CutWitness",
    "ConnectivityReport",
    "max_flow_unit",
    "edge_connectivity",
    "restricted_edge_connectivity",
    "lambda_prime_oracle",
    "subset_scan",
    "SubsetScan",
    "repair_side_mask",
    "is_lambda_optimal",
    "is_super_lambda",
    "is_lambda_prime_optimal",
    "is_super_lambda_prime",
    "full_report",
    "witness_kind",
    "make_witness",
    "validate_witness",
    "clear_scan_cache",
]

INFINITE = math.inf
ORACLE_BUDGET = 30

_SCAN_CHUNK_BITS = 21
_SENTINEL = np.uint16(0xFFFF)


# -- unit-capacity max flow ----------------------------------------------------


def _unit_flow(
    g: Graph, src_mask: int, dst_mask: int, limit: int | None = None
) -> tuple[int, int | None]:
    """Max flow between the contracted terminal sets; parallel edges created
    by the contraction become integer capacities.

    Returns ``(value, side_mask)`` with the source-side minimum cut mapped
    back to original vertices; ``side_mask`` is None when the run was
    aborted early because the flow reached ``limit``.
    """
    others = [v for v in range(g.n) if not ((src_mask | dst_mask) >> v) & 1]
    idx = {v: i + 1 for i, v in enumerate(others)}
    source, sink = 0, len(others) + 1
    size = sink + 1

    def node(v: int) -> int:
        if (src_mask >> v) & 1:
            return source
        if (dst_mask >> v) & 1:
            return sink
        return idx[v]

    cap = [[0] * size for _ in range(size)]
    for v in range(g.n):
        row = g.adj[v] >> v
        a = node(v)
        for off in bits(row & ~1):  # skip the loop bit
            b = node(v + off)
            if a != b:
                cap[a][b] += 1
                cap[b][a] += 1

    value = 0
    while True:
        if limit is not None and value >= limit:
            return value, None
        parent = [-1] * size
        parent[source] = source
        queue = [source]
        while queue and parent[sink] == -1:
            nxt = []
            for a in queue:
                row = cap[a]
                for b in range(size):
                    if row[b] > 0 and parent[b] == -1:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if parent[sink] == -1:
            break
        bottleneck = None
        b = sink
        while b != source:
            a = parent[b]
            bottleneck = cap[a][b] if bottleneck is None else min(bottleneck, cap[a][b])
            b = a
        if limit is not None:
            bottleneck = min(bottleneck, limit - value)
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= bottleneck
            cap[b][a] += bottleneck
            b = a
        value += bottleneck

    reach = [False] * size
    reach[source] = True
    queue = [source]
    while queue:
        a = queue.pop()
        for b in range(size):
            if cap[a][b] > 0 and not reach[b]:
                reach[b] = True
                queue.append(b)
    side = src_mask
    for v in others:
        if reach[idx[v]]:
            side |= 1 << v
    return value, side


def max_flow_unit(g: Graph, sources, sinks) -> int:
    """Maximum number of pairwise edge-disjoint source-sink paths, which by
    Menger equals the minimum edge cut separating the two sets."""
    src = sources if isinstance(sources, int) else mask_of(sources, g.n)
    dst = sinks if isinstance(sinks, int) else mask_of(sinks, g.n)
    if not src or not dst:
        raise GraphInputError("flow terminals must be nonempty")
    if src & dst:
        raise GraphInputError("flow terminal sets overlap")
    return _unit_flow(g, src, dst)[0]


# -- lambda ---------------------------------------------------------------------


def _edge_connectivity_detail(g: Graph) -> tuple[int, int | None]:
    if g.n < 2:
        raise NotApplicable("edge-connectivity needs order >= 2")
    if not is_connected(g):
        return 0, _component_mask(g, 0)
    best = g.min_degree()
    best_mask = None
    for v in range(1, g.n):
        value, side = _unit_flow(g, 1, 1 << v, limit=best + 1)
        if side is None:
            continue
        if value < best or (value == best and (best_mask is None or side < best_mask)):
            best = value
            best_mask = side
        if best == 0:
            break
    return best, best_mask


def _component_mask(g: Graph, start: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        grow = 0
        for v in bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~comp
        comp |= frontier
    return comp


def edge_connectivity(g: Graph) -> int:
    """lambda(G): minimum edge-cut size, computed by n-1 root-to-vertex flow
    runs; 0 when disconnected."""
    return _edge_connectivity_detail(g)[0]


# -- cut repair -----------------------------------------------------------------


def repair_side_mask(g: Graph, mask: int) -> int:
    """Migrate vertices isolated within their side to the other side.

    Each migration strictly decreases the cut, so the result never exceeds
    the input cut size (asserted).  Vertices of simple degree 0 are left
    where they are; a migration wave that would empty a side raises.
    """
    full = g.full_mask
    if mask == 0 or mask == full:
        raise GraphInputError("repair needs a proper bipartition")
    before = cut_size(g, mask)
    movable = mask_of(
        (v for v in range(g.n) if g.adj[v] & ~(1 << v)), g.n
    )
    while True:
        iso_a = 0
        for v in bits(mask & movable):
            if not g.adj[v] & mask & ~(1 << v):
                iso_a |= 1 << v
        if iso_a == mask:
            raise GraphInputError("repair would empty side A")
        mask &= ~iso_a
        comp = full & ~mask
        iso_b = 0
        for v in bits(comp & movable):
            if not g.adj[v] & comp & ~(1 << v):
                iso_b |= 1 << v
        if iso_b == comp:
            raise GraphInputError("repair would empty side B")
        mask |= iso_b
        if not iso_a and not iso_b:
            break
    after = cut_size(g, mask)
    assert after <= before, "cut repair increased the cut size"
    return mask


# -- lambda' (flow route) --------------------------------------------------------


def _disjoint_edge_pairs(edges: list[Edge]):
    for i in range(len(edges)):
        e1 = edges[i]
        for j in range(i + 1, len(edges)):
            e2 = edges[j]
            if len({e1.u, e1.v, e2.u, e2.v}) == 4:
                yield e1, e2


def restricted_edge_connectivity_witness(
    g: Graph,
) -> tuple[int | float, int | None]:
    """lambda'(G) by the edge-pair contraction reduction, with a witness mask.

    Every vertex-disjoint edge pair seeds one flow run; the terminal cut is
    repaired into a restricted cut (never larger), and the minimum over all
    pairs is exact because the optimal restricted cut has an edge on each
    side.  Runs are pruned against the running best and stop early once the
    plain edge-connectivity lower bound is reached.
    """
    if not g.is_simple:
        raise NotApplicable("restricted edge-connectivity requires a loop-free graph")
    if not is_connected(g):
        raise NotApplicable("restricted edge-connectivity requires a connected graph")
    edges = g.simple_edges()
    pairs = list(_disjoint_edge_pairs(edges))
    if not pairs:
        return INFINITE, None
    best = min_edge_degree(g)  # lambda' <= xi holds whenever lambda' is finite
    lam = edge_connectivity(g)
    best_mask = None
    for e1, e2 in pairs:
        if best_mask is not None and best <= lam:
            break
        src = (1 << e1.u) | (1 << e1.v)
        dst = (1 << e2.u) | (1 << e2.v)
        value, side = _unit_flow(g, src, dst, limit=best + 1)
        if side is None:
            continue
        repaired = repair_side_mask(g, side)
        rvalue = cut_size(g, repaired)
        norm = repaired if repaired & 1 else g.full_mask & ~repaired
        if rvalue < best or (
            rvalue == best and (best_mask is None or norm < best_mask)
        ):
            best = rvalue
            best_mask = norm
    return best, best_mask


def restricted_edge_connectivity(g: Graph) -> int | float:
    """lambda'(G); INFINITE when no two vertex-disjoint edges exist."""
    return restricted_edge_connectivity_witness(g)[0]


# -- lambda' (exhaustive oracle) ---------------------------------------------


@dataclass(frozen=True)
class SubsetScan:
    """Minima over anchored bipartitions (vertex 0 kept on side A).

    ``restricted`` means neither induced side has an isolated vertex; the
    ``*_mask`` fields hold the lexicographically smallest minimizing side-A
    bit set, or None when no subset satisfies the predicate.
    """

    order: int
    min_any: int | None
    mask_any: int | None
    min_ge2: int | None
    mask_ge2: int | None
    min_restricted: int | None
    mask_restricted: int | None
    min_restricted3: int | None
    mask_restricted3: int | None


def _merge(best: tuple[int, int] | None, value: int, mask: int):
    if best is None or value < best[0]:
        return (value, mask)
    return best


@lru_cache(maxsize=1024)
def _subset_scan_cached(g: Graph) -> SubsetScan:
    n = g.n
    if n < 2:
        return SubsetScan(n, None, None, None, None, None, None, None, None)
    dtype = np.uint32 if n <= 32 else np.uint64
    sadj = [g.adj[v] & ~(1 << v) for v in range(n)]
    sdeg = [m.bit_count() for m in sadj]
    sadj_np = [dtype(m) for m in sadj]
    total = 1 << (n - 1)
    chunk = min(total, 1 << _SCAN_CHUNK_BITS)
    best = {"any": None, "ge2": None, "restricted": None, "restricted3": None}
    one = dtype(1)
    for start in range(0, total, chunk):
        count = min(chunk, total - start)
        masks = (np.arange(start, start + count, dtype=dtype) << one) | one
        size_a = np.bitwise_count(masks).astype(np.int16)
        cut = np.zeros(count, dtype=np.uint16)
        iso_a = np.zeros(count, dtype=bool)
        iso_b = np.zeros(count, dtype=bool)
        for v in range(n):
            inside = np.bitwise_count(masks & sadj_np[v]).astype(np.uint16)
            in_a = ((masks >> dtype(v)) & one).astype(bool)
            cut += np.where(in_a, np.uint16(sdeg[v]) - inside, np.uint16(0))
            iso_a |= in_a & (inside == 0)
            iso_b |= ~in_a & (inside == sdeg[v])
        size_b = n - size_a
        preds = {
            "any": size_b >= 1,
            "ge2": (size_a >= 2) & (size_b >= 2),
            "restricted": ~iso_a & ~iso_b & (size_b >= 1),
        }
        preds["restricted3"] = preds["restricted"] & (size_a >= 3) & (size_b >= 3)
        for name, pred in preds.items():
            vals = np.where(pred, cut, _SENTINEL)
            i = int(np.argmin(vals))
            if vals[i] != _SENTINEL:
                best[name] = _merge(best[name], int(vals[i]), int(masks[i]))
    fields = []
    for name in ("any", "ge2", "restricted", "restricted3"):
        if best[name] is None:
            fields += [None, None]
        else:
            fields += [best[name][0], best[name][1]]
    return SubsetScan(n, *fields)


def subset_scan(g: Graph, budget: int = ORACLE_BUDGET) -> SubsetScan:
    """Exhaustive anchored bipartition sweep; raises beyond the vertex budget."""
    if g.n > budget:
        raise OverBudget(f"subset scan of order {g.n} exceeds budget {budget}")
    return _subset_scan_cached(g)


def clear_scan_cache() -> None:
    _subset_scan_cached.cache_clear()


def lambda_prime_oracle(g: Graph, budget: int = ORACLE_BUDGET) -> int | float:
    """Brute-force lambda': minimum cut over bipartitions with no isolated
    vertex on either induced side; INFINITE when no such bipartition exists."""
    scan = subset_scan(g, budget)
    return INFINITE if scan.min_restricted is None else scan.min_restricted


# -- flow-certified fallbacks beyond the oracle budget -------------------------


def _min_cut_ge2_exceeds(g: Graph, threshold: int) -> bool:
    """True iff every bipartition with both sides >= 2 cuts more than
    ``threshold``; decided by flows seeded with every disjoint vertex-pair
    combination."""
    n = g.n
    pairs = [
        (1 << a) | (1 << b) for a in range(n) for b in range(a + 1, n)
    ]
    for i, src in enumerate(pairs):
        for dst in pairs[i + 1:]:
            if src & dst:
                continue
            value, side = _unit_flow(g, src, dst, limit=threshold + 1)
            if side is not None and value <= threshold:
                return False
    return True


def _connected_triples(g: Graph) -> list[int]:
    seen = set()
    for v in range(g.n):
        nbrs = list(bits(g.adj[v] & ~(1 << v)))
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                seen.add((1 << v) | (1 << nbrs[i]) | (1 << nbrs[j]))
    return sorted(seen)


def _restricted3_at_most(g: Graph, threshold: int) -> tuple[bool, int | None]:
    """Search for a restricted bipartition, both sides >= 3, cutting at most
    ``threshold``; flows are seeded with every disjoint pair of connected
    3-vertex subsets and the resulting cuts are repaired and validated."""
    triples = _connected_triples(g)
    for i, src in enumerate(triples):
        for dst in triples[i + 1:]:
            if src & dst:
                continue
            value, side = _unit_flow(g, src, dst, limit=threshold + 1)
            if side is None:
                continue
            repaired = repair_side_mask(g, side)
            comp = g.full_mask & ~repaired
            if repaired.bit_count() < 3 or comp.bit_count() < 3:
                continue
            rvalue = cut_size(g, repaired)
            if rvalue <= threshold:
                norm = repaired if repaired & 1 else comp
                return True, norm
    return False, None


# -- classifications ------------------------------------------------------------


def is_lambda_optimal(g: Graph) -> bool:
    """lambda(G) == delta(G)."""
    if g.n < 2:
        raise NotApplicable("lambda-optimality needs order >= 2")
    return edge_connectivity(g) == g.min_degree()


def is_super_lambda(g: Graph, budget: int = ORACLE_BUDGET) -> bool:
    """True iff every minimum edge-cut isolates a vertex: lambda == delta and
    every bipartition with both sides of size >= 2 cuts more than lambda."""
    if g.n < 3:
        raise NotApplicable("super-lambda needs order >= 3")
    if not is_connected(g):
        raise NotApplicable("super-lambda needs a connected graph")
    lam = edge_connectivity(g)
    if lam != g.min_degree():
        return False
    if g.n <= budget:
        scan = subset_scan(g, budget)
        return scan.min_ge2 is None or scan.min_ge2 > lam
    return _min_cut_ge2_exceeds(g, lam)


def is_lambda_prime_optimal(g: Graph) -> bool:
    """lambda'(G) == xi(G); defined for connected non-stars of order >= 4."""
    if not g.is_simple:
        raise NotApplicable("lambda'-optimality requires a loop-free graph")
    if not is_connected(g):
        raise NotApplicable("lambda'-optimality requires a connected graph")
    if g.n < 4 or is_star(g):
        raise NotApplicable("lambda'-optimality needs order >= 4 and a non-star")
    value = restricted_edge_connectivity(g)
    if value == INFINITE:
        raise NotApplicable("lambda' is infinite")
    return value == min_edge_degree(g)


def _super_lambda_prime_detail(
    g: Graph, budget: int = ORACLE_BUDGET
) -> tuple[bool, int | None, bool]:
    """(is_super, violating side mask or None, flow_certified)."""
    if not g.is_simple:
        raise NotApplicable("super-lambda' requires a loop-free graph")
    if not is_connected(g):
        raise NotApplicable("super-lambda' requires a connected graph")
    if g.n <= budget:
        scan = subset_scan(g, budget)
        if scan.min_restricted is None:
            raise NotApplicable("lambda' is infinite")
        value = scan.min_restricted
        xi = min_edge_degree(g)
        if value != xi:
            return False, scan.mask_restricted, False
        if scan.min_restricted3 is not None and scan.min_restricted3 == value:
            return False, scan.mask_restricted3, False
        return True, None, False
    value, wmask = restricted_edge_connectivity_witness(g)
    if value == INFINITE:
        raise NotApplicable("lambda' is infinite")
    if value != min_edge_degree(g):
        return False, wmask, True
    found, mask = _restricted3_at_most(g, value)
    if found:
        return False, mask, True
    return True, None, True


def is_super_lambda_prime(g: Graph, budget: int = ORACLE_BUDGET) -> bool:
    """True iff every minimum restricted edge-cut isolates an edge.

    Raises NotApplicable (not False) when lambda' is infinite.
    """
    return _super_lambda_prime_detail(g, budget)[0]


# -- witnesses ------------------------------------------------------------------


@dataclass(frozen=True)
class CutWitness:
    """A bipartition certifying a cut value, tagged by its shape."""

    value: int
    bipartition: Bipartition
    kind: str  # vertex-isolating | edge-isolating | large-both-sides


def witness_kind(g: Graph, side_a) -> str:
    mask = side_a if isinstance(side_a, int) else mask_of(side_a, g.n)
    comp = g.full_mask & ~mask

    def single(m: int) -> bool:
        return m.bit_count() == 1

    def induces_k2(m: int) -> bool:
        if m.bit_count() != 2:
            return False
        u = (m & -m).bit_length() - 1
        v = (m & (m - 1)).bit_length() - 1
        return g.has_edge(u, v) and not g.has_loop(u) and not g.has_loop(v)

    if single(mask) or single(comp):
        return "vertex-isolating"
    if induces_k2(mask) or induces_k2(comp):
        return "edge-isolating"
    return "large-both-sides"


def make_witness(g: Graph, side_a) -> CutWitness:
    mask = side_a if isinstance(side_a, int) else mask_of(side_a, g.n)
    return CutWitness(
        value=cut_size(g, mask),
        bipartition=Bipartition.of(g, mask),
        kind=witness_kind(g, mask),
    )


def validate_witness(g: Graph, w: CutWitness) -> None:
    """Recompute everything a witness claims; raises on any mismatch."""
    mask = mask_of(w.bipartition.side_a, g.n)
    comp = mask_of(w.bipartition.side_b, g.n)
    if mask | comp != g.full_mask or mask & comp:
        raise ValueError("witness sides do not partition the vertex set")
    fresh = Bipartition.of(g, mask)
    if fresh.cut_edges != w.bipartition.cut_edges:
        raise ValueError("witness cut edges are not the crossing edges")
    if w.value != cut_size(g, mask) or w.value != len(w.bipartition.cut_edges):
        raise ValueError("witness value does not recompute")
    if w.kind != witness_kind(g, mask):
        raise ValueError("witness kind does not recompute")


# -- the aggregate report --------------------------------------------------------


@dataclass(frozen=True)
class ConnectivityReport:
    """Every invariant and classification for one graph; None marks a field
    whose preconditions the graph does not meet."""

    order: int
    size: int
    min_degree: int | None
    min_edge_degree: int | None
    lambda_: int | None
    lambda_prime: int | float | None
    lambda_optimal: bool | None
    super_lambda: bool | None
    lambda_prime_optimal: bool | None
    super_lambda_prime: bool | None
    flow_certified: bool
    witnesses: dict

    def to_dict(self) -> dict:
        wit = {
            key: _witness_dict(w) if w is not None else None
            for key, w in self.witnesses.items()
        }
        return {
            "order": self.order,
            "size": self.size,
            "min_degree": self.min_degree,
            "min_edge_degree": self.min_edge_degree,
            "lambda": self.lambda_,
            "lambda_prime": json_value(self.lambda_prime),
            "lambda_optimal": self.lambda_optimal,
            "super_lambda": self.super_lambda,
            "lambda_prime_optimal": self.lambda_prime_optimal,
            "super_lambda_prime": self.super_lambda_prime,
            "flow_certified": self.flow_certified,
            "witnesses": wit,
        }


def json_value(v):
    """JSON-stable scalar: INFINITE serializes as the string "infinity"."""
    if v == INFINITE:
        return "infinity"
    return v


def _witness_dict(w: CutWitness) -> dict:
    return {
        "value": w.value,
        "kind": w.kind,
        "side_a": sorted(w.bipartition.side_a),
        "side_b": sorted(w.bipartition.side_b),
        "cut_edges": [[e.u, e.v] for e in sorted(w.bipartition.cut_edges)],
    }


def full_report(g: Graph, oracle_budget: int = ORACLE_BUDGET) -> ConnectivityReport:
    """Compute every field of the report, downgrading precondition failures
    to None instead of raising."""
    delta = g.min_degree()
    try:
        xi = min_edge_degree(g)
    except GraphInputError:
        xi = None

    witnesses: dict[str, CutWitness | None] = {}
    lam = lam_mask = None
    if g.n >= 2:
        lam, lam_mask = _edge_connectivity_detail(g)
    witnesses["lambda"] = make_witness(g, lam_mask) if lam_mask is not None else None
    lam_opt = None if lam is None else lam == delta

    super_lam = None
    try:
        super_lam = is_super_lambda(g, oracle_budget)
    except NotApplicable:
        pass

    flow_certified = False
    lp = None
    lp_mask = None
    super_lp = None
    violation_mask = None
    if g.is_simple and is_connected(g) and g.n >= 1:
        if g.n <= oracle_budget:
            scan = subset_scan(g, oracle_budget)
            lp = INFINITE if scan.min_restricted is None else scan.min_restricted
            lp_mask = scan.mask_restricted
        else:
            flow_certified = True
            lp, lp_mask = restricted_edge_connectivity_witness(g)
        if lp != INFINITE:
            super_lp, violation_mask, certified = _super_lambda_prime_detail(
                g, oracle_budget
            )
            flow_certified = flow_certified or certified
    witnesses["lambda_prime"] = (
        make_witness(g, lp_mask) if lp_mask is not None else None
    )
    witnesses["super_lambda_prime_violation"] = (
        make_witness(g, violation_mask) if violation_mask is not None else None
    )

    lp_opt = None
    if lp is not None and lp != INFINITE and xi is not None:
        if g.n >= 4 and not is_star(g):
            lp_opt = lp == xi

    return ConnectivityReport(
        order=g.n,
        size=g.size,
        min_degree=delta,
        min_edge_degree=xi,
        lambda_=lam,
        lambda_prime=lp,
        lambda_optimal=lam_opt,
        super_lambda=super_lam,
        lambda_prime_optimal=lp_opt,
        super_lambda_prime=super_lp,
        flow_certified=flow_certified,
        witnesses=witnesses,
    )
