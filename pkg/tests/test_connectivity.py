import pytest
from hypothesis import given
from hypothesis import strategies as st

from lplab import (
    INFINITE,
    Graph,
    GraphInputError,
    NotApplicable,
    OverBudget,
    complete_graph,
    cut_size,
    cycle_graph,
    direct_product,
    edge_connectivity,
    enumerate_connected_graphs,
    full_report,
    is_lambda_optimal,
    is_lambda_prime_optimal,
    is_super_lambda,
    is_super_lambda_prime,
    lambda_prime_oracle,
    make_witness,
    max_flow_unit,
    min_edge_degree,
    path_graph,
    petersen_graph,
    random_graph,
    repair_side_mask,
    restricted_edge_connectivity,
    star_graph,
    subset_scan,
    total_graph,
    validate_witness,
    witness_kind,
)
from lplab.connectivity import restricted_edge_connectivity_witness
from lplab.graph import is_connected, mask_of

from .conftest import connected_graphs, graphs

BOWTIE = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
# two triangles joined by a bridge: lambda' = 1 < xi = 2
BRIDGED_TRIANGLES = Graph.from_edges(
    6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]
)


def test_max_flow_examples():
    assert max_flow_unit(complete_graph(5), [0], [3]) == 4
    assert max_flow_unit(cycle_graph(6), [0], [3]) == 2
    assert max_flow_unit(path_graph(4), [0], [3]) == 1


def test_max_flow_terminal_validation():
    g = complete_graph(4)
    with pytest.raises(GraphInputError):
        max_flow_unit(g, [0], [0, 1])
    with pytest.raises(GraphInputError):
        max_flow_unit(g, [], [1])


@given(connected_graphs(min_order=3, max_order=7), st.data())
def test_menger_symmetry(g, data):
    u = data.draw(st.integers(0, g.n - 1))
    v = data.draw(st.integers(0, g.n - 1).filter(lambda x: x != u))
    assert max_flow_unit(g, [u], [v]) == max_flow_unit(g, [v], [u])


def test_edge_connectivity_examples():
    assert edge_connectivity(direct_product(complete_graph(2), complete_graph(5))) == 4
    assert edge_connectivity(Graph.from_edges(4, [(0, 1), (2, 3)])) == 0
    assert edge_connectivity(cycle_graph(7)) == 2
    with pytest.raises(NotApplicable):
        edge_connectivity(Graph.empty(1))


@given(connected_graphs(min_order=2, max_order=7))
def test_lambda_at_most_delta_and_scan_agrees(g):
    lam = edge_connectivity(g)
    assert lam <= g.min_degree()
    assert subset_scan(g).min_any == lam


def test_restricted_edge_connectivity_examples():
    assert restricted_edge_connectivity(
        direct_product(complete_graph(2), complete_graph(5))
    ) == 6
    assert restricted_edge_connectivity(star_graph(3)) == INFINITE
    assert restricted_edge_connectivity(path_graph(4)) == 1
    assert restricted_edge_connectivity(BRIDGED_TRIANGLES) == 1


def test_restricted_edge_connectivity_c4_x_k5():
    gp = direct_product(cycle_graph(4), complete_graph(5))
    assert restricted_edge_connectivity(gp) == 14
    assert lambda_prime_oracle(gp) == 14


def test_restricted_edge_connectivity_preconditions():
    with pytest.raises(NotApplicable):
        restricted_edge_connectivity(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(NotApplicable):
        restricted_edge_connectivity(total_graph(3))


def test_lambda_prime_infinite_cases():
    for g in (complete_graph(3), star_graph(4), path_graph(3), Graph.empty(1)):
        assert restricted_edge_connectivity(g) == INFINITE


def test_oracle_examples():
    assert lambda_prime_oracle(complete_graph(4)) == 4
    assert lambda_prime_oracle(star_graph(3)) == INFINITE
    with pytest.raises(OverBudget):
        lambda_prime_oracle(complete_graph(6), budget=5)


def test_oracle_equivalence_exhaustive_order_6():
    for k in range(1, 7):
        for g in enumerate_connected_graphs(k):
            assert restricted_edge_connectivity(g) == lambda_prime_oracle(g)


@given(connected_graphs(min_order=1, max_order=7))
def test_oracle_equivalence_random(g):
    assert restricted_edge_connectivity(g) == lambda_prime_oracle(g)


def test_oracle_equivalence_seeded_random_order_14():
    # a slice of the larger randomized equivalence corpus
    for seed in range(25):
        g = random_graph(11 + seed % 4, 0.25, seed=seed)
        if not is_connected(g):
            continue
        assert restricted_edge_connectivity(g) == lambda_prime_oracle(g)


@given(connected_graphs(min_order=4, max_order=7))
def test_lambda_chain(g):
    lp = restricted_edge_connectivity(g)
    if lp == INFINITE:
        return
    lam = edge_connectivity(g)
    assert lam <= lp <= min_edge_degree(g)


@given(connected_graphs(min_order=2, max_order=7), st.integers(0, 1 << 6))
def test_repair_monotone(g, raw):
    mask = (raw | 1) & g.full_mask
    if mask in (0, g.full_mask):
        return
    before = cut_size(g, mask)
    try:
        repaired = repair_side_mask(g, mask)
    except GraphInputError:
        return
    assert cut_size(g, repaired) <= before
    for v in range(g.n):
        side = repaired if (repaired >> v) & 1 else g.full_mask & ~repaired
        assert g.adj[v] & side & ~(1 << v), "repaired side still has an isolated vertex"


def test_super_lambda_examples():
    assert is_super_lambda(direct_product(complete_graph(2), complete_graph(5)))
    assert not is_super_lambda(cycle_graph(5))
    assert is_super_lambda(complete_graph(4))
    with pytest.raises(NotApplicable):
        is_super_lambda(complete_graph(2))
    with pytest.raises(NotApplicable):
        is_super_lambda(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_super_lambda_prime_examples():
    assert is_super_lambda_prime(direct_product(complete_graph(2), complete_graph(5)))
    assert is_super_lambda_prime(direct_product(complete_graph(2), total_graph(3)))
    assert not is_super_lambda_prime(cycle_graph(6))
    assert is_super_lambda_prime(cycle_graph(4))
    assert not is_super_lambda_prime(BRIDGED_TRIANGLES)


def test_super_lambda_prime_infinite_is_not_applicable():
    with pytest.raises(NotApplicable):
        is_super_lambda_prime(complete_graph(3))
    with pytest.raises(NotApplicable):
        is_super_lambda_prime(star_graph(5))


def test_lambda_prime_optimal_examples():
    assert is_lambda_prime_optimal(cycle_graph(4))
    assert is_lambda_prime_optimal(petersen_graph())
    assert not is_lambda_prime_optimal(BRIDGED_TRIANGLES)
    with pytest.raises(NotApplicable):
        is_lambda_prime_optimal(star_graph(3))
    with pytest.raises(NotApplicable):
        is_lambda_prime_optimal(complete_graph(3))


def test_lambda_optimal():
    assert is_lambda_optimal(cycle_graph(5))
    assert not is_lambda_optimal(BRIDGED_TRIANGLES)
    with pytest.raises(NotApplicable):
        is_lambda_optimal(Graph.empty(1))


@given(connected_graphs(min_order=3, max_order=6))
def test_flow_certified_super_lambda_matches_oracle(g):
    assert is_super_lambda(g, budget=2) == is_super_lambda(g)


@given(connected_graphs(min_order=4, max_order=6))
def test_flow_certified_super_lambda_prime_matches_oracle(g):
    if restricted_edge_connectivity(g) == INFINITE:
        return
    assert is_super_lambda_prime(g, budget=2) == is_super_lambda_prime(g)


@given(connected_graphs(min_order=3, max_order=7))
def test_super_implies_optimal(g):
    try:
        if is_super_lambda(g):
            assert is_lambda_optimal(g)
    except NotApplicable:
        pass
    try:
        if is_super_lambda_prime(g):
            assert is_lambda_prime_optimal(g)
    except NotApplicable:
        pass


def test_witness_kinds():
    g = cycle_graph(6)
    assert witness_kind(g, [0]) == "vertex-isolating"
    assert witness_kind(g, [0, 1]) == "edge-isolating"
    assert witness_kind(g, [0, 1, 2]) == "large-both-sides"
    t = total_graph(4)
    # a looped pair does not induce a plain K_2
    assert witness_kind(t, [0, 1]) == "large-both-sides"


def test_witness_validation_catches_mismatch():
    g = cycle_graph(6)
    w = make_witness(g, [0, 1])
    validate_witness(g, w)
    other = cycle_graph(6)
    bad = make_witness(other, [0, 1, 2])
    with pytest.raises(ValueError):
        validate_witness(
            g, type(w)(value=bad.value + 1, bipartition=bad.bipartition, kind=bad.kind)
        )


def test_lambda_prime_witness_values():
    value, mask = restricted_edge_connectivity_witness(BRIDGED_TRIANGLES)
    assert value == 1
    assert cut_size(BRIDGED_TRIANGLES, mask) == 1
    assert mask & 1  # normalized to the side containing vertex 0
    value, mask = restricted_edge_connectivity_witness(star_graph(3))
    assert value == INFINITE and mask is None


def test_super_violation_witness():
    rep = full_report(cycle_graph(6))
    w = rep.witnesses["super_lambda_prime_violation"]
    assert w is not None
    assert w.kind == "large-both-sides"
    assert w.value == rep.lambda_prime == 2
    assert len(w.bipartition.side_a) == 3
    validate_witness(cycle_graph(6), w)


@given(connected_graphs(min_order=2, max_order=7))
def test_full_report_witnesses_validate(g):
    rep = full_report(g)
    for w in rep.witnesses.values():
        if w is not None:
            validate_witness(g, w)
    if rep.super_lambda_prime:
        assert rep.lambda_prime_optimal


def test_full_report_degenerate():
    rep = full_report(star_graph(3))
    assert rep.lambda_prime == INFINITE
    assert rep.to_dict()["lambda_prime"] == "infinity"
    assert rep.lambda_prime_optimal is None and rep.super_lambda_prime is None
    rep = full_report(Graph.from_edges(5, [(0, 1), (2, 3)]))
    assert rep.lambda_ == 0 and rep.lambda_prime is None
    rep = full_report(Graph.empty(1))
    assert rep.lambda_ is None and rep.lambda_prime == INFINITE
    rep = full_report(total_graph(3))
    assert rep.lambda_ == 2 and rep.lambda_prime is None


def test_report_deterministic_across_cache_clear():
    import json

    import lplab

    g = petersen_graph()
    first = json.dumps(full_report(g).to_dict(), sort_keys=True)
    lplab.clear_caches()
    second = json.dumps(full_report(g).to_dict(), sort_keys=True)
    assert first == second


def test_subset_scan_fields():
    g = cycle_graph(6)
    scan = subset_scan(g)
    assert scan.min_any == 2
    assert scan.min_ge2 == 2
    assert scan.min_restricted == 2
    assert scan.min_restricted3 == 2
    assert scan.mask_restricted is not None and scan.mask_restricted & 1
    k4 = complete_graph(4)
    scan = subset_scan(k4)
    assert scan.min_any == 3 and scan.min_ge2 == 4
    assert scan.min_restricted == 4 and scan.min_restricted3 is None


def test_subset_scan_trivial_orders():
    scan = subset_scan(Graph.empty(1))
    assert scan.min_any is None and scan.min_restricted is None


def _naive_scan(g):
    """Pure-python reference for subset_scan (anchored, first-minimum)."""
    best = {"any": None, "ge2": None, "restricted": None, "restricted3": None}

    def update(key, cut, mask):
        if best[key] is None or cut < best[key][0]:
            best[key] = (cut, mask)

    for k in range(1 << max(g.n - 1, 0)):
        mask = (k << 1) | 1
        comp = g.full_mask & ~mask
        if not comp:
            continue
        cut = cut_size(g, mask)
        size_a, size_b = mask.bit_count(), comp.bit_count()
        update("any", cut, mask)
        if size_a >= 2 and size_b >= 2:
            update("ge2", cut, mask)
        iso = any(
            not (g.adj[v] & side & ~(1 << v))
            for side in (mask, comp)
            for v in range(g.n)
            if (side >> v) & 1
        )
        if not iso:
            update("restricted", cut, mask)
            if size_a >= 3 and size_b >= 3:
                update("restricted3", cut, mask)
    return best


@given(graphs(min_order=2, max_order=6, loops=True))
def test_subset_scan_matches_naive_enumeration(g):
    scan = subset_scan(g)
    naive = _naive_scan(g)
    got = {
        "any": (scan.min_any, scan.mask_any),
        "ge2": (scan.min_ge2, scan.mask_ge2),
        "restricted": (scan.min_restricted, scan.mask_restricted),
        "restricted3": (scan.min_restricted3, scan.mask_restricted3),
    }
    for key, expected in naive.items():
        assert got[key] == (expected if expected else (None, None)), key


def test_unit_flow_against_explicit_cut():
    g = petersen_graph()
    for a, b in [(0, 7), (1, 9), (3, 6)]:
        flow = max_flow_unit(g, [a], [b])
        # any explicit bipartition separating a and b is an upper bound
        assert flow <= cut_size(g, mask_of([a], g.n))
        assert flow == 3
