"""lplab: edge-connectivity and restricted edge-connectivity of graphs and
their direct products with complete and total graphs, plus an empirical
claim-verification harness."""

from .connectivity import (
    INFINITE,
    ORACLE_BUDGET,
    ConnectivityReport,
    CutWitness,
    SubsetScan,
    edge_connectivity,
    full_report,
    is_lambda_optimal,
    is_lambda_prime_optimal,
    is_super_lambda,
    is_super_lambda_prime,
    lambda_prime_oracle,
    make_witness,
    max_flow_unit,
    repair_side_mask,
    restricted_edge_connectivity,
    subset_scan,
    validate_witness,
    witness_kind,
)
from .errors import GraphInputError, NotApplicable, OverBudget
from .families import (
    CONNECTED_GRAPH_COUNTS,
    ENUMERATION_BUDGET,
    Product,
    canonical_key,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    direct_product,
    enumerate_connected_graphs,
    named_family,
    parse_family,
    path_graph,
    petersen_graph,
    product,
    random_graph,
    star_graph,
    total_graph,
)
from .graph import (
    Bipartition,
    Edge,
    Graph,
    components,
    contract,
    cut_size,
    edge_degree,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_star,
    min_edge_degree,
)
from .harness import (
    CLAIM_IDS,
    ClaimCheckResult,
    CorpusSpec,
    SweepResult,
    check_cor_2_2,
    check_cor_2_4,
    check_cor_3_2,
    check_cor_3_4,
    check_lemma_2_1,
    check_lemma_2_3,
    check_thm_1_1,
    check_thm_1_2,
    check_thm_3_1,
    check_thm_3_3,
    sweep,
)
from .io import emit_edge_list, emit_graph6, load_graphs, parse_edge_list, parse_graph6

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop all memoized computation (subset scans, enumerations)."""
    from .connectivity import clear_scan_cache
    from .families import clear_enumeration_cache

    clear_scan_cache()
    clear_enumeration_cache()
