"""Empirical checkers for the product connectivity laws, plus corpus sweeps.

Each checker evaluates one claim on one instance and reports both sides of
the claimed equality or implication.  The claim catalog:

* THM_1_1:  lambda'(G x K_n) = min{(n-1) xi(G) + 2(n-2), n(n-1) lambda'(G)}
            for nontrivial connected G, n >= 3.
* THM_1_2:  lambda'(G x T_n) = min{n xi(G) + 2(n-1), n^2 lambda'(G)},
            same hypotheses.
* LEM_2_1:  in K_2 x K_n (n >= 5), every vertex subset A with
            2 <= |A| <= 2n-2 has cut >= 2(n-2), with equality exactly when
            A or its complement induces K_2.
* LEM_2_3:  the same in K_2 x T_n (n >= 3) with bound 2(n-1).
* COR_2_2:  K_2 x K_n is super-lambda and super-lambda' (n >= 5).
* COR_2_4:  K_2 x T_n is super-lambda and super-lambda' (n >= 3).
* THM_3_1:  n(n-1) lambda'(G) > (n-1) xi(G) + 2(n-2) implies G x K_n is
            super-lambda' (n >= 5); infinite lambda' satisfies the premise.
* COR_3_2:  lambda'-optimal G implies G x K_n super-lambda' (n >= 5).
* THM_3_3 / COR_3_4: the analogues for G x T_n (n >= 3) with premise
            n^2 lambda'(G) > n xi(G) + 2(n-1).

COR_3_2 / COR_3_4 additionally require G connected here, since
lambda'-optimality is only defined for connected non-stars of order >= 4.
"""

from __future__ import annotations

import json
import signal
from collections import Counter
from dataclasses import dataclass, field

from .connectivity import (
    ORACLE_BUDGET,
    edge_connectivity,
    is_lambda_prime_optimal,
    is_super_lambda,
    is_super_lambda_prime,
    json_value,
    lambda_prime_oracle,
    restricted_edge_connectivity,
)
from .errors import GraphInputError, NotApplicable, OverBudget
from .families import CorpusSpec, complete_graph, direct_product, total_graph
from .graph import Graph, bits, cut_size, is_connected, min_edge_degree
from .io import emit_graph6

__all__ = [
    "CLAIM_IDS",
    "GRAPH_CLAIMS",
    "FAMILY_CLAIMS",
    "CLAIM_MIN_N",
    "DEFAULT_N",
    "ClaimCheckResult",
    "CorpusSpec",
    "SweepResult",
    "check_thm_1_1",
    "check_thm_1_2",
    "check_lemma_2_1",
    "check_lemma_2_3",
    "check_cor_2_2",
    "check_cor_2_4",
    "check_thm_3_1",
    "check_cor_3_2",
    "check_thm_3_3",
    "check_cor_3_4",
    "sweep",
]

CLAIM_IDS = (
    "THM_1_1",
    "THM_1_2",
    "LEM_2_1",
    "LEM_2_3",
    "COR_2_2",
    "COR_2_4",
    "THM_3_1",
    "COR_3_2",
    "THM_3_3",
    "COR_3_4",
)

# claims parameterized by (graph, n) versus by n alone
GRAPH_CLAIMS = ("THM_1_1", "THM_1_2", "THM_3_1", "COR_3_2", "THM_3_3", "COR_3_4")
FAMILY_CLAIMS = ("LEM_2_1", "LEM_2_3", "COR_2_2", "COR_2_4")

CLAIM_MIN_N = {
    "THM_1_1": 3,
    "THM_1_2": 3,
    "LEM_2_1": 5,
    "LEM_2_3": 3,
    "COR_2_2": 5,
    "COR_2_4": 3,
    "THM_3_1": 5,
    "COR_3_2": 5,
    "THM_3_3": 3,
    "COR_3_4": 3,
}

# claims whose n >= 5 floor may be probed down to 3 as exploration
_PROBEABLE = ("THM_3_1", "COR_3_2")

DEFAULT_N = {
    "THM_1_1": (5, 6),
    "THM_1_2": (3, 4),
    "LEM_2_1": (5, 6),
    "LEM_2_3": (3, 4),
    "COR_2_2": (5, 6),
    "COR_2_4": (3, 4),
    "THM_3_1": (5, 6),
    "COR_3_2": (5, 6),
    "THM_3_3": (3, 4),
    "COR_3_4": (3, 4),
}

VERDICT_VERIFIED = "verified"
VERDICT_COUNTEREXAMPLE = "counterexample"
VERDICT_NOT_MET = "hypothesis-not-met"
VERDICT_SKIPPED = "skipped-over-budget"


@dataclass(frozen=True)
class ClaimCheckResult:
    claim: str
    instance: dict
    hypothesis_holds: bool
    conclusion_holds: bool | None
    verdict: str
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "instance": self.instance,
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
            "verdict": self.verdict,
            "detail": self.detail,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _instance(g: Graph | None, n: int, label: str | None = None) -> dict:
    inst: dict = {"n": n}
    if g is not None:
        inst["graph"] = label if label is not None else f"order{g.n}"
        inst["graph6"] = emit_graph6(g) if g.is_simple and 0 < g.n <= 62 else None
        inst["order"] = g.n
    return inst


def _admissible_factor(g: Graph) -> bool:
    return g.n >= 2 and g.is_simple and is_connected(g)


def _factor_stats(g: Graph) -> tuple[int | float, int]:
    lp = restricted_edge_connectivity(g)
    xi = min_edge_degree(g)
    return lp, xi


def _product_lambda_prime(gp: Graph, oracle_budget: int) -> int | float:
    if gp.n <= oracle_budget:
        return lambda_prime_oracle(gp, oracle_budget)
    return restricted_edge_connectivity(gp)


def _equality_claim(
    claim: str,
    g: Graph,
    n: int,
    factor: Graph,
    term_edge,
    term_lift,
    label: str | None,
    oracle_budget: int,
) -> ClaimCheckResult:
    inst = _instance(g, n, label)
    if not _admissible_factor(g):
        return ClaimCheckResult(
            claim, inst, False, None, VERDICT_NOT_MET,
            {"reason": "factor graph must be nontrivial, connected, loop-free"},
        )
    gp = direct_product(g, factor)
    if gp.n > oracle_budget:
        return ClaimCheckResult(
            claim, inst, True, None, VERDICT_SKIPPED,
            {"product_order": gp.n, "oracle_budget": oracle_budget},
        )
    formula = min(term_edge, term_lift)
    computed = _product_lambda_prime(gp, oracle_budget)
    ok = computed == formula
    detail = {
        "term_edge_degree": json_value(term_edge),
        "term_lifted_cut": json_value(term_lift),
        "formula": json_value(formula),
        "computed": json_value(computed),
        "product_order": gp.n,
    }
    return ClaimCheckResult(
        claim, inst, True, ok,
        VERDICT_VERIFIED if ok else VERDICT_COUNTEREXAMPLE, detail,
    )


def check_thm_1_1(
    g: Graph, n: int, label: str | None = None, oracle_budget: int = ORACLE_BUDGET
) -> ClaimCheckResult:
    if n < CLAIM_MIN_N["THM_1_1"]:
        raise GraphInputError("THM_1_1 needs n >= 3")
    if _admissible_factor(g):
        lp, xi = _factor_stats(g)
        term_edge = (n - 1) * xi + 2 * (n - 2)
        term_lift = n * (n - 1) * lp
    else:
        term_edge = term_lift = None
    return _equality_claim(
        "THM_1_1", g, n, complete_graph(n), term_edge, term_lift, label, oracle_budget
    )


def check_thm_1_2(
    g: Graph, n: int, label: str | None = None, oracle_budget: int = ORACLE_BUDGET
) -> ClaimCheckResult:
    if n < CLAIM_MIN_N["THM_1_2"]:
        raise GraphInputError("THM_1_2 needs n >= 3")
    if _admissible_factor(g):
        lp, xi = _factor_stats(g)
        term_edge = n * xi + 2 * (n - 1)
        term_lift = n * n * lp
    else:
        term_edge = term_lift = None
    return _equality_claim(
        "THM_1_2", g, n, total_graph(n), term_edge, term_lift, label, oracle_budget
    )


def _check_cut_lemma(claim: str, n: int, factor: Graph, bound: int) -> ClaimCheckResult:
    """Exhaustive bound + two-way equality characterization on K_2 x factor."""
    gp = direct_product(complete_graph(2), factor)
    order = gp.n
    full = gp.full_mask
    edge_pair_masks = set()
    for v in range(order):
        for w in bits(gp.adj[v] >> v):
            if w:
                edge_pair_masks.add((1 << v) | (1 << (v + w)))

    subsets = 0
    violations = []
    achievers = set()
    # anchored enumeration; each unanchored subset is a complement of an
    # anchored one, and cut size and the size window are complement-symmetric
    for k in range(1 << (order - 1)):
        mask = (k << 1) | 1
        size = mask.bit_count()
        if not 2 <= size <= order - 2:
            continue
        subsets += 1
        cut = cut_size(gp, mask)
        if cut < bound:
            violations.append({"side_a": sorted(bits(mask)), "cut": cut})
        elif cut == bound:
            achievers.add(mask)

    expected = set()
    for pm in edge_pair_masks:
        anchored = pm if pm & 1 else full & ~pm
        expected.add(anchored)
        if cut_size(gp, pm) != bound:
            violations.append(
                {"side_a": sorted(bits(pm)), "cut": cut_size(gp, pm),
                 "reason": "edge pair does not meet the bound with equality"}
            )
    characterization_ok = achievers == expected
    ok = not violations and characterization_ok
    detail = {
        "bound": bound,
        "subsets_checked": subsets,
        "equality_achievers": len(achievers),
        "expected_achievers": len(expected),
        "violations": violations[:5],
        "characterization_exact": characterization_ok,
    }
    return ClaimCheckResult(
        claim, {"n": n, "product_order": order}, True, ok,
        VERDICT_VERIFIED if ok else VERDICT_COUNTEREXAMPLE, detail,
    )


def check_lemma_2_1(n: int) -> ClaimCheckResult:
    if n < CLAIM_MIN_N["LEM_2_1"]:
        raise GraphInputError("LEM_2_1 needs n >= 5")
    if n > 12:
        raise OverBudget("LEM_2_1 exhaustive check capped at n = 12")
    return _check_cut_lemma("LEM_2_1", n, complete_graph(n), 2 * (n - 2))


def check_lemma_2_3(n: int) -> ClaimCheckResult:
    if n < CLAIM_MIN_N["LEM_2_3"]:
        raise GraphInputError("LEM_2_3 needs n >= 3")
    if n > 12:
        raise OverBudget("LEM_2_3 exhaustive check capped at n = 12")
    return _check_cut_lemma("LEM_2_3", n, total_graph(n), 2 * (n - 1))


def _check_super_corollary(
    claim: str, n: int, factor: Graph, oracle_budget: int
) -> ClaimCheckResult:
    gp = direct_product(complete_graph(2), factor)
    if gp.n > oracle_budget:
        return ClaimCheckResult(
            claim, {"n": n}, True, None, VERDICT_SKIPPED,
            {"product_order": gp.n, "oracle_budget": oracle_budget},
        )
    sl = is_super_lambda(gp, oracle_budget)
    slp = is_super_lambda_prime(gp, oracle_budget)
    ok = sl and slp
    detail = {
        "super_lambda": sl,
        "super_lambda_prime": slp,
        "lambda": edge_connectivity(gp),
        "lambda_prime": json_value(lambda_prime_oracle(gp, oracle_budget)),
        "xi": min_edge_degree(gp),
        "product_order": gp.n,
    }
    return ClaimCheckResult(
        claim, {"n": n}, True, ok,
        VERDICT_VERIFIED if ok else VERDICT_COUNTEREXAMPLE, detail,
    )


def check_cor_2_2(n: int, oracle_budget: int = ORACLE_BUDGET) -> ClaimCheckResult:
    if n < CLAIM_MIN_N["COR_2_2"]:
        raise GraphInputError("COR_2_2 needs n >= 5")
    return _check_super_corollary("COR_2_2", n, complete_graph(n), oracle_budget)


def check_cor_2_4(n: int, oracle_budget: int = ORACLE_BUDGET) -> ClaimCheckResult:
    if n < CLAIM_MIN_N["COR_2_4"]:
        raise GraphInputError("COR_2_4 needs n >= 3")
    return _check_super_corollary("COR_2_4", n, total_graph(n), oracle_budget)


def _check_super_implication(
    claim: str,
    g: Graph,
    n: int,
    factor: Graph,
    hypothesis: bool | None,
    hypothesis_detail: dict,
    label: str | None,
    oracle_budget: int,
    exploratory: bool = False,
) -> ClaimCheckResult:
    inst = _instance(g, n, label)
    detail = dict(hypothesis_detail)
    if exploratory:
        detail["exploratory"] = True
    if hypothesis is None:
        return ClaimCheckResult(claim, inst, False, None, VERDICT_NOT_MET, detail)
    gp = direct_product(g, factor)
    detail["product_order"] = gp.n
    if gp.n > oracle_budget:
        detail["oracle_budget"] = oracle_budget
        return ClaimCheckResult(claim, inst, hypothesis, None, VERDICT_SKIPPED, detail)
    try:
        super_lp = is_super_lambda_prime(gp, oracle_budget)
    except NotApplicable:
        super_lp = None
    detail["product_super_lambda_prime"] = super_lp
    if not hypothesis:
        # sharpness data: premise fails but the product's classification is kept
        return ClaimCheckResult(claim, inst, False, super_lp, VERDICT_NOT_MET, detail)
    ok = bool(super_lp)
    return ClaimCheckResult(
        claim, inst, True, ok,
        VERDICT_VERIFIED if ok else VERDICT_COUNTEREXAMPLE, detail,
    )


def check_thm_3_1(
    g: Graph,
    n: int,
    label: str | None = None,
    oracle_budget: int = ORACLE_BUDGET,
    probe_small_n: bool = False,
) -> ClaimCheckResult:
    floor = 3 if probe_small_n else CLAIM_MIN_N["THM_3_1"]
    if n < floor:
        raise GraphInputError(f"THM_3_1 needs n >= {floor}")
    exploratory = n < CLAIM_MIN_N["THM_3_1"]
    if not _admissible_factor(g):
        return ClaimCheckResult(
            "THM_3_1", _instance(g, n, label), False, None, VERDICT_NOT_MET,
            {"reason": "factor graph must be nontrivial, connected, loop-free"},
        )
    lp, xi = _factor_stats(g)
    lhs = n * (n - 1) * lp  # infinite lambda' satisfies the strict premise
    rhs = (n - 1) * xi + 2 * (n - 2)
    hypothesis = lhs > rhs
    detail = {"hypothesis_lhs": json_value(lhs), "hypothesis_rhs": rhs,
              "factor_lambda_prime": json_value(lp), "factor_xi": xi}
    return _check_super_implication(
        "THM_3_1", g, n, complete_graph(n), hypothesis, detail, label,
        oracle_budget, exploratory,
    )


def check_cor_3_2(
    g: Graph,
    n: int,
    label: str | None = None,
    oracle_budget: int = ORACLE_BUDGET,
    probe_small_n: bool = False,
) -> ClaimCheckResult:
    floor = 3 if probe_small_n else CLAIM_MIN_N["COR_3_2"]
    if n < floor:
        raise GraphInputError(f"COR_3_2 needs n >= {floor}")
    exploratory = n < CLAIM_MIN_N["COR_3_2"]
    try:
        optimal = is_lambda_prime_optimal(g)
        detail = {"factor_lambda_prime_optimal": optimal}
        hypothesis: bool | None = optimal
    except NotApplicable as exc:
        hypothesis = None
        detail = {"reason": f"lambda'-optimality not applicable: {exc}"}
    return _check_super_implication(
        "COR_3_2", g, n, complete_graph(n), hypothesis, detail, label,
        oracle_budget, exploratory,
    )


def check_thm_3_3(
    g: Graph, n: int, label: str | None = None, oracle_budget: int = ORACLE_BUDGET
) -> ClaimCheckResult:
    if n < CLAIM_MIN_N["THM_3_3"]:
        raise GraphInputError("THM_3_3 needs n >= 3")
    if not _admissible_factor(g):
        return ClaimCheckResult(
            "THM_3_3", _instance(g, n, label), False, None, VERDICT_NOT_MET,
            {"reason": "factor graph must be nontrivial, connected, loop-free"},
        )
    lp, xi = _factor_stats(g)
    lhs = n * n * lp
    rhs = n * xi + 2 * (n - 1)
    hypothesis = lhs > rhs
    detail = {"hypothesis_lhs": json_value(lhs), "hypothesis_rhs": rhs,
              "factor_lambda_prime": json_value(lp), "factor_xi": xi}
    return _check_super_implication(
        "THM_3_3", g, n, total_graph(n), hypothesis, detail, label, oracle_budget
    )


def check_cor_3_4(
    g: Graph, n: int, label: str | None = None, oracle_budget: int = ORACLE_BUDGET
) -> ClaimCheckResult:
    if n < CLAIM_MIN_N["COR_3_4"]:
        raise GraphInputError("COR_3_4 needs n >= 3")
    try:
        optimal = is_lambda_prime_optimal(g)
        detail = {"factor_lambda_prime_optimal": optimal}
        hypothesis: bool | None = optimal
    except NotApplicable as exc:
        hypothesis = None
        detail = {"reason": f"lambda'-optimality not applicable: {exc}"}
    return _check_super_implication(
        "COR_3_4", g, n, total_graph(n), hypothesis, detail, label, oracle_budget
    )


_CHECKERS = {
    "THM_1_1": lambda g, n, label, kw: check_thm_1_1(g, n, label, kw["oracle_budget"]),
    "THM_1_2": lambda g, n, label, kw: check_thm_1_2(g, n, label, kw["oracle_budget"]),
    "THM_3_1": lambda g, n, label, kw: check_thm_3_1(
        g, n, label, kw["oracle_budget"], kw["probe_small_n"]
    ),
    "COR_3_2": lambda g, n, label, kw: check_cor_3_2(
        g, n, label, kw["oracle_budget"], kw["probe_small_n"]
    ),
    "THM_3_3": lambda g, n, label, kw: check_thm_3_3(g, n, label, kw["oracle_budget"]),
    "COR_3_4": lambda g, n, label, kw: check_cor_3_4(g, n, label, kw["oracle_budget"]),
    "LEM_2_1": lambda n, kw: check_lemma_2_1(n),
    "LEM_2_3": lambda n, kw: check_lemma_2_3(n),
    "COR_2_2": lambda n, kw: check_cor_2_2(n, kw["oracle_budget"]),
    "COR_2_4": lambda n, kw: check_cor_2_4(n, kw["oracle_budget"]),
}


# -- the sweep --------------------------------------------------------------------


@dataclass
class SweepResult:
    results: list[ClaimCheckResult]
    summary: dict[str, int]

    @property
    def counterexamples(self) -> list[ClaimCheckResult]:
        return [
            r for r in self.results
            if r.verdict == VERDICT_COUNTEREXAMPLE and not r.detail.get("exploratory")
        ]

    def to_json_lines(self) -> str:
        return "\n".join(r.to_json() for r in self.results)


class _InstanceTimeout(Exception):
    pass


def _run_capped(fn, time_cap: int | None):
    """Run fn() under SIGALRM when available; returns (result, timed_out)."""
    if not time_cap:
        return fn(), False
    try:
        signal.signal(signal.SIGALRM, _raise_timeout)
    except ValueError:  # not on the main thread; run uncapped
        return fn(), False
    signal.alarm(time_cap)
    try:
        return fn(), False
    except _InstanceTimeout:
        return None, True
    finally:
        signal.alarm(0)
        signal.signal(signal.SIGALRM, signal.SIG_DFL)


def _raise_timeout(signum, frame):
    raise _InstanceTimeout()


def sweep(
    corpus: CorpusSpec | None,
    claims,
    n_values=None,
    oracle_budget: int = ORACLE_BUDGET,
    time_cap: int | None = 60,
    probe_small_n: bool = False,
) -> SweepResult:
    """Run the selected checkers over every (graph, n) combination.

    Family claims ignore the corpus.  Instances whose product exceeds the
    oracle budget, or whose run exceeds the per-instance time cap, are
    recorded as skipped rather than aborting the sweep.
    """
    claims = list(claims)
    for c in claims:
        if c not in CLAIM_IDS:
            raise GraphInputError(f"unknown claim {c!r}")
    kw = {"oracle_budget": oracle_budget, "probe_small_n": probe_small_n}
    results: list[ClaimCheckResult] = []
    graph_items = None
    for claim in claims:
        ns = list(n_values) if n_values else list(DEFAULT_N[claim])
        floor = 3 if (probe_small_n and claim in _PROBEABLE) else CLAIM_MIN_N[claim]
        for n in ns:
            if n < floor:
                raise GraphInputError(f"{claim} needs n >= {floor}, got {n}")
        if claim in FAMILY_CLAIMS:
            for n in ns:
                res, timed_out = _run_capped(
                    lambda: _CHECKERS[claim](n, kw), time_cap
                )
                if timed_out:
                    res = ClaimCheckResult(
                        claim, {"n": n}, True, None, VERDICT_SKIPPED,
                        {"reason": f"instance exceeded time cap {time_cap}s"},
                    )
                results.append(res)
            continue
        if corpus is None:
            raise GraphInputError(f"claim {claim} needs a corpus of factor graphs")
        if graph_items is None:
            graph_items = list(corpus.filtered())
        for label, g in graph_items:
            for n in ns:
                res, timed_out = _run_capped(
                    lambda: _CHECKERS[claim](g, n, label, kw), time_cap
                )
                if timed_out:
                    res = ClaimCheckResult(
                        claim, _instance(g, n, label), True, None, VERDICT_SKIPPED,
                        {"reason": f"instance exceeded time cap {time_cap}s"},
                    )
                results.append(res)
    summary = Counter(r.verdict for r in results)
    summary["exploratory"] = sum(1 for r in results if r.detail.get("exploratory"))
    return SweepResult(results, dict(summary))
