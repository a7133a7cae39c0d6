"""lplab command line: analyze graphs, build products, generate families,
and run claim-verification sweeps.

Exit codes: 0 success, 1 a counterexample was found, 2 usage error.
Identical arguments produce byte-identical JSON output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .connectivity import ORACLE_BUDGET, full_report
from .errors import GraphInputError, NotApplicable, OverBudget
from .families import parse_family
from .graph import Graph
from .harness import (
    CLAIM_IDS,
    FAMILY_CLAIMS,
    CorpusSpec,
    sweep,
)
from .io import emit_edge_list, emit_graph6, load_graphs, parse_graph6

USAGE_ERROR = 2


@dataclass
class RunConfig:
    command: str
    source: str | None = None
    family: str | None = None
    n: int | None = None
    left: str | None = None
    right: str | None = None
    claims: list[str] = field(default_factory=list)
    corpus: str | None = None
    n_values: list[int] = field(default_factory=list)
    oracle_budget: int = ORACLE_BUDGET
    time_cap: int = 60
    probe_small_n: bool = False
    json_output: bool = False
    out_format: str = "auto"
    seed: int = 0


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _load_graph_arg(text: str, n: int | None = None) -> Graph:
    """A graph argument is a path, a family spec, or a raw graph6 string."""
    p = Path(text)
    if p.exists():
        graphs = load_graphs(p)
        return graphs[0]
    try:
        return parse_family(text, n)
    except GraphInputError:
        pass
    return parse_graph6(text)


def _emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "g6" or (fmt == "auto" and g.is_simple):
        return emit_graph6(g) + "\n"
    return emit_edge_list(g)


def _print_report_table(rep) -> None:
    def show(v):
        if v is None:
            return "n/a"
        if v is True:
            return "yes"
        if v is False:
            return "no"
        if v == float("inf"):
            return "infinity"
        return str(v)

    rows = [
        ("order", rep.order),
        ("size", rep.size),
        ("min degree", rep.min_degree),
        ("min edge degree", rep.min_edge_degree),
        ("lambda", rep.lambda_),
        ("lambda'", rep.lambda_prime),
        ("lambda-optimal", rep.lambda_optimal),
        ("super-lambda", rep.super_lambda),
        ("lambda'-optimal", rep.lambda_prime_optimal),
        ("super-lambda'", rep.super_lambda_prime),
        ("certification", "flow" if rep.flow_certified else "exhaustive"),
    ]
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        print(f"{name:<{width}}  {show(value)}")
    for key in ("lambda", "lambda_prime", "super_lambda_prime_violation"):
        w = rep.witnesses.get(key)
        if w is not None:
            side = ",".join(str(v) for v in sorted(w.bipartition.side_a))
            print(f"witness[{key}]  value={w.value} kind={w.kind} side_a={{{side}}}")


def _cmd_analyze(cfg: RunConfig) -> int:
    spec = cfg.source or cfg.family
    if not spec:
        print("analyze: no input graph given (path, family, or graph6)", file=sys.stderr)
        return USAGE_ERROR
    g = _load_graph_arg(spec, cfg.n)
    rep = full_report(g, oracle_budget=cfg.oracle_budget)
    if cfg.json_output:
        print(_dump(rep.to_dict()))
    else:
        _print_report_table(rep)
    return 0


def _cmd_product(cfg: RunConfig) -> int:
    if not cfg.left or not cfg.right:
        print("product: both --left and --right are required", file=sys.stderr)
        return USAGE_ERROR
    left = _load_graph_arg(cfg.left)
    right = parse_family(cfg.right)
    from .families import direct_product

    gp = direct_product(left, right)
    if cfg.json_output:
        print(_dump({
            "order": gp.n,
            "size": gp.size,
            "graph6": emit_graph6(gp),
        }))
    else:
        sys.stdout.write(_emit_graph(gp, cfg.out_format))
    return 0


def _cmd_gen(cfg: RunConfig) -> int:
    if not cfg.family:
        print("gen: --family is required", file=sys.stderr)
        return USAGE_ERROR
    g = parse_family(cfg.family, cfg.n)
    if cfg.json_output:
        body = {"order": g.n, "size": g.size}
        if g.is_simple and g.n:
            body["graph6"] = emit_graph6(g)
        else:
            body["edge_list"] = emit_edge_list(g)
        print(_dump(body))
    else:
        sys.stdout.write(_emit_graph(g, cfg.out_format))
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    claims = cfg.claims or list(CLAIM_IDS)
    corpus = None
    if any(c not in FAMILY_CLAIMS for c in claims):
        if not cfg.corpus:
            print(
                "verify: the selected claims need --corpus "
                "(e.g. order<=5 or family:C4)",
                file=sys.stderr,
            )
            return USAGE_ERROR
        corpus = CorpusSpec.parse(cfg.corpus, seed=cfg.seed)
    result = sweep(
        corpus,
        claims,
        n_values=cfg.n_values or None,
        oracle_budget=cfg.oracle_budget,
        time_cap=cfg.time_cap,
        probe_small_n=cfg.probe_small_n,
    )
    for r in result.results:
        print(r.to_json())
    summary = " ".join(f"{k}={v}" for k, v in sorted(result.summary.items()))
    print(f"summary: {summary or 'empty'}", file=sys.stderr)
    for r in result.counterexamples:
        print(f"counterexample: {r.to_json()}", file=sys.stderr)
    return 1 if result.counterexamples else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lplab",
        description=(
            "restricted edge-connectivity toolkit for direct products of graphs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument(
            "--budget", type=int, default=ORACLE_BUDGET,
            help="max order for exhaustive bipartition sweeps",
        )

    p = sub.add_parser("analyze", help="full connectivity report for one graph")
    p.add_argument("source", nargs="?", help="path, family spec, or graph6 string")
    p.add_argument("--family", help="family spec, e.g. petersen, K5, C4, K2,3")
    p.add_argument("--n", type=int, help="family parameter when not embedded")
    add_common(p)

    p = sub.add_parser("product", help="direct product of a graph with K_n or T_n")
    p.add_argument("--left", required=True, help="path or family spec")
    p.add_argument("--right", required=True, help="Kn or Tn, e.g. K5, T3")
    p.add_argument("--format", choices=["auto", "g6", "edgelist"], default="auto")
    add_common(p)

    p = sub.add_parser("gen", help="emit a named family graph")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, help="family parameter when not embedded")
    p.add_argument("--format", choices=["auto", "g6", "edgelist"], default="auto")
    p.add_argument("--json", action="store_true", help="JSON output")

    for name in ("verify", "sweep"):
        p = sub.add_parser(
            name, help="run claim checkers over a corpus (JSON lines out)"
        )
        if name == "verify":
            p.add_argument("--claim", default="all", help="claim id or 'all'")
        else:
            p.add_argument(
                "--claims", default="all", help="comma-separated claim ids or 'all'"
            )
        p.add_argument("--corpus", help="order:5 | order<=5 | family:C4 | file:PATH "
                                        "| random:n=10,p=0.3,seed=0,count=5")
        p.add_argument("--n", dest="n_list", help="comma-separated n values")
        p.add_argument("--time-cap", type=int, default=60,
                       help="seconds per instance before it is skipped")
        p.add_argument("--probe-small-n", action="store_true",
                       help="allow n in {3,4} for the n>=5 claims, as exploration")
        p.add_argument("--seed", type=int, default=0)
        add_common(p)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    cfg.json_output = getattr(args, "json", False)
    cfg.oracle_budget = getattr(args, "budget", ORACLE_BUDGET)
    if args.command == "analyze":
        cfg.source = args.source
        cfg.family = args.family
        cfg.n = args.n
    elif args.command == "product":
        cfg.left = args.left
        cfg.right = args.right
        cfg.out_format = args.format
    elif args.command == "gen":
        cfg.family = args.family
        cfg.n = args.n
        cfg.out_format = args.format
    else:
        raw = args.claim if args.command == "verify" else args.claims
        if raw != "all":
            cfg.claims = [c.strip().upper() for c in raw.split(",") if c.strip()]
        cfg.corpus = args.corpus
        if args.n_list:
            cfg.n_values = [int(x) for x in args.n_list.split(",")]
        cfg.time_cap = args.time_cap
        cfg.probe_small_n = args.probe_small_n
        cfg.seed = args.seed
    return cfg


def run(cfg: RunConfig) -> int:
    handlers = {
        "analyze": _cmd_analyze,
        "product": _cmd_product,
        "gen": _cmd_gen,
        "verify": _cmd_verify,
        "sweep": _cmd_verify,
    }
    try:
        return handlers[cfg.command](cfg)
    except (GraphInputError, NotApplicable, OverBudget, FileNotFoundError) as exc:
        print(f"lplab {cfg.command}: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else USAGE_ERROR
    return run(_config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
