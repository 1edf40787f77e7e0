#!/usr/bin/env python3
"""
Super Domination Workbench CLI
compute, verify, product, sweep, enumerate and formula subcommands

Exit codes: 0 ok, 1 interrupted, 2 bad input, 3 solver timeout,
4 theorem violation or failed check.
"""

import sys
import json
import logging
import argparse
from pathlib import Path
from typing import Dict, List, Optional

import pandas as pd
from pydantic import BaseModel, field_validator, model_validator

# Add src to path
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

from config import get_config
from formulas.formulas import NotApplicableError, gamma_sp_formula
from formulas.specs import construct, parse_family_spec
from graphs.graph import Graph, GraphInputError
from graphs.io import decode_graph6, load_graph_file, parse_edge_spec
from harness.products import check_cartesian_bounds
from harness.bounds import check_all_bounds
from harness.corpus import atlas_corpus
from harness.reports import BoundCheckReport
from harness.sweep import exhaustive_sweep
from harness.vizing import vizing_like_scan
from invariants.bundle import INVARIANT_NAMES, compute_invariants
from main import setup_logging
from superdom.bnb import gamma_sp_bnb
from superdom.enumeration import enumerate_min_superdom_sets, enumerate_pstar
from superdom.lambda_number import lambda_number
from superdom.universal import universal_vertex_checks

logger = logging.getLogger("superdom.cli")

EXIT_OK = 0
EXIT_INTERRUPTED = 1
EXIT_INPUT = 2
EXIT_TIMEOUT = 3
EXIT_VIOLATION = 4


class RunConfig(BaseModel):
    """Parsed command line merged with the loaded Config"""
    command: str
    family: Optional[str] = None
    file: Optional[str] = None
    g6: Optional[str] = None
    edges: Optional[str] = None
    n: Optional[int] = None
    invariants: Optional[List[str]] = None
    format: str = "human"
    output: Optional[str] = None
    timeout: Optional[float] = None
    workers: int = 1
    seed: Optional[int] = None

    @field_validator("workers")
    @classmethod
    def _workers(cls, value: int) -> int:
        if value < 1:
            raise ValueError("--workers must be positive")
        return value

    @field_validator("timeout")
    @classmethod
    def _timeout(cls, value: Optional[float]) -> Optional[float]:
        if value is not None and value < 0:
            raise ValueError("--timeout must be non-negative")
        return value

    @field_validator("format")
    @classmethod
    def _format(cls, value: str) -> str:
        if value not in ("human", "json", "csv"):
            raise ValueError(f"unknown output format {value!r}")
        return value

    @model_validator(mode="after")
    def _one_source(self) -> "RunConfig":
        sources = [s for s in (self.family, self.file, self.g6, self.edges) if s is not None]
        if len(sources) > 1:
            raise ValueError("give exactly one of --family, --file, --g6, --edges")
        if self.edges is not None and self.n is None:
            raise ValueError("--edges needs --n")
        return self

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        config = get_config()
        invariants = getattr(args, "invariants", None)
        return cls(
            command=args.command,
            family=getattr(args, "family", None),
            file=getattr(args, "file", None),
            g6=getattr(args, "g6", None),
            edges=getattr(args, "edges", None),
            n=getattr(args, "n", None),
            invariants=[name.strip() for name in invariants.split(",") if name.strip()] if invariants else None,
            format=args.format or config.output.format,
            output=args.output,
            timeout=args.timeout if args.timeout is not None else config.solver.timeout_seconds,
            workers=args.workers if args.workers is not None else config.solver.workers,
            seed=args.seed if args.seed is not None else config.harness.seed,
        )


def load_input_graph(run: RunConfig) -> Graph:
    """The graph named by exactly one input flag"""
    if run.family is not None:
        return construct(parse_family_spec(run.family))
    if run.file is not None:
        return load_graph_file(run.file)
    if run.g6 is not None:
        return decode_graph6(run.g6)
    if run.edges is not None:
        return parse_edge_spec(run.n, run.edges)
    raise GraphInputError("no input graph: use --family, --file, --g6 or --edges")


def emit(run: RunConfig, payload: Dict, human: str, table: pd.DataFrame = None):
    """Write the report in the requested format to --output or stdout"""
    if run.format == "json":
        text = json.dumps(payload, indent=2)
    elif run.format == "csv":
        frame = table if table is not None else pd.json_normalize(payload)
        text = frame.to_csv(index=False).rstrip("\n")
    else:
        text = human
    if run.output:
        path = Path(run.output)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n")
        logger.info(f"report written to {path}")
    else:
        print(text)


def format_certificate(certificate) -> str:
    if certificate is None:
        return "none"
    pairs = ", ".join(f"{u}<-{w}" for u, w in certificate.assignment)
    return f"D={certificate.D.to_list()}  D*={certificate.Dstar.to_list()}  witnesses: {pairs or '-'}"


def format_report(report: BoundCheckReport) -> str:
    """Human bound report, one line per bound with its theorem"""
    value = report.gamma_sp if report.gamma_sp is not None else "?"
    lines = [f"\n📊 {report.graph_id}: n={report.n}, m={report.m}, gamma_sp={value}"]
    for check in report.checks:
        status = check.status.value
        mark = {"violated": "❌", "tight": "🎯", "holds": "✅"}.get(status, "·")
        detail = ""
        if check.evaluated and check.relation.value != "holds":
            detail = f" ({check.lhs} {check.relation.value} {check.rhs})"
        elif check.reason:
            detail = f" ({check.reason})"
        lines.append(f"  {mark} {check.name}: {check.theorem}{detail}")
    for note in report.notes:
        lines.append(f"  ⚠️ {note}")
    lines.append(f"\n{'✅ all bounds hold' if report.holds else '❌ violations found'}, "
                 f"{len(report.tight())} tight")
    return "\n".join(lines)


def report_table(reports: List[BoundCheckReport]) -> pd.DataFrame:
    rows = [
        {"graph_id": report.graph_id, "gamma_sp": report.gamma_sp, **check.to_dict()}
        for report in reports
        for check in report.checks
    ]
    return pd.DataFrame(rows)


def cmd_compute(run: RunConfig):
    """γ_sp with certificate plus requested invariants"""
    graph = load_input_graph(run)
    solved = gamma_sp_bnb(graph, timeout=run.timeout, workers=run.workers)
    if solved.exact:
        logger.info(f"gamma_sp={solved.gamma_sp} (n={graph.n}) in {solved.elapsed:.3f}s")
    names = run.invariants
    bundle = compute_invariants(graph, names, timeout=run.timeout, solved=solved)
    payload = {"n": graph.n, "m": graph.edge_count, **solved.to_dict(), **bundle.to_dict()}

    lines = [f"\n🔢 n={graph.n}, m={graph.edge_count}"]
    if solved.exact:
        lines.append(f"✅ gamma_sp = {solved.gamma_sp}")
    else:
        lines.append(f"⚠️ gamma_sp in [{solved.bounds[0]}, {solved.bounds[1]}] (timed out)")
    lines.append(f"   {format_certificate(solved.certificate)}")
    for name, entry in bundle.entries.items():
        if name != "gamma_sp":
            lines.append(f"   {name} = {entry.value}")
    for name, reason in bundle.skipped.items():
        lines.append(f"   {name}: skipped ({reason})")
    table = pd.DataFrame([entry.to_dict() for entry in bundle.entries.values()])
    emit(run, payload, "\n".join(lines), table)
    return EXIT_OK if solved.exact else EXIT_TIMEOUT


def cmd_verify(run: RunConfig):
    """Every single-graph bound on one graph"""
    graph = load_input_graph(run)
    report = check_all_bounds(graph, run.family or run.file or run.g6 or "G", timeout=run.timeout)
    emit(run, report.to_dict(), format_report(report), report_table([report]))
    if not report.holds:
        return EXIT_VIOLATION
    return EXIT_OK if report.exact else EXIT_TIMEOUT


def cmd_product(run: RunConfig, left: str, right: str):
    """Cartesian product bounds for two family specs"""
    g = construct(parse_family_spec(left))
    h = construct(parse_family_spec(right))
    report = check_cartesian_bounds(g, h, left, right, timeout=run.timeout)
    emit(run, report.to_dict(), format_report(report), report_table([report]))
    if not report.holds:
        return EXIT_VIOLATION
    timed_out = not report.exact and report.n <= get_config().harness.product_cap
    return EXIT_TIMEOUT if timed_out else EXIT_OK


def cmd_sweep(run: RunConfig, args: argparse.Namespace):
    """Theorem sweep over a corpus, or the Vizing-like scan"""
    if args.vizing is not None:
        scan = vizing_like_scan(atlas_corpus(args.vizing), timeout=run.timeout)
        if not scan.holds:
            dump = Path(get_config().output.report_dir) / "vizing_counterexamples.json"
            scan.dump_counterexamples(dump)
            logger.error(f"counterexamples written to {dump}")
        human = (f"\n{'✅' if scan.holds else '❌'} Vizing-like scan: {scan.evaluated}/{scan.pairs} pairs, "
                 f"{len(scan.violations)} violations, min ratio {scan.min_ratio}")
        emit(run, scan.to_dict(), human, pd.json_normalize(scan.to_dict()))
        return EXIT_OK if scan.holds else EXIT_VIOLATION

    if args.all_labeled is not None:
        summary = exhaustive_sweep(
            "all-labeled", n_max=args.all_labeled, n_min=args.n_min or 1,
            isolate_free=args.isolate_free, workers=run.workers, timeout=run.timeout,
        )
    elif args.corpus is not None:
        summary = exhaustive_sweep("graph6", path=args.corpus, workers=run.workers, timeout=run.timeout)
    elif args.random is not None:
        densities = [float(p) for p in args.densities.split(",")] if args.densities else None
        summary = exhaustive_sweep(
            "random", count=args.random, n_range=(args.n_min or 7, args.n_max or 12),
            densities=densities, seed=run.seed, workers=run.workers, timeout=run.timeout,
        )
    elif args.atlas is not None:
        summary = exhaustive_sweep("atlas", n_max=args.atlas, workers=run.workers, timeout=run.timeout)
    else:
        raise ValueError("choose a corpus: --all-labeled, --corpus, --random, --atlas or --vizing")

    table = summary.table()
    violations = summary.violations()
    lines = [f"\n📊 {summary.mode.value} sweep: {summary.graphs} graphs", table.to_string(index=False)]
    for graph_id, bound in violations:
        lines.append(f"❌ {graph_id}: {bound}")
    for error in summary.errors:
        lines.append(f"⚠️ {error}")
    lines.append(f"\n{'✅' if not violations else '❌'} {len(violations)} violations")
    emit(run, summary.to_dict(), "\n".join(lines), table)
    if violations:
        return EXIT_VIOLATION
    return EXIT_TIMEOUT if summary.inexact() else EXIT_OK


def cmd_enumerate(run: RunConfig, members: Optional[str]):
    """S(G), P(S) per γ_sp-set (or for one given set), λ and the universal-vertex checks"""
    graph = load_input_graph(run)
    if members:
        family = [graph.vertex_set(int(v) for v in members.split(","))]
        known = None
    else:
        family = enumerate_min_superdom_sets(graph)
        known = len(family[0])
    entries = [
        {"S": s.to_list(), "P": [sstar.to_list() for sstar in enumerate_pstar(graph, s, gamma_sp=known)]}
        for s in family
    ]
    lam = lambda_number(graph)
    universal = universal_vertex_checks(graph)
    payload = {
        "n": graph.n,
        "gamma_sp": len(family[0]),
        "sets": entries,
        "lambda": lam.witness.to_dict(),
        "universal": universal.to_dict(),
    }
    lines = [f"\n🔢 gamma_sp = {payload['gamma_sp']}, {len(entries)} gamma_sp-set(s)"]
    for entry in entries:
        lines.append(f"   S={entry['S']}  P(S)={entry['P']}")
    lines.append(f"   lambda = {lam.value}  (S={lam.witness.S.to_list()}, S*={lam.witness.Sstar.to_list()}, "
                 f"X={lam.witness.X.to_list()})")
    if universal.applicable:
        lines.append(f"   {'✅' if universal.holds else '❌'} universal vertices {universal.universal}, "
                     f"I(G)={universal.degree_one}")
    table = pd.DataFrame([{"S": e["S"], "P": e["P"]} for e in entries])
    emit(run, payload, "\n".join(lines), table)
    return EXIT_OK if universal.holds else EXIT_VIOLATION


def cmd_formula(run: RunConfig):
    """Closed-form γ_sp for a family spec"""
    spec = parse_family_spec(run.family) if run.family else None
    if spec is None:
        raise ValueError("formula needs --family")
    try:
        value = gamma_sp_formula(spec)
    except NotApplicableError as e:
        emit(run, {"family": spec.to_string(), "applicable": False, "reason": str(e)},
             f"\n⚠️ {spec.to_string()}: not applicable ({e})")
        return EXIT_INPUT
    emit(run, {"family": spec.to_string(), "applicable": True, "gamma_sp": value},
         f"\n✅ gamma_sp({spec.to_string()}) = {value}")
    return EXIT_OK


def add_graph_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--family", help="Family spec, e.g. path:7, cmp:3,2,1, box:(star:2)x(star:2)")
    parser.add_argument("--file", help="Edge list (.edges/.txt), JSON (.json) or graph6 (.g6) file")
    parser.add_argument("--g6", help="Inline graph6 string")
    parser.add_argument("--edges", help='Inline edges, e.g. "0-1,1-2" (needs --n)')
    parser.add_argument("--n", type=int, help="Vertex count for --edges")


def add_common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=["human", "json", "csv"], help="Output format")
    parser.add_argument("--output", help="Write the report to this file instead of stdout")
    parser.add_argument("--timeout", type=float, help="Solver deadline in seconds (0 = none)")
    parser.add_argument("--workers", type=int, help="Worker processes")
    parser.add_argument("--seed", type=int, help="Seed for random corpora")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Super domination number solver and bound verification workbench"
    )

    subparsers = parser.add_subparsers(dest="command", help="Commands")

    # compute
    compute_parser = subparsers.add_parser("compute", help="gamma_sp with certificate and invariants")
    add_graph_arguments(compute_parser)
    compute_parser.add_argument("--invariants", help=f"Comma list from {', '.join(INVARIANT_NAMES)}")
    add_common_arguments(compute_parser)

    # verify
    verify_parser = subparsers.add_parser("verify", help="Check every bound on one graph")
    add_graph_arguments(verify_parser)
    add_common_arguments(verify_parser)

    # product
    product_parser = subparsers.add_parser("product", help="Cartesian product bounds")
    product_parser.add_argument("--left", required=True, help="Family spec of G")
    product_parser.add_argument("--right", required=True, help="Family spec of H")
    add_common_arguments(product_parser)

    # sweep
    sweep_parser = subparsers.add_parser("sweep", help="Theorem sweep over a corpus")
    sweep_parser.add_argument("--all-labeled", type=int, help="Every labelled graph up to this order")
    sweep_parser.add_argument("--isolate-free", action="store_true", help="Skip graphs with isolated vertices")
    sweep_parser.add_argument("--corpus", help="graph6 corpus file, one graph per line")
    sweep_parser.add_argument("--random", type=int, help="Number of seeded random graphs")
    sweep_parser.add_argument("--n-min", type=int, help="Smallest order (all-labeled, random)")
    sweep_parser.add_argument("--n-max", type=int, help="Largest order (random)")
    sweep_parser.add_argument("--densities", help="Comma list of edge densities (random)")
    sweep_parser.add_argument("--atlas", type=int, help="Connected atlas graphs up to this order")
    sweep_parser.add_argument("--vizing", type=int, help="Vizing-like scan over connected atlas graphs up to this order")
    add_common_arguments(sweep_parser)

    # enumerate
    enumerate_parser = subparsers.add_parser("enumerate", help="S(G), P(S), lambda and universal-vertex checks")
    add_graph_arguments(enumerate_parser)
    enumerate_parser.add_argument("--set", dest="members", help="One gamma_sp-set, e.g. 0,2,3")
    add_common_arguments(enumerate_parser)

    # formula
    formula_parser = subparsers.add_parser("formula", help="Closed-form gamma_sp for a family")
    formula_parser.add_argument("--family", required=True, help="Family spec")
    add_common_arguments(formula_parser)

    return parser


def main(argv: List[str] = None):
    """Main CLI entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_INPUT

    config = get_config()
    setup_logging(
        log_file=config.logging.file,
        level=getattr(logging, config.logging.level.upper(), logging.INFO),
        stream=sys.stderr,
    )

    # Route commands
    commands = {
        "compute": cmd_compute,
        "verify": cmd_verify,
        "product": lambda run: cmd_product(run, args.left, args.right),
        "sweep": lambda run: cmd_sweep(run, args),
        "enumerate": lambda run: cmd_enumerate(run, args.members),
        "formula": cmd_formula,
    }

    try:
        run = RunConfig.from_args(args)
        return commands[args.command](run)
    except KeyboardInterrupt:
        logger.info("Interrupted by user")
        return EXIT_INTERRUPTED
    except ValueError as e:
        logger.error(f"Error: {e}")
        print(f"\n❌ {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
