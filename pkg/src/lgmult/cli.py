"""Command-line surface: construction, multiplicity queries, recognition,
family generation, and verification sweeps.

Exit codes: 0 for a passing result, 1 for a failing result (a NotOptimal
verdict from ``check`` or a verification run with failures), 2 for usage
and input errors.  Payloads are JSON on standard output; diagnostics go
to standard error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .certify import is_optimal, certificate_to_json, optimal_certificate
from .families import FamilySpec, realize
from .graphio import (
    FormatError,
    from_edge_text,
    from_graph6,
    read_graphs_graph6,
    to_graph6,
)
from .graphs import Graph, GraphError, summarize
from .intpoly import poly_to_json
from .linegraph import line_graph
from .spectra import Eigenvalue, NonCanonical, multiplicity
from .verify import verify_graphs, verify_lemmas, verify_main_theorem


class UsageError(Exception):
    """Raised for bad flags or unparseable input; maps to exit code 2."""


def _graph_json(g: Graph) -> dict[str, Any]:
    return {
        "graph6": to_graph6(g),
        "vertex_count": g.vertex_count,
        "edges": [[u, v] for u, v in g.edges],
    }


def _emit(payload: dict[str, Any]) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _load_graph(args: argparse.Namespace) -> Graph:
    sources = [
        name
        for name, value in (
            ("--g6", args.g6),
            ("--edges", args.edges),
            ("--stdin", args.stdin),
        )
        if value
    ]
    if len(sources) != 1:
        raise UsageError(
            "provide exactly one input source: --g6 STRING, --edges FILE,"
            " or --stdin"
        )
    try:
        if args.g6:
            return from_graph6(args.g6)
        if args.edges:
            with open(args.edges, "r", encoding="utf-8") as handle:
                return from_edge_text(handle.read())
        text = sys.stdin.read()
        first = text.strip().splitlines()[0].split() if text.strip() else []
        if len(first) == 2 and all(tok.isdigit() for tok in first):
            return from_edge_text(text)
        return from_graph6(text.strip().splitlines()[0])
    except (FormatError, OSError, IndexError) as exc:
        raise UsageError(f"cannot read graph: {exc}") from exc


def _parse_lambda(text: str) -> Eigenvalue:
    try:
        return Eigenvalue.parse(text)
    except (NonCanonical, ValueError) as exc:
        raise UsageError(f"bad eigenvalue {text!r}: {exc}") from exc


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--g6", help="graph6 string")
    parser.add_argument("--edges", help="edge-list file ('n m' header, 'u v' lines)")
    parser.add_argument(
        "--stdin", action="store_true", help="read the graph from standard input"
    )


def cmd_linegraph(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    try:
        lm = line_graph(g)
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    _emit(
        {
            "base": _graph_json(lm.base),
            "line": _graph_json(lm.line),
            "edge_to_vertex": list(lm.edge_to_vertex),
            "vertex_to_edge": list(lm.vertex_to_edge),
        }
    )
    return 0


def cmd_mult(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    lam = _parse_lambda(args.lam)
    s = summarize(g)
    _emit(
        {
            "graph6": to_graph6(g),
            "lambda": {"a": lam.a, "b": lam.b},
            "multiplicity": multiplicity(g, lam),
            "bound": 2 * s.cyclomatic + s.pendant_count - 1,
            "minimal_polynomial": poly_to_json(lam.minimal_polynomial),
        }
    )
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    lam = _parse_lambda(args.lam)
    try:
        cert = optimal_certificate(g, lam)
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    s = summarize(g)
    payload = {
        "graph6": to_graph6(g),
        "bound": 2 * s.cyclomatic + s.pendant_count - 1,
        "certificate": certificate_to_json(cert),
    }
    _emit(payload)
    return 0 if is_optimal(cert) else 1


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.spec_json:
            spec = FamilySpec.from_json(args.spec_json)
        elif args.spec:
            with open(args.spec, "r", encoding="utf-8") as handle:
                spec = FamilySpec.from_json(handle.read())
        else:
            if not args.case:
                raise UsageError("gen needs --case (or --spec/--spec-json)")
            params: dict[str, Any] = {}
            for item in args.param or []:
                if "=" not in item:
                    raise UsageError(f"--param expects key=value, got {item!r}")
                key, _, value = item.partition("=")
                try:
                    params[key] = json.loads(value)
                except json.JSONDecodeError:
                    params[key] = value
            lam = None
            if args.lam:
                e = _parse_lambda(args.lam)
                lam = (e.a, e.b)
            spec = FamilySpec(args.case, lam, params, args.seed)
        graph = realize(spec)
    except UsageError:
        raise
    except (ValueError, KeyError, GraphError, OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot realize family spec: {exc}") from exc
    _emit({"spec": spec.to_json_dict(), "graph": _graph_json(graph)})
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.g6_file:
        try:
            with open(args.g6_file, "r", encoding="utf-8") as handle:
                graphs = read_graphs_graph6(handle.read())
        except (FormatError, OSError) as exc:
            raise UsageError(f"cannot read corpus: {exc}") from exc
        report = verify_graphs(graphs)
    else:
        try:
            report = verify_main_theorem(args.max_n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if args.lemmas:
        lemma_report = verify_lemmas(
            min(args.max_n, 7), samples=args.samples, seed=args.seed
        )
        report.merge(lemma_report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(report.to_json())
            handle.write("\n")
    if args.table:
        sys.stdout.write(report.summary_table())
        sys.stdout.write("\n")
    else:
        _emit(report.to_json_dict())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgmult",
        description="Exact line-graph eigenvalue multiplicity toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("linegraph", help="construct the line graph")
    _add_input_flags(p)
    p.set_defaults(func=cmd_linegraph)

    p = sub.add_parser("mult", help="exact eigenvalue multiplicity")
    _add_input_flags(p)
    p.add_argument("--lambda", dest="lam", required=True, metavar="A/B")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("check", help="optimality certificate for a graph")
    _add_input_flags(p)
    p.add_argument("--lambda", dest="lam", required=True, metavar="A/B")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a family instance")
    p.add_argument("--case", choices=[
        "path", "spider", "tree", "attached_cycles", "two_cycles_edge",
        "B", "theta",
    ])
    p.add_argument("--lambda", dest="lam", metavar="A/B")
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--spec", help="JSON file holding a family spec")
    p.add_argument("--spec-json", help="inline JSON family spec")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--g6-file", help="verify a graph6 corpus file instead")
    p.add_argument("--lemmas", action="store_true",
                   help="also check the reduction identities")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="write the JSON report to this file")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
