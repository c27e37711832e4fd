"""Command-line front end.

Graph arguments accept the expression syntax (``K6``, ``S5+S2``, ``122K2``,
``P4``, ``C5``), a graph6 string, or a path to a file whose first line is
either of those. Expression syntax wins when a string parses both ways.

Exit codes: 0 = a verdict was produced (Unknown included), 1 = usage
error, 2 = internal failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .arrowing import DEFAULT_NODE_BUDGET, arrows, is_ramsey_minimal
from .classify import classify
from .density import density_report, m2_pair
from .enumeration import SearchBounds, enumerate_ramsey_minimal
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .graphs import Graph, build_from_text
from .randomgraphs import ExperimentConfig, results_to_csv, run_experiment


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def parse_graph_argument(text: str) -> Graph:
    try:
        return build_from_text(text)
    except ValueError:
        pass
    if os.path.isfile(text):
        with open(text) as f:
            line = f.readline().strip()
        return parse_graph_argument(line)
    try:
        return parse_graph6(text)
    except Graph6Error as exc:
        raise UsageError(f"cannot read graph argument {text!r}: {exc}") from exc


def _witness_doc(coloring):
    if coloring is None:
        return None
    return [
        {"edge": list(edge), "color": color}
        for edge, color in sorted(coloring.assignment.items())
    ]


def _emit(doc: dict, args) -> None:
    if args.format == "text":
        for key, value in doc.items():
            print(f"{key}: {value}")
    else:
        print(json.dumps(doc, indent=2))


def _cmd_arrow(args) -> int:
    F = parse_graph_argument(args.F)
    G = parse_graph_argument(args.G)
    H = parse_graph_argument(args.H)
    v = arrows(F, G, H, budget=args.budget)
    doc = {
        "command": "arrow",
        "arrows": v.arrows,
        "verdict": {True: "arrows", False: "does-not-arrow", None: "unknown"}[v.arrows],
        "witness": _witness_doc(v.witness),
        "nodes": v.nodes,
        "elapsed": round(v.elapsed, 6),
        "citations": [],
    }
    _emit(doc, args)
    return 0


def _cmd_minimal(args) -> int:
    F = parse_graph_argument(args.F)
    G = parse_graph_argument(args.G)
    H = parse_graph_argument(args.H)
    rep = is_ramsey_minimal(F, G, H, budget=args.budget)
    doc = {
        "command": "minimal",
        "is_ramsey": rep.is_ramsey,
        "is_minimal": rep.is_minimal,
        "per_edge": [
            {"edge": list(e), "good_coloring": _witness_doc(w)}
            for e, w in sorted(rep.per_edge.items())
        ],
        "citations": [],
    }
    _emit(doc, args)
    return 0


def _cmd_density(args) -> int:
    X = parse_graph_argument(args.X)
    pair = parse_graph_argument(args.pair) if args.pair else None
    report = density_report(X, pair_with=pair)
    doc = {
        "command": "density",
        "rho": str(report.rho.value),
        "rho_witness": list(report.rho.witness),
        "m2": str(report.m2.value) if report.m2 else None,
        "m2_witness": list(report.m2.witness) if report.m2 else None,
        "citations": [],
    }
    if report.m2_pair is not None:
        doc["m2_pair"] = str(report.m2_pair.value)
        doc["m2_pair_witness"] = list(report.m2_pair.witness)
        doc["m2_pair_swapped"] = report.m2_pair.swapped
    _emit(doc, args)
    return 0


def _cmd_classify(args) -> int:
    G = parse_graph_argument(args.G)
    H = parse_graph_argument(args.H)
    result = classify(G, H)
    doc = {"command": "classify"}
    doc.update(result.to_document())
    doc["citations"] = [t.citation for t in result.trail]
    _emit(doc, args)
    return 0


def _cmd_enumerate(args) -> int:
    G = parse_graph_argument(args.G)
    H = parse_graph_argument(args.H)
    bounds = SearchBounds(args.max_v, args.max_e, node_budget=args.budget)
    catalog = enumerate_ramsey_minimal(G, H, bounds)
    doc = {"command": "enumerate"}
    doc.update(catalog.to_document())
    doc["citations"] = []
    _emit(doc, args)
    return 0


def _cmd_threshold(args) -> int:
    G = parse_graph_argument(args.G)
    H = parse_graph_argument(args.H)
    try:
        config = ExperimentConfig(
            G=G,
            H=H,
            n_values=tuple(int(x) for x in args.n.split(",")),
            c_values=tuple(Fraction(x) for x in args.c.split(",")),
            samples=args.samples,
            seed=args.seed,
            node_budget=args.budget,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    results = run_experiment(config)
    csv_text = results_to_csv(results, config.seed)
    if args.output:
        with open(args.output, "w") as f:
            f.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ramseykit", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                       help="node budget per arrowing search")
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--threads", type=int, default=1,
                       help="worker cap (current implementation is single-process)")

    p = sub.add_parser("arrow", help="decide F -> (G,H)")
    p.add_argument("F")
    p.add_argument("G")
    p.add_argument("H")
    common(p)
    p.set_defaults(func=_cmd_arrow)

    p = sub.add_parser("minimal", help="check Ramsey-minimality of F for (G,H)")
    p.add_argument("F")
    p.add_argument("G")
    p.add_argument("H")
    common(p)
    p.set_defaults(func=_cmd_minimal)

    p = sub.add_parser("density", help="density parameters of X")
    p.add_argument("X")
    p.add_argument("--pair", default=None, help="second graph for the pair parameter")
    common(p)
    p.set_defaults(func=_cmd_density)

    p = sub.add_parser("classify", help="Ramsey-finite / Ramsey-infinite verdict")
    p.add_argument("G")
    p.add_argument("H")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", help="Ramsey-minimal catalog within bounds")
    p.add_argument("G")
    p.add_argument("H")
    p.add_argument("--max-v", type=int, required=True)
    p.add_argument("--max-e", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("threshold", help="Monte Carlo threshold experiment, CSV output")
    p.add_argument("G")
    p.add_argument("H")
    p.add_argument("--n", required=True, help="comma-separated n values")
    p.add_argument("--c", required=True, help="comma-separated c values")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default=None)
    common(p)
    p.set_defaults(func=_cmd_threshold)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"ramseykit: error: {exc}\n")
        return 1
    except Exception as exc:  # internal failure
        sys.stderr.write(f"ramseykit: internal error: {exc}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
