"""Command-line entry point: ``intervaltotal <subcommand> ...``.

Exit codes: 0 success / sat, 1 verification failure / unsat, 2 timeout or
incomplete search, 64 usage error, 70 internal error (a construction failed
its own verification).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import bounds, constructions, search
from .coloring import (
    EdgeColoring,
    TotalColoring,
    coloring_to_json,
    read_coloring,
    verify_interval_edge,
    verify_interval_total,
)
from .errors import InvalidArgument, ResourceExhausted, UnsupportedParameters
from .export import export_dot
from .graph import (
    Graph,
    complete_balanced_multipartite,
    complete_bipartite,
    complete_graph,
    hypercube,
    read_edgelist,
    to_edgelist,
)

EX_OK, EX_FAIL, EX_TIMEOUT, EX_USAGE, EX_SOFTWARE = 0, 1, 2, 64, 70


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


GRAPH_FAMILIES = {
    "complete": (("n",), complete_graph),
    "bipartite": (("m", "n"), complete_bipartite),
    "multipartite": (("r", "n"), complete_balanced_multipartite),
    "hypercube": (("n",), hypercube),
}


def parse_graph_spec(spec: str) -> Graph:
    """A file in edge-list format, or ``Qn``, ``Kn``, ``Km,n``, ``family:a,b``."""
    path = Path(spec)
    if path.exists():
        return read_edgelist(path)
    m = re.fullmatch(r"Q(\d+)", spec)
    if m:
        return hypercube(int(m[1]))
    m = re.fullmatch(r"K(\d+)", spec)
    if m:
        return complete_graph(int(m[1]))
    m = re.fullmatch(r"K(\d+),(\d+)", spec)
    if m:
        return complete_bipartite(int(m[1]), int(m[2]))
    m = re.fullmatch(r"(\w+):([\d,]+)", spec)
    if m and m[1] in GRAPH_FAMILIES:
        names, build = GRAPH_FAMILIES[m[1]]
        args = [int(x) for x in m[2].split(",")]
        if len(args) != len(names):
            raise UsageError(f"{m[1]} takes parameters {','.join(names)}")
        return build(*args)
    raise UsageError(f"cannot interpret graph {spec!r} (no such file, unknown family spec)")


def _params(args, names) -> list[int]:
    values = []
    for name in names:
        v = getattr(args, name, None)
        if v is None:
            raise UsageError(f"--{name} is required for family {args.family}")
        values.append(v)
    return values


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _graph_json(g: Graph) -> str:
    return json.dumps({"n_vertices": g.n_vertices, "edges": [[u + 1, v + 1] for u, v in g.edges]}) + "\n"


def _render_graph(g: Graph, fmt: str, coloring=None) -> str:
    if fmt == "dot":
        return export_dot(g, coloring)
    if fmt == "json":
        return _graph_json(g)
    return to_edgelist(g)


def _verify(g: Graph, c):
    if isinstance(c, TotalColoring):
        return verify_interval_total(g, c)
    return verify_interval_edge(g, c)


# -- subcommands -------------------------------------------------------------------


def cmd_build(args) -> int:
    if args.graph:
        g = parse_graph_spec(args.graph)
    else:
        if args.family is None:
            raise UsageError("build needs --family or --graph")
        names, build = GRAPH_FAMILIES[args.family]
        g = build(*_params(args, names))
    _emit(_render_graph(g, args.format), args.output)
    return EX_OK


def cmd_construct(args) -> int:
    names, make, make_graph = constructions.CONSTRUCTIONS[args.family]
    values = _params(args, names)
    g = make_graph(*values)
    kwargs = {"time_budget": args.budget} if args.family in ("qn", "qlift") else {}
    try:
        c = make(*values, **kwargs)
    except ResourceExhausted as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return EX_TIMEOUT
    report = _verify(g, c)
    if not report.ok:
        print(f"internal error: construction {args.family} failed verification: {report.violation}",
              file=sys.stderr)
        return EX_SOFTWARE
    if args.graph_out:
        Path(args.graph_out).write_text(to_edgelist(g))
    _emit(coloring_to_json(c), args.output)
    return EX_OK


def cmd_verify(args) -> int:
    g = parse_graph_spec(args.graph)
    c = read_coloring(args.coloring)
    report = _verify(g, c)
    print(json.dumps(report.to_dict()))
    return EX_OK if report.ok else EX_FAIL


def cmd_bounds(args) -> int:
    names = {
        "kn": ("n",), "kmn": ("m", "n"), "knn": ("n",), "knnl": ("n", "l"),
        "multipartite": ("r", "n"), "qn": ("n",),
    }[args.family]
    res = bounds.span_table(args.family, *_params(args, names))
    print(json.dumps(res.to_dict()))
    return EX_OK


def cmd_search(args) -> int:
    g = parse_graph_spec(args.graph)
    budget = args.budget if args.budget is not None else search.default_budget()
    mode = {"decide": "decide", "wmin": "min-span", "wmax": "max-span", "spectrum": "spectrum"}[args.mode]
    cfg = search.SearchConfig(t=args.t, mode=mode, time_budget=budget, node_limit=args.node_limit,
                              twins=args.twins, color_matching=args.color_matching)
    if args.mode == "decide":
        if args.t is None:
            raise UsageError("--t is required for --mode decide")
        out = search.decide_interval_total(g, args.t, cfg)
        print(json.dumps({"status": out.status, "t": args.t, "nodes": out.nodes,
                          "duration": round(out.duration, 3)}))
        if out.witness is not None and args.output:
            Path(args.output).write_text(coloring_to_json(out.witness))
        return {"sat": EX_OK, "unsat": EX_FAIL, "timeout": EX_TIMEOUT}[out.status]
    if args.mode in ("wmin", "wmax"):
        res = (search.min_span if args.mode == "wmin" else search.max_span)(g, cfg)
        print(json.dumps(res.to_dict()))
        if res.w_tau.lower is None:
            return EX_FAIL if res.complete else EX_TIMEOUT
        return EX_OK if res.complete else EX_TIMEOUT
    found = search.spectrum(g, cfg)
    print(json.dumps({"feasible": list(found.feasible), "infeasible": list(found.infeasible),
                      "undecided": list(found.undecided), "gap_free": found.is_gap_free()}))
    return EX_OK if found.complete else EX_TIMEOUT


def cmd_export(args) -> int:
    g = parse_graph_spec(args.graph)
    c = read_coloring(args.coloring) if args.coloring else None
    if c is not None and args.format == "dot":
        report = _verify(g, c)
        if not report.ok:
            print(f"warning: coloring does not verify: {report.violation}", file=sys.stderr)
    _emit(_render_graph(g, args.format, c), args.output)
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="intervaltotal", description="Interval total colorings: build, construct, verify, search.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def ints(sp, *names):
        for n in names:
            sp.add_argument(f"--{n}", type=int)

    b = sub.add_parser("build", help="generate a graph")
    b.add_argument("--family", choices=sorted(GRAPH_FAMILIES))
    b.add_argument("--graph", help="existing graph file or family spec")
    ints(b, "n", "m", "r")
    b.add_argument("--format", choices=("edgelist", "dot", "json"), default="edgelist")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    c = sub.add_parser("construct", help="emit a verified construction as coloring JSON")
    c.add_argument("--family", choices=sorted(constructions.CONSTRUCTIONS), required=True)
    ints(c, "n", "l", "r", "t")
    c.add_argument("--budget", type=float, default=None, help="seconds, for search-backed families")
    c.add_argument("--graph-out", help="also write the graph as an edge list")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a coloring against a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--coloring", required=True)
    v.set_defaults(func=cmd_verify)

    bd = sub.add_parser("bounds", help="known bounds on the minimum and maximum span")
    bd.add_argument("--family", choices=bounds.FAMILIES, required=True)
    ints(bd, "n", "m", "l", "r")
    bd.set_defaults(func=cmd_bounds)

    s = sub.add_parser("search", help="exact search")
    s.add_argument("--graph", required=True)
    s.add_argument("--mode", choices=("decide", "wmin", "wmax", "spectrum"), default="decide")
    s.add_argument("--t", type=int)
    s.add_argument("--budget", type=float, default=None, help=f"seconds per decision (default ${search.BUDGET_ENV})")
    s.add_argument("--node-limit", type=int)
    s.add_argument("--twins", action="store_true", help="break symmetry between twin vertices")
    s.add_argument("--color-matching", action="store_true", help="per-color matching pruning (bipartite)")
    s.add_argument("-o", "--output", help="write the witness coloring here")
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("export", help="render a graph, optionally colored")
    e.add_argument("--graph", required=True)
    e.add_argument("--coloring")
    e.add_argument("--format", choices=("dot", "edgelist", "json"), default="dot")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnsupportedParameters, InvalidArgument) as exc:
        print(f"intervaltotal: error: {exc}", file=sys.stderr)
        return EX_USAGE


def main() -> None:
    sys.exit(run())
