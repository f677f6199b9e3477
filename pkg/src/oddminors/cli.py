"""Command-line front end.

Subcommands mirror the library: generate graphs, run the partition /
quotient / coloring pipeline, search for (odd) K_t-expansions, verify
serialized artifacts, lift quotient expansions, and sweep a G(n, p) grid
into CSV.  Graphs come from stdin or --input; everything else is flags.

Exit codes: 0 success or PASS, 1 FAIL or NOT FOUND, 2 usage or malformed
input, 3 search/coloring budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from contextlib import redirect_stderr, redirect_stdout

from . import coloring as _coloring
from . import minors as _minors
from .errors import BudgetExceeded, ContractViolation, ParseError, StructureError
from .graph import Graph, generate, parse_graph, render_dimacs, render_edge_list
from .lifting import lift_expansion, reduction_report
from .minors import (
    OddExpansionCertificate,
    find_expansion,
    find_odd_expansion,
    parse_certificate,
    render_certificate,
    verify_expansion,
    verify_odd_expansion,
)
from .partition import compute_partition, parse_partition, render_partition, verify_partition
from .quotient import QuotientGraph, build_quotient, parse_quotient, render_quotient, verify_quotient

GRAPH_COMMANDS = frozenset(
    {"partition", "quotient", "color", "find-minor", "find-odd-minor", "verify", "lift", "report"}
)

_ENV_BUDGETS = (
    ("max_vertices", "ODDMINORS_MAX_VERTICES", _coloring.DEFAULT_MAX_VERTICES),
    ("max_nodes", "ODDMINORS_MAX_NODES", _coloring.DEFAULT_MAX_NODES),
    ("max_assignments", "ODDMINORS_MAX_ASSIGNMENTS", _minors.DEFAULT_MAX_ASSIGNMENTS),
)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="oddminors", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("-i", "--input", help="read the graph from this file, not stdin")
        p.add_argument(
            "--format",
            choices=("auto", "edge-list", "dimacs"),
            default="auto",
            help="input graph format (default: auto-detect)",
        )
        return p

    def budget_args(p: argparse.ArgumentParser, *names: str) -> None:
        flags = {
            "max_vertices": "largest graph the exact colorer accepts",
            "max_nodes": "search-node cap for the exact colorer",
            "max_assignments": "cap on (t+1)^n branch-set assignments",
        }
        for name in names:
            p.add_argument(
                "--" + name.replace("_", "-"), type=int, default=None, help=flags[name]
            )

    p = sub.add_parser("gen", help="emit a generated graph")
    p.add_argument("spec", nargs="+", help="complete T | cycle N | complete-bipartite A B | gnp N P | petersen")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("edge-list", "dimacs"), default="edge-list")

    graph_cmd("partition", "bipartite-connected partition plus verification")

    p = graph_cmd("quotient", "quotient graph with witness triples")
    p.add_argument("--partition", help="reuse a serialized partition instead of recomputing")

    p = graph_cmd("color", "color the graph")
    p.add_argument("--mode", choices=("exact", "heuristic", "composed"), default="composed")
    p.add_argument("--partition", help="(composed) reuse a serialized partition")
    budget_args(p, "max_vertices", "max_nodes")

    p = graph_cmd("find-minor", "search for a K_t-expansion")
    p.add_argument("-t", type=int, required=True)
    budget_args(p, "max_assignments")

    p = graph_cmd("find-odd-minor", "search for an odd K_t-expansion")
    p.add_argument("-t", type=int, required=True)
    budget_args(p, "max_assignments")

    p = graph_cmd("verify", "check a serialized artifact against the graph")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--cert", help="(odd) expansion certificate file")
    which.add_argument("--coloring", help="coloring file")
    which.add_argument("--partition", help="partition file")
    which.add_argument("--quotient", help="quotient file")

    p = graph_cmd("lift", "lift a quotient expansion to an odd expansion")
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument("-t", type=int, help="search the quotient for a K_t-expansion")
    how.add_argument("--cert", help="expansion certificate for the quotient")
    budget_args(p, "max_assignments")

    p = graph_cmd("report", "full pipeline narrative for one t")
    p.add_argument("-t", type=int, required=True)
    budget_args(p, "max_vertices", "max_nodes", "max_assignments")

    p = sub.add_parser("bench", help="G(n, p) sweep to CSV")
    p.add_argument("--n", required=True, help="comma list of vertex counts, e.g. 5,8")
    p.add_argument("--p", required=True, help="comma list of edge probabilities")
    p.add_argument("--seeds", required=True, help="comma list or range, e.g. 1,2,3 or 1..3")
    budget_args(p, "max_vertices", "max_nodes")

    return top


def _budget(args: argparse.Namespace, name: str) -> int:
    value = getattr(args, name, None)
    if value is not None:
        return value
    for attr, env, default in _ENV_BUDGETS:
        if attr == name:
            raw = os.environ.get(env)
            if raw is None:
                return default
            try:
                return int(raw)
            except ValueError:
                raise ParseError(f"{env} must be an integer, got {raw!r}") from None
    raise KeyError(name)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args: argparse.Namespace, stdin_text: str) -> Graph:
    text = _read(args.input) if args.input else stdin_text
    return parse_graph(text, args.format)


def _seed_list(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in spec.split(",")]


def _dispatch(argv: list[str], stdin_text: str) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "gen":
        g = generate(" ".join(args.spec), args.seed)
        render = render_dimacs if args.format == "dimacs" else render_edge_list
        sys.stdout.write(render(g))
        return 0

    if args.command == "bench":
        return _bench(args)

    g = _load_graph(args, stdin_text)

    if args.command == "partition":
        p = compute_partition(g)
        report = verify_partition(g, p)
        sys.stdout.write(render_partition(p))
        sys.stdout.write(report.render())
        return 0 if report.passed else 1

    if args.command == "quotient":
        p = parse_partition(_read(args.partition)) if args.partition else compute_partition(g)
        sys.stdout.write(render_quotient(build_quotient(g, p)))
        return 0

    if args.command == "color":
        if args.mode == "exact":
            c = _coloring.color_exact(
                g,
                max_vertices=_budget(args, "max_vertices"),
                max_nodes=_budget(args, "max_nodes"),
            )
        elif args.mode == "heuristic":
            c = _coloring.color_heuristic(g)
        else:
            p = parse_partition(_read(args.partition)) if args.partition else compute_partition(g)
            q = build_quotient(g, p)
            c_h = _coloring.color_exact(
                q.h,
                max_vertices=_budget(args, "max_vertices"),
                max_nodes=_budget(args, "max_nodes"),
            )
            c = _coloring.compose_coloring(q, c_h)
        sys.stdout.write(_coloring.render_coloring(c))
        return 0

    if args.command in ("find-minor", "find-odd-minor"):
        finder = find_expansion if args.command == "find-minor" else find_odd_expansion
        cert = finder(g, args.t, max_assignments=_budget(args, "max_assignments"))
        if cert is None:
            sys.stdout.write("NOT FOUND\n")
            return 1
        sys.stdout.write(render_certificate(cert))
        return 0

    if args.command == "verify":
        report = _verify(g, args)
        sys.stdout.write(report.render())
        return 0 if report.passed else 1

    if args.command == "lift":
        q = build_quotient(g, compute_partition(g))
        if args.cert:
            cert_h = parse_certificate(_read(args.cert))
            if isinstance(cert_h, OddExpansionCertificate):
                raise ParseError("lift expects a plain expansion certificate for the quotient")
        else:
            cert_h = find_expansion(q.h, args.t, max_assignments=_budget(args, "max_assignments"))
            if cert_h is None:
                sys.stdout.write("NOT FOUND\n")
                return 1
        sys.stdout.write(render_certificate(lift_expansion(g, q, cert_h)))
        return 0

    if args.command == "report":
        rep = reduction_report(
            g,
            args.t,
            max_vertices=_budget(args, "max_vertices"),
            max_nodes=_budget(args, "max_nodes"),
            max_assignments=_budget(args, "max_assignments"),
        )
        sys.stdout.write(rep.render())
        return 0

    raise AssertionError(f"unhandled command {args.command}")


def _verify(g: Graph, args: argparse.Namespace):
    if args.cert:
        cert = parse_certificate(_read(args.cert))
        if isinstance(cert, OddExpansionCertificate):
            return verify_odd_expansion(g, cert)
        return verify_expansion(g, cert)
    if args.coloring:
        return _coloring.verify_coloring(g, _coloring.parse_coloring(_read(args.coloring)))
    if args.partition:
        return verify_partition(g, parse_partition(_read(args.partition)))
    h, witnesses = parse_quotient(_read(args.quotient))
    return verify_quotient(g, QuotientGraph(h, witnesses, compute_partition(g)))


BENCH_COLUMNS = (
    "n", "p", "seed", "parts", "chi_H", "composed_palette",
    "chi_G_exact_if_within_budget", "ratio",
)


def _bench(args: argparse.Namespace) -> int:
    from .graph import gnp

    try:
        ns = [int(x) for x in args.n.split(",")]
        ps = [float(x) for x in args.p.split(",")]
        seeds = _seed_list(args.seeds)
    except ValueError as exc:
        raise ParseError(f"bad bench grid: {exc}") from None
    if not ns or not ps or not seeds:
        raise ParseError("bench grid must be non-empty")
    max_vertices = _budget(args, "max_vertices")
    max_nodes = _budget(args, "max_nodes")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for n in ns:
        for p in ps:
            for seed in seeds:
                g = gnp(n, p, seed)
                part = compute_partition(g)
                q = build_quotient(g, part)
                try:
                    c_h = _coloring.color_exact(
                        q.h, max_vertices=max_vertices, max_nodes=max_nodes
                    )
                    chi_h = c_h.palette
                    composed = _coloring.compose_coloring(q, c_h).palette
                except BudgetExceeded:
                    chi_h = composed = None
                try:
                    chi_g = _coloring.color_exact(
                        g, max_vertices=max_vertices, max_nodes=max_nodes
                    ).palette
                except BudgetExceeded:
                    chi_g = None
                ratio = "" if not chi_h else f"{composed / chi_h:.4f}"
                writer.writerow(
                    [
                        n,
                        p,
                        seed,
                        len(part),
                        "" if chi_h is None else chi_h,
                        "" if composed is None else composed,
                        "" if chi_g is None else chi_g,
                        ratio,
                    ]
                )
    return 0


def run(argv: list[str], stdin_text: str = "") -> tuple[int, str, str]:
    """Pure entry point: argv plus stdin text in, (exit code, out, err) back."""
    out_buf, err_buf = io.StringIO(), io.StringIO()
    with redirect_stdout(out_buf), redirect_stderr(err_buf):
        try:
            code = _dispatch(argv, stdin_text)
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 2
        except ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = 2
        except (StructureError, ContractViolation) as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = 1
        except BudgetExceeded as exc:
            print(f"error: {exc}", file=sys.stderr)
            code = 3
    return code, out_buf.getvalue(), err_buf.getvalue()


def main() -> int:
    argv = sys.argv[1:]
    stdin_text = ""
    if argv and argv[0] in GRAPH_COMMANDS and "-i" not in argv and "--input" not in argv:
        stdin_text = sys.stdin.read()
    code, out, err = run(argv, stdin_text)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
