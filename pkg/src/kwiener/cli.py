"""Command-line interface.

Exit status: 0 on success, 1 on a verification mismatch or bound violation,
2 on usage or input errors (one line on stderr).
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import os
import sys
from fractions import Fraction

from . import __version__
from .errors import GraphError, ParameterError, ParseError, TheoremViolation
from .formulas import bound_report, harary_closed_form, verify_closed_forms
from .graph import diameter, eccentricity, statuses, wiener
from .harary import harary
from .io import (
    ReportEnvelope,
    decode_graph6,
    encode_graph6,
    format_edge_list,
    parse_edge_list,
    to_jsonable,
)
from .search import (
    extremal_wiener,
    scan_graphs,
    verify_diameter_bound,
    verify_entringer,
    verify_status_bound,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class Outcome:
    """What a subcommand produced, ready for any output format."""

    def __init__(self, command, parameters, results, columns=(), rows=(), text=None, status=0):
        self.command = command
        self.parameters = parameters
        self.results = results
        self.columns = list(columns)
        self.rows = [list(r) for r in rows]
        self.text = text
        self.status = status


def _cell(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    value = to_jsonable(value)
    if value is None:
        return "-"
    if isinstance(value, (list, dict)):
        return str(value).replace(" ", "")
    return str(value)


def _table(columns, rows):
    cells = [[str(c) for c in columns]] + [[_cell(v) for v in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(columns))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render(outcome: Outcome, fmt: str) -> str:
    if fmt == "json":
        return ReportEnvelope(outcome.command, outcome.parameters, outcome.results).to_json()
    if fmt == "csv":
        buf = _io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(outcome.columns)
        for r in outcome.rows:
            writer.writerow([_cell(v) for v in r])
        return buf.getvalue()
    if outcome.text is not None:
        return outcome.text
    return _table(outcome.columns, outcome.rows)


# ---------------------------------------------------------------------------
# subcommands


def _workers(args):
    if args.workers is not None:
        value = args.workers
    else:
        env = os.environ.get("WIENER_WORKERS")
        if not env:
            return 1
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"WIENER_WORKERS must be an integer, got {env!r}") from None
    if value < 1:
        raise UsageError(f"worker count must be >= 1, got {value}")
    return value


def _progress(args):
    if not getattr(args, "progress", False):
        return None

    def report(done, total, graphs):
        print(f"chunk {done}/{total}, {graphs} graphs", file=sys.stderr)

    return report


def cmd_harary(args):
    g = harary(args.k, args.n)
    g6 = encode_graph6(g)
    text = format_edge_list(g) if args.out == "edge-list" else g6 + "\n"
    return Outcome(
        "harary",
        {"k": args.k, "n": args.n},
        {"n": g.n, "edges": g.edges(), "num_edges": g.num_edges, "graph6": g6},
        ["u", "v"],
        g.edges(),
        text=text,
    )


def _read_graph(path, fmt):
    if path == "-":
        data = sys.stdin.read()
    else:
        with open(path) as fh:
            data = fh.read()
    if fmt == "auto":
        fmt = "edge-list" if data.lstrip().startswith("n") else "graph6"
    return parse_edge_list(data) if fmt == "edge-list" else decode_graph6(data)


def cmd_wiener(args):
    g = _read_graph(args.input, args.in_format)
    w = wiener(g)
    results = {"n": g.n, "num_edges": g.num_edges, "wiener": w}
    columns, rows = ["n", "edges", "W"], [[g.n, g.num_edges, w]]
    if args.per_vertex:
        st = statuses(g)
        ecc = [eccentricity(g, x) for x in range(g.n)]
        results["statuses"] = st
        results["eccentricities"] = ecc
        results["diameter"] = diameter(g)
        columns = ["vertex", "status", "ecc"]
        rows = [[x, st[x], ecc[x]] for x in range(g.n)]
        text = _table(columns, rows) + f"diameter {results['diameter']}\nW {w}\n"
        return Outcome("wiener", {"per_vertex": True}, results, columns, rows, text=text)
    return Outcome("wiener", {"per_vertex": False}, results, columns, rows)


def cmd_closed_form(args):
    cf = harary_closed_form(args.k, args.n)
    columns = ["k", "n", "regime", "D", "W(x)", "W(z)", "W"]
    rows = [[cf.k, cf.n, cf.regime, cf.diameter, cf.status_x, cf.status_z, cf.wiener]]
    return Outcome("closed-form", {"k": args.k, "n": args.n}, cf, columns, rows)


def cmd_bounds(args):
    rep = bound_report(args.n, args.k)
    columns = ["n", "k", "diam", "status", "W", "floor(W)", "mean dist"]
    rows = [[rep.n, rep.k, rep.diameter_bound, rep.status_bound, rep.wiener_bound,
             rep.wiener_bound_floor, rep.mean_distance_bound]]
    results = to_jsonable(rep)
    if rep.boundary:
        results["note"] = rep.note
    text = _table(columns, rows) + (rep.note + "\n" if rep.boundary else "")
    return Outcome("bounds", {"k": args.k, "n": args.n}, results, columns, rows, text=text)


def cmd_verify_formulas(args):
    ks = range(2, args.k_max + 1)
    ns = range(2, args.n_max + 1)
    report = verify_closed_forms(ks, ns, workers=_workers(args))
    columns = ["k", "n", "quantity", "expected", "observed"]
    rows = [[m.k, m.n, m.quantity, m.expected, m.observed] for m in report.mismatches]
    text = (_table(columns, rows) if rows else "") + (
        f"{len(report.pairs)} pairs checked, {len(report.mismatches)} mismatches\n"
    )
    results = {"pairs_checked": len(report.pairs), "mismatches": report.mismatches}
    return Outcome(
        "verify formulas",
        {"k_max": args.k_max, "n_max": args.n_max},
        results,
        columns,
        rows,
        text=text,
        status=0 if report.ok else 1,
    )


def _scan(args):
    return scan_graphs(args.n, workers=_workers(args), progress=_progress(args), allow_large=args.full)


def cmd_verify_bounds(args):
    summary = _scan(args)
    ks = [args.k] if args.k is not None else list(range(1, args.n - 1))
    columns = ["n", "k", "k-conn", "max W", "W bound", "max status", "status bound",
               "max diam", "diam bound"]
    rows, per_k = [], []
    for k in ks:
        ext = extremal_wiener(args.n, k, summary=summary)
        st = verify_status_bound(args.n, k, summary=summary)
        dm = verify_diameter_bound(args.n, k, summary=summary)
        rows.append([args.n, k, ext.k_connected_count, ext.max_wiener, ext.bound,
                     st.max_status, st.bound, dm.max_diameter, dm.bound])
        per_k.append({"wiener": ext, "status": st, "diameter": dm})
    text = _table(columns, rows) + f"{summary.graphs_scanned} graphs scanned, 0 violations\n"
    return Outcome(
        "verify bounds",
        {"n": args.n, "k": args.k, "full": args.full},
        {"graphs_scanned": summary.graphs_scanned, "violations": 0, "per_k": per_k},
        columns,
        rows,
        text=text,
    )


def cmd_verify_entringer(args):
    summary = _scan(args)
    rep = verify_entringer(args.n, summary=summary)
    columns = ["n", "connected", "min W", "unique K_n", "max W", "maximisers", "all paths"]
    rows = [[rep.n, rep.connected_count, rep.min_wiener, rep.min_unique_complete,
             rep.max_wiener, rep.max_count, rep.max_all_paths]]
    return Outcome("verify entringer", {"n": args.n}, rep, columns, rows, status=0 if rep.ok else 1)


def cmd_extremal(args):
    summary = _scan(args)
    rep = extremal_wiener(args.n, args.k, summary=summary)
    columns = ["n", "k", "scanned", "k-conn", "max W", "bound", "floor", "gap", "tight", "witness"]
    rows = [[rep.n, rep.k, rep.graphs_scanned, rep.k_connected_count, rep.max_wiener,
             rep.bound, rep.bound_floor, rep.gap, rep.tight, rep.witness]]
    return Outcome("extremal", {"n": args.n, "k": args.k}, rep, columns, rows)


# ---------------------------------------------------------------------------


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")

    scan = _Parser(add_help=False)
    scan.add_argument("--workers", type=int, default=None,
                      help="worker processes (default: $WIENER_WORKERS or 1)")
    scan.add_argument("--full", action="store_true", help="allow n = 8 (2^28 graphs)")
    scan.add_argument("--progress", action="store_true", help="report chunks on stderr")

    parser = _Parser(prog="kwiener", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("harary", parents=[common], help="construct H(k, n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", choices=["edge-list", "graph6"], default="edge-list")
    p.set_defaults(func=cmd_harary)

    p = sub.add_parser("wiener", parents=[common], help="Wiener index of a graph file")
    p.add_argument("--in", dest="input", required=True, help="graph file, or - for stdin")
    p.add_argument("--in-format", choices=["auto", "edge-list", "graph6"], default="auto")
    p.add_argument("--per-vertex", action="store_true")
    p.set_defaults(func=cmd_wiener)

    p = sub.add_parser("closed-form", parents=[common], help="closed forms for H(k, n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("bounds", parents=[common], help="diameter, status and Wiener bounds")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="verification sweeps")
    vsub = p.add_subparsers(dest="target", required=True, parser_class=_Parser)
    v = vsub.add_parser("formulas", parents=[common], help="closed forms against BFS")
    v.add_argument("--k-max", type=int, required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--workers", type=int, default=None)
    v.set_defaults(func=cmd_verify_formulas)
    v = vsub.add_parser("bounds", parents=[common, scan], help="exhaustive bound check")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, default=None, help="default: every 1 <= k <= n-2")
    v.set_defaults(func=cmd_verify_bounds)
    v = vsub.add_parser("entringer", parents=[common, scan], help="extremes over connected graphs")
    v.add_argument("--n", type=int, required=True)
    v.set_defaults(func=cmd_verify_entringer)

    p = sub.add_parser("extremal", parents=[common, scan], help="extremal Wiener report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_extremal)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        outcome = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except TheoremViolation as exc:
        print(f"violation: {exc}", file=stderr)
        if exc.witness is not None:
            print(f"witness graph6: {encode_graph6(exc.witness)}", file=stderr)
        return 1
    except (ParameterError, ParseError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    stdout.write(render(outcome, args.format))
    return outcome.status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
