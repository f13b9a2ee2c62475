"""Command-line interface.  Exit codes: 0 ok, 1 usage or input error, 2 verification mismatch."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import analysis, constructions, enumeration, kernels, relpoly
from .graph import (
    Graph6Error,
    GraphError,
    Multigraph,
    encode_graph6,
    format_edge_list,
    make_graph,
    read_graphs,
)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _frac(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _decimal(x: Fraction, digits: int) -> str:
    scaled = round(x * 10**digits)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def _load(path: str) -> list[Multigraph]:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return read_graphs(text)
    except (GraphError, Graph6Error) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_one(path: str) -> Multigraph:
    graphs = _load(path)
    if len(graphs) != 1:
        raise UsageError(f"{path}: expected one graph, found {len(graphs)}")
    return graphs[0]


def _emit_graph(G: Multigraph, fmt: str) -> str:
    if fmt == "graph6":
        if not G.is_simple():
            raise UsageError("graph has parallel edges; graph6 cannot hold them, use --format text")
        return encode_graph6(G) + "\n"
    if fmt == "json":
        return json.dumps({"n": G.n, "edges": [list(e) for e in G.edges]}) + "\n"
    return format_edge_list(G)


# --- subcommands -----------------------------------------------------------------------


def cmd_relpoly(args, out) -> int:
    compute = {
        "auto": relpoly.reliability,
        "factoring": lambda G: relpoly.rel_factoring(G, pivot=args.pivot),
        "bruteforce": relpoly.rel_bruteforce,
        "subsets": relpoly.rel_vertex_subsets,
    }[args.method]
    rows = []
    for G in _load(args.input):
        try:
            P = compute(G)
        except relpoly.ReliabilityError as exc:
            raise UsageError(str(exc)) from None
        rows.append((G, P))
    for G, P in rows:
        desc = relpoly.coefficient_vector_descending(P, G.n) if G.n >= 1 else list(P.N)
        if args.format == "json":
            out.write(P.to_json() + "\n")
        elif args.format == "csv":
            out.write(",".join(map(str, desc)) + "\n")
        else:
            out.write(f"n={G.n} m={G.m} N_desc={desc}\n")
    return EXIT_OK


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"bad vector {text!r}; write e.g. 3,3,3,2") from None


def cmd_construct(args, out) -> int:
    kind = args.kind.lower()

    def need(*names):
        missing = [f"--{x.replace('_', '-')}" for x in names if getattr(args, x) is None]
        if missing:
            raise UsageError(f"construct {kind} needs {' '.join(missing)}")

    try:
        if kind == "fcg":
            need("n", "c")
            G = constructions.fcg(args.n, args.c)
        elif kind == "umr":
            need("n", "m")
            G = constructions.umr_subdivision(args.n, args.m)
        elif kind in ("g1", "g2", "g3", "g4", "matching-complement"):
            need("n")
            G = constructions.complement_family(kind, args.n, args.removed)
        elif kind == "cpath":
            need("vector")
            G = constructions.graph_from_cpath_vector(_vector(args.vector), args.type)
        elif kind == "one-chord":
            need("n", "x1")
            G = constructions.cycle_with_one_chord(args.n, args.x1)
        else:
            G = constructions.named_graph(kind)
    except (constructions.ConstructionError, GraphError) as exc:
        raise UsageError(str(exc)) from None
    out.write(_emit_graph(G, args.format))
    return EXIT_OK


def cmd_enumerate(args, out) -> int:
    t0 = time.perf_counter()
    try:
        if args.family == "hamiltonian":
            if args.c is None:
                raise UsageError("enumerate hamiltonian needs --c")
            graphs = enumeration.enumerate_hamiltonian(args.n, args.c)
        else:
            graphs = enumeration.enumerate_hd(args.n)
    except enumeration.EnumerationError as exc:
        raise UsageError(str(exc)) from None
    count = enumeration.write_graph6(graphs, out)
    summary = enumeration.summary_json(args.family, args.n, args.c, count, time.perf_counter() - t0)
    if args.summary:
        Path(args.summary).write_text(summary + "\n")
    else:
        sys.stderr.write(summary + "\n")
    return EXIT_OK


def cmd_search_umr(args, out) -> int:
    graphs = _load(args.input)
    try:
        rep = analysis.search_umr(graphs, jobs=args.jobs)
    except analysis.AnalysisError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(analysis.to_json(rep.to_dict()) + "\n")
        return EXIT_OK
    out.write(f"candidates={rep.candidates} outcome={rep.outcome} method={rep.method}\n")
    for i, v in zip(rep.dominant, rep.dominant_vectors * len(rep.dominant)):
        out.write(f"dominant #{i} {encode_graph6(graphs[i])} N_desc={v}\n")
    if rep.crossing:
        i, j, v = rep.crossing
        spans = " ".join(f"({_frac(a)},{_frac(b)})" for a, b in v.intervals)
        out.write(f"crossing #{i} vs #{j}: {spans}\n")
    return EXIT_OK


def cmd_verify_table(args, out) -> int:
    rows = None
    if args.rows:
        try:
            rows = [int(x) for x in args.rows.split(",")]
        except ValueError:
            raise UsageError(f"bad --rows {args.rows!r}; write e.g. 12,13") from None
    try:
        result = analysis.reproduce_table(args.table, rows=rows, jobs=args.jobs)
    except analysis.AnalysisError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        out.write(analysis.rows_to_csv(result))
    elif args.format == "json":
        out.write(analysis.to_json([r.to_dict() for r in result]) + "\n")
    else:
        for r in result:
            status = "MATCH" if r.match else "MISMATCH"
            out.write(f"{r.table} {r.key} expected={r.expected} got={r.got} {status}\n")
    return EXIT_OK if result and all(r.match for r in result) else EXIT_MISMATCH


def cmd_verify_nonexistence(args, out) -> int:
    ok = True
    for n in args.n:
        try:
            cert = analysis.verify_nonexistence(n)
        except (analysis.AnalysisError, constructions.ConstructionError) as exc:
            raise UsageError(str(exc)) from None
        ok &= cert.ok
        if args.format == "json":
            out.write(analysis.to_json(cert.to_dict()) + "\n")
        else:
            v = cert.verdict
            spans = " ".join(f"({_frac(a)},{_frac(b)})" for a, b in v.intervals)
            out.write(
                f"n={n} m={cert.m} {cert.names[0]}/{cert.names[1]} "
                f"hamiltonian={[c is not None for c in cert.cycles]} verdict={v.kind} "
                f"intervals={spans or '-'} {'CERTIFIED' if cert.ok else 'FAILED'}\n"
            )
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_compare(args, out) -> int:
    G, H = _load_one(args.a), _load_one(args.b)
    try:
        v = relpoly.compare_on_unit_interval(relpoly.reliability(G), relpoly.reliability(H))
    except relpoly.ReliabilityError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(json.dumps(v.to_dict(), sort_keys=True) + "\n")
    else:
        label = {"FirstDominates": "FIRST_DOMINATES", "SecondDominates": "SECOND_DOMINATES"}
        line = label.get(v.kind, v.kind.upper())
        if v.intervals:
            line += " " + " ".join(f"({_frac(a)},{_frac(b)})" for a, b in v.intervals)
        out.write(line + "\n")
    return EXIT_OK


def cmd_plot_data(args, out) -> int:
    graphs = _load(args.input)
    if args.points < 2:
        raise UsageError("--points must be at least 2")
    polys = [relpoly.reliability(G) for G in graphs]
    out.write("p," + ",".join(f"rel_{i}" for i in range(len(polys))) + "\n")
    for k in range(args.points):
        p = Fraction(k, args.points - 1)
        vals = [_decimal(relpoly.evaluate(P, p), args.digits) for P in polys]
        out.write(_decimal(p, args.digits) + "," + ",".join(vals) + "\n")
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    """Random multigraphs: factoring against brute force and matrix-tree."""
    rng = random.Random(args.seed)
    bad = 0
    for _ in range(args.count):
        n = rng.randint(2, 7)
        m = rng.randint(n - 1, args.max_edges)
        tree = [(rng.randrange(i), i) for i in range(1, n)]
        extra = []
        for _ in range(m - len(tree)):
            u, v = rng.sample(range(n), 2)
            extra.append((u, v))
        G = make_graph(n, tree + extra)
        P = relpoly.rel_factoring(G)
        if P != relpoly.rel_bruteforce(G) or P.N[n - 1] != relpoly.spanning_tree_count(G):
            bad += 1
            out.write(f"DISCREPANCY {format_edge_list(G)!r}\n")
    out.write(f"graphs={args.count} discrepancies={bad} backend={kernels.BACKEND}\n")
    return EXIT_OK if bad == 0 else EXIT_MISMATCH


# --- wiring --------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "graph6", "text"], default="text")
    common.add_argument("--output", "-o", help="write here instead of stdout")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (env HAMREL_JOBS)")
    common.add_argument("--memo-limit", type=int, default=None, help="factoring cache entries; 0 disables")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized corpora only")

    p = _Parser(prog="hamrel", description="Exact reliability polynomials of hamiltonian graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("relpoly", parents=[common], help="pathset vector of graph6 / edge-list input")
    s.add_argument("input", help="file path or - for stdin")
    s.add_argument("--method", choices=["auto", "factoring", "bruteforce", "subsets"], default="auto")
    s.add_argument("--pivot", choices=sorted(relpoly.PIVOTS), default="hub")
    s.set_defaults(func=cmd_relpoly)

    s = sub.add_parser("construct", parents=[common], help="build a named graph or family member")
    s.add_argument("kind", help="wagner, petersen, k4, k33, kN, cN, monma-base, fcg, umr, "
                   "g1..g4, matching-complement, cpath, one-chord")
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--c", type=int)
    s.add_argument("--x1", type=int)
    s.add_argument("--vector", help="c-path vector, e.g. 3,3,3,2")
    s.add_argument("--type", default="A", choices=["A", "A-hat", "B"])
    s.add_argument("--removed", type=int, help="independent edges removed (matching-complement)")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("enumerate", parents=[common], help="stream non-isomorphic graphs as graph6")
    s.add_argument("family", choices=["hamiltonian", "hd"])
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--c", type=int)
    s.add_argument("--summary", help="write the JSON summary here instead of stderr")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("search-umr", parents=[common], help="most reliable graph among candidates")
    s.add_argument("input")
    s.set_defaults(func=cmd_search_umr)

    s = sub.add_parser("verify-table", parents=[common], help="regenerate T2, T3 or T4")
    s.add_argument("table", help="T2, T3 or T4")
    s.add_argument("--rows", help="comma-separated n values (chord indices for T2)")
    s.set_defaults(func=cmd_verify_table)

    s = sub.add_parser("verify-nonexistence", parents=[common], help="crossing certificate")
    s.add_argument("--n", type=int, nargs="+", required=True)
    s.set_defaults(func=cmd_verify_nonexistence)

    s = sub.add_parser("compare", parents=[common], help="sign of Rel(a) - Rel(b) on (0,1)")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("plot-data", parents=[common], help="CSV samples of Rel(G, p)")
    s.add_argument("input")
    s.add_argument("--points", type=int, default=101)
    s.add_argument("--digits", type=int, default=10)
    s.set_defaults(func=cmd_plot_data)

    s = sub.add_parser("oracle", parents=[common], help="random cross-check of the exact methods")
    s.add_argument("--count", type=int, default=1000)
    s.add_argument("--max-edges", type=int, default=16)
    s.set_defaults(func=cmd_oracle)
    return p


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.memo_limit is not None:
            relpoly.DEFAULT_MEMO_LIMIT = args.memo_limit
        if args.output:
            with open(args.output, "w") as fh:
                return args.func(args, fh)
        return args.func(args, stdout)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run())
