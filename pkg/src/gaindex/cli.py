"""Command-line surface: compute indices, build line graphs, run checks and sweeps.

Exit codes: 0 all good, 1 a checked statement was violated, 2 usage or parse
error.  Output is deterministic for a fixed configuration (including seeds).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .checks import CHECK_IDS, DEFAULT_ALPHAS, run_checks
from .enumeration import census_rows, enumerate_connected, extremal_search
from .formats import (
    Graph6Error,
    iter_graph6,
    looks_like_edge_list,
    parse_graph_spec,
    read_edge_list,
    to_graph6,
)
from .graphs import Graph, canonical_form, classify, graph_name
from .indices import all_indices, chi_alpha, m1_alpha, m2_alpha
from .linegraph import line_graph, line_zagreb_identity, verify_degree_identity
from .sweeps import exhaustive_sweep, random_sweep

DEFAULT_PRECISION = 53
PRECISION_ENV = "GAINDEX_PRECISION"


class UsageError(Exception):
    pass


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad alpha {text!r}: {exc}") from exc


def _add_io_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "graphs",
        nargs="*",
        help="inline graphs: named shorthand (P5, C4, S5, K5,20, DS1,2, paw), "
        "graph6 strings, or '-' for stdin",
    )
    sub.add_argument("-i", "--input", help="file of graph6 lines or an edge list")
    sub.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default text)",
    )
    sub.add_argument(
        "--precision",
        type=int,
        default=None,
        help=f"float display precision in bits (default {DEFAULT_PRECISION}; "
        f"env {PRECISION_ENV} overrides the default)",
    )


def _resolve_precision(args: argparse.Namespace) -> int:
    if args.precision is not None:
        return args.precision
    env = os.environ.get(PRECISION_ENV)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"bad {PRECISION_ENV}={env!r}: {exc}") from exc
    return DEFAULT_PRECISION


def _load_graphs(args: argparse.Namespace) -> list[Graph]:
    graphs: list[Graph] = []
    if args.input:
        text = Path(args.input).read_text()
        if looks_like_edge_list(text):
            graphs.append(read_edge_list(text))
        else:
            graphs.extend(iter_graph6(text))
    for spec in args.graphs:
        if spec == "-":
            text = sys.stdin.read()
            if looks_like_edge_list(text):
                graphs.append(read_edge_list(text))
            else:
                graphs.extend(iter_graph6(text))
        else:
            graphs.append(parse_graph_spec(spec))
    if not graphs:
        raise UsageError("no input graphs (pass shorthand, graph6, --input or '-')")
    return graphs


def _value_cell(value, precision: int) -> dict:
    exact = value.exact
    return {
        "exact": None if exact is None else str(exact),
        "approx": exact.to_float(max(32, min(precision, 53)))
        if exact is not None
        else value.approx,
        "precision_bits": precision,
    }


def _emit_rows(rows: list[dict], fmt: str, out: io.TextIOBase) -> None:
    if fmt == "json":
        json.dump(rows, out, indent=2, sort_keys=True)
        out.write("\n")
    elif fmt == "csv":
        if rows:
            flat = [_flatten(row) for row in rows]
            keys = sorted({k for row in flat for k in row})
            writer = csv.DictWriter(out, fieldnames=keys)
            writer.writeheader()
            writer.writerows(flat)
    else:
        for row in rows:
            for key, val in row.items():
                out.write(f"{key}: {val}\n")
            out.write("\n")


def _flatten(row: dict, prefix: str = "") -> dict:
    flat: dict = {}
    for key, val in row.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            flat.update(_flatten(val, prefix=f"{name}."))
        else:
            flat[name] = val
    return flat


def cmd_compute(args: argparse.Namespace) -> int:
    precision = _resolve_precision(args)
    graphs = _load_graphs(args)
    rows = []
    for g in graphs:
        row: dict = {
            "graph6": to_graph6(g),
            "n": g.n,
            "m": g.m,
            "max_degree": g.max_degree,
            "min_degree": g.min_degree,
            "class": str(classify(g)),
            "name": graph_name(g) or "",
        }
        for key, value in all_indices(g).items():
            row[key] = _value_cell(value, precision)
        for alpha in args.alpha or []:
            row[f"M1^{alpha}"] = _value_cell(m1_alpha(g, alpha), precision)
            row[f"M2^{alpha}"] = _value_cell(m2_alpha(g, alpha), precision)
            row[f"chi_{alpha}"] = _value_cell(chi_alpha(g, alpha), precision)
        rows.append(row)
    _emit_rows(rows, args.format, sys.stdout)
    return 0


def cmd_linegraph(args: argparse.Namespace) -> int:
    graphs = _load_graphs(args)
    rows = []
    for g in graphs:
        result = line_graph(g)
        identity = line_zagreb_identity(g)
        rows.append(
            {
                "graph6": to_graph6(g),
                "line_graph6": to_graph6(result.graph),
                "line_n": result.graph.n,
                "line_m": result.graph.m,
                "line_max_degree": result.graph.max_degree,
                "line_min_degree": result.graph.min_degree,
                "degree_identity": verify_degree_identity(g),
                "zagreb_identity": identity.holds,
            }
        )
    _emit_rows(rows, args.format, sys.stdout)
    return 0


def _report_rows(g: Graph, reports) -> list[dict]:
    rows = []
    for report in reports:
        row = report.to_dict()
        row["graph6"] = to_graph6(g)
        rows.append(row)
    return rows


def cmd_check(args: argparse.Namespace) -> int:
    graphs = _load_graphs(args)
    ids = None
    if args.theorems and args.theorems != "all":
        ids = [tok.strip() for tok in args.theorems.split(",") if tok.strip()]
        unknown = [tok for tok in ids if tok not in CHECK_IDS]
        if unknown:
            raise UsageError(
                f"unknown check ids {unknown}; available: {', '.join(CHECK_IDS)}"
            )
    alphas = tuple(args.alpha) if args.alpha else DEFAULT_ALPHAS
    rows = []
    violated = False
    for g in graphs:
        reports = run_checks(g, ids=ids, alphas=alphas)
        violated = violated or any(r.violated for r in reports)
        rows.extend(_report_rows(g, reports))
    _emit_rows(rows, args.format, sys.stdout)
    return 1 if violated else 0


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.nmax > 7:
        raise UsageError("sweep supports --nmax at most 7 (enumeration limit)")
    alphas = tuple(args.alpha) if args.alpha else DEFAULT_ALPHAS
    result = exhaustive_sweep(args.nmax, alphas=alphas)
    if args.trials:
        random_part = random_sweep(
            args.trials, seed=args.seed, n_high=args.random_nmax, alphas=alphas
        )
        for check_id, agg in random_part.aggregates.items():
            mine = result.aggregates.setdefault(check_id, agg.__class__(check_id))
            mine.tested += agg.tested
            mine.skipped += agg.skipped
            mine.violations += agg.violations
            mine.equalities += agg.equalities
            mine.mismatches += agg.mismatches
        result.failures.extend(random_part.failures)
    rows = [
        {
            "check_id": agg.check_id,
            "tested": agg.tested,
            "skipped": agg.skipped,
            "violations": agg.violations,
            "equalities": agg.equalities,
            "characterization_mismatches": agg.mismatches,
        }
        for agg in sorted(result.aggregates.values(), key=lambda a: a.check_id)
    ]
    for note in result.notes:
        rows.append({"note": note})
    _emit_rows(rows, args.format, sys.stdout)
    if not result.clean:
        sys.stdout.write(f"FAILURES: {len(result.failures)}\n")
        for source, report in result.failures[:20]:
            sys.stdout.write(f"  {source}: {report.check_id}: {report.notes}\n")
        return 1
    return 0


def cmd_extremal(args: argparse.Namespace) -> int:
    optima = extremal_search(args.n, args.m, args.objective)
    rows = []
    for g, value in optima:
        rows.append(
            {
                "graph6": to_graph6(g),
                "name": graph_name(g) or "",
                "canonical_form": canonical_form(g),
                "ga1_exact": str(value),
                "ga1_float": value.to_float(),
            }
        )
    _emit_rows(rows, args.format, sys.stdout)
    return 0


def cmd_census(args: argparse.Namespace) -> int:
    outdir = Path(args.output)
    outdir.mkdir(parents=True, exist_ok=True)
    for n in range(1, args.nmax + 1):
        graphs = enumerate_connected(n, max_n=max(args.nmax, 7))
        g6_path = outdir / f"census_n{n}.g6"
        g6_path.write_text("".join(to_graph6(g) + "\n" for g in graphs))
        rows = census_rows(n)
        csv_path = outdir / f"census_n{n}.csv"
        with csv_path.open("w", newline="") as handle:
            writer = csv.DictWriter(
                handle,
                fieldnames=["canonical_form", "name", "n", "m", "ga1_exact", "ga1_float"],
            )
            writer.writeheader()
            writer.writerows(rows)
        sys.stdout.write(f"n={n}: {len(graphs)} graphs -> {g6_path}, {csv_path}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaindex",
        description="Exact geometric-arithmetic index computations, line graphs, "
        "and verification sweeps over small graphs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("compute", help="compute the index battery per graph")
    _add_io_arguments(sub)
    sub.add_argument(
        "--alpha",
        type=_fraction_arg,
        action="append",
        help="extra exponent for the variable indices (repeatable)",
    )
    sub.set_defaults(func=cmd_compute)

    sub = subs.add_parser("linegraph", help="emit line graphs plus identity report")
    _add_io_arguments(sub)
    sub.set_defaults(func=cmd_linegraph)

    sub = subs.add_parser("check", help="run selected checks on input graphs")
    _add_io_arguments(sub)
    sub.add_argument(
        "--theorems",
        default="all",
        help="comma-separated check ids, or 'all' (default)",
    )
    sub.add_argument(
        "--alpha",
        type=_fraction_arg,
        action="append",
        help="alpha samples for the parameterized bounds",
    )
    sub.set_defaults(func=cmd_check)

    sub = subs.add_parser("sweep", help="exhaustive plus random verification campaign")
    sub.add_argument("--nmax", type=int, default=6, help="exhaustive order bound (<= 7)")
    sub.add_argument("--trials", type=int, default=0, help="random graphs to test")
    sub.add_argument("--seed", type=int, default=42, help="seed for the random part")
    sub.add_argument(
        "--random-nmax", type=int, default=12, help="max order of random graphs"
    )
    sub.add_argument(
        "--alpha",
        type=_fraction_arg,
        action="append",
        help="alpha samples for the parameterized bounds",
    )
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub.set_defaults(func=cmd_sweep)

    sub = subs.add_parser("extremal", help="exact extremal graphs for fixed (n, m)")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--m", type=int, required=True)
    sub.add_argument("--objective", choices=("min", "max"), required=True)
    sub.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub.set_defaults(func=cmd_extremal)

    sub = subs.add_parser("census", help="write per-order census files (graph6 + CSV)")
    sub.add_argument("--nmax", type=int, default=7)
    sub.add_argument("--output", default="census", help="output directory")
    sub.set_defaults(func=cmd_census)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (Graph6Error, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
