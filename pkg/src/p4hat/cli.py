"""Command-line front end with deterministic, machine-readable output.

Data goes to stdout; progress and timing go to stderr so the data stream
stays pure.  Stdout bytes are identical across repeated runs and across
worker counts.  Exit codes: 0 = verified/exhausted, 1 = malformed stream
input, 2 = counterexample/violation/witness found, 64 = usage error.
JSON schemas are documented in the README; every single-document payload
carries ``schema_version``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, TextIO

from .blocks import decompose
from .bounds import case_threshold_audit, floor_identity_audit
from .canon import canonical_form
from .constructions import FAMILIES
from .graphs import Graph6Error, GraphError, GuardError, count_triangles, decode_graph6
from .patterns import contains_suspension_p4
from .search import counterexample_search, extremal_value

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_STREAM_ERROR = 1
EXIT_FOUND = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(doc: dict[str, Any], args: argparse.Namespace, out: TextIO) -> None:
    if args.format == "json":
        out.write(json.dumps(doc, indent=2))
        out.write("\n")
    else:
        for key, value in doc.items():
            out.write(f"{key}: {value}\n")


def _emit_line(doc: dict[str, Any], args: argparse.Namespace, out: TextIO) -> None:
    if args.format == "json":
        out.write(json.dumps(doc, separators=(", ", ": ")))
        out.write("\n")
    else:
        out.write("  ".join(f"{k}={v}" for k, v in doc.items()))
        out.write("\n")


def _cmd_search(args: argparse.Namespace, out: TextIO) -> int:
    def progress(chunk: int, examined: int) -> None:
        print(f"chunk {chunk}: {examined} subsets", file=sys.stderr)

    started = time.perf_counter()
    report = counterexample_search(args.n, args.t, workers=args.workers, progress=progress)
    print(f"search n={args.n} t={args.t}: {time.perf_counter() - started:.2f}s "
          f"({args.workers} workers)", file=sys.stderr)

    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": "search",
        "n": args.n,
        "t": args.t,
        "candidate_count": len(report.spec.candidates),
        "subset_size": args.t - 2,
        "outcome": report.outcome,
        "graphs_examined": report.graphs_examined,
        "unions_p4hat_free_with_excess": report.unions_p4hat_free_with_excess,
        "nonexistence_certified": report.nonexistence_certified,
    }
    if report.counterexample is not None:
        doc["counterexample"] = {
            "graph6": _g6(report.counterexample),
            "triangles": count_triangles(report.counterexample),
            "rank": report.counterexample_rank,
        }
    _emit(doc, args, out)
    return EXIT_FOUND if report.outcome == "counterexample" else EXIT_OK


def _g6(g) -> str:
    from .graphs import encode_graph6

    return encode_graph6(g).decode("ascii")


def _cmd_extremal(args: argparse.Namespace, out: TextIO) -> int:
    started = time.perf_counter()
    value, configs = extremal_value(args.n, workers=args.workers)
    print(f"extremal n={args.n}: {time.perf_counter() - started:.2f}s", file=sys.stderr)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "extremal",
        "n": args.n,
        "ex_value": value,
        "method": "exhaustive-enumeration" if args.n <= 7 else "pruned-search",
        "config_count": len(configs),
        "configs": [canonical_form(g).decode("ascii") for g in configs],
    }
    _emit(doc, args, out)
    return EXIT_OK


def _cmd_verify_construction(args: argparse.Namespace, out: TextIO) -> int:
    family = FAMILIES[args.family]
    n = args.n
    if n is None:
        if args.family != "sixteen-vertex":
            raise GuardError(f"--n is required for family {args.family} ({family.parameter})")
        n = 16
    if not family.valid(n):
        raise GuardError(f"family {args.family} expects {family.parameter}, got {n}")
    graph = family.build(n)
    expected = family.expected_triangles(n)
    triangles = count_triangles(graph)
    witness = contains_suspension_p4(graph)
    checks = {
        "triangles_match": triangles == expected,
        "p4hat_free_match": (witness is None) == family.p4hat_free,
    }
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify-construction",
        "family": args.family,
        "parameter": n,
        "vertices": graph.n,
        "edges": graph.edge_count(),
        "triangles": triangles,
        "expected_triangles": expected,
        "p4hat_free": witness is None,
        "expected_p4hat_free": family.p4hat_free,
    }
    if args.family == "sixteen-vertex":
        kinds = decompose(graph).kinds()
        checks["all_k4_blocks"] = kinds == ["K4"] * len(kinds)
        doc["block_kinds"] = kinds
    if args.emit_graph6:
        doc["graph6"] = _g6(graph)
    doc["checks"] = checks
    doc["passed"] = all(checks.values())
    _emit(doc, args, out)
    return EXIT_OK if doc["passed"] else EXIT_FOUND


def _iter_graph6_lines(stream: TextIO):
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        yield lineno, line


def _cmd_blocks(args: argparse.Namespace, out: TextIO, stream: TextIO) -> int:
    errors = 0
    for lineno, line in _iter_graph6_lines(stream):
        try:
            graph = decode_graph6(line)
        except Graph6Error as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            _emit_line({"line": lineno, "error": str(exc)}, args, out)
            errors += 1
            continue
        dec = decompose(graph)
        doc = {
            "line": lineno,
            "graph6": line,
            "n": graph.n,
            "blocks": [
                {
                    "kind": b.kind,
                    "pages": b.pages,
                    "vertices": list(b.vertices),
                    "edges": [list(e) for e in b.edges],
                }
                for b in dec.blocks
            ],
            "stray_edges": [list(e) for e in dec.stray_edges],
        }
        _emit_line(doc, args, out)
    return EXIT_STREAM_ERROR if errors else EXIT_OK


def _cmd_witness(args: argparse.Namespace, out: TextIO, stream: TextIO) -> int:
    errors = 0
    found = 0
    for lineno, line in _iter_graph6_lines(stream):
        try:
            graph = decode_graph6(line)
        except Graph6Error as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            _emit_line({"line": lineno, "error": str(exc)}, args, out)
            errors += 1
            continue
        witness = contains_suspension_p4(graph)
        if witness is None:
            _emit_line({"line": lineno, "graph6": line, "status": "p4hat-free"}, args, out)
        else:
            found += 1
            _emit_line(
                {
                    "line": lineno,
                    "graph6": line,
                    "status": "witness",
                    "apex": witness.apex,
                    "path": list(witness.path),
                },
                args,
                out,
            )
    if errors:
        return EXIT_STREAM_ERROR
    return EXIT_FOUND if found else EXIT_OK


def _cmd_check_bounds(args: argparse.Namespace, out: TextIO) -> int:
    floors = floor_identity_audit(args.n_max)
    cases = case_threshold_audit(max(args.n_max, 17))
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": "check-bounds",
        "n_max": args.n_max,
        "floor_identities": {
            "checked_from": floors.n_min,
            "checked_to": floors.n_max,
            "ok": floors.ok,
            "first_violation": floors.first_violation,
        },
        "case_thresholds": {
            "checked_to": cases.n_max,
            "case1_ok": cases.case1_ok,
            "case1_violations": list(cases.case1_violations),
            "case2_ok": cases.case2_ok,
            "case2_violations": list(cases.case2_violations),
            "cauchy_schwarz_ok": cases.cauchy_schwarz_ok,
        },
        "passed": floors.ok and cases.passed,
    }
    _emit(doc, args, out)
    return EXIT_OK if doc["passed"] else EXIT_FOUND


def build_parser() -> _Parser:
    parser = _Parser(prog="p4hat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: _Parser) -> None:
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", default="-", help="output path, '-' for stdout")

    import os

    default_workers = os.cpu_count() or 1

    p = sub.add_parser("search", help="pruned subset search for (n, t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--workers", type=int, default=default_workers,
                   help="parallel workers (default: available parallelism)")
    common(p)

    p = sub.add_parser("extremal", help="extremal value and configurations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--workers", type=int, default=default_workers,
                   help="parallel workers (default: available parallelism)")
    common(p)

    p = sub.add_parser("verify-construction", help="check a lower-bound family")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--emit-graph6", action="store_true")
    common(p)

    p = sub.add_parser("blocks", help="triangle-block decomposition of graph6 lines")
    p.add_argument("--input", default="-", help="input path, '-' for stdin")
    common(p)

    p = sub.add_parser("witness", help="forbidden-pattern witnesses for graph6 lines")
    p.add_argument("--input", default="-", help="input path, '-' for stdin")
    common(p)

    p = sub.add_parser("check-bounds", help="floor identities and case thresholds")
    p.add_argument("--n-max", type=int, default=1000000)
    common(p)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    out: TextIO = sys.stdout
    close_out = False
    if getattr(args, "output", "-") != "-":
        out = open(args.output, "w", encoding="ascii")
        close_out = True

    stream: TextIO = sys.stdin
    close_stream = False
    if getattr(args, "input", "-") != "-":
        stream = open(args.input, "r", encoding="ascii")
        close_stream = True

    try:
        if args.command == "search":
            return _cmd_search(args, out)
        if args.command == "extremal":
            return _cmd_extremal(args, out)
        if args.command == "verify-construction":
            return _cmd_verify_construction(args, out)
        if args.command == "blocks":
            return _cmd_blocks(args, out, stream)
        if args.command == "witness":
            return _cmd_witness(args, out, stream)
        if args.command == "check-bounds":
            return _cmd_check_bounds(args, out)
        parser.error(f"unknown command {args.command!r}")
        return EXIT_USAGE
    except (GuardError, GraphError) as exc:
        print(f"p4hat {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if close_out:
            out.close()
        if close_stream:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
