"""Command-line front end.

Subcommands: bound, construct, verify, search, complement, iso.  JSON mode
writes exactly one document to stdout; progress and diagnostics go to
stderr.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 budget truncation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import bounds
from .construct import (
    ConstructionLayout,
    construct_bipartite,
    construct_fischermann,
    construct_star,
    verify_construction,
)
from .domination import is_umd
from .graph import (
    Graph,
    Graph6Error,
    are_isomorphic,
    bipartite_complement,
    bit_list,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    find_bipartition,
    parse_edge_list,
    parse_graph6,
)
from .search import count_extremal_witnesses, max_umd_bipartite_size

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CliError(Exception):
    """Usage-level failure (bad flags, unreadable input)."""


def _exact_to_json(value):
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return value


def load_graph(path: str) -> Graph:
    """Read a graph file, sniffing edge-list ('n m' header) vs graph6."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc
    stripped = text.strip()
    if not stripped:
        raise CliError(f"{path} is empty")
    head = stripped.splitlines()[0].split()
    if len(head) == 2 and all(tok.isdigit() for tok in head):
        try:
            return parse_edge_list(text)
        except ValueError as exc:
            raise CliError(f"{path}: {exc}") from exc
    try:
        return parse_graph6(stripped.splitlines()[0])
    except Graph6Error as exc:
        raise CliError(f"{path}: {exc}") from exc


def _emit_graph(g: Graph, fmt: str, layout: Optional[ConstructionLayout] = None) -> str:
    if fmt == "graph6":
        return emit_graph6(g) + "\n"
    if fmt == "edgelist":
        return emit_edge_list(g)
    if fmt == "dot":
        return emit_dot(g, labels=layout.labels if layout else None)
    raise CliError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# subcommands


def _bound_rows(args) -> list[dict]:
    n_hi = args.n_to if args.n_to is not None else args.n
    if n_hi < args.n:
        raise CliError("--n-to must not be below --n")
    rows = []
    for n in range(args.n, n_hi + 1):
        if args.gamma < 2 or n < 3 * args.gamma:
            raise CliError(
                f"bound table requires gamma >= 2 and n >= 3*gamma (n={n}, gamma={args.gamma})"
            )
        rows.append({
            "n": n,
            "gamma": args.gamma,
            "m_bipartite": bounds.bipartite_bound(n, args.gamma),
            "m_fischermann": bounds.fischermann_bound(n, args.gamma),
            "vizing": _exact_to_json(bounds.vizing_bound(n, args.gamma)),
            "phi": bounds.phi(n, args.gamma),
        })
    return rows


def cmd_bound(args) -> int:
    rows = _bound_rows(args)
    if args.json:
        if len(rows) == 1:
            doc = {"schema": "unidom/1", "kind": "bound", **rows[0]}
        else:
            doc = {"schema": "unidom/1", "kind": "bound_table", "rows": rows}
        print(json.dumps(doc))
    else:
        cols = ["n", "gamma", "m_bipartite", "m_fischermann", "vizing", "phi"]
        print("\t".join(cols))
        for row in rows:
            print("\t".join(str(row[c]) for c in cols))
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.family == "star":
        if args.gamma not in (None, 1):
            raise CliError("the star family fixes gamma = 1")
        g, layout = construct_star(args.n)
        expected = bounds.star_bound(args.n)
    else:
        if args.gamma is None:
            raise CliError("--gamma is required for this family")
        if args.family == "bipartite":
            g, layout = construct_bipartite(args.n, args.gamma)
            expected = bounds.bipartite_bound(args.n, args.gamma)
        else:
            g, layout = construct_fischermann(args.n, args.gamma)
            expected = bounds.fischermann_bound(args.n, args.gamma)

    rendered = _emit_graph(g, args.format, layout)
    if args.out:
        Path(args.out).write_text(rendered)
    if args.verify:
        cert = verify_construction(g, layout, expected)
        print(json.dumps(cert.to_json()))
        return EXIT_OK if cert.passed else EXIT_FAIL
    if not args.out:
        sys.stdout.write(rendered)
    return EXIT_OK


def verify_file(path: str, expectations: dict) -> dict:
    """Analyze a graph file; returns the verify document (not yet printed)."""
    g = load_graph(path)
    report = is_umd(g)
    warnings = []
    isolated = bit_list(g.isolated_vertices())
    if isolated:
        warnings.append(
            f"isolated vertices present: {isolated} (uniqueness theory assumes none)"
        )
    mismatches = {}
    if "gamma" in expectations:
        mismatches["gamma"] = {
            "expected": expectations["gamma"],
            "actual": report.gamma,
            "ok": report.gamma == expectations["gamma"],
        }
    if "size" in expectations:
        mismatches["size"] = {
            "expected": expectations["size"],
            "actual": g.size(),
            "ok": g.size() == expectations["size"],
        }
    ok = report.unique and all(m["ok"] for m in mismatches.values())
    return {
        "schema": "unidom/1",
        "kind": "verify",
        "ok": ok,
        "report": report.to_json(),
        "warnings": warnings,
        "expectations": mismatches,
    }


def cmd_verify(args) -> int:
    expectations = {}
    if args.expect_gamma is not None:
        expectations["gamma"] = args.expect_gamma
    if args.expect_size is not None:
        expectations["size"] = args.expect_size
    doc = verify_file(args.input, expectations)
    if args.json:
        print(json.dumps(doc))
    else:
        rep = doc["report"]
        print(f"gamma\t{rep['gamma']}")
        print(f"unique\t{rep['unique']}")
        print(f"perfect\t{rep['perfect']}")
        print(f"min_sets\t{rep['min_sets']}")
        for warning in doc["warnings"]:
            print(f"warning\t{warning}", file=sys.stderr)
        for name, m in doc["expectations"].items():
            print(f"expect_{name}\t{m['expected']}\tactual\t{m['actual']}\t"
                  f"{'ok' if m['ok'] else 'MISMATCH'}")
    return EXIT_OK if doc["ok"] else EXIT_FAIL


def cmd_search(args) -> int:
    def progress(scanned: int, best: int) -> None:
        print(f"scanned={scanned} best={best}", file=sys.stderr)

    reporter = progress if args.progress else None
    if args.size is None:
        result = max_umd_bipartite_size(
            args.n, args.gamma, budget=args.budget,
            collect_witnesses=args.witnesses is not None,
            threads=args.threads, progress=reporter,
        )
        doc = result.to_json()
        witnesses = result.witnesses
        complete = result.complete
    else:
        outcome = count_extremal_witnesses(
            args.n, args.gamma, args.size, budget=args.budget,
            threads=args.threads, progress=reporter,
        )
        doc = outcome.to_json()
        witnesses = outcome.witnesses
        complete = outcome.complete
    if args.witnesses:
        Path(args.witnesses).write_text("".join(w + "\n" for w in witnesses))
    if args.json:
        print(json.dumps(doc))
    else:
        for key, value in doc.items():
            if key in ("schema", "kind", "witnesses"):
                continue
            print(f"{key}\t{value}")
    return EXIT_OK if complete else EXIT_BUDGET


def cmd_complement(args) -> int:
    g = load_graph(args.input)
    p = find_bipartition(g)
    if p is None:
        print("error: input graph is not bipartite", file=sys.stderr)
        return EXIT_FAIL
    sys.stdout.write(_emit_graph(bipartite_complement(g, p), args.format))
    return EXIT_OK


def cmd_iso(args) -> int:
    g = load_graph(args.first)
    h = load_graph(args.second)
    same = are_isomorphic(g, h)
    if args.json:
        print(json.dumps({"schema": "unidom/1", "kind": "iso", "isomorphic": same}))
    else:
        print(f"isomorphic\t{same}")
    return EXIT_OK if same else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unidom",
        description="Extremal graphs with a unique minimum dominating set: "
                    "bounds, constructions, certification, exhaustive search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="evaluate the size bounds for (n, gamma)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--n-to", type=int, default=None, help="sweep n up to this value")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--tsv", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", help="build an extremal family member")
    p.add_argument("--family", choices=["bipartite", "fischermann", "star"],
                   required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=int, default=None)
    p.add_argument("--format", choices=["graph6", "dot", "edgelist"],
                   default="graph6")
    p.add_argument("--verify", action="store_true",
                   help="certify the construction and print the JSON certificate")
    p.add_argument("--out", default=None, help="write the graph to this file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="analyze a graph file for unique domination")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--expect-gamma", type=int, default=None)
    p.add_argument("--expect-size", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive search over small bipartite graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--size", type=int, default=None,
                   help="count witnesses of this exact size instead of maximizing")
    p.add_argument("--budget", type=float, default=None, help="seconds of wall clock")
    p.add_argument("--witnesses", default=None,
                   help="write witness graph6 lines to this file")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: UNIDOM_THREADS or 1)")
    p.add_argument("--progress", action="store_true",
                   help="log 'scanned=N best=S' lines to stderr")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("complement", help="bipartite complement of a graph file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=["graph6", "dot", "edgelist"],
                   default="graph6")
    p.set_defaults(func=cmd_complement)

    p = sub.add_parser("iso", help="isomorphism test between two graph files")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_iso)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize other codes
        return EXIT_USAGE if exc.code not in (0,) else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
