"""Command-line front end.

Subcommands: analyze (parameter report for one n), sweep (CSV over a range,
optionally verified against the oracles and rendered as figures), color
(vertex or edge colorings), aut (automorphism group), iso (isomorphism
query), export (DOT / JSON / PNG of the graph).

Exit codes: 0 ok, 1 verification mismatch, 2 invalid input, 3 unsupported /
open problem, 4 budget or size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import automorphisms, coloring, formulas, verify
from .arith import Factorization, factorize
from .errors import (
    DivisorGraphError,
    EmptyGraphError,
    FactorizationLimitError,
    OpenProblemError,
    OracleSkipped,
    SizeCapError,
    TrivialGraphError,
)
from .graph import build
from .oracles import DEFAULT_BUDGET, OracleBudget, bf_chromatic_index

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_UNSUPPORTED = 3
EXIT_BUDGET = 4

# Environment overrides for oracle budgets, e.g. DIVGRAPH_CHROMATIC_CAP=30.
_BUDGET_ENV = {
    "DIVGRAPH_CLIQUE_CAP": "clique_cap",
    "DIVGRAPH_INDEPENDENCE_CAP": "independence_cap",
    "DIVGRAPH_MATCHING_CAP": "matching_cap",
    "DIVGRAPH_VERTEX_COVER_CAP": "vertex_cover_cap",
    "DIVGRAPH_EDGE_COVER_CAP": "edge_cover_cap",
    "DIVGRAPH_CHROMATIC_CAP": "chromatic_cap",
    "DIVGRAPH_CHROMATIC_INDEX_CAP": "chromatic_index_cap",
    "DIVGRAPH_DOMINATING_CAP": "dominating_cap",
    "DIVGRAPH_AUTOMORPHISM_CAP": "automorphism_cap",
    "DIVGRAPH_ISOMORPHISM_CAP": "isomorphism_cap",
    "DIVGRAPH_PERFECT_CAP": "perfect_cap",
    "DIVGRAPH_ORACLE_TIMEOUT": "timeout",
}


def budget_from_env() -> OracleBudget:
    overrides = {}
    for env_name, field in _BUDGET_ENV.items():
        raw = os.environ.get(env_name)
        if raw is not None:
            overrides[field] = float(raw) if field == "timeout" else int(raw)
    return dataclasses.replace(DEFAULT_BUDGET, **overrides) if overrides else DEFAULT_BUDGET


def _load(n: int) -> Factorization:
    f = factorize(n)
    formulas.require_standard(f)
    return f


def cmd_analyze(args) -> int:
    report = formulas.parameter_report(_load(args.n))
    if args.csv:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(formulas.CSV_HEADER)
        writer.writerow(report.to_csv_row())
        sys.stdout.write(out.getvalue())
    elif args.json:
        print(report.to_json())
    else:
        for key, value in report.to_json_dict().items():
            if isinstance(value, list):
                value = " ".join(str(x) for x in value)
            print(f"{key}: {value}")
    return EXIT_OK


def _sweep_one(task: tuple[int, bool]) -> tuple[int, list[str], dict[str, str], list[str]]:
    n, do_verify = task
    f = factorize(n)
    report = formulas.parameter_report(f)
    if do_verify:
        g = build(f)
        statuses, notes = verify.verify_instance(f, g, budget_from_env())
    else:
        statuses, notes = verify.formula_only_statuses(), []
    return n, report.to_csv_row(), statuses, notes


def cmd_sweep(args) -> int:
    if args.lo < 4 or args.lo > args.hi:
        raise ValueError(f"invalid range [{args.lo}, {args.hi}]")
    admissible = []
    skipped_primes = 0
    skipped_squares = 0
    reports = []
    for n in range(args.lo, args.hi + 1):
        f = factorize(n)
        if f.is_prime():
            skipped_primes += 1
            continue
        if f.k == 1 and f.exponents[0] == 2:
            skipped_squares += 1
            continue
        admissible.append(n)
        reports.append(formulas.parameter_report(f))

    tasks = [(n, args.verify) for n in admissible]
    if args.jobs > 1 and tasks:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_one, tasks, chunksize=8))
    else:
        results = [_sweep_one(t) for t in tasks]
    results.sort(key=lambda r: r[0])

    header = formulas.CSV_HEADER + [f"status_{p}" for p in verify.PARAMETERS]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    mismatches = 0
    all_notes = []
    for _, row, statuses, notes in results:
        writer.writerow(row + [statuses[p] for p in verify.PARAMETERS])
        if any(s == verify.STATUS_MISMATCH for s in statuses.values()):
            mismatches += 1
        all_notes.extend(notes)

    if args.out:
        with open(args.out, "w") as handle:
            handle.write(buf.getvalue())
        summary_stream = sys.stdout
    else:
        sys.stdout.write(buf.getvalue())
        summary_stream = sys.stderr

    if args.figures:
        from . import plots

        for path in plots.render_sweep_figures(reports, args.figures):
            print(f"figure: {path}", file=summary_stream)

    for note in all_notes:
        print(f"MISMATCH {note}", file=summary_stream)
    print(
        f"swept {len(admissible)} composite(s) in [{args.lo}, {args.hi}]; "
        f"skipped {skipped_primes} prime(s) and {skipped_squares} prime square(s); "
        f"{mismatches} mismatch(es)",
        file=summary_stream,
    )
    return EXIT_MISMATCH if mismatches else EXIT_OK


def _edge_key(edge: tuple[int, int]) -> list[int]:
    return [edge[0], edge[1]]


def cmd_color(args) -> int:
    f = _load(args.n)
    if args.vertices:
        vc = coloring.vertex_coloring(f)
        payload = {
            "n": args.n,
            "mode": "vertices",
            "colors": vc.color_count,
            "assignment": [[v, c] for v, c in sorted(vc.color_of.items())],
            "anchors": [[w, c] for w, c in vc.anchor_vertices],
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK

    try:
        ec = coloring.edge_coloring(f)
    except OpenProblemError:
        # general n: fall back to the exact oracle when the graph is small
        g = build(f)
        try:
            count, assignment = bf_chromatic_index(
                g, budget_from_env(), want_assignment=True
            )
        except OracleSkipped as exc:
            raise OpenProblemError(
                f"no constructive algorithm (open problem) for n={args.n}, "
                f"and the exact oracle is over budget"
            ) from exc
        payload = {
            "n": args.n,
            "mode": "edges",
            "method": "backtracking-oracle",
            "colors": count,
            "assignment": [[_edge_key(e), c] for e, c in sorted(assignment.items())],
        }
        print(json.dumps(payload, indent=2))
        return EXIT_OK

    payload = {
        "n": args.n,
        "mode": "edges",
        "method": "constructive",
        "colors": ec.color_count,
        "assignment": [[_edge_key(e), c] for e, c in sorted(ec.color_of.items())],
        "types": [[_edge_key(e), t.value] for e, t in sorted(ec.edge_type.items())],
        "index_set": list(ec.index_set),
    }
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_aut(args) -> int:
    f = _load(args.n)
    group = automorphisms.aut_structure(f)
    payload = {
        "n": args.n,
        "order": group.order,
        "structure": list(group.structure),
        "structure_text": group.structure_text(),
        "special_case": group.special_case.value,
    }
    g = build(f)
    payload["generators"] = [
        [[v, w] for v, w in a.vertex_map]
        for a in automorphisms.generating_set(f, g)
    ]
    if group.order <= args.element_cap:
        elements = automorphisms.enumerate_automorphisms(f, g)
        payload["elements"] = [[[v, w] for v, w in a.vertex_map] for a in elements]
    else:
        payload["elements"] = None
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_iso(args) -> int:
    f1, f2 = _load(args.m), _load(args.n)
    if formulas.isomorphic(f1, f2):
        from .arith import similar

        kind = "similar" if similar(f1, f2) else "exceptional pair"
        print(f"isomorphic ({kind})")
    else:
        print("not isomorphic")
    return EXIT_OK


def cmd_export(args) -> int:
    f = factorize(args.n)
    g = build(f)
    if args.png:
        from . import plots

        plots.draw_graph(g, args.png)
        print(f"figure: {args.png}")
    elif args.dot:
        print(g.to_dot())
    else:
        print(g.to_json())
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divgraph",
        description="Analyze the proper divisor graph of composite integers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full parameter report for one n")
    p.add_argument("n", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="CSV report over a range of n")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--verify", action="store_true", help="run brute-force oracles")
    p.add_argument("--out", metavar="FILE", help="write CSV here instead of stdout")
    p.add_argument("--figures", metavar="DIR", help="render summary figures into DIR")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("color", help="vertex or edge coloring of one n")
    p.add_argument("n", type=int)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--edges", action="store_true")
    which.add_argument("--vertices", action="store_true")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("aut", help="automorphism group of one n")
    p.add_argument("n", type=int)
    p.add_argument("--element-cap", type=int, default=720,
                   help="omit explicit elements above this group order")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("iso", help="decide whether two divisor graphs are isomorphic")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("export", help="DOT, JSON, or PNG of the graph")
    p.add_argument("n", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--png", metavar="FILE")
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, EmptyGraphError, TrivialGraphError, FactorizationLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OpenProblemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (SizeCapError, OracleSkipped) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DivisorGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
