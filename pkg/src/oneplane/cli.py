"""Command-line interface.

Exit codes: 0 success / property holds; 1 property fails or witness absent;
2 invalid input or usage; 3 budget exceeded; 4 theorem-audit failure.
All output is deterministic given identical inputs and flags.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .audit import audit_cycle_separation, audit_rotation_constraints, audit_theorems
from .bounds import max_degree_bound_solve
from .drawing import validate_drawing
from .fileformat import (
    ParseError,
    export_dot,
    parse_drawing_data,
    parse_drawing_file,
    parse_graph_file,
    serialize_drawing,
)
from .generators import catalog, fixture_by_name, gen_gk, glue_h0_chain
from .graphs import build_graph, find_induced_claw, max_degree, vertex_connectivity
from .oracle import find_one_planar_drawing

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_ALARM = 4


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_validate(args) -> int:
    try:
        _, data = parse_drawing_data(_read(args.file))
    except ParseError as ex:
        print(f"error {ex}", file=sys.stderr)
        return EXIT_INPUT
    report = validate_drawing(data)
    if report.ok:
        print("valid")
        return EXIT_OK
    for line in report.lines():
        print(f"violation {line}")
    return EXIT_FAIL


def _cmd_analyze(args) -> int:
    try:
        G = parse_graph_file(_read(args.file))
    except ParseError as ex:
        print(f"error {ex}", file=sys.stderr)
        return EXIT_INPUT
    want_all = not (args.delta or args.kappa or args.claw)
    if args.delta or want_all:
        print(f"delta {max_degree(G)}")
    if args.kappa or want_all:
        print(f"kappa {vertex_connectivity(G)}")
    if args.claw or want_all:
        w = find_induced_claw(G)
        if w is None:
            print("clawfree true")
        else:
            print(f"clawfree false {w.center} {' '.join(w.leaves)}")
    return EXIT_OK


def _cmd_gen(args) -> int:
    try:
        if args.name == "h0-chain":
            fx = glue_h0_chain(args.m)
        elif args.name == "gk":
            fx = gen_gk(args.k)
        else:
            fx = fixture_by_name(args.name)
    except (KeyError, ValueError) as ex:
        print(f"error unknown fixture: {ex}", file=sys.stderr)
        return EXIT_INPUT
    text = serialize_drawing(fx.drawing, fx.name)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_catalog(args) -> int:
    for fx in catalog():
        c = fx.claims
        print(
            f"{fx.name} n {fx.graph.n} e {fx.graph.e} delta {c['delta']} "
            f"kappa {c['kappa']} clawfree {str(c['claw_free']).lower()}"
        )
    return EXIT_OK


def _cmd_oracle(args) -> int:
    try:
        G = parse_graph_file(_read(args.file))
    except ParseError as ex:
        print(f"error {ex}", file=sys.stderr)
        return EXIT_INPUT
    cap = args.max_crossings if args.max_crossings is not None else G.e // 2
    res = find_one_planar_drawing(
        G, cap, node_limit=args.node_limit, workers=args.workers
    )
    if res.is_witness:
        print(f"witness {res.crossings}")
        sys.stdout.write(serialize_drawing(res.drawing, "witness"))
        return EXIT_OK
    if res.is_refuted:
        print("refuted")
        return EXIT_FAIL
    print("budget-exceeded")
    return EXIT_BUDGET


def _cmd_audit(args) -> int:
    try:
        D = parse_drawing_file(_read(args.file))
    except ParseError as ex:
        print(f"error {ex}", file=sys.stderr)
        return EXIT_INPUT
    kappa = vertex_connectivity(D.base)
    assumed = args.assume_kappa if args.assume_kappa is not None else min(kappa, 6)
    if assumed > kappa:
        print(f"error assumed kappa {assumed} exceeds true kappa {kappa}", file=sys.stderr)
        return EXIT_INPUT
    reports = [
        audit_theorems(D.base, D),
        audit_cycle_separation(D, assumed),
        audit_rotation_constraints(D, assumed),
    ]
    failed = False
    for report in reports:
        for line in report.lines():
            print(f"check {line}")
        failed |= not report.ok
    return EXIT_ALARM if failed else EXIT_OK


def _cmd_sweep(args) -> int:
    """Random-graph smoke sweep: sample small graphs, keep the claw-free ones
    the oracle certifies 1-planar, and require the degree and connectivity
    bounds to hold on every one.  A violation is an alarm."""
    import itertools
    import random

    rng = random.Random(args.seed)
    certified = skipped = 0
    while certified < args.samples:
        n = rng.randint(1, 8)
        maxm = n * (n - 1) // 2
        cap_m = min(maxm, (3 * n - 6) + 3 if n >= 3 else maxm)
        m = rng.randint(0, cap_m)
        vs = [f"t{i}" for i in range(n)]
        edges = rng.sample(list(itertools.combinations(vs, 2)), m)
        G = build_graph(vs, edges)
        if find_induced_claw(G) is not None:
            continue
        res = find_one_planar_drawing(G, max(2, G.e // 2), node_limit=args.node_limit)
        if not res.is_witness:
            skipped += 1
            continue
        certified += 1
        delta = max_degree(G)
        kappa = vertex_connectivity(G)
        report = audit_theorems(G, res.drawing)
        if delta > 10 or kappa > 6 or not report.ok:
            print(f"VIOLATION n {G.n} e {G.e} delta {delta} kappa {kappa}")
            sys.stdout.write(serialize_drawing(res.drawing, "counterexample"))
            return EXIT_ALARM
    print(f"sweep {certified} certified, {skipped} skipped, 0 violations")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    k_star, table = max_degree_bound_solve()
    header = f"{'k':>3} {'erdos':>6} {'lower':>6} {'upper':>6}  feasible"
    print(header)
    for row in table:
        print(
            f"{row.k:>3} {row.erdos:>6} {row.lower:>6} {row.upper:>6}  "
            f"{'yes' if row.feasible else 'no'}"
        )
    print(f"max feasible degree {k_star}")
    for row in table:
        print(f"{row.k} {row.lower} {row.upper} {str(row.feasible).lower()}")
    if args.figure:
        from .viz import render_bounds

        render_bounds(table, args.figure)
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    try:
        D = parse_drawing_file(_read(args.file))
    except ParseError as ex:
        print(f"error {ex}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(export_dot(D, Path(args.file).stem))
    return EXIT_OK


def _cmd_render(args) -> int:
    try:
        D = parse_drawing_file(_read(args.file))
    except ParseError as ex:
        print(f"error {ex}", file=sys.stderr)
        return EXIT_INPUT
    from .viz import render_drawing

    render_drawing(D, args.output, title=Path(args.file).stem)
    print(f"figure {args.output}")
    return EXIT_OK


def _cmd_report(args) -> int:
    """Audit a batch of drawing files into a TSV plus one figure per drawing."""
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    from .viz import render_bounds, render_drawing

    rows = []
    alarm = False
    for path in args.files:
        name = Path(path).stem
        try:
            D = parse_drawing_file(_read(path))
        except ParseError as ex:
            print(f"error {path}: {ex}", file=sys.stderr)
            return EXIT_INPUT
        kappa = vertex_connectivity(D.base)
        assumed = min(kappa, 6)
        rows.append((name, "delta", str(max_degree(D.base))))
        rows.append((name, "kappa", str(kappa)))
        rows.append(
            (name, "clawfree", str(find_induced_claw(D.base) is None).lower())
        )
        rows.append((name, "crossings", str(len(D.crossings))))
        for report in (
            audit_theorems(D.base, D),
            audit_cycle_separation(D, assumed),
            audit_rotation_constraints(D, assumed),
        ):
            alarm |= not report.ok
            for check in report.checks:
                rows.append((name, check.name, check.status()))
        render_drawing(D, str(outdir / f"{name}.png"), title=name)
    _, table = max_degree_bound_solve()
    render_bounds(table, str(outdir / "bounds.png"))
    with open(outdir / "report.tsv", "w", encoding="utf-8") as fh:
        fh.write("drawing\tcheck\tvalue\n")
        for row in rows:
            fh.write("\t".join(row) + "\n")
    print(f"report {outdir / 'report.tsv'}")
    return EXIT_ALARM if alarm else EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="oneplane",
        description="Verification toolkit for claw-free 1-planar graphs.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("validate", help="check a drawing file against the conventions")
    q.add_argument("file")
    q.set_defaults(fn=_cmd_validate)

    q = sub.add_parser("analyze", help="degree/connectivity/claw invariants of a graph")
    q.add_argument("file")
    q.add_argument("--delta", action="store_true")
    q.add_argument("--kappa", action="store_true")
    q.add_argument("--claw", action="store_true")
    q.set_defaults(fn=_cmd_analyze)

    q = sub.add_parser("gen", help="emit a corpus fixture")
    q.add_argument("name")
    q.add_argument("--k", type=int, default=1, help="path order for gk")
    q.add_argument("--m", type=int, default=1, help="chain length for h0-chain")
    q.add_argument("-o", "--output")
    q.set_defaults(fn=_cmd_gen)

    q = sub.add_parser("catalog", help="list fixtures with their claims")
    q.set_defaults(fn=_cmd_catalog)

    q = sub.add_parser("oracle", help="exhaustive 1-planarity search")
    q.add_argument("file")
    q.add_argument("--max-crossings", type=int, default=None)
    q.add_argument("--node-limit", type=int, default=5_000_000)
    q.add_argument("--workers", type=int, default=1)
    q.set_defaults(fn=_cmd_oracle)

    q = sub.add_parser("audit", help="run the structural audits on a drawing")
    q.add_argument("file")
    q.add_argument("--assume-kappa", type=int, default=None)
    q.set_defaults(fn=_cmd_audit)

    q = sub.add_parser("sweep", help="random-graph smoke sweep of the bounds")
    q.add_argument("--samples", type=int, default=1000)
    q.add_argument("--seed", type=int, default=20250809)
    q.add_argument("--node-limit", type=int, default=100_000)
    q.set_defaults(fn=_cmd_sweep)

    q = sub.add_parser("bounds", help="print the degree feasibility ledger")
    q.add_argument("--figure", help="also render the ledger chart to this file")
    q.set_defaults(fn=_cmd_bounds)

    q = sub.add_parser("export-dot", help="DOT export of the planarization")
    q.add_argument("file")
    q.set_defaults(fn=_cmd_export_dot)

    q = sub.add_parser("render", help="render a drawing to an image file")
    q.add_argument("file")
    q.add_argument("-o", "--output", required=True)
    q.set_defaults(fn=_cmd_render)

    q = sub.add_parser("report", help="batch audit: TSV plus figures")
    q.add_argument("files", nargs="+")
    q.add_argument("-o", "--out-dir", required=True)
    q.set_defaults(fn=_cmd_report)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_INPUT if ex.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except OSError as ex:
        print(f"error {ex}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
