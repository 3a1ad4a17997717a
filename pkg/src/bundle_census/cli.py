"""Command-line surface: check, count, sweep, diagnose.

Machine-readable output goes to stdout (JSON lines or CSV for sweeps),
diagnostics to stderr.  Exit codes: 0 success / condition satisfied,
1 condition failed or exact-numeric disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .chern import ChernVector
from .enumeration import check_schwarzenberger, count_bundles
from .kernels import backend_name
from .oracle import compare_exact_numeric
from .sweep import BoxTooLarge, ResultRecord, SweepSpec, parse_bounds, run_sweep


class UsageError(Exception):
    pass


def parse_classes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(piece) for piece in text.split(","))
    except ValueError:
        raise UsageError(f"--classes expects comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bundle-census",
        description=(
            "Decide which integer tuples occur as Chern classes of complex "
            "bundles on projective spaces, and count the isomorphism classes."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="test the integrality condition S_N")
    p_check.add_argument("--classes", required=True, help="comma-separated integers c_1,...,c_N")
    p_check.add_argument("--N", type=int, default=None,
                         help="condition order (default: number of classes)")

    p_count = sub.add_parser("count", help="count isomorphism classes for one tuple")
    p_count.add_argument("--rank", type=int, required=True)
    p_count.add_argument("--dim", type=int, required=True)
    p_count.add_argument("--classes", required=True)

    p_sweep = sub.add_parser("sweep", help="classify every tuple in a box")
    p_sweep.add_argument("--rank", type=int, required=True)
    p_sweep.add_argument("--dim", type=int, required=True)
    p_sweep.add_argument("--bounds", required=True,
                         help='one interval per class: "lo:hi,lo:hi,..."')
    p_sweep.add_argument("--format", choices=("json", "csv", "table"), default="table")
    p_sweep.add_argument("--max-tuples", type=int, default=None,
                         help="override the sweep size cap")
    p_sweep.add_argument("--jobs", type=int, default=1, help="worker processes")

    p_diag = sub.add_parser("diagnose", help="exact vs numeric values side by side")
    p_diag.add_argument("--classes", required=True)
    p_diag.add_argument("--N", type=int, default=None)

    return parser


def cmd_check(args) -> int:
    classes = parse_classes(args.classes)
    N = args.N if args.N is not None else len(classes)
    if N < 1:
        raise UsageError(f"--N must be >= 1, got {N}")
    if len(classes) != N:
        raise UsageError(
            f"S_{N} needs exactly {N} classes, got {len(classes)}; "
            "pad with explicit zeros if your rank is smaller"
        )
    report = check_schwarzenberger(classes, N)
    print(f"S_{N} for classes {classes}")
    for term in report.values:
        verdict = "integral" if term.integral else "NOT integral"
        print(f"  r = {term.r:<3d} B_r = {str(term.value):<12s} {verdict}")
    print(f"S_{N} {'satisfied' if report.satisfied else 'not satisfied'}")
    return 0 if report.satisfied else 1


def cmd_count(args) -> int:
    classes = parse_classes(args.classes)
    vector = _vector(args.rank, args.dim, classes)
    result = count_bundles(vector)
    print(f"rank {vector.rank} bundle on CP^{vector.dim} with classes {vector.classes}")
    print(f"count: {result.count if result.known else 'unknown'}")
    print(f"regime: {result.regime}")
    if result.count == 0 and result.report is not None:
        for term in result.report.failing():
            print(f"  fails at r = {term.r}: B_r = {term.value}")
    if result.extension_note:
        print(f"note: {result.extension_note}")
    return 0


def cmd_sweep(args) -> int:
    bounds = _bounds(args.bounds)
    try:
        spec = SweepSpec(
            rank=args.rank,
            dim=args.dim,
            bounds=bounds,
            jobs=args.jobs,
            max_tuples=args.max_tuples,
        )
    except ValueError as exc:
        raise UsageError(str(exc))
    try:
        spec.cap()  # surface a malformed cap override before any work
    except ValueError as exc:
        raise UsageError(str(exc))
    total = spec.tuple_count()
    print(f"sweep: {total} tuples, rank {spec.rank} on CP^{spec.dim}, "
          f"jobs={spec.jobs}, kernel backend: {backend_name()}", file=sys.stderr)
    totals = {0: 0, 1: 0, 2: 0, None: 0}

    try:
        records = run_sweep(spec)
        if args.format == "json":
            for rec in records:
                totals[rec.count] += 1
                print(json.dumps(rec.to_json_dict(), separators=(",", ":")))
            print(json.dumps({"summary": _summary(total, totals)}, separators=(",", ":")))
        elif args.format == "csv":
            writer = csv.writer(sys.stdout, lineterminator="\n")
            writer.writerow(["classes", "count", "regime", "failing_r", "extension"])
            for rec in records:
                totals[rec.count] += 1
                writer.writerow(_csv_row(rec))
            print(f"summary: {_render_summary(total, totals)}", file=sys.stderr)
        else:
            width = max(20, 3 * len(bounds) * 3)
            print(f"{'classes':<{width}} {'count':>7} {'regime':<13} {'failing':<20} ext")
            for rec in records:
                totals[rec.count] += 1
                failing = ";".join(f"{r}={v}" for r, v in rec.failing)
                count = rec.count if rec.count is not None else "unknown"
                print(f"{str(rec.classes):<{width}} {count!s:>7} {rec.regime:<13} "
                      f"{failing:<20} {'yes' if rec.extension else 'no'}")
            print(_render_summary(total, totals))
    except BoxTooLarge as exc:
        raise UsageError(str(exc))
    return 0


def _csv_row(rec: ResultRecord) -> list[str]:
    return [
        ";".join(str(c) for c in rec.classes),
        str(rec.count) if rec.count is not None else "unknown",
        rec.regime,
        ";".join(f"{r}={v}" for r, v in rec.failing),
        "true" if rec.extension else "false",
    ]


def _summary(total: int, totals: dict) -> dict:
    return {
        "total": total,
        "count_0": totals[0],
        "count_1": totals[1],
        "count_2": totals[2],
        "unknown": totals[None],
    }


def _render_summary(total: int, totals: dict) -> str:
    return (f"total={total} count_0={totals[0]} count_1={totals[1]} "
            f"count_2={totals[2]} unknown={totals[None]}")


def cmd_diagnose(args) -> int:
    classes = parse_classes(args.classes)
    N = args.N if args.N is not None else len(classes)
    if N < 1:
        raise UsageError(f"--N must be >= 1, got {N}")
    if len(classes) != N:
        raise UsageError(f"S_{N} needs exactly {N} classes, got {len(classes)}")
    roots, rows = compare_exact_numeric(classes, range(2, N + 1))
    print(f"root residual: {roots.residual:.3e} "
          f"({'reliable' if roots.reliable else 'UNRELIABLE'})")
    print(f"{'r':>3} {'exact':<14} {'numeric':<22} {'|diff|':<12} {'dist_to_Z':<12} status")
    failed = False
    for row in rows:
        if row.flagged:
            status = "unreliable"
        elif row.agrees:
            status = "agree"
        else:
            status = "DISAGREE"
            failed = True
        numeric = f"{row.numeric.real:.12g}"
        if abs(row.numeric.imag) > 0:
            numeric += f"{row.numeric.imag:+.1e}j"
        print(f"{row.r:>3} {str(row.exact):<14} {numeric:<22} "
              f"{row.difference:<12.3e} {row.nearest_integer_distance:<12.3e} {status}")
    print("all values agree" if not failed else "exact and numeric paths DISAGREE")
    return 1 if failed else 0


def _vector(rank: int, dim: int, classes: tuple[int, ...]) -> ChernVector:
    try:
        return ChernVector(rank, dim, classes)
    except ValueError as exc:
        raise UsageError(str(exc))


def _bounds(text: str) -> tuple[tuple[int, int], ...]:
    try:
        return parse_bounds(text)
    except ValueError as exc:
        raise UsageError(str(exc))


def _merge_value_flags(argv: Sequence[str]) -> list[str]:
    # "--classes -1,2" parses as a flag followed by an unknown option;
    # rewrite to "--classes=-1,2" so leading minus signs survive argparse
    merged = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in ("--classes", "--bounds") and i + 1 < len(argv):
            merged.append(f"{arg}={argv[i + 1]}")
            i += 2
        else:
            merged.append(arg)
            i += 1
    return merged


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_value_flags(argv))
    handler = {
        "check": cmd_check,
        "count": cmd_count,
        "sweep": cmd_sweep,
        "diagnose": cmd_diagnose,
    }[args.command]
    try:
        return handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # downstream closed (e.g. piped into head); silence the flush at exit
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
