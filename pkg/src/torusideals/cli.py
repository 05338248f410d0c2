"""Command-line front end: compute objects, reproduce the reference tables,
run verification sweeps, and cross-check sequences against OEIS b-files.

Exit codes: 0 full pass, 1 verification/comparison failure, 2 usage or I/O
error.  Output is deterministic: stable orderings, no timestamps, large
integers always rendered as decimal strings.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import chebfam, hilbert, zeta
from .divisors import a_coeff
from .intpoly import IntPoly, LaurentPoly, format_laurent, format_poly
from .oeis import SEQUENCES, BFileError, check_sequence, emit_bfile, parse_bfile
from .verify import DEFAULT_RANGES, SUITES, run_suites

TABLE_DEFAULTS = {"values": 16, "pg": 12, "tcheb": 12, "fpoly": 11, "decomp": 16}


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _csv_string(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _text_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    def fmt(cells: list[str]) -> str:
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    lines = [fmt(headers), fmt(["-" * w for w in widths])]
    lines += [fmt(r) for r in rows]
    return "\n".join(lines) + "\n"


# -- compute --------------------------------------------------------------------

def _cmd_compute(args: argparse.Namespace) -> int:
    kind, n = args.object, args.n
    min_n = 0 if kind in ("tcheb", "fpoly") else 1
    if n < min_n:
        print(f"error: --n must be >= {min_n} for {kind}", file=sys.stderr)
        return 2
    if kind == "zeta":
        if args.eval is not None:
            print("error: --eval does not apply to zeta", file=sys.stderr)
            return 2
        z = zeta.local_zeta_factors(n)
        if args.format == "json":
            payload = {"kind": "zeta", **z.to_json()}
            _emit(json.dumps(payload, indent=2) + "\n", args.out)
        elif args.format == "csv":
            _emit(_csv_string([["n", "num", "den"],
                               [str(n), " ".join(map(str, z.numerator)),
                                " ".join(map(str, z.denominator))]]), args.out)
        else:
            _emit(zeta.format_local_zeta(z) + "\n", args.out)
        return 0

    obj: IntPoly | LaurentPoly
    if kind == "tcheb":
        obj = chebfam.tcheb(n)
    elif kind == "fpoly":
        obj = chebfam.fpoly(n)
    elif kind == "pg":
        obj = hilbert.pg_via_interval(n)
    elif kind == "cn":
        obj = hilbert.cn_via_odd_divisors(n).full
    else:  # pn
        obj = hilbert.pn_from_cn(n)

    if args.eval is not None:
        value = obj.eval_int(args.eval)
        if args.format == "json":
            payload = {"kind": kind, "n": n, "eval_at": args.eval,
                       "value": str(value)}
            _emit(json.dumps(payload, indent=2) + "\n", args.out)
        elif args.format == "csv":
            _emit(_csv_string([["n", "eval_at", "value"],
                               [str(n), str(args.eval), str(value)]]), args.out)
        else:
            _emit(str(value) + "\n", args.out)
        return 0

    if args.format == "json":
        payload: dict = {"kind": kind, "n": n}
        if isinstance(obj, LaurentPoly):
            payload["min_exp"] = obj.min_exp
        payload["coeffs"] = [str(c) for c in obj.coeffs]
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    elif args.format == "csv":
        _emit(_csv_string([["n", "coeffs"],
                           [str(n), " ".join(str(c) for c in obj.coeffs)]]),
              args.out)
    else:
        text = format_poly(obj) if isinstance(obj, IntPoly) else format_laurent(obj)
        _emit(text + "\n", args.out)
    return 0


# -- table ----------------------------------------------------------------------

_REL_LABEL = {0: "equal", 1: "off_by_one"}


def values_rows(max_n: int, points: list[int]) -> list[dict]:
    """Paired values of the ideal-count and running-sum families at each
    point, with the equal / off-by-one / other relation annotated."""
    rows = []
    for n in range(1, max_n + 1):
        row: dict = {"n": n}
        for x in points:
            pg = hilbert.pg_eval_int(n, x)
            f = chebfam.fpoly_value(n - 1, x)
            row[x] = (pg, f, _REL_LABEL.get(abs(pg - f), "other"))
        rows.append(row)
    return rows


def tsum_string(n: int) -> str:
    """The interval-count combination, constants folded: an even constant
    2m renders as m*T0 (T0 = 2), an odd one keeps a bare 1."""
    parts = []
    a0 = a_coeff(n, 0)
    if a0 % 2:
        parts.append("1")
    if a0 // 2:
        parts.append("T0" if a0 // 2 == 1 else f"{a0 // 2}*T0")
    for i in range(1, n):
        ai = a_coeff(n, i)
        if ai:
            parts.append(f"T{i}" if ai == 1 else f"{ai}*T{i}")
    return " + ".join(parts)


def fdecomp_string(n: int) -> str:
    """The odd-divisor decomposition as a signed F-sum, highest index first,
    e.g. 'F14 - F6 + F3 + F0'."""
    terms = sorted(hilbert.pg_via_odd_divisors(n).terms,
                   key=lambda t: -t.f_index)
    parts = []
    for t in terms:
        if not parts:
            parts.append(("-" if t.sign < 0 else "") + f"F{t.f_index}")
        else:
            parts.append(("- " if t.sign < 0 else "+ ") + f"F{t.f_index}")
    return " ".join(parts)


def _cmd_table(args: argparse.Namespace) -> int:
    which = args.which
    max_n = args.max_n if args.max_n is not None else TABLE_DEFAULTS[which]
    if max_n < (0 if which in ("tcheb", "fpoly") else 1):
        print("error: --max-n out of range", file=sys.stderr)
        return 2

    if which == "values":
        points = [int(p) for p in args.points.split(",")]
        rows = values_rows(max_n, points)
        if args.format == "json":
            payload = [{"n": r["n"],
                        **{f"pg_{x}": str(r[x][0]) for x in points},
                        **{f"f_{x}": str(r[x][1]) for x in points},
                        **{f"rel_{x}": r[x][2] for x in points}}
                       for r in rows]
            _emit(json.dumps({"table": "values", "rows": payload}, indent=2)
                  + "\n", args.out)
        else:
            headers = ["n"]
            for x in points:
                headers += [f"pg_{x}", f"f_{x}", f"rel_{x}"]
            cells = [[str(r["n"])]
                     + [s for x in points
                        for s in (str(r[x][0]), str(r[x][1]), r[x][2])]
                     for r in rows]
            text = (_csv_string([headers] + cells) if args.format == "csv"
                    else _text_table(headers, cells))
            _emit(text, args.out)
        return 0

    if which == "decomp":
        rows = [(n, tsum_string(n), fdecomp_string(n))
                for n in range(1, max_n + 1)]
        if args.format == "json":
            payload = [{"n": n, "tsum": t, "fdecomp": f} for n, t, f in rows]
            _emit(json.dumps({"table": "decomp", "rows": payload}, indent=2)
                  + "\n", args.out)
        else:
            cells = [[str(n), t, f] for n, t, f in rows]
            headers = ["n", "tsum", "fdecomp"]
            text = (_csv_string([headers] + cells) if args.format == "csv"
                    else _text_table(headers, cells))
            _emit(text, args.out)
        return 0

    # polynomial tables
    start = 1 if which == "pg" else 0
    fn = {"pg": hilbert.pg_via_interval, "tcheb": chebfam.tcheb,
          "fpoly": chebfam.fpoly}[which]
    polys = [(n, fn(n)) for n in range(start, max_n + 1)]
    if args.format == "json":
        payload = [{"n": n, "coeffs": [str(c) for c in p.coeffs]}
                   for n, p in polys]
        _emit(json.dumps({"table": which, "rows": payload}, indent=2) + "\n",
              args.out)
    elif args.format == "csv":
        cells = [[str(n), " ".join(str(c) for c in p.coeffs)] for n, p in polys]
        _emit(_csv_string([["n", "coeffs"]] + cells), args.out)
    else:
        cells = [[str(n), format_poly(p)] for n, p in polys]
        _emit(_text_table(["n", which], cells), args.out)
    return 0


# -- verify -----------------------------------------------------------------------

def _cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = run_suites(names, args.max_n)
    if args.format == "json":
        _emit(json.dumps([r.to_json() for r in reports], indent=2) + "\n",
              args.out)
    elif args.format == "csv":
        rows = [["suite", "max_n", "passed", "failed"]]
        rows += [[r.suite, str(r.max_n), str(r.passed), str(r.failed)]
                 for r in reports]
        _emit(_csv_string(rows), args.out)
    else:
        lines = []
        for r in reports:
            status = "PASS" if r.ok else "FAIL"
            lines.append(f"suite {r.suite}: n <= {r.max_n}: "
                         f"{r.passed} checks passed, {r.failed} failed: {status}")
            for f in r.failures[:20]:
                lines.append(f"  {f.case}: expected {f.expected}, got {f.actual}")
            if len(r.failures) > 20:
                lines.append(f"  ... and {len(r.failures) - 20} more")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(r.ok for r in reports) else 1


# -- oeis-check --------------------------------------------------------------------

def _cmd_oeis_check(args: argparse.Namespace) -> int:
    spec = SEQUENCES[args.sequence]
    if spec.needs_eval_point and args.at is None:
        print(f"error: sequence {args.sequence!r} requires --at",
              file=sys.stderr)
        return 2
    if args.emit:
        count = emit_bfile(args.sequence, args.emit, at=args.at,
                           max_index=args.max_n if args.max_n else 100)
        print(f"wrote {count} terms to {args.emit}")
        if args.bfile is None:
            return 0
    if args.bfile is None:
        print("error: provide a b-file to check against, or --emit",
              file=sys.stderr)
        return 2
    bfile = parse_bfile(args.bfile)
    report = check_sequence(args.sequence, bfile, at=args.at,
                            max_index=args.max_n)
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    elif args.format == "csv":
        rows = [["sequence", "bfile", "compared", "mismatches"],
                [report.sequence, report.bfile_id, str(report.compared),
                 str(len(report.mismatches))]]
        _emit(_csv_string(rows), args.out)
    else:
        status = "PASS" if report.ok else "FAIL"
        lines = [f"{report.sequence} vs {report.bfile_id}: "
                 f"{report.compared} terms compared, "
                 f"{len(report.mismatches)} mismatches: {status}"]
        for idx, expected, computed in report.mismatches[:20]:
            lines.append(f"  index {idx}: b-file {expected}, computed {computed}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if report.ok else 1


# -- argument parsing ----------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="output format")
    common.add_argument("--out", metavar="FILE",
                        help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="torusideals",
        description="Exact ideal-count polynomials of the two-variable "
                    "Laurent torus algebra, with verification sweeps.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common],
                       help="compute one polynomial or factorization")
    p.add_argument("object",
                   choices=("tcheb", "fpoly", "pg", "cn", "pn", "zeta"))
    p.add_argument("--n", type=int, required=True, help="index n (or k)")
    p.add_argument("--eval", type=int, default=None, metavar="X",
                   help="evaluate at the integer X instead of printing "
                        "coefficients")
    p.set_defaults(fn=_cmd_compute)

    p = sub.add_parser("table", parents=[common],
                       help="reproduce a reference table")
    p.add_argument("which",
                   choices=("values", "pg", "tcheb", "fpoly", "decomp"))
    p.add_argument("--max-n", type=int, default=None,
                   help="last row (defaults to the reference range)")
    p.add_argument("--N", dest="points", default="3,4,5",
                   help="comma-separated evaluation points for 'values'")
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("verify", parents=[common],
                       help="run identity verification sweeps")
    p.add_argument("suite", choices=("all",) + tuple(SUITES),
                   help="which sweep to run")
    p.add_argument("--max-n", type=int, default=None,
                   help=f"range bound (defaults: {DEFAULT_RANGES})")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("oeis-check", parents=[common],
                       help="compare a computed sequence against an OEIS "
                            "b-file")
    p.add_argument("sequence", choices=tuple(SEQUENCES))
    p.add_argument("bfile", nargs="?", default=None,
                   help="path to the b-file (omit with --emit to only "
                        "write a candidate file)")
    p.add_argument("--at", type=int, default=None,
                   help="evaluation point for pg_eval / f_eval")
    p.add_argument("--max-n", type=int, default=None,
                   help="highest index to compare or emit")
    p.add_argument("--emit", metavar="FILE", default=None,
                   help="write the computed sequence in b-file format")
    p.set_defaults(fn=_cmd_oeis_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (BFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
