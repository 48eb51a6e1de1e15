"""Command-line front end.

    schurcohn volume --d 2 --s 1
    schurcohn ratio --d 4 --s 1 --method all
    schurcohn table --dmax 8 --format csv
    schurcohn verify --suite all
    schurcohn mc --d 4 --samples 1000000 --seed 42 --threads 0

Exit status: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from .exact import PreconditionError, format_rational
from .oracle import mc_estimate
from .verify import SUITES, run_suites
from .volumes import (
    RATIO_METHODS,
    Signature,
    applicable_methods,
    ratio,
    ratio_legendre_s1,
    row_sums,
    v_mixed,
    v_real,
    volume_table,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
CLI_RATIO_METHODS = RATIO_METHODS + ("legendre",)
MC_PRACTICAL_DEGREE = 6


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, no optional whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _approx(q: Fraction) -> str:
    return f"{q} (≈ {float(q):.6f})"


def _ratio_by(d: int, s: int, method: str) -> Fraction:
    if method == "legendre":
        if s != 1:
            raise PreconditionError(f"the legendre route covers s = 1 only, got s={s}")
        Signature(d, s)
        return ratio_legendre_s1(d)
    return ratio(d, s, method)


def _volume(d: int, s: int, method: str) -> Fraction:
    if method == "detmix":
        return v_mixed(d, s)
    return v_real(d) * _ratio_by(d, s, method)


def _emit_rows(rows: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "json":
        print(dumps(rows), file=out)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        out.write(buf.getvalue())
    else:
        print("| " + " | ".join(columns) + " |", file=out)
        print("|" + "|".join("---" for _ in columns) + "|", file=out)
        for row in rows:
            print("| " + " | ".join(str(row[c]) for c in columns) + " |", file=out)


def cmd_volume(args, out) -> int:
    value = _volume(args.d, args.s, args.method)
    if args.format == "text":
        print(_approx(value), file=out)
        return EXIT_OK
    row = {"d": args.d, "s": args.s, "method": args.method, "value": format_rational(value), "approx": float(value)}
    if args.format == "json":
        print(dumps(row), file=out)
    else:
        if args.format == "markdown":
            row["value"] = f"{row['value']} ({float(value):.6g})"
        _emit_rows([row], ["d", "s", "method", "value", "approx"], args.format, out)
    return EXIT_OK


def cmd_ratio(args, out) -> int:
    if args.method == "all":
        methods = applicable_methods(args.d, args.s) + (["legendre"] if args.s == 1 else [])
    else:
        methods = [args.method]
    values = {m: _ratio_by(args.d, args.s, m) for m in methods}
    agree = len(set(values.values())) == 1
    if args.format == "json":
        payload = {"d": args.d, "s": args.s, "values": {m: format_rational(v) for m, v in values.items()}, "agree": agree}
        print(dumps(payload), file=out)
    elif args.format == "text":
        for m, v in values.items():
            print(f"{m}: {v}", file=out)
        if len(methods) > 1:
            print("all routes agree" if agree else "MISMATCH between routes", file=out)
    else:
        rows = [{"method": m, "value": format_rational(v)} for m, v in values.items()]
        _emit_rows(rows, ["method", "value"], args.format, out)
    return EXIT_OK if agree else EXIT_FAIL


def cmd_table(args, out) -> int:
    records = volume_table(args.dmax, workers=args.threads)
    sums = row_sums(records)
    fmt = args.format
    rows = []
    for rec in records:
        value = format_rational(rec.value)
        if fmt == "markdown":
            value = f"{value} ({float(rec.value):.6g})"
        rows.append({"d": rec.signature.d, "s": rec.signature.s, "value": value, "approx": float(rec.value)})
    checks = []
    for d, (total, full) in sums.items():
        checks.append({"d": d, "sum": format_rational(total), "v_full": format_rational(full), "ok": total == full})
    ok = all(c["ok"] for c in checks)
    if fmt == "json":
        print(dumps({"rows": rows, "row_sums": checks}), file=out)
    else:
        cols = ["d", "s", "value"] + (["approx"] if fmt == "csv" else [])
        _emit_rows(rows, cols, fmt, out)
        print(file=out)
        for c in checks:
            c["ok"] = "ok" if c["ok"] else "MISMATCH"
        _emit_rows(checks, ["d", "sum", "v_full", "ok"], fmt, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args, out) -> int:
    checks = run_suites([args.suite])
    ok = all(c.passed for c in checks)
    if args.format == "json":
        rows = [{"suite": c.suite, "name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
        print(dumps({"checks": rows, "passed": ok}), file=out)
    else:
        for c in checks:
            print(f"{'PASS' if c.passed else 'FAIL'} [{c.suite}] {c.name} ({c.detail})", file=out)
        print(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def mc_payload(report, exact: Sequence[Fraction]) -> dict:
    per_s = []
    for tally, value in zip(report.per_s, exact):
        diff = tally.estimate - float(value)
        z: Optional[float] = diff / tally.stderr if tally.stderr > 0 else (0.0 if diff == 0 else None)
        per_s.append(
            {
                "s": tally.s,
                "hits": tally.hits,
                "estimate": tally.estimate,
                "stderr": tally.stderr,
                "exact": format_rational(value),
                "z": z,
            }
        )
    return {
        "d": report.d,
        "samples": report.samples,
        "seed": report.seed,
        "box_volume": format_rational(report.box_volume),
        "per_s": per_s,
        "degenerate": report.degenerate_count,
    }


def cmd_mc(args, out) -> int:
    if args.d > MC_PRACTICAL_DEGREE:
        print(f"warning: hit rate at d={args.d} is tiny; estimates will be uninformative", file=sys.stderr)
    report = mc_estimate(args.d, args.samples, args.seed, threads=args.threads)
    exact = [v_real(args.d) * ratio(args.d, s) for s in range(args.d // 2 + 1)]
    payload = mc_payload(report, exact)
    if args.format == "json":
        print(dumps(payload), file=out)
    elif args.format == "text":
        print(f"d={report.d} samples={report.samples} seed={report.seed} box={report.box_volume}", file=out)
        for row in payload["per_s"]:
            z = "n/a" if row["z"] is None else f"{row['z']:+.2f}"
            print(
                f"s={row['s']}: hits={row['hits']} estimate={row['estimate']:.6f} "
                f"stderr={row['stderr']:.6f} exact={row['exact']} z={z}",
                file=out,
            )
        full = sum(exact)
        z_total = (report.total_estimate - float(full)) / report.total_stderr if report.total_stderr else math.nan
        print(f"total: estimate={report.total_estimate:.6f} exact={full} z={z_total:+.2f}", file=out)
        print(f"degenerate={report.degenerate_count}", file=out)
    else:
        _emit_rows(payload["per_s"], ["s", "hits", "estimate", "stderr", "exact", "z"], args.format, out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schurcohn", description="Exact Schur-Cohn signature volumes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    formats = ["text", "json", "csv", "markdown"]

    p = sub.add_parser("volume", help="v_d^(s) as an exact rational")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--method", choices=CLI_RATIO_METHODS, default="binomdet")
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("ratio", help="v_d^(s) / v_d^(0)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--method", choices=CLI_RATIO_METHODS + ("all",), default="binomdet")
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("table", help="all v_d^(s) up to a degree, with row sums")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv", "markdown"], default="markdown")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mc", help="Monte-Carlo estimate of every v_d^(s)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--samples", type=int, default=10**6)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--threads", type=int, default=0, help="worker processes, 0 = one per CPU")
    p.add_argument("--format", choices=formats, default="text")
    p.set_defaults(func=cmd_mc)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 0) < 0:
        print("error: --threads must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
