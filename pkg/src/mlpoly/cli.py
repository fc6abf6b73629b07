"""Command-line front end: tables, evaluation, zeros, quadrature, transforms,
verification suites, and the erratum audit, as deterministic JSON or CSV."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import __version__
from .analysis import ft_closed, ft_numeric, moment, orthogonality_matrix, zeros
from .exactnum import to_float
from .polyfps import X, elementary
from .report import CheckReport
from .sequences import SeqKind, generate, monic_egf, oracle_gf
from .suite import audit_suite, run_suite, summarize

_SEQ_TOKENS = ("g", "g-monic", "phi", "phi-monic", "pidduck")
_SERIES_TOKENS = _SEQ_TOKENS[:4] + ("arctan-half", "artanh", "tan-half", "log-ratio")


def _fmt(v: float) -> str:
    return format(v, ".17g")


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _emit_csv(header: list[str], rows: list[list]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _report_rows(reports: list[CheckReport]) -> list[list]:
    rows = []
    for r in reports:
        dev = "" if r.max_deviation is None else _fmt(r.max_deviation)
        rows.append([r.identity, r.n_range[0], r.n_range[1], r.status.value, dev, r.note])
    return rows


def _run_report(argv: list[str], reports: list[CheckReport], fmt: str) -> int:
    summary = summarize(reports)
    if fmt == "csv":
        rows = _report_rows(reports)
        rows.append(["summary", summary["pass"], summary["fail"], summary["audited"], "", ""])
        _emit_csv(["identity", "n_lo", "n_hi", "status", "max_deviation", "note"], rows)
    else:
        _emit_json({
            "tool": "mlpoly",
            "version": __version__,
            "command": " ".join(argv),
            "reports": [r.to_json_dict() for r in reports],
            "summary": summary,
        })
    return 0 if summary["fail"] == 0 else 1


def _cmd_coeffs(args, argv) -> int:
    kind = SeqKind.from_token(args.seq)
    if (args.n is None) == (args.max_n is None):
        raise _Usage("coeffs needs exactly one of --n or --max-n")
    n_max = args.n if args.n is not None else args.max_n
    table = generate(kind, n_max)
    rows = table.to_json_rows()
    if args.n is not None:
        rows = rows[-1:]
    if args.format == "csv":
        width = max(len(r["coeffs"]) for r in rows)
        header = ["kind", "n"] + [f"c{k}" for k in range(width)]
        body = [[r["kind"], r["n"]] + r["coeffs"] + [""] * (width - len(r["coeffs"]))
                for r in rows]
        _emit_csv(header, body)
    else:
        _emit_json(rows[0] if args.n is not None else rows)
    return 0


def _cmd_eval(args, argv) -> int:
    kind = SeqKind.from_token(args.seq)
    x = Fraction(args.x)
    value = generate(kind, args.n)[args.n](x)
    payload = {"kind": kind.value, "n": args.n, "x": str(x),
               "value": str(value), "float": float(value)}
    if args.format == "csv":
        _emit_csv(["kind", "n", "x", "value", "float"],
                  [[kind.value, args.n, str(x), str(value), _fmt(float(value))]])
    else:
        _emit_json(payload)
    return 0


def _cmd_zeros(args, argv) -> int:
    zs = zeros(args.n, args.tol)
    if args.format == "csv":
        _emit_csv(["index", "zero"], [[k, _fmt(z)] for k, z in enumerate(zs)])
    else:
        _emit_json({"n": args.n, "tol": args.tol, "zeros": zs})
    return 0


def _cmd_quad(args, argv) -> int:
    mat = orthogonality_matrix(args.max_n)
    dev = 0.0
    for i in range(args.max_n + 1):
        for j in range(args.max_n + 1):
            target = 2.0 / (i + 1.0) if i == j else 0.0
            dev = max(dev, abs(mat[i, j] - target))
    if args.format == "csv":
        _emit_csv([f"c{j}" for j in range(args.max_n + 1)],
                  [[_fmt(v) for v in row] for row in mat.tolist()])
    else:
        _emit_json({"size": args.max_n + 1, "matrix": mat.tolist(),
                    "max_abs_deviation": dev,
                    "target": "2/(n+1) on the diagonal, 0 elsewhere"})
    return 0


def _cmd_ft(args, argv) -> int:
    closed = ft_closed(args.n, args.s)
    numeric = ft_numeric(args.n, args.s)
    payload = {"n": args.n, "s": args.s, "phase": f"i^{args.n}",
               "closed": closed.value, "numeric": numeric.value,
               "abs_deviation": abs(closed.value - numeric.value)}
    if args.format == "csv":
        _emit_csv(["n", "s", "phase", "closed", "numeric", "abs_deviation"],
                  [[args.n, _fmt(args.s), f"i^{args.n}", _fmt(closed.value),
                    _fmt(numeric.value), _fmt(abs(closed.value - numeric.value))]])
    else:
        _emit_json(payload)
    return 0


def _cmd_moments(args, argv) -> int:
    rows = []
    for n in range(1, args.max_n + 1, 2):
        m = moment(n)
        rows.append({"n": n, "closed": str(m.closed), "closed_float": to_float(m.closed),
                     "numeric": m.numeric, "rel_deviation": m.deviation})
    if args.format == "csv":
        _emit_csv(["n", "closed", "closed_float", "numeric", "rel_deviation"],
                  [[r["n"], r["closed"], _fmt(r["closed_float"]), _fmt(r["numeric"]),
                    _fmt(r["rel_deviation"])] for r in rows])
    else:
        _emit_json(rows)
    return 0


def _cmd_verify(args, argv) -> int:
    reports = run_suite(args.suite, args.max_n)
    return _run_report(argv, reports, args.format)


def _cmd_audit(args, argv) -> int:
    return _run_report(argv, audit_suite(), args.format)


def _cmd_series(args, argv) -> int:
    kind = args.kind
    order = args.order
    if kind == "g":
        series = (elementary("log_ratio", order) * X).exp()
    elif kind == "phi":
        two_arctan = elementary("arctan_half", order + 1).scale_t(Fraction(2))
        from .polyfps import PolySeries
        series = ((two_arctan * X).exp() - PolySeries.one(order + 1)
                  ).divide_by_t().divide_coeffs_by_x()
    elif kind == "phi-monic":
        series = monic_egf(order)
    elif kind == "g-monic":
        base = generate(SeqKind.G_MONIC, order - 1)
        rows = [{"t_power": n, "coeffs": base[n].to_strings()} for n in range(order)]
        return _emit_series_rows(rows, args.format)
    else:
        series = elementary(kind.replace("-", "_"), order)
    rows = [{"t_power": n, "coeffs": series.coeff(n).to_strings()} for n in range(series.order)]
    return _emit_series_rows(rows, args.format)


def _emit_series_rows(rows: list[dict], fmt: str) -> int:
    if fmt == "csv":
        width = max((len(r["coeffs"]) for r in rows), default=1)
        _emit_csv(["t_power"] + [f"c{k}" for k in range(width)],
                  [[r["t_power"]] + r["coeffs"] + [""] * (width - len(r["coeffs"]))
                   for r in rows])
    else:
        _emit_json(rows)
    return 0


class _Usage(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mlpoly",
        description="Exact generation and verification toolkit for the "
                    "Mittag-Leffler polynomial family")
    parser.add_argument("--version", action="version", version=f"mlpoly {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("coeffs", help="emit exact coefficient tables")
    p.add_argument("--seq", required=True, choices=_SEQ_TOKENS)
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", dest="max_n", type=int)
    add_format(p)
    p.set_defaults(handler=_cmd_coeffs)

    p = sub.add_parser("eval", help="evaluate one member exactly at a rational point")
    p.add_argument("--seq", required=True, choices=_SEQ_TOKENS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True, help="rational like 3/4, 2, or 0.25")
    add_format(p)
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("zeros", help="zeros of the monic reduced member")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-12)
    add_format(p)
    p.set_defaults(handler=_cmd_zeros)

    p = sub.add_parser("quad", help="orthogonality Gram matrix by quadrature")
    p.add_argument("--max-n", dest="max_n", type=int, default=12)
    add_format(p)
    p.set_defaults(handler=_cmd_quad)

    p = sub.add_parser("ft", help="Fourier transform: closed form vs quadrature")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=float, required=True)
    add_format(p)
    p.set_defaults(handler=_cmd_ft)

    p = sub.add_parser("moments", help="odd sinh moments: exact zeta form vs quadrature")
    p.add_argument("--max-n", dest="max_n", type=int, default=9)
    add_format(p)
    p.set_defaults(handler=_cmd_moments)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=("exact", "numeric", "all"), default="all")
    p.add_argument("--max-n", dest="max_n", type=int, default=None)
    add_format(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("audit", help="adjudicate the printed-identity errata")
    add_format(p)
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser("series", help="generating-function coefficient tables")
    p.add_argument("--kind", required=True, choices=_SERIES_TOKENS)
    p.add_argument("--order", type=int, default=8)
    add_format(p)
    p.set_defaults(handler=_cmd_series)

    return parser


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, argv)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"mlpoly: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"mlpoly: error: {exc}", file=sys.stderr)
        return 2
