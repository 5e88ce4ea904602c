"""Command-line front end.

Subcommands: ln, factorial, gamma, cnr, nbb, table, sweep.
Exit codes: 0 success, 2 domain rejection, 3 overflow, 4 I/O error.
HARMLOG_THRESHOLD overrides the default auto-scaling threshold of 150.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import constants as consts
from . import tables
from .cnr import CnrMethod, CnrTag, evaluate, nbb_decompose
from .errors import DomainError, HarmlogError, OverflowLimitError
from .factorial import FactorialMethod, estimate as factorial_estimate
from .harmonic import (
    DEFAULT_THRESHOLD,
    LogVariant,
    ScaledRational,
    ln_auto,
    ln_rational,
)
from .oracle import factorial_exact_ln, ln_value, percent_error, percent_error_from_ln

_EXIT_DOMAIN = 2
_EXIT_OVERFLOW = 3
_EXIT_IO = 4


def _emit(record: dict, fmt: str) -> None:
    """Print one result record; plain mirrors display precision, json is exact."""
    if fmt == "json":
        print(json.dumps(record))
    elif fmt == "csv":
        keys = list(record)
        print(",".join(keys))
        print(",".join(_plain_cell(record[k]) for k in keys))
    else:
        for key, value in record.items():
            print(f"{key}: {_plain_cell(value)}")


def _plain_cell(value) -> str:
    if isinstance(value, float):
        return "%.10g" % value
    return str(value)


def _variant(name: str) -> LogVariant:
    return LogVariant.FULL if name == "full" else LogVariant.TRUNCATED


def _cmd_ln(args) -> None:
    compensated = args.precision_mode == "compensated"
    variant = _variant(args.variant)
    if args.m == "auto":
        m, value = ln_auto(args.p, args.q, args.threshold, variant, compensated)
    else:
        m = int(args.m)
        if args.p == 0 or args.q == 0 or (args.p < 0) != (args.q < 0):
            # Route fixed-m calls through the same validation as auto.
            ln_auto(args.p, args.q, args.threshold, variant, compensated)
        p, q = abs(args.p), abs(args.q)
        value = ln_rational(ScaledRational(p=p, q=q, m=m), variant, compensated)
    reference = ln_value(args.p / args.q)
    _emit(
        {
            "p": args.p,
            "q": args.q,
            "m": m,
            "variant": variant.value,
            "estimate": value,
            "oracle": reference,
            "percent_error": percent_error(value, reference) if reference != 0 else 0.0,
        },
        args.format,
    )


def _cmd_factorial(args) -> None:
    method = {
        "raw": FactorialMethod.RAW,
        "corrected": FactorialMethod.CORRECTED,
        "series": FactorialMethod.SERIES_EXACT,
    }[args.method]
    est = factorial_estimate(args.n, method)
    ref_ln = factorial_exact_ln(args.n)
    record = {
        "n": args.n,
        "method": args.method,
        "ln_estimate": est.ln_value,
        "ln_oracle": ref_ln,
        "percent_error": percent_error_from_ln(est.ln_value, ref_ln),
    }
    if math.isfinite(est.value):
        record["estimate"] = est.value
    _emit(record, args.format)


def _cmd_gamma(args) -> None:
    kind = {
        "integral": consts.NrKind.INTEGRAL,
        "series": consts.NrKind.DIRECT_SERIES,
        "limit": consts.NrKind.EMPIRICAL_LIMIT,
    }[args.nr]
    v = consts.variant(kind, terms=args.n, n=args.n)
    gamma = consts.euler_gamma(v)
    _emit(
        {
            "variant": args.nr,
            "number_constant": v.value,
            "gamma": gamma,
            "percent_error": percent_error(gamma, consts.EULER_GAMMA_REFERENCE),
        },
        args.format,
    )


def _cmd_cnr(args) -> None:
    tag = {
        "lemma11": CnrTag.LEMMA11,
        "pow2": CnrTag.POW2,
        "exp": CnrTag.EXP_FULL,
        "scaled": CnrTag.EXP_SCALED,
        "large": CnrTag.EXP_LARGE,
    }[args.method]
    method = CnrMethod(tag, args.m if tag is CnrTag.EXP_SCALED else None)
    result = evaluate(args.x, method)
    _emit(
        {
            "x": result.input,
            "method": args.method,
            "value": result.value,
            "reference": result.reference,
            "percent_error": result.percent_error,
        },
        args.format,
    )


def _cmd_nbb(args) -> None:
    blocks = nbb_decompose(args.n)
    product = math.prod(blocks)
    _emit(
        {
            "n": args.n,
            "blocks": " ".join(str(b) for b in blocks),
            "count": len(blocks),
            "exact_product": str(product),
        },
        args.format,
    )


def _table_id(raw: str) -> tables.TableId:
    for tid in tables.TableId:
        if tid.value == raw:
            return tid
    raise DomainError(f"unknown table {raw!r}; use one of "
                      f"{', '.join(t.value for t in tables.TableId if t.value != 'sweep')}")


def _write_out(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_table(args) -> None:
    _write_out(tables.generate(_table_id(args.table), args.format), args.out)


def _parse_grid(spec: str) -> list[int]:
    """Grid spec: comma list '25,50,100' or range 'start:stop:step|double'."""
    try:
        return _parse_grid_inner(spec)
    except ValueError as exc:
        if isinstance(exc, HarmlogError):
            raise
        raise DomainError(f"bad grid spec {spec!r}") from exc


def _parse_grid_inner(spec: str) -> list[int]:
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise DomainError(f"bad grid spec {spec!r}")
        start, stop = int(parts[0]), int(parts[1])
        values = []
        current = start
        if parts[2] == "double":
            while current <= stop:
                values.append(current)
                current *= 2
        else:
            step = int(parts[2])
            if step < 1:
                raise DomainError(f"bad grid step in {spec!r}")
            while current <= stop:
                values.append(current)
                current += step
        if not values:
            raise DomainError(f"empty grid {spec!r}")
        return values
    return [int(tok) for tok in spec.split(",")]


def _cmd_sweep(args) -> None:
    if args.op == "ln":
        report = tables.sweep_ln_rational(args.p, args.q, _parse_grid(args.m))
    elif args.op == "factorial":
        method = {
            "raw": FactorialMethod.RAW,
            "corrected": FactorialMethod.CORRECTED,
            "series": FactorialMethod.SERIES_EXACT,
        }[args.method]
        report = tables.sweep_factorial(_parse_grid(args.n), method)
    else:
        report = tables.sweep_nr(_parse_grid(args.n))
    _write_out(report.serialize(args.format), args.out)


def build_parser() -> argparse.ArgumentParser:
    threshold_default = int(os.environ.get("HARMLOG_THRESHOLD", DEFAULT_THRESHOLD))
    parser = argparse.ArgumentParser(
        prog="harmlog",
        description="Odd-harmonic-series approximations of ln, factorial and gamma.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, choices=("plain", "json", "csv")):
        p.add_argument("--format", choices=choices, default=choices[0])

    p = sub.add_parser("ln", help="estimate ln(p/q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--m", default="auto", help="multiplier, an integer or 'auto'")
    p.add_argument("--variant", choices=("full", "truncated"), default="truncated")
    p.add_argument("--threshold", type=int, default=threshold_default)
    p.add_argument(
        "--precision-mode", choices=("standard", "compensated"), default="compensated"
    )
    add_format(p)
    p.set_defaults(func=_cmd_ln)

    p = sub.add_parser("factorial", help="estimate n!")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=("raw", "corrected", "series"), default="corrected")
    add_format(p)
    p.set_defaults(func=_cmd_factorial)

    p = sub.add_parser("gamma", help="Euler-Mascheroni estimates")
    p.add_argument("--nr", choices=("integral", "series", "limit"), default="integral")
    p.add_argument("--n", type=int, default=None, help="terms (series) or n (limit)")
    add_format(p)
    p.set_defaults(func=_cmd_gamma)

    p = sub.add_parser("cnr", help="exponential-form approximations of a number")
    p.add_argument("x", type=float)
    p.add_argument(
        "--method", choices=("lemma11", "pow2", "exp", "scaled", "large"), default="exp"
    )
    p.add_argument("--m", type=int, default=100, help="multiplier for --method scaled")
    add_format(p)
    p.set_defaults(func=_cmd_cnr)

    p = sub.add_parser("nbb", help="number building blocks of an integer")
    p.add_argument("n", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_nbb)

    p = sub.add_parser("table", help="regenerate a reference table")
    p.add_argument("table", help="2.1 .. 2.6 or nr-gamma")
    p.add_argument("--format", choices=("csv", "markdown", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("sweep", help="convergence sweeps")
    p.add_argument("op", choices=("ln", "factorial", "nr"))
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--m", default="25:400:double", help="multiplier grid for op ln")
    p.add_argument("--n", default="10,100,1000", help="size grid for factorial/nr")
    p.add_argument("--method", choices=("raw", "corrected", "series"), default="corrected")
    p.add_argument("--format", choices=("csv", "markdown", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except OverflowLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_OVERFLOW
    except HarmlogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
