"""Command line front end: ``triangle``, ``verify`` and ``series``.

Exit codes: 0 success, 1 identity failure, 2 parse or validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from .families import FAMILY_PARAMS, Family, FamilyParams, triangle
from .identities import (
    IDENTITY_IDS,
    IdentityConfigError,
    SuiteConfig,
    run_suite,
    suite_ok,
)
from .scalars import LamRPoly, format_scalar, parse_rational
from .series import daehee_gf, r_stirling_gf

FORMATS = ("pretty", "csv", "json")


class UsageError(Exception):
    pass


def _parse_param(text: Optional[str], symbol: Optional[str]):
    if text is None:
        return None
    if text == "sym":
        if symbol is None:
            raise UsageError("this parameter cannot be symbolic")
        return LamRPoly.lam() if symbol == "lam" else LamRPoly.r()
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _render_table(rows: List[List[str]], fmt: str, meta: dict) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        return json.dumps({**meta, "rows": rows}, indent=2) + "\n"
    width = max((len(c) for row in rows for c in row), default=1)
    lines = []
    for n, row in enumerate(rows):
        lines.append(f"{n:>3} | " + "  ".join(c.rjust(width) for c in row))
    return "\n".join(lines) + "\n"


def family_params_from_args(args) -> FamilyParams:
    family = Family(args.family)
    try:
        return FamilyParams(
            family,
            lam=_parse_param(args.lam, "lam"),
            r=_parse_param(args.r, "r"),
            m=_parse_param(args.m, None),
            x=_parse_param(args.x, None),
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_triangle(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    params = family_params_from_args(args)
    rows = [[format_scalar(v) for v in row] for row in triangle(params, args.n)]
    meta = {"family": params.family.value, "params": params.rendered(), "n_max": args.n}
    sys.stdout.write(_render_table(rows, args.format, meta))
    return 0


def cmd_verify(args) -> int:
    ids = args.ids
    if ids:
        unknown = [i for i in ids if i not in IDENTITY_IDS]
        if unknown:
            raise UsageError(f"unknown identity id(s): {', '.join(unknown)}")
    config = SuiteConfig(ids=ids or None, mode=args.mode, workers=args.workers)
    if args.n is not None:
        config.n_numeric = config.n_symbolic = args.n
    try:
        reports = run_suite(config)
    except IdentityConfigError as exc:
        raise UsageError(str(exc)) from None

    out = sys.stdout
    if args.format == "json":
        payload = []
        for rep in reports:
            d = rep.to_dict()
            d["expected_failure"] = rep.printed and not rep.passed
            payload.append(d)
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["id", "mode", "n_max", "instances", "failures", "status"])
        for rep in reports:
            status = rep.status + (" (expected)" if rep.printed and not rep.passed else "")
            w.writerow([rep.id, rep.mode, rep.n_max, rep.instances, len(rep.failures), status])
    else:
        for rep in reports:
            status = rep.status.upper()
            if rep.printed and not rep.passed:
                status += " (EXPECTED)"
            out.write(f"{rep.id:<18} {status:<15} {rep.mode:<8} n<={rep.n_max:<3} "
                      f"instances={rep.instances} failures={len(rep.failures)}\n")
            if rep.failures:
                f = rep.failures[0]
                out.write(f"    first failure {f.indices} at {f.params}: lhs={f.lhs} rhs={f.rhs}\n")
                if rep.note:
                    out.write(f"    note: {rep.note}\n")
    return 0 if suite_ok(reports) else 1


def cmd_series(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    if args.k < 0:
        raise UsageError("--k must be >= 0")
    if args.which == "r-stirling-gf":
        if args.x is not None:
            raise UsageError("r-stirling-gf takes no --x")
        if args.order < args.k:
            raise UsageError("--order must be >= --k")
        lam = _parse_param(args.lam or "sym", "lam")
        r = _parse_param(args.r or "sym", "r")
        s = r_stirling_gf(args.k, args.order, lam, r)
        params = {"lam": format_scalar(lam), "r": format_scalar(r)}
    else:
        if args.lam is not None or args.r is not None:
            raise UsageError("daehee-gf takes no --lam or --r")
        x = _parse_param(args.x or "0", None)
        s = daehee_gf(args.k, x, args.order)
        params = {"x": format_scalar(x)}
    ordinary = [format_scalar(c) for c in s.coeffs]
    egf = [format_scalar(c) for c in s.egf_coefficients()]

    out = sys.stdout
    if args.format == "json":
        json.dump({"which": args.which, "k": args.k, "order": args.order, "params": params,
                   "ordinary": ordinary, "egf": egf}, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "ordinary", "egf"])
        for n, (o, e) in enumerate(zip(ordinary, egf)):
            w.writerow([n, o, e])
    else:
        out.write("ordinary: " + ", ".join(ordinary) + "\n")
        out.write("EGF: " + ", ".join(egf) + "\n")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rstirling", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("triangle", help="print rows 0..n of a number family")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lam", help='"p/q" or "sym"')
    p.add_argument("--r", help='"p/q" or "sym"')
    p.add_argument("--m", help='"p/q"')
    p.add_argument("--x", help='"p/q" (Daehee polynomial argument)')
    p.add_argument("--format", choices=FORMATS, default="pretty")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("verify", help="check the identity registry")
    p.add_argument("--ids", nargs="+", metavar="ID")
    p.add_argument("--n", type=int, help="max n for every identity")
    p.add_argument("--mode", choices=("numeric", "symbolic"))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=FORMATS, default="pretty")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="print generating function coefficients")
    p.add_argument("--which", required=True, choices=("r-stirling-gf", "daehee-gf"))
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--lam")
    p.add_argument("--r")
    p.add_argument("--x")
    p.add_argument("--format", choices=FORMATS, default="pretty")
    p.set_defaults(func=cmd_series)
    return parser


def _apply_defaults(args) -> None:
    # Symbolic lam and r unless given; m defaults to 1.  Parameters a family
    # does not take are left unset so that passing one is an error.
    if args.command != "triangle":
        return
    allowed = FAMILY_PARAMS[Family(args.family)]
    defaults = {"lam": "sym", "r": "sym", "m": "1", "x": "0"}
    for name in allowed:
        if getattr(args, name) is None:
            setattr(args, name, defaults[name])


_VALUE_FLAGS = {"--lam", "--r", "--m", "--x"}


def _join_negative_values(argv: Sequence[str]) -> List[str]:
    # argparse takes "-3/4" for an option; rewrite "--r -3/4" as "--r=-3/4".
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif nxt.startswith("-") and nxt[1:2].isdigit():
                out.append(f"{tok}={nxt}")
            else:
                out.extend([tok, nxt])
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = build_parser().parse_args(_join_negative_values(argv))
        _apply_defaults(args)
        return args.func(args)
    except UsageError as exc:
        print(f"rstirling: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
