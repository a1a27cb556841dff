"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .battery import load_battery, run_battery
from .decomposition import as_pair, derived_slopes, verify_decomposition, verify_slope_match
from .errors import BeattyInputError, InvariantViolation
from .exact import parse_slope
from .mesalg import GapSequence, derive_skipping, mes_from_defining, run_mes, run_mex, self_defining_rule
from .sequences import BeattySeq, beatty_prefix
from .tables import TABLE_NAMES, check_table

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class _Failed(Exception):
    """Output was produced but a check did not pass."""


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonneg_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beattymes",
        description="Complementary Beatty sequences, MEX/MES runs and exact identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_default=None, n_required=False):
        p.add_argument("--format", choices=formats.FORMATS, default="plain")
        p.add_argument("--output", help="write here instead of standard output")
        if n_required or n_default is not None:
            p.add_argument("--n", type=_positive, default=n_default, required=n_required)

    p = sub.add_parser("gen", help="terms of the Beatty sequence floor(n*slope)")
    p.add_argument("--slope", required=True)
    common(p, n_required=True)

    p = sub.add_parser("pair", help="a complementary pair side by side")
    p.add_argument("--slope", required=True)
    common(p, n_required=True)

    p = sub.add_parser("mex", help="MEX run with h_n = t*n")
    p.add_argument("--t", type=_positive, default=1)
    common(p, n_required=True)

    p = sub.add_parser("mes", help="MES run")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--defining", help="defining slope delta (use with --k)")
    src.add_argument("--slope", help="derive the skipping sequence from this slope's pair")
    src.add_argument("--golden", action="store_true", help="self-generated golden skipping rule")
    src.add_argument("--skips", type=_nonneg_list, help="explicit comma-separated skip counts")
    p.add_argument("--k", type=_positive)
    common(p, n_required=True)

    p = sub.add_parser("decompose", help="b_n - a_n = c_n + r_n + 1 row by row, with checks")
    p.add_argument("--slope", required=True)
    common(p, n_required=True)

    p = sub.add_parser("verify", help="run every identity over a slope battery")
    p.add_argument("--battery", help="battery config (default: built-in battery)")
    p.add_argument("--n", type=_positive, help="override every entry's n")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--output")

    p = sub.add_parser("table", help="regenerate a reference table and check it")
    p.add_argument("name", choices=TABLE_NAMES)
    p.add_argument("--format", choices=formats.FORMATS, default="plain")
    p.add_argument("--output")

    p = sub.add_parser("slopes", help="derived slopes gamma, rho, k, delta of a slope")
    p.add_argument("--slope", required=True)
    p.add_argument("--format", choices=formats.FORMATS, default="plain")
    p.add_argument("--output")
    return parser


def _cmd_gen(args) -> str:
    slope = parse_slope(args.slope)
    seq = BeattySeq(slope, allow_rational=True)
    return formats.sequence_dump(slope, seq.prefix(args.n), args.format)


def _cmd_pair(args) -> str:
    pair, warnings = as_pair(parse_slope(args.slope, require_irrational=True))
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    a, b = pair.A.prefix(args.n), pair.B.prefix(args.n)
    if args.format == "json":
        return formats.to_json({"alpha": pair.alpha.to_dict(), "beta": pair.beta.to_dict(), "a": a, "b": b})
    rows = list(zip(range(1, args.n + 1), a, b))
    render = formats.to_csv if args.format == "csv" else formats.to_plain
    return render(("n", "a", "b"), rows)


def _cmd_mex(args) -> str:
    run = run_mex(GapSequence.linear(args.t), args.n)
    return formats.run_dump(run, args.format, {"h": f"{args.t}n"})


def _cmd_mes(args) -> str:
    extra: dict = {}
    if args.defining is not None:
        if args.k is None:
            raise BeattyInputError("--defining needs --k")
        delta = parse_slope(args.defining, require_irrational=True)
        run = mes_from_defining(BeattySeq(delta), args.k, args.n)
        extra = {"defining": delta.to_dict(), "k": args.k, "d": beatty_prefix(delta, args.n)}
    elif args.slope is not None:
        pair, _ = as_pair(parse_slope(args.slope, require_irrational=True))
        C, _ = derive_skipping(pair, args.n)
        run = run_mes(C, args.n)
        extra = {"alpha": pair.alpha.to_dict(), "beta": pair.beta.to_dict()}
    elif args.golden:
        run = run_mes(self_defining_rule(2), args.n)
    else:
        if len(args.skips) < args.n:
            raise BeattyInputError(f"--skips has {len(args.skips)} values, --n is {args.n}")
        run = run_mes(args.skips, args.n)
    run.check()
    return formats.run_dump(run, args.format, extra)


def _cmd_decompose(args) -> str:
    pair, _ = as_pair(parse_slope(args.slope, require_irrational=True))
    C, R = derive_skipping(pair, args.n)
    a, b = pair.A.prefix(args.n), pair.B.prefix(args.n)
    reports = [verify_decomposition(pair, args.n), verify_slope_match(pair, args.n)]
    rows = list(zip(range(1, args.n + 1), a, b, C, R))
    if args.format == "json":
        text = formats.to_json(
            {
                "alpha": pair.alpha.to_dict(),
                "beta": pair.beta.to_dict(),
                "rows": [dict(zip(formats.RUN_HEADER, row)) for row in rows],
                "reports": [r.to_dict() for r in reports],
            }
        )
    elif args.format == "csv":
        text = formats.to_csv(formats.RUN_HEADER, rows)
    else:
        text = formats.to_plain(formats.RUN_HEADER, rows)
    if not all(r.ok for r in reports):
        raise _Failed(text)
    return text


def _cmd_slopes(args) -> str:
    pair, warnings = as_pair(parse_slope(args.slope, require_irrational=True))
    bundle = derived_slopes(pair.alpha)
    if args.format == "json":
        return formats.to_json(bundle.to_dict())
    fields = [
        ("alpha", bundle.alpha),
        ("beta", bundle.beta),
        ("gamma", bundle.gamma),
        ("rho", bundle.rho),
        ("k", bundle.k),
        ("delta", bundle.delta),
    ]
    if args.format == "csv":
        return formats.to_csv(("name", "value"), fields)
    return "".join(f'{name}="{value}"\n' if name != "k" else f"k={value}\n" for name, value in fields)


def _cmd_table(args) -> str:
    match, text = check_table(args.name, args.format)
    if not match:
        raise _Failed(text)
    return text


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_verify(args) -> int:
    entries = load_battery(args.battery)
    reports = run_battery(entries, args.n, args.workers)
    lines = "".join(json.dumps(r.to_dict()) + "\n" for r in reports)
    _emit(lines, args.output)
    failed = [r for r in reports if not r.ok]
    for r in failed:
        print(f"FAIL {r.entry} {r.identity}: {len(r.failures)} failures", file=sys.stderr)
    print(f"{len(reports) - len(failed)}/{len(reports)} reports clean", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "gen": _cmd_gen,
    "pair": _cmd_pair,
    "mex": _cmd_mex,
    "mes": _cmd_mes,
    "decompose": _cmd_decompose,
    "slopes": _cmd_slopes,
    "table": _cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _run_verify(args)
        _emit(COMMANDS[args.command](args), args.output)
        return EXIT_OK
    except _Failed as exc:
        _emit(str(exc), args.output)
        print(f"{args.command}: check failed", file=sys.stderr)
        return EXIT_FAIL
    except BeattyInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
