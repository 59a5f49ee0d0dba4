"""Command-line front end.

Subcommands:
    build    construct designs and print their parameter summaries
             (optionally writing one export file per family)
    verify   run the full verification suite; exit 1 on any FAIL
    export   write a single design in one of the three formats
    report   run verify, then write a TSV of the checks and the figures

Exit codes: 0 success, 1 verification failure, 2 usage or configuration
error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import designs as designs_mod
from . import export as export_mod
from . import verify as verify_mod
from .gf2m import GF2m

SUPPORTED_Q = (8, 32, 128)
BUILD_Q128_FAMILIES = (2,)


class ConfigError(Exception):
    pass


def _check_q(q: int) -> None:
    m = q.bit_length() - 1
    if q < 8 or q != 1 << m or m % 2 == 0:
        raise ConfigError(f"q must be an odd power of 2, q >= 8 (got {q})")
    if q not in SUPPORTED_Q:
        raise ConfigError(
            f"q={q} is beyond desk scale; supported values: {SUPPORTED_Q}")


def _field_for(args) -> GF2m:
    _check_q(args.q)
    try:
        return GF2m(q=args.q, poly=args.poly)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _families(args) -> list[int]:
    return {"2": [2], "3": [3], "both": [2, 3]}[args.family]


def _hex_int(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a hexadecimal integer")


def summary_line(design) -> str:
    p = design.params
    return (f"q={design.q} family={design.family} v={p.v} k={p.k} "
            f"lambda={p.lambda_} b={p.b} r={p.r} "
            f"gcd(r,lambda)={math.gcd(p.r, p.lambda_)}")


def _build_designs(args, families):
    from . import action, suzuki

    field = _field_for(args)
    if field.q == 128:
        blocked = [f for f in families if f not in BUILD_Q128_FAMILIES]
        if blocked:
            raise ConfigError(
                "family 3 at q=128 needs ~34 GB of block indices; "
                "only family 2 is constructible at this size")
    ovoid = suzuki.build_ovoid(field)
    gens = action.generator_set(ovoid, "default")
    return [designs_mod.build_design(ovoid, gens, fam) for fam in families]


def cmd_build(args) -> int:
    built = _build_designs(args, _families(args))
    for design in built:
        print(summary_line(design))
        if args.out:
            out = Path(args.out)
            if len(built) > 1:
                out = out.with_name(f"{out.stem}_f{design.family}{out.suffix}")
            export_mod.write_design(design, out, args.format)
            print(f"wrote {out}")
    return 0


def cmd_export(args) -> int:
    if args.family == "both":
        raise ConfigError("export writes a single design; pass --family 2 or 3")
    design = _build_designs(args, _families(args))[0]
    export_mod.write_design(design, args.out, args.format)
    print(f"wrote {args.out}")
    return 0


def _run_suite(args) -> verify_mod.VerificationRun:
    _check_q(args.q)
    if args.full_closure and args.q != 8:
        raise ConfigError("--full-closure is only available at q=8")
    try:
        return verify_mod.run_suite(
            q=args.q, poly=args.poly, family=args.family,
            exhaustive_triples=args.exhaustive_triples,
            verify_family3_pairs=args.verify_family3_pairs,
            full_closure=True if args.full_closure else None,
            seed=args.seed)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def cmd_verify(args) -> int:
    run = _run_suite(args)
    for check in run.checks:
        print(check.line())
    for design in run.designs.values():
        print(summary_line(design))
    n_fail = sum(c.failed for c in run.checks)
    print(f"{'OK' if n_fail == 0 else 'FAILED'}: "
          f"{len(run.checks)} checks, {n_fail} failures")
    return 0 if n_fail == 0 else 1


def cmd_report(args) -> int:
    from . import report as report_mod

    run = _run_suite(args)
    outdir = Path(args.out) if args.out else Path(f"report_q{args.q}")
    written = report_mod.render_report(run, outdir)
    for check in run.checks:
        print(check.line())
    for design in run.designs.values():
        print(summary_line(design))
    for path in written:
        print(f"wrote {path}")
    return 0 if run.ok else 1


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="szovoid",
        description="Suzuki-Tits ovoid designs: construction, verification, export")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--q", type=int, required=True,
                       help=f"field size, one of {SUPPORTED_Q}")
        p.add_argument("--family", choices=("2", "3", "both"), default="both",
                       help="which design family (default: both)")
        p.add_argument("--poly", type=_hex_int, default=None, metavar="HEX",
                       help="irreducible modulus as a hex integer, bit i = "
                            "coefficient of x^i (e.g. 0xB for q=8)")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for sampled checks (default 0)")

    p_build = sub.add_parser("build", help="construct designs and print parameters")
    common(p_build)
    p_build.add_argument("--out", default=None, help="optional export path")
    p_build.add_argument("--format", choices=export_mod.FORMATS, default="json")
    p_build.set_defaults(func=cmd_build)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    common(p_verify)
    p_verify.add_argument("--exhaustive-triples", action="store_true",
                          help="scan all point triples even when q > 8")
    p_verify.add_argument("--verify-family3-pairs", action="store_true",
                          help="run the family-3 pair tally at q=32")
    p_verify.add_argument("--full-closure", action="store_true",
                          help="force full group enumeration (q=8 only)")
    p_verify.set_defaults(func=cmd_verify)

    p_export = sub.add_parser("export", help="write one design to a file")
    common(p_export)
    p_export.add_argument("--out", required=True, help="output path")
    p_export.add_argument("--format", choices=export_mod.FORMATS, default="json")
    p_export.set_defaults(func=cmd_export)

    p_report = sub.add_parser("report",
                              help="verify, then render the TSV and figures")
    common(p_report)
    p_report.add_argument("--out", default=None,
                          help="report directory (default report_q<q>)")
    p_report.add_argument("--exhaustive-triples", action="store_true")
    p_report.add_argument("--verify-family3-pairs", action="store_true")
    p_report.add_argument("--full-closure", action="store_true")
    p_report.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
