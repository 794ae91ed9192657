"""Command-line front end.

Exit codes: 0 success, 1 verification discrepancy, 2 domain error, 3 resource cap.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import report
from .errors import CapExceeded, DomainError, HypothesisError, MembershipError
from .oracle import SweepBox
from .simple_cyclic import CharAssumption, SimpleCyclicParams
from .strata import PUBLISHED_AMBIENT_OFFSET
from .triple_cover import TripleCoverParams
from .verify import IDENTITIES, run_verify

EXIT_OK, EXIT_DISCREPANCY, EXIT_DOMAIN, EXIT_CAP = 0, 1, 2, 3


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "md"), default=None)
    common.add_argument("--char", choices=[c.value for c in CharAssumption], default="unknown",
                        help="characteristic assumption for results that need one")
    common.add_argument("--cap", type=int, default=None, help="enumeration cap (default 10^7 or $STACKYCOVERS_CAP)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="stackycovers", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser("classify", help="classify a single parameter tuple")
    kinds = classify.add_subparsers(dest="kind", required=True)
    simple = kinds.add_parser("simple", parents=[common], help="simple cyclic covers of P^n")
    simple.add_argument("-n", type=int, required=True)
    simple.add_argument("-r", type=int, required=True)
    simple.add_argument("-d", type=int, required=True)
    triple = kinds.add_parser("triple", parents=[common], help="cyclic triple covers of P^1")
    triple.add_argument("--d1", type=int, required=True)
    triple.add_argument("--d2", type=int, required=True)
    triple.add_argument("--relaxed", action="store_true", help="allow 1 <= l1, l2 < 4")

    pic = sub.add_parser("pic", parents=[common], help="Picard groups and index")
    pic.add_argument("-n", type=int, required=True)
    pic.add_argument("-r", type=int, required=True)
    pic.add_argument("-d", type=int, required=True)
    pic.add_argument("-k", type=int, default=None, help="divisor of r (default r)")

    strata = sub.add_parser("strata", help="automorphism-locus dimensions")
    which = strata.add_subparsers(dest="which", required=True)
    p1 = which.add_parser("p1", parents=[common])
    p1.add_argument("--rd", type=int, required=True)
    p2 = which.add_parser("p2", parents=[common])
    p2.add_argument("-d", type=int, required=True)
    p2.add_argument("--ambient-offset", type=int, default=PUBLISHED_AMBIENT_OFFSET)

    table = sub.add_parser("table", parents=[common], help="sweep a parameter range into a table")
    table.add_argument("--sweep", type=Path, required=True)

    verify = sub.add_parser("verify", parents=[common], help="cross-check shortcuts against oracles")
    verify.add_argument("--sweep", type=Path, default=None)
    verify.add_argument("--only", action="append", choices=sorted(IDENTITIES), default=None)
    return parser


def _emit_record(record: report.OutputRecord, fmt: str | None) -> None:
    sys.stdout.write(report.render_record(record, fmt or "json"))


def _run(args: argparse.Namespace) -> int:
    if args.command == "classify" and args.kind == "simple":
        p = SimpleCyclicParams(args.n, args.r, args.d)
        _emit_record(report.classify_simple_record(p, CharAssumption(args.char)), args.format)
    elif args.command == "classify":
        p = TripleCoverParams(args.d1, args.d2, strict=not args.relaxed)
        _emit_record(report.classify_triple_record(p), args.format)
    elif args.command == "pic":
        _emit_record(report.pic_record(SimpleCyclicParams(args.n, args.r, args.d), args.k), args.format)
    elif args.command == "strata" and args.which == "p1":
        _emit_record(report.strata_p1_record(args.rd), args.format)
    elif args.command == "strata":
        _emit_record(report.strata_p2_record(args.d, args.ambient_offset, CharAssumption(args.char)), args.format)
    elif args.command == "table":
        spec = report.parse_sweep(args.sweep.read_text(encoding="utf-8"))
        columns, rows = report.sweep_rows(spec, args.cap)
        sys.stdout.write(report.render_table(columns, rows, args.format or "csv"))
    elif args.command == "verify":
        box = SweepBox(cap=args.cap)
        if args.sweep is not None:
            box = report.parse_sweep(args.sweep.read_text(encoding="utf-8")).box(args.cap)
        result = run_verify(box, args.only)
        if args.format == "json":
            sys.stdout.write(json.dumps(result.to_dict(), ensure_ascii=False) + "\n")
        elif args.format:
            rows = [{"identity": r.name, "checked": r.checked, "discrepancies": len(r.discrepancies)}
                    for r in result.results]
            sys.stdout.write(report.render_table(["identity", "checked", "discrepancies"], rows, args.format))
        else:
            sys.stdout.write("\n".join(result.lines()) + "\n")
        return EXIT_OK if result.ok else EXIT_DISCREPANCY
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except (DomainError, HypothesisError, MembershipError) as exc:
        print(f"stackycovers: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except CapExceeded as exc:
        print(f"stackycovers: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, OSError) as exc:
        print(f"stackycovers: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
