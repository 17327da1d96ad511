"""Command-line interface: ``gbent <subcommand> ...``.

Exit codes: 0 success, 2 invalid input, 3 property violation, 4 unsupported scale.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance
from .boolean import BooleanFunction, bent_tables
from .classify import bit_reversal, classify_quaternary, group_order, regular_quaternary_values
from .decomposition import DecompositionSystem, compose, decompose
from .errors import DomainError, InvalidInputError, UnsupportedError
from .gbf import GeneralizedBooleanFunction, gwht, is_anti_self_dual_gbf, is_gbent, is_self_dual_gbf, regular_dual
from .records import ClassificationReport, format_record, parse_record, record_to_dict

EXIT_INVALID = 2
EXIT_VIOLATION = 3
EXIT_UNSUPPORTED = 4


def _table_string(g: BooleanFunction, convention: str) -> str:
    bits = g.bits if convention == "lsb" else g.bits[bit_reversal(g.n)]
    return "".join(map(str, bits.tolist()))


def _parse_table(text: str, convention: str) -> BooleanFunction:
    g = BooleanFunction.from_string(text)
    if convention == "msb":
        g = BooleanFunction.from_bits(g.bits[bit_reversal(g.n)])
    return g


def _emit(args, payload: dict, text_lines) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def cmd_analyze(args) -> int:
    f = parse_record(args.record, args.q, args.n, args.convention)
    dual = regular_dual(f)
    payload = {
        "record": record_to_dict(f),
        "spectrum": gwht(f).tolist(),
        "gbent": is_gbent(f),
        "regular": dual is not None,
        "dual": None if dual is None else record_to_dict(dual),
        "self_dual": is_self_dual_gbf(f),
        "anti_self_dual": is_anti_self_dual_gbf(f),
    }
    lines = [
        f"record: {format_record(f, args.convention)} (q={f.q}, n={f.n})",
        f"spectrum: {payload['spectrum']}",
        f"gbent: {str(payload['gbent']).lower()}",
        f"regular: {str(payload['regular']).lower()}",
        f"dual: {'-' if dual is None else format_record(dual, args.convention)}",
        f"self_dual: {str(payload['self_dual']).lower()}",
        f"anti_self_dual: {str(payload['anti_self_dual']).lower()}",
    ]
    _emit(args, payload, lines)
    return 0


def cmd_decompose(args) -> int:
    f = parse_record(args.record, args.q, args.n, args.convention)
    tables = [_table_string(g, args.convention) for g in decompose(f).components]
    _emit(args, {"q": f.q, "n": f.n, "components": tables}, tables)
    return 0


def cmd_compose(args) -> int:
    comps = [_parse_table(t, args.convention) for t in args.tables]
    k = len(comps)
    if k & (k - 1) or args.q != 2 * k:
        raise InvalidInputError(f"q={args.q} needs {args.q // 2} component tables, got {k}")
    if len({g.n for g in comps}) != 1:
        raise InvalidInputError("component tables differ in length")
    f = compose(DecompositionSystem(comps[0].n, k.bit_length(), comps))
    _emit(args, record_to_dict(f), [format_record(f, args.convention)])
    return 0


def cmd_enumerate_bent(args) -> int:
    out = sys.stdout
    for table in bent_tables(args.n, args.threads):
        g = BooleanFunction(args.n, int(table))
        s = _table_string(g, args.convention)
        out.write((json.dumps({"n": args.n, "table": s}) if args.json else s) + "\n")
    return 0


def _check_quaternary(args) -> None:
    if args.q != 4:
        raise InvalidInputError(f"only q=4 is supported here, got q={args.q}")


def cmd_enumerate_regular(args) -> int:
    _check_quaternary(args)
    out = sys.stdout
    for row in regular_quaternary_values(args.n, args.threads).tolist():
        f = GeneralizedBooleanFunction(args.n, 2, row)
        out.write((json.dumps(record_to_dict(f)) if args.json else format_record(f, args.convention)) + "\n")
    return 0


def cmd_classify(args) -> int:
    _check_quaternary(args)
    orbits = classify_quaternary(args.n, args.convention, args.threads)
    report = ClassificationReport.from_orbits(orbits, 4, args.n, group_order(args.n, 4), args.convention)
    print(report.to_json() if args.json else report.to_text())
    return 0


def cmd_verify(args) -> int:
    outcomes = acceptance.run(args.only or None, echo=print)
    failed = [o.number for o in outcomes if not o.passed]
    print(f"{len(outcomes) - len(failed)}/{len(outcomes)} criteria passed" + (f"; failed {failed}" if failed else ""))
    return EXIT_VIOLATION if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-q", type=int, default=4, help="modulus, a power of two (default 4)")
    common.add_argument("-n", type=int, default=None, help="number of variables")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--convention", choices=("lsb", "msb"), default="lsb",
                        help="bit order of point indices in printed and parsed tables")
    common.add_argument("--threads", type=int, default=1, help="worker threads for enumeration")

    parser = argparse.ArgumentParser(prog="gbent", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="spectrum and bentness predicates")
    p.add_argument("record", help='value table such as 2101, or a JSON record')
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decompose", parents=[common], help="split a regular bent gBF into Boolean bent functions")
    p.add_argument("record")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("compose", parents=[common], help="build a regular bent gBF from q/2 truth tables")
    p.add_argument("tables", nargs="+")
    p.set_defaults(func=cmd_compose)

    for name, func, help_ in (
        ("enumerate-bent", cmd_enumerate_bent, "list all bent functions (n = 2 or 4)"),
        ("enumerate-regular", cmd_enumerate_regular, "list all regular bent Z_4-valued functions"),
        ("classify", cmd_classify, "orbits under the restricted affine group"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func, needs_n=True)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance criteria")
    p.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "needs_n", False) and args.n is None:
        parser.error(f"{args.command} requires -n")
    try:
        return args.func(args)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except UnsupportedError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except DomainError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
