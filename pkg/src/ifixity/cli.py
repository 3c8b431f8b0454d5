"""Command-line front end: ``ifixity <command> [options]``.

Exit codes: 0 success, 1 computation error, 2 usage error, 3 a table row or
certificate that does not hold.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from ifixity import families
from ifixity.permcore import InconsistencyError, TooLargeError

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3


class UsageError(ValueError):
    pass


# family tag -> (spec class, {parameter: converter})
def _flag(text: str) -> bool:
    low = text.lower()
    if low in ("1", "true", "yes", "y"):
        return True
    if low in ("0", "false", "no", "n"):
        return False
    raise UsageError(f"not a boolean: {text!r}")


FAMILIES = {
    "intransitive": (families.Intransitive, {"m": int, "k": int}),
    "imprimitive": (families.Imprimitive, {"k": int, "r": int}),
    "affine": (families.Affine, {"p": int, "d": int}),
    "product": (families.ProductType, {"k": int, "r": int}),
    "diagonal": (families.DiagonalType, {"ell": int, "k": int}),
    "almost-simple": (families.AlmostSimple, {"m": int, "h0_order": int, "standard": _flag}),
    "sporadic": (families.Sporadic, {"group": str, "h0": str}),
}


def parse_params(text: str) -> dict[str, str]:
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        key, sep, value = part.partition("=")
        if not sep or not key.strip():
            raise UsageError(f"expected key=value, got {part!r}")
        out[key.strip()] = value.strip()
    return out


def build_spec(family: str, params: str):
    cls, fields = FAMILIES[family]
    raw = parse_params(params)
    unknown = sorted(set(raw) - set(fields))
    missing = [f for f in fields if f not in raw]
    if unknown:
        raise UsageError(f"unknown parameter(s) for {family}: {', '.join(unknown)}")
    if missing:
        raise UsageError(f"missing parameter(s) for {family}: {', '.join(missing)}")
    values = {}
    for name, conv in fields.items():
        try:
            values[name] = conv(raw[name])
        except ValueError:
            raise UsageError(f"bad value for {name}: {raw[name]!r}") from None
    return cls(**values)


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"expected a range a..b, got {text!r}") from None
    return a, b


def parse_pair(text: str) -> tuple[int, int]:
    a, sep, b = text.partition(",")
    try:
        return int(a), int(b)
    except ValueError:
        raise UsageError(f"expected a pair a,b, got {text!r}") from None


# --- commands ---------------------------------------------------------------------------

def cmd_classify(args) -> tuple[int, object, list[str]]:
    report = families.classify(build_spec(args.family, args.params))
    return EXIT_OK, report.to_record(), [report.summary()]


def cmd_bruteforce(args):
    from ifixity.permcore import build_group, ifix_bruteforce, read_generator_file

    degree, t_gens = read_generator_file(args.group)
    h_degree, h_gens = read_generator_file(args.stab)
    if h_degree != degree:
        raise UsageError(f"degrees differ: group {degree}, stabilizer {h_degree}")
    report = ifix_bruteforce(build_group(t_gens, degree), h_gens, label=args.label or "")
    return EXIT_OK, report.to_record(), [report.summary()]


def cmd_table1(args):
    from ifixity import table1

    results = table1.run(args.rows, args.method)
    code = EXIT_MISMATCH if any(r.status == table1.MISMATCH for r in results) else EXIT_OK
    counts = {s: sum(r.status == s for r in results) for s in (table1.MATCH, table1.MISMATCH, table1.SKIPPED)}
    lines = [r.summary() for r in results]
    lines.append(" ".join(f"{k}={v}" for k, v in counts.items()))
    return code, {"rows": [r.to_record() for r in results], "counts": counts}, lines


def cmd_certify(args):
    from ifixity import certify

    if args.list:
        ids = certify.registered_ids() + ["fact_ratio", "linv_classes"]
        return EXIT_OK, {"ids": ids}, ids
    if args.base:
        results = [certify.certify(i, b, b) for i, b in certify.BASE_CASES]
    elif args.id is None:
        raise UsageError("certify needs --id, --base or --list")
    elif args.id == "fact_ratio":
        if args.grid:
            results = [certify.factorial_ratio_sweep(certify.factorial_ratio_grid(args.grid, args.seed))]
        elif args.range:
            results = [certify.factorial_ratio_bounds_check(*parse_pair(args.range))]
        else:
            raise UsageError("fact_ratio needs --range a,b or --grid N")
    elif args.id == "linv_classes":
        if not args.range:
            raise UsageError("linv_classes needs --range a..b")
        results = [certify.inv_class_bound_check(*parse_range(args.range))]
    elif args.range:
        results = [certify.certify(args.id, *parse_range(args.range))]
    else:
        results = [certify.certify(args.id)]
    bad = any(r.verdict != certify.HOLDS for r in results)
    records = [r.to_record() for r in results]
    return (EXIT_MISMATCH if bad else EXIT_OK,
            records if len(records) > 1 else records[0],
            [r.summary() for r in results])


def cmd_chartab(args):
    from ifixity import chartab

    G = chartab.load_class_data(args.g)
    H = chartab.load_class_data(args.h)
    fusion = chartab.load_fusion(args.fusion)
    report = chartab.ifix_from_chardata(G, H, fusion)
    rec = report.to_record()
    if "fix" in report.details:
        rec["fix"] = {k: str(v) for k, v in report.details["fix"].items()}
    return EXIT_OK, rec, [report.summary()]


# --- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a machine-readable record")

    parser = argparse.ArgumentParser(prog="ifixity", description="Involution fixity of primitive groups.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("classify", parents=[common], help="fixity of a family member")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--params", required=True, help="comma separated key=value pairs")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bruteforce", parents=[common], help="exact ifix from generator files")
    p.add_argument("--group", required=True, help="generators of T")
    p.add_argument("--stab", required=True, help="generators of H_0")
    p.add_argument("--label")
    p.set_defaults(func=cmd_bruteforce)

    p = sub.add_parser("table1", parents=[common], help="recompute the low-fixity table")
    p.add_argument("--rows", help="T names, row keys or ranges such as A5..A11")
    p.add_argument("--method", default="auto", choices=["auto", "bruteforce", "chartab", "both"])
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("certify", parents=[common], help="check a registered inequality")
    p.add_argument("--id")
    p.add_argument("--range", help="a..b (or a,b for fact_ratio)")
    p.add_argument("--grid", type=int, help="sample size for fact_ratio")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--base", action="store_true", help="check every registered base case")
    p.add_argument("--list", action="store_true", help="list the registered ids")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("chartab", parents=[common], help="ifix from class sizes and a fusion map")
    p.add_argument("--g", required=True, help="class data of G")
    p.add_argument("--h", required=True, help="class data of H")
    p.add_argument("--fusion", required=True, help="fusion map H -> G")
    p.set_defaults(func=cmd_chartab)
    return parser


def _message(exc: BaseException) -> str:
    if isinstance(exc, KeyError) and exc.args:
        return str(exc.args[0])
    return str(exc)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, record, lines = args.func(args)
    except (TooLargeError, InconsistencyError, ArithmeticError, RecursionError) as exc:
        print(f"ifixity: error: {_message(exc)}", file=sys.stderr)
        return EXIT_COMPUTATION
    except (ValueError, LookupError, OSError) as exc:
        print(f"ifixity: usage error: {_message(exc)}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
