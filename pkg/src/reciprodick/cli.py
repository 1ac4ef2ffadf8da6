"""Command-line front end.

Commands:

  gen       construct one family member (or a sweep) and print it
  classify  report degree and self-reciprocality for family members
  verify    run a predicate-vs-oracle scan; mismatches are findings
  table     emit every scan verdict as a data table
  coterm    build a named coterm polynomial
  code      factor x^m - 1 and report the cyclic codes of its divisors

Output is deterministic: records are emitted in sorted parameter order with
a fixed field order and no timestamps, as JSON lines (default) or CSV.  Any
coefficient that could exceed 53 bits is carried as a decimal string.

Exit codes: 0 success, 1 usage or domain errors, 2 when a scan found
predicate/oracle disagreements (the records are still emitted).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .classifier import THEOREM_IDS, mismatches, normalize_theorem_id, scan
from .coterm_codes import (
    ENUMERATION_CAP,
    coterm_construct,
    monic_divisors,
    normalize_coterm_rule,
    required_k,
    self_reciprocal_divisors,
    build_cyclic_code,
    verify_reversibility_by_enumeration,
)
from .errors import CapacityError, DomainError
from .families import FAMILIES, FamilySpec, build
from .ringpoly import GF, Ring, Z

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2

_DEFAULT_ENUM_CAP = 10_000


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1; argparse's default would exit 2
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_ERROR)


def _build_parser() -> _Parser:
    parser = _Parser(prog="reciprodick", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_selector(p, with_family=True):
        if with_family:
            p.add_argument("--family", choices=FAMILIES, required=True)
        g = p.add_mutually_exclusive_group()
        g.add_argument("--n", type=int)
        g.add_argument("--n-max", type=int)
        p.add_argument("--n-min", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--k-min", type=int)
        p.add_argument("--k-max", type=int)
        p.add_argument("--ring", choices=("z", "fp"), default="z")
        p.add_argument("--p", type=int)
        p.add_argument("--a", type=int, default=1)

    def add_output(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out")

    p_gen = sub.add_parser("gen", help="construct family polynomials")
    add_selector(p_gen)
    add_output(p_gen)

    p_cls = sub.add_parser("classify", help="oracle self-reciprocality report")
    add_selector(p_cls)
    add_output(p_cls)

    for name in ("verify", "table"):
        p_v = sub.add_parser(name, help=f"{name} a classification rule over ranges")
        p_v.add_argument("--theorem", required=True)
        p_v.add_argument("--n-min", type=int)
        p_v.add_argument("--n-max", type=int)
        p_v.add_argument("--k-min", type=int)
        p_v.add_argument("--k-max", type=int)
        p_v.add_argument("--p", type=int)
        p_v.add_argument("--p-list")
        if name == "verify":
            p_v.add_argument("--all-verdicts", action="store_true")
        add_output(p_v)

    p_cot = sub.add_parser("coterm", help="build a named coterm polynomial")
    p_cot.add_argument("--theorem", required=True)
    p_cot.add_argument("--n", type=int, required=True)
    p_cot.add_argument("--k", type=int)
    p_cot.add_argument("--ring", choices=("z", "fp"))
    p_cot.add_argument("--p", type=int)
    add_output(p_cot)

    p_code = sub.add_parser("code", help="cyclic codes from divisors of x^m - 1")
    p_code.add_argument("--p", type=int, required=True)
    p_code.add_argument("--m", type=int, required=True)
    p_code.add_argument("--sr-only", action="store_true",
                        help="only self-reciprocal (palindromic) generators")
    p_code.add_argument("--enum-cap", type=int, default=_DEFAULT_ENUM_CAP,
                        help="enumerate codewords when p^dim is at most this")
    add_output(p_code)

    return parser


# ----------------------------------------------------------------- emission


def _dumps(d: dict) -> str:
    return json.dumps(d, separators=(",", ":"))


def _csv_cell(v):
    if v is True:
        return "true"
    if v is False:
        return "false"
    if v is None:
        return ""
    return v


def _emit(lines: list[str], args) -> None:
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_lines(fields: list[str], rows: list[dict]) -> list[str]:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_csv_cell(row.get(f)) for f in fields])
    return buf.getvalue().splitlines()


# ----------------------------------------------------------------- selectors

_FAMILY_N_MIN = {"g": 2, "h": 2, "gstar": 3, "hstar": 3, "fchar2": 1}
_FAMILY_PARITY = {"g": 0, "h": 0, "gstar": 1, "hstar": 1}


def _resolve_ring(args) -> Ring:
    family = getattr(args, "family", None)
    if family == "fchar2":
        if args.ring == "fp" and args.p not in (None, 2):
            raise DomainError("family 'fchar2' lives over F2")
        return GF(2)
    if args.ring == "fp":
        if args.p is None:
            raise DomainError("--ring fp requires --p")
        return GF(args.p)
    if args.p is not None:
        raise DomainError("--p requires --ring fp")
    return Z


def _resolve_specs(args) -> list[FamilySpec]:
    ring = _resolve_ring(args)
    family = args.family
    if args.n is not None:
        ns = [args.n]
    elif args.n_max is not None:
        lo = args.n_min if args.n_min is not None else _FAMILY_N_MIN.get(family, 0)
        parity = _FAMILY_PARITY.get(family)
        ns = [n for n in range(lo, args.n_max + 1) if parity is None or n % 2 == parity]
    else:
        raise DomainError("one of --n or --n-max is required")
    if args.k is not None:
        ks = [args.k]
    elif args.k_min is not None or args.k_max is not None:
        if args.k_min is None or args.k_max is None:
            raise DomainError("--k-min and --k-max go together")
        ks = list(range(args.k_min, args.k_max + 1))
    elif family == "fchar2":
        ks = [1]
    else:
        ks = [0]
    return [FamilySpec(family, n, k, ring, args.a) for n in ns for k in ks]


def _spec_fields(spec: FamilySpec) -> dict:
    d = {"family": spec.family, "n": spec.n, "k": spec.k}
    if spec.ring.is_field:
        d["p"] = spec.ring.p
    if spec.family == "dickson":
        d["a"] = spec.a
    return d


# ------------------------------------------------------------------ commands


def _cmd_gen(args) -> int:
    specs = _resolve_specs(args)
    if args.format == "csv":
        rows = []
        for spec in specs:
            poly = build(spec)
            row = _spec_fields(spec)
            row["degree"] = poly.degree
            row["coeffs"] = " ".join(str(c) for c in poly.coeffs)
            rows.append(row)
        _emit(_csv_lines(["family", "n", "k", "p", "a", "degree", "coeffs"], rows), args)
        return EXIT_OK
    if len(specs) == 1:
        _emit([_dumps(build(specs[0]).to_json_dict())], args)
        return EXIT_OK
    lines = []
    for spec in specs:
        record = _spec_fields(spec)
        record["poly"] = build(spec).to_json_dict()
        lines.append(_dumps(record))
    _emit(lines, args)
    return EXIT_OK


def _cmd_classify(args) -> int:
    rows = []
    for spec in _resolve_specs(args):
        poly = build(spec)
        row = _spec_fields(spec)
        row["degree"] = poly.degree
        row["self_reciprocal"] = poly.is_self_reciprocal()
        row["coeffs"] = [str(c) for c in poly.coeffs]
        rows.append(row)
    if args.format == "csv":
        for row in rows:
            row["coeffs"] = " ".join(row["coeffs"])
        _emit(_csv_lines(["family", "n", "k", "p", "degree", "self_reciprocal", "coeffs"], rows), args)
    else:
        _emit([_dumps(r) for r in rows], args)
    return EXIT_OK


def _scan_args(args) -> dict:
    k_values = None
    if args.k_min is not None or args.k_max is not None:
        if args.k_min is None or args.k_max is None:
            raise DomainError("--k-min and --k-max go together")
        k_values = list(range(args.k_min, args.k_max + 1))
    p_list = None
    if args.p is not None and args.p_list is not None:
        raise DomainError("--p and --p-list are mutually exclusive")
    if args.p is not None:
        p_list = [args.p]
    elif args.p_list is not None:
        p_list = [int(tok) for tok in args.p_list.split(",") if tok.strip()]
    return {"n_min": args.n_min, "n_max": args.n_max, "k_values": k_values, "p_list": p_list}


def _theorem_list(name: str) -> list[str]:
    if name.strip().lower() == "all":
        return list(THEOREM_IDS)
    return [normalize_theorem_id(name)]


def _cmd_verify(args) -> int:
    kwargs = _scan_args(args)
    lines = []
    csv_rows = []
    total_bad = 0
    for t in _theorem_list(args.theorem):
        verdicts = scan(t, **kwargs)
        bad = mismatches(verdicts)
        total_bad += len(bad)
        shown = verdicts if args.all_verdicts else bad
        if args.format == "csv":
            csv_rows.extend(v.to_json_dict() for v in shown)
        else:
            lines.extend(_dumps(v.to_json_dict()) for v in shown)
            lines.append(_dumps({"theorem": t, "scanned": len(verdicts), "mismatches": len(bad)}))
    if args.format == "csv":
        _emit(_csv_lines(
            ["theorem", "family", "n", "k", "p", "predicted", "observed", "match", "note"],
            csv_rows), args)
    else:
        _emit(lines, args)
    return EXIT_MISMATCH if total_bad else EXIT_OK


def _cmd_table(args) -> int:
    kwargs = _scan_args(args)
    rows = []
    total_bad = 0
    for t in _theorem_list(args.theorem):
        verdicts = scan(t, **kwargs)
        total_bad += len(mismatches(verdicts))
        rows.extend(v.to_json_dict() for v in verdicts)
    if args.format == "csv":
        _emit(_csv_lines(
            ["theorem", "family", "n", "k", "p", "predicted", "observed", "match", "note"],
            rows), args)
    else:
        _emit([_dumps(r) for r in rows], args)
    return EXIT_MISMATCH if total_bad else EXIT_OK


def _cmd_coterm(args) -> int:
    rule = normalize_coterm_rule(args.theorem)
    if rule in ("T5_1", "T5_2", "T5_3", "T5_4", "T5_5"):
        if args.p is not None or args.ring == "fp":
            raise DomainError(f"{rule} is stated over Z")
        ring = Z
    elif rule == "CHAR2":
        if args.p not in (None, 2):
            raise DomainError("CHAR2 is stated over F2")
        ring = GF(2)
    else:
        if args.p is None:
            raise DomainError(f"{rule} requires --p")
        ring = GF(args.p)
    k = args.k if args.k is not None else required_k(rule)
    result = coterm_construct(rule, args.n, k, ring)
    record = {"theorem": rule, "n": args.n, "k": k}
    if ring.is_field:
        record["p"] = ring.p
    record["m"] = result.context.m
    record["degenerate"] = result.degenerate
    record["coeffs"] = [str(c) for c in result.poly.coeffs]
    if args.format == "csv":
        record["coeffs"] = " ".join(str(c) for c in result.poly.coeffs)
        _emit(_csv_lines(["theorem", "n", "k", "p", "m", "degenerate", "coeffs"], [record]), args)
    else:
        _emit([_dumps(record)], args)
    return EXIT_OK


def _cmd_code(args) -> int:
    cap = min(args.enum_cap, ENUMERATION_CAP)
    divisors = self_reciprocal_divisors(args.p, args.m) if args.sr_only else monic_divisors(args.p, args.m)
    records = []
    disagreements = 0
    for g in divisors:
        code = build_cyclic_code(args.p, args.m, g)
        checked = args.p**code.dimension <= cap
        record = code.to_json_dict(enumeration_checked=checked)
        if checked and verify_reversibility_by_enumeration(code) != code.reversible:
            record["note"] = "enumeration disagrees with the generator criterion"
            disagreements += 1
        records.append(record)
    if args.format == "csv":
        rows = [dict(r, generator=" ".join(r["generator"])) for r in records]
        _emit(_csv_lines(
            ["p", "m", "generator", "dimension", "reversible", "enumeration_checked"], rows), args)
    else:
        _emit([_dumps(r) for r in records], args)
    return EXIT_MISMATCH if disagreements else EXIT_OK


_COMMANDS = {
    "gen": _cmd_gen,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "coterm": _cmd_coterm,
    "code": _cmd_code,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except SystemExit as exc:
        return 0 if exc.code is None else int(exc.code)
    except (DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
