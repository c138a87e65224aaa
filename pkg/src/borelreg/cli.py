"""Command line interface: ``borelreg <command> ...``.

Exit status: 0 ok, 2 parse or usage error, 3 domain error (zero/unit ideal,
bad index, ...), 4 Betti oracle budget exceeded, 5 property violation.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from .analysis import SCHEMA_VERSION, analyze
from .errors import BudgetExceededError, DomainError, ParseError
from .homology import FieldSpec
from .io import ideal_to_json, parse_ideal
from .regularity import betti_table, compute_regularity
from .structure import associated_primes, check_char_theorem, irreducible_decomposition
from .suites import SUITES, run_suite

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_BUDGET, EXIT_VIOLATION = 0, 2, 3, 4, 5


def _read(path):
    if path == "-":
        return parse_ideal(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_ideal(fh.read())


def _emit(args, payload, text):
    if getattr(args, "json", False):
        print(json.dumps({"schema": SCHEMA_VERSION, **payload}, sort_keys=True, indent=2))
    else:
        print(text)


def cmd_analyze(args):
    report = analyze(_read(args.file), args.field, args.budget, timings=args.timings)
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True, indent=2))
    else:
        print(report.to_text())
    return EXIT_OK


def cmd_reg(args):
    mode = "oracle" if args.oracle_only else "fast" if args.fast_only else "auto"
    ideal = _read(args.file)
    try:
        result = compute_regularity(ideal, args.field, mode, args.budget)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(str(exc)) from None
    _emit(args, {"ideal": ideal_to_json(ideal), "regularity": result.value,
                 "method": result.method},
          f"{result.value}  ({result.method})")
    return EXIT_OK


def cmd_betti(args):
    ideal = _read(args.file)
    table = betti_table(ideal, args.field, args.budget)
    _emit(args, {"ideal": ideal_to_json(ideal), "betti": table.to_json()},
          f"{table.grid()}\nregularity: {table.regularity}")
    return EXIT_OK


def cmd_decompose(args):
    ideal = _read(args.file)
    comps = irreducible_decomposition(ideal)
    ass = associated_primes(ideal)
    text = "\n".join(["components:"] + [f"  {c}" for c in comps]
                     + ["associated primes:"] + [f"  {p}" for p in ass])
    _emit(args, {"ideal": ideal_to_json(ideal),
                 "decomposition": [[list(e) for e in c.entries] for c in comps],
                 "ass": [list(p.support) for p in ass]}, text)
    return EXIT_OK


def cmd_check_theorem(args):
    ideal = _read(args.file)
    r = check_char_theorem(ideal)
    payload = {"ideal": ideal_to_json(ideal), "is_borel_type": r.is_borel_type,
               "ass_all_prefix": r.ass_all_prefix, "truncation_stable": r.truncation_stable,
               "q_used": r.q_used, "consistent": r.consistent}
    text = (f"Borel type:        {r.is_borel_type}\n"
            f"Ass all prefix:    {r.ass_all_prefix}\n"
            f"I_>=q stable:      {r.truncation_stable}  (q = {r.q_used})\n"
            f"consistent:        {r.consistent}")
    _emit(args, payload, text)
    return EXIT_OK if r.consistent else EXIT_VIOLATION


def cmd_verify(args):
    suite = SUITES[args.suite]
    accepted = inspect.signature(suite).parameters
    given = {"seed": args.seed, "count": args.count, "nmax": args.nmax,
             "dmax": args.dmax, "gmax": args.gmax}
    params = {k: v for k, v in given.items() if v is not None and k in accepted}
    ignored = sorted(k for k, v in given.items() if v is not None and k not in accepted)
    result = run_suite(args.suite, **params)
    payload = result.to_json()
    if ignored:
        payload["ignored_options"] = ignored
    print(json.dumps({"schema": SCHEMA_VERSION, **payload}, sort_keys=True, indent=2))
    return EXIT_OK if result.passed else EXIT_VIOLATION


def _field(text):
    try:
        return FieldSpec.parse(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borelreg",
        description="Borel-type monomial ideals and their regularity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file(p):
        p.add_argument("file", help="ideal file, or - for stdin")

    def add_field(p):
        p.add_argument("--field", type=_field, default=FieldSpec(),
                       help="coefficient field: q (default) or f<p>")

    def add_budget(p):
        p.add_argument("--budget", type=int, default=None,
                       help="max multidegree cells for the Betti oracle "
                            "(default $BORELREG_BUDGET or 10^6)")

    p = sub.add_parser("analyze", help="full report on one ideal")
    add_file(p)
    add_field(p)
    add_budget(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("reg", help="Castelnuovo-Mumford regularity")
    add_file(p)
    add_field(p)
    add_budget(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--oracle-only", action="store_true")
    group.add_argument("--fast-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("betti", help="Betti table from the upper Koszul oracle")
    add_file(p)
    add_field(p)
    add_budget(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("decompose", help="irreducible components and associated primes")
    add_file(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check-theorem", help="evaluate the three Borel-type conditions")
    add_file(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check_theorem)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--dmax", type=int)
    p.add_argument("--gmax", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
