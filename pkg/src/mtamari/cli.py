"""
Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 resource limit hit, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__, formulas, lattice, series, verify
from .errors import NonDivisible, NonIntegral, NotALattice, ResourceLimit, TamariError

EXIT_OK, EXIT_FAILED, EXIT_RESOURCE, EXIT_USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s}")
    return v


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def cmd_count(args) -> int:
    value = formulas.count_intervals(args.m, args.n)
    status = EXIT_OK
    if args.brute:
        h = lattice.build_hasse(args.m, args.n, node_cap=args.node_cap)
        table = lattice.interval_table(h)
        brute = table["intervals"]
        print(f"{value} (formula) = {brute} (brute force)" if value == brute
              else f"{value} (formula) != {brute} (brute force)")
        status = EXIT_OK if value == brute else EXIT_FAILED
    else:
        print(value)
    if args.by_contacts:
        row = formulas.contact_row(args.m, args.n)
        brute_row = {}
        if args.brute:
            brute_row = dict(map(tuple, table["by_contacts"]))
        for i, c in row.items():
            if args.brute:
                b = brute_row.get(i, 0)
                print(f"i={i}: {c}" + ("" if b == c else f" (brute force {b})"))
                if b != c:
                    status = EXIT_FAILED
            else:
                print(f"i={i}: {c}")
    return status


def cmd_formula(args) -> int:
    if args.table:
        rows = [{"i": i, "count": str(c)} for i, c in formulas.contact_row(args.m, args.n).items()]
        print(_dump({"schema": "mtamari.formula/1", "m": args.m, "n": args.n,
                     "total": str(formulas.count_intervals(args.m, args.n)), "rows": rows}))
    elif args.i is not None:
        print(formulas.count_by_contacts(args.m, args.n, args.i))
    else:
        print(formulas.count_intervals(args.m, args.n))
    return EXIT_OK


def series_json(F, m: int, with_y: bool, with_q: bool) -> dict:
    coeffs = []
    for n, c in enumerate(F):
        terms = [[i, r, k, str(int(v))] for (i, r, k), v in sorted(c.items())]
        coeffs.append({"n": n, "terms": terms})
    return {"schema": "mtamari.series/1", "m": m, "order": F.order,
            "with_y": with_y, "with_q": with_q, "coeffs": coeffs}


def cmd_series(args) -> int:
    F = series.solve_f(args.m, args.order, with_y=args.with_y, with_q=args.with_q)
    if args.format == "json":
        print(_dump(series_json(F, args.m, args.with_y, args.with_q)))
        return EXIT_OK
    print(", ".join(str(v) for v in series.specialize(F)))
    if args.terms:
        for n, c in enumerate(F):
            for (i, r, k), v in sorted(c.items()):
                print(f"{n} {i} {r} {k} {v}")
    return EXIT_OK


def cmd_hasse(args) -> int:
    h = lattice.build_hasse(args.m, args.n, node_cap=args.node_cap)
    if args.format == "json":
        print(_dump(lattice.hasse_json(h)))
    else:
        sys.stdout.write(lattice.export_dot(h))
    return EXIT_OK


def cmd_intervals(args) -> int:
    table = lattice.interval_table(lattice.build_hasse(args.m, args.n, node_cap=args.node_cap))
    if args.format == "json":
        print(_dump(table))
        return EXIT_OK
    print(f"m={table['m']} n={table['n']} intervals={table['intervals']}")
    for i, c in table["by_contacts"]:
        print(f"contacts={i} count={c}")
    for c, r, q, cnt in table["joint"]:
        print(f"contacts-1={c} rise={r} chain={q} count={cnt}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    kwargs = {}
    if args.m_max is not None:
        kwargs["m_max"] = args.m_max
    if args.order is not None:
        kwargs["order"] = args.order
    failed = 0
    for name in names:
        for label, ok in verify.SUITES[name](**kwargs):
            print(f"{'PASS' if ok else 'FAIL'}  {name}: {label}")
            failed += not ok
    print("PASS" if not failed else f"FAIL ({failed} checks)")
    return EXIT_OK if not failed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mtamari", description="m-Tamari intervals: enumeration, series, identities.")
    p.add_argument("--version", action="store_true", help="print the version to stderr and exit")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def mn(sp, n_type=_positive):
        sp.add_argument("--m", type=_positive, required=True)
        sp.add_argument("--n", type=n_type, required=True)

    def cap(sp):
        sp.add_argument("--node-cap", type=_positive, default=lattice.DEFAULT_NODE_CAP)

    sp = sub.add_parser("count", help="number of intervals")
    mn(sp)
    cap(sp)
    sp.add_argument("--brute", action="store_true", help="cross-check by exhaustive enumeration")
    sp.add_argument("--by-contacts", action="store_true")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("formula", help="closed-form counts")
    mn(sp)
    sp.add_argument("--i", type=int)
    sp.add_argument("--table", action="store_true", help="all contact counts as JSON")
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("series", help="solve the functional equation")
    sp.add_argument("--m", type=_positive, required=True)
    sp.add_argument("--order", type=_nonneg, required=True)
    sp.add_argument("--with-y", action="store_true")
    sp.add_argument("--with-q", action="store_true")
    sp.add_argument("--terms", action="store_true", help="also print 'n i r k count' rows")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("hasse", help="Hasse diagram as DOT or JSON")
    mn(sp, _nonneg)
    cap(sp)
    sp.add_argument("--format", choices=["dot", "json"], default="dot")
    sp.set_defaults(func=cmd_hasse)

    sp = sub.add_parser("intervals", help="interval statistics")
    mn(sp, _nonneg)
    cap(sp)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_intervals)

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", choices=["all", *verify.SUITES], default="all")
    sp.add_argument("--m-max", type=_positive)
    sp.add_argument("--order", type=_nonneg)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.version:
        print(f"mtamari {__version__}", file=sys.stderr)
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ResourceLimit as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (NotALattice, NonIntegral, NonDivisible) as e:
        print(f"check failed: {e}", file=sys.stderr)
        return EXIT_FAILED
    except TamariError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
