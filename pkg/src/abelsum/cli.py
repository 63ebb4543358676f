"""Command-line front end.

    abelsum count  --group Z4 --quantity M --size 3 --target 1 [--exclude "0;1"]
    abelsum table  --group Z4 --quantity P --max-size 2 [--format csv]
    abelsum verify --max-order 6 --max-size 5 --max-excluded 2

Counts are always printed as exact decimal integers (strings in JSON).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .closed_form import m_full, n_full, p_parts
from .errors import BudgetExceeded, DomainError, ParseError
from .groups import GroupElement, GroupSpec, parse_elements
from .oracle import brute_multisets, brute_subsets
from .restricted import ExcludedSet, m_restricted, n_restricted
from .verify import run_sweep

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

QUANTITIES = ("M", "N", "P")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"error: {message}\n")


def _parse_query(args) -> tuple[GroupSpec, ExcludedSet]:
    G = GroupSpec.parse(args.group)
    exclude = ExcludedSet(G, tuple(parse_elements(G, args.exclude or "")))
    if args.quantity == "P" and len(exclude):
        raise ParseError("quantity P does not take an exclude set", args.exclude)
    return G, exclude


def _count(quantity: str, S: ExcludedSet, i: int, g: GroupElement) -> int:
    G = S.group
    if quantity == "P":
        return p_parts(G, i, g)
    if quantity == "M":
        return m_restricted(S, i, g) if len(S) else m_full(G, i, g)
    return n_restricted(S, i, g) if len(S) else n_full(G, i, g)


def _oracle_count(quantity: str, S: ExcludedSet, i: int, g: GroupElement) -> int:
    G = S.group
    if quantity == "P":
        return brute_multisets(G, (G.zero,), i, g)
    if quantity == "M":
        return brute_multisets(G, S, i, g)
    return brute_subsets(G, S, i, g)


def cmd_count(args, out) -> int:
    G, S = _parse_query(args)
    g = G.parse_element(args.target)
    count = _count(args.quantity, S, args.size, g)
    status = EXIT_OK
    oracle = None
    if args.oracle:
        oracle = _oracle_count(args.quantity, S, args.size, g)
        if oracle != count:
            status = EXIT_MISMATCH
    if args.format == "json":
        payload = {
            "group": list(G.orders),
            "quantity": args.quantity,
            "size": args.size,
            "target": list(g.residues),
            "exclude": [list(u.residues) for u in S],
            "count": str(count),
        }
        if oracle is not None:
            payload["oracle"] = str(oracle)
        out.write(json.dumps(payload) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["size", "target", "count"] + (["oracle"] if oracle is not None else []))
        w.writerow([args.size, str(g), count] + ([oracle] if oracle is not None else []))
    else:
        out.write(f"{count}\n")
        if oracle is not None:
            out.write(f"oracle: {oracle} ({'match' if oracle == count else 'MISMATCH'})\n")
    return status


def table_rows(quantity: str, S: ExcludedSet, max_size: int) -> list[tuple[int, GroupElement, int]]:
    G = S.group
    return [
        (i, g, _count(quantity, S, i, g))
        for i in range(max_size + 1)
        for g in G.element_list
    ]


def cmd_table(args, out) -> int:
    G, S = _parse_query(args)
    if args.max_size < 0:
        raise ParseError("max size must be non-negative", str(args.max_size))
    rows = table_rows(args.quantity, S, args.max_size)
    if args.format == "json":
        payload = {
            "group": list(G.orders),
            "quantity": args.quantity,
            "exclude": [list(u.residues) for u in S],
            "rows": [
                {"size": i, "target": list(g.residues), "count": str(c)} for i, g, c in rows
            ],
        }
        out.write(json.dumps(payload) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["size", "target", "count"])
        for i, g, c in rows:
            w.writerow([i, str(g), c])
    else:
        for i, g, c in rows:
            out.write(f"{i}\t{g}\t{c}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    for name in ("max_order", "max_size", "max_excluded"):
        if getattr(args, name) < 0:
            raise ParseError("bound must be non-negative", str(getattr(args, name)))
    if args.max_order < 1:
        raise ParseError("max order must be positive", str(args.max_order))
    report = run_sweep(args.max_order, args.max_size, args.max_excluded, jobs=args.jobs)
    for line in report.lines():
        out.write(line + "\n")
    return EXIT_OK if report.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="abelsum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def query_options(p):
        p.add_argument("--group", required=True, help="e.g. Z4, Z4xZ6 or 4x6")
        p.add_argument("--quantity", required=True, choices=QUANTITIES)
        p.add_argument("--exclude", default="", help='excluded elements, e.g. "0,1;1,2"')
        p.add_argument("--format", default="text", choices=("text", "json", "csv"))

    p = sub.add_parser("count", help="count for a single (size, target)")
    query_options(p)
    p.add_argument("--size", required=True, type=int)
    p.add_argument("--target", required=True)
    p.add_argument("--oracle", action="store_true", help="also enumerate and compare")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="counts for every size up to a bound and every target")
    query_options(p)
    p.add_argument("--max-size", required=True, type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="compare formulas with the oracles on small groups")
    p.add_argument("--max-order", required=True, type=int)
    p.add_argument("--max-size", required=True, type=int)
    p.add_argument("--max-excluded", required=True, type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        sys.stderr.write(f"refused: {exc}\n")
        return EXIT_BUDGET
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def run(argv=None) -> str:
    """Run the CLI in-process and return its standard output (for scripting and tests)."""
    buf = io.StringIO()
    main(argv, buf)
    return buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
