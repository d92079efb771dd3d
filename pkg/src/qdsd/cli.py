"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 resource limit, 3 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import dsdcount, gfenum, partitions, qarith
from .verify import run_checks

EXIT_OK, EXIT_USAGE, EXIT_LIMIT, EXIT_MISMATCH = 0, 1, 2, 3

COUNT_KINDS = ("dsd", "dsd-star", "stirling", "bell", "dsd-bell", "dsd-bell-star", "basis", "gauss", "knuth")
TABLE_KINDS = ("dsd", "dsd-star")
BFILE_SEQS = ("dsd-bell", "dsd-bell-star", "basis-count", "dsd-diagonal")
FORMATS = ("tsv", "json", "bfile", "paper")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for this command")


def _count_value(args) -> int:
    kind, q, n, m = args.kind, args.q, args.n, args.m
    needs_m = kind in ("dsd", "dsd-star", "stirling", "knuth")
    _require(args, "n", *(["m"] if needs_m else []))
    if kind == "gauss":
        _require(args, "k")
    if kind in ("stirling", "bell"):
        return partitions.stirling2(n, m) if kind == "stirling" else partitions.bell(n)
    _require(args, "q")
    return {
        "dsd": lambda: dsdcount.dsd_stirling(n, m, q),
        "dsd-star": lambda: dsdcount.dsd_stirling_star(n, m, q),
        "dsd-bell": lambda: dsdcount.dsd_bell(n, q),
        "dsd-bell-star": lambda: dsdcount.dsd_bell_star(n, q),
        "basis": lambda: dsdcount.basis_count(n, q),
        "gauss": lambda: qarith.gaussian_binomial(n, args.k, q),
        "knuth": lambda: dsdcount.knuth_generalized_stirling(n, m, q),
    }[kind]()


def cmd_count(args) -> str:
    value = _count_value(args)
    if args.format == "json":
        record = {"kind": args.kind, "q": args.q, "n": args.n, "value": value}
        if args.m is not None:
            record["m"] = args.m
        if args.k is not None:
            record["k"] = args.k
        return json.dumps(record) + "\n"
    if args.format == "bfile":
        return f"{args.n} {value}\n"
    if args.format == "paper":
        raise UsageError("paper format applies to enumerate only")
    return f"{value}\n"


def format_table(table: dsdcount.DsdCountTable, fmt: str) -> str:
    if fmt == "json":
        rows = [{"n": n, "values": table.row(n), "total": table.total(n)} for n in range(table.max_n + 1)]
        return json.dumps({"q": table.q, "max_n": table.max_n, "starred": table.starred, "rows": rows}) + "\n"
    if fmt == "bfile":
        # flattened triangle, row by row, m = 0..n
        flat = [v for n in range(table.max_n + 1) for v in table.row(n)]
        return "".join(f"{i} {v}\n" for i, v in enumerate(flat))
    if fmt == "paper":
        raise UsageError("paper format applies to enumerate only")
    width = table.max_n + 1
    lines = ["\t".join(["n\\m", *map(str, range(width)), "total"])]
    for n in range(width):
        cells = [str(v) for v in table.row(n)] + [""] * (width - n - 1)
        lines.append("\t".join([str(n), *cells, str(table.total(n))]))
    return "\n".join(lines) + "\n"


def cmd_table(args) -> str:
    _require(args, "q", "max_n")
    table = dsdcount.build_table(args.q, args.max_n, starred=args.kind == "dsd-star")
    return format_table(table, args.format)


def cmd_enumerate(args) -> str:
    _require(args, "n", "q")
    if args.format == "paper" and args.q != 2:
        raise UsageError("paper notation needs q = 2")
    if args.format == "bfile":
        raise UsageError("bfile format does not apply to enumerate")
    contains = None
    if args.contains is not None:
        contains = gfenum.parse_vector(args.contains, args.q, args.n)
    dsds = gfenum.enumerate_dsds(args.n, args.q, args.m, contains, limit=args.limit, parallel=args.parallel)
    if args.format == "paper":
        return "".join(d.paper() + "\n" for d in dsds)
    if args.format == "json":
        return "".join(json.dumps({"blocks": [[v.digits() for v in b.basis] for b in d.blocks]}) + "\n" for d in dsds)
    return "".join(d.digits() + "\n" for d in dsds)


def cmd_verify(args):
    _require(args, "q", "max_n")
    if not gfenum.is_prime(args.q):
        raise UsageError(f"verify needs a prime q, got {args.q}")
    checks = list(run_checks(args.q, args.max_n, limit=args.limit, parallel=args.parallel))
    failed = [c for c in checks if not c.ok]
    if args.format == "json":
        text = json.dumps({
            "q": args.q,
            "max_n": args.max_n,
            "passed": not failed,
            "checks": [
                {"kind": c.kind, "n": c.n, "m": c.m, "detail": c.detail,
                 "formula": c.formula, "oracle": c.oracle, "ok": c.ok}
                for c in checks
            ],
        }) + "\n"
    elif args.format in ("tsv", "paper", "bfile"):
        if args.format != "tsv":
            raise UsageError(f"{args.format} format does not apply to verify")
        lines = ["status\tcheck\tn\tm\tdetail\tformula\toracle"]
        for c in checks:
            lines.append("\t".join([
                "PASS" if c.ok else "FAIL", c.kind, str(c.n), "" if c.m is None else str(c.m),
                c.detail, str(c.formula), str(c.oracle),
            ]))
        lines.append(f"# {len(checks) - len(failed)}/{len(checks)} checks passed")
        text = "\n".join(lines) + "\n"
    first = failed[0].describe() if failed else None
    return text, first


def cmd_bfile(args) -> str:
    _require(args, "q", "max_n")
    if args.format not in ("bfile", "tsv"):
        raise UsageError("bfile command only writes b-files")
    q = args.q
    term = {
        "dsd-bell": lambda n: dsdcount.dsd_bell(n, q),
        "dsd-bell-star": lambda n: dsdcount.dsd_bell_star(n, q),
        "basis-count": lambda n: dsdcount.basis_count(n, q),
        "dsd-diagonal": lambda n: dsdcount.dsd_stirling(n, n, q),
    }[args.seq]
    return "".join(f"{n} {term(n)}\n" for n in range(args.max_n + 1))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qdsd", description="Count direct-sum decompositions of GF(q)^n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, default_format):
        p.add_argument("--q", type=int)
        p.add_argument("--format", choices=FORMATS, default=default_format)
        p.add_argument("--out", metavar="PATH", help="write to PATH instead of standard output")

    def search_opts(p):
        p.add_argument("--limit", type=int, default=gfenum.DEFAULT_LIMIT, help="maximum q**n to enumerate")
        p.add_argument("--parallel", action="store_true", help="split the search across threads")

    p = sub.add_parser("count", help="print a single value")
    p.add_argument("kind", choices=COUNT_KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int, help="subspace dimension for gauss")
    common(p, "tsv")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="print the D_q(n,m) or D*_q(n,m) triangle")
    p.add_argument("kind", choices=TABLE_KINDS)
    p.add_argument("--max-n", type=int)
    common(p, "tsv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="list DSDs one per line")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--contains", help="designated vector, e.g. 110 or ab")
    common(p, "tsv")
    search_opts(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="compare formulas with exhaustive enumeration")
    p.add_argument("--max-n", type=int)
    common(p, "tsv")
    search_opts(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bfile", help="write an OEIS b-file")
    p.add_argument("seq", choices=BFILE_SEQS)
    p.add_argument("--max-n", type=int)
    common(p, "bfile")
    p.set_defaults(func=cmd_bfile)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        sys.stdout.flush()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except gfenum.ResourceLimitError as exc:
        print(f"qdsd: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (UsageError, ValueError) as exc:
        print(f"qdsd: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "verify":
        text, first_failure = result
        _emit(text, args.out)
        if first_failure:
            print(f"qdsd: verification failed at {first_failure}", file=sys.stderr)
            return EXIT_MISMATCH
        return EXIT_OK
    _emit(result, args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
