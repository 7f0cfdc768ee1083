"""Command-line front end.

Usage::

    erpart classify --e 1 --r 2 2+3+4
    erpart enumerate --m 9 --e 1 --r 2 --minimal
    erpart count --m 9 --e 1 --r 2 --minimal --method series
    erpart series --kind R --n 2 --e 1 --r 2 --format csv
    erpart table --m 1..10 --e 1 --r 2 --verify

JSON is the default output.  Exit status: 0 ok, 1 size guard or failed
cross-check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .count_all import build_table, count_all, count_all_via_series, count_with_parts_dp
from .count_min import (
    D_series,
    Dstar_series,
    F_series,
    G_series,
    R_series,
    count_minimal,
    validity_order,
)
from .enumeration import EnumConfig, count_minimal_brute, enumerate_all, iter_er_partitions
from .errors import ErpartError, LimitExceeded
from .partition_core import Params, Partition, cover_gap, is_er_partition, min_parts

__all__ = ["main", "build_parser", "table_rows"]

METHODS = ("dp", "series", "brute")


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _range(text: str) -> range:
    """``7`` or ``1..10`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            out = range(int(lo), int(hi) + 1)
        else:
            out = range(int(text), int(text) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; use N or A..B")
    if len(out) == 0:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return out


def _add_params(p: argparse.ArgumentParser, ranged: bool = False) -> None:
    kind = _range if ranged else int
    p.add_argument("--e", type=kind, required=True, help="error allowance, e >= 0")
    p.add_argument("--r", type=kind, required=True, help="multiplier bound, r >= 1")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="erpart", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", help="test one partition")
    _add_params(p)
    p.add_argument("partition", help="parts as a+b+c, weakly increasing")
    p.add_argument("--oracle", action="store_true", help="cross-check with the r-cover scan")
    p.add_argument("--format", choices=("json", "plain"), default="json")

    p = sub.add_parser("enumerate", help="list (e,r)-partitions of m")
    _add_params(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--parts", type=int, help="fix the number of parts")
    p.add_argument("--limit", type=int, help="fail if more than this many results")
    p.add_argument("--format", choices=("json", "plain"), default="json")

    p = sub.add_parser("count", help="count (e,r)-partitions of m")
    _add_params(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--method", choices=METHODS, default="dp")
    p.add_argument("--format", choices=("json", "plain"), default="json")

    p = sub.add_parser("series", help="print F, G, D, D*, R or the E-table")
    _add_params(p)
    p.add_argument("--kind", choices=("F", "G", "D", "Dstar", "R"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, help="truncation order (R defaults to its validity order)")
    p.add_argument("--format", choices=("json", "plain", "csv"), default="json")

    p = sub.add_parser("table", help="CSV count table over ranges of m, e, r")
    p.add_argument("--m", type=_range, required=True, help="N or A..B")
    _add_params(p, ranged=True)
    p.add_argument("--minimal", action="store_true")
    p.add_argument("--verify", action="store_true", help="re-run the brute oracle per row")
    p.add_argument("--dump-e", action="store_true", help="emit E_k(m) as m,k,E instead")
    return parser


def _params(args, parser) -> Params:
    try:
        return Params(args.e, args.r)
    except ValueError as exc:
        parser.error(str(exc))


def _count(m: int, params: Params, minimal: bool, method: str) -> int:
    if minimal:
        if method == "dp":
            return count_with_parts_dp(m, params, min_parts(m, params))
        if method == "series":
            return count_minimal(m, params)
        return count_minimal_brute(m, params)
    if method == "dp":
        return count_all(m, params)
    if method == "series":
        return count_all_via_series(m, params)
    return sum(1 for _ in iter_er_partitions(m, params))


def table_rows(m_range, e_range, r_range, minimal: bool = False, verify: bool = False) -> list[str]:
    """``m,e,r,count`` rows in (m, e, r) order; ``verify`` re-counts by brute force."""
    rows = ["m,e,r,count"]
    for m in m_range:
        for e in e_range:
            for r in r_range:
                params = Params(e, r)
                fast = _count(m, params, minimal, "series" if minimal else "dp")
                if verify:
                    slow = _count(m, params, minimal, "brute")
                    if slow != fast:
                        raise ErpartError(
                            f"verification failed at m={m}, e={e}, r={r}: {fast} != brute {slow}"
                        )
                rows.append(f"{m},{e},{r},{fast}")
    return rows


def _emit_series(args, s) -> str:
    if args.format == "json":
        return _dumps(
            {"kind": args.kind, "n": args.n, "order": s.order, "coeffs": [str(c) for c in s.coeffs]}
        )
    if args.format == "csv":
        return "\n".join(["k,value"] + [f"{k},{c}" for k, c in enumerate(s.coeffs)])
    return str(s)


def _run(args, parser) -> str:
    verb = args.verb
    if verb == "table":
        for name in ("m", "e", "r"):
            lo = min(getattr(args, name))
            floor = {"m": 1, "e": 0, "r": 1}[name]
            if lo < floor:
                parser.error(f"--{name} values must be >= {floor}")
        if args.dump_e:
            if len(args.e) != 1 or len(args.r) != 1:
                parser.error("--dump-e needs a single e and r")
            table = build_table(Params(args.e[0], args.r[0]), max(args.m))
            return table.to_csv().rstrip("\n")
        return "\n".join(table_rows(args.m, args.e, args.r, args.minimal, args.verify))

    params = _params(args, parser)

    if verb == "classify":
        try:
            p = Partition.parse(args.partition)
        except ValueError as exc:
            parser.error(str(exc))
        ok = is_er_partition(p, params)
        if args.oracle:
            report = cover_gap(p, params)
            if report.ok != ok:
                raise ErpartError(f"inequalities and cover scan disagree on {p}")
        out = {
            "partition": str(p),
            "m": p.m,
            "is_er": ok,
            "minimal": ok and len(p) == min_parts(p.m, params),
        }
        if args.format == "plain":
            return f"{p} m={p.m} is_er={str(out['is_er']).lower()} minimal={str(out['minimal']).lower()}"
        return _dumps(out)

    if verb in ("enumerate", "count") and args.m < 1:
        parser.error("--m must be >= 1")

    if verb == "enumerate":
        if args.parts is not None and args.parts < 1:
            parser.error("--parts must be >= 1")
        cfg = EnumConfig(args.m, params, args.minimal, args.parts, args.limit)
        found = [str(p) for p in enumerate_all(cfg)]
        if args.format == "plain":
            return "\n".join(found)
        return _dumps(found)

    if verb == "count":
        n = _count(args.m, params, args.minimal, args.method)
        return str(n) if args.format == "plain" else _dumps({"count": n})

    if verb == "series":
        n, r = args.n, params.r
        if args.kind == "R":
            if args.n < 0:
                parser.error("--n must be >= 0 for R")
            order = args.order or validity_order(n, params)
            s = R_series(n, params, order)
        else:
            low = -1 if args.kind == "F" else 0
            if n < low:
                parser.error(f"--n must be >= {low} for {args.kind}")
            if args.order is None:
                parser.error(f"--order is required for {args.kind}")
            if args.order < 1:
                parser.error("--order must be >= 1")
            if args.kind in ("D", "Dstar") and r != 1:
                parser.error(f"{args.kind} is defined for r = 1 only")
            builder = {
                "F": lambda: F_series(n, r, args.order),
                "G": lambda: G_series(n, r, args.order),
                "D": lambda: D_series(n, args.order),
                "Dstar": lambda: Dstar_series(n, args.order),
            }[args.kind]
            s = builder()
        return _emit_series(args, s)

    raise AssertionError(verb)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = _run(args, parser)
    except LimitExceeded as exc:
        partial = [str(p) for p in exc.partial]
        print(_dumps({"partial": partial, "limit_exceeded": True}))
        print(f"erpart: {exc}", file=sys.stderr)
        return 1
    except (ErpartError, AssertionError) as exc:
        print(f"erpart: {exc}", file=sys.stderr)
        return 1
    print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
