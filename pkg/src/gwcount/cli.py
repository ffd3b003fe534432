"""Command-line interface: the ``gw`` tool.

Commands:

  gw complex --dim N --d D --codims c1,c2,...   one complex invariant
  gw real    --n  n --d D --codims c1,c2,...    one real invariant
  gw table1  [--dmax D] [--engine E] [--format F]
  gw table2  --space {p5,p7} [--format F]
  gw check   --suite {parity,mod4,wdvv-identity,cross-dim,divisor,all}
  gw cache   {stats,load,save} [--cache PATH]

Compute commands accept ``--cache PATH`` (or the GW_CACHE environment
variable; the flag wins) to warm the engines from a store before computing
and to persist new results afterwards.  Output is deterministic: identical
invocations produce byte-identical output.  Exit codes: 0 success, 1 failed
checks or engine disagreement, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cache import CacheError, CacheStore
from .checks import SUITES, run_suites
from .complex_engine import ComplexEvalContext, eval_complex
from .keys import CodimVector, ComplexKey, RealKey
from .real_engine import RealEvalContext, eval_real
from .tables import EngineDisagreement, format_rows, table1_rows, table2_rows

__all__ = ["main"]


def _codims(text: str) -> list[int]:
    try:
        entries = [int(part) for part in text.split(",")] if text else []
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed codimension list {text!r}")
    if any(c < 0 for c in entries):
        raise argparse.ArgumentTypeError("codimensions must be >= 0")
    return entries


def _positive(name: str):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}")
        if value < 1:
            raise argparse.ArgumentTypeError(f"{name} must be >= 1, got {value}")
        return value

    return parse


def _nonnegative(name: str):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}")
        if value < 0:
            raise argparse.ArgumentTypeError(f"{name} must be >= 0, got {value}")
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gw",
        description="Exact genus-0 curve counts of projective spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_cache_flag(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--cache",
            default=None,
            help="cache file path (default: $GW_CACHE if set)",
        )

    p_complex = sub.add_parser("complex", help="one complex invariant of P^N")
    p_complex.add_argument("--dim", type=_positive("--dim"), required=True,
                           help="projective dimension N")
    p_complex.add_argument("--d", type=_nonnegative("--d"), required=True)
    p_complex.add_argument("--codims", type=_codims, required=True)
    p_complex.add_argument("--json", action="store_true")
    add_cache_flag(p_complex)

    p_real = sub.add_parser("real", help="one real invariant of P^{2n-1}")
    p_real.add_argument("--n", type=_positive("--n"), required=True,
                        help="half-dimension n (target P^{2n-1})")
    p_real.add_argument("--d", type=_positive("--d"), required=True)
    p_real.add_argument("--codims", type=_codims, required=True)
    p_real.add_argument("--phi", choices=("tau", "eta"), default="tau",
                        help="involution tag (does not affect the value)")
    p_real.add_argument("--json", action="store_true")
    add_cache_flag(p_real)

    p_t1 = sub.add_parser("table1", help="N^R_d of P^3 for odd d")
    p_t1.add_argument("--dmax", type=_positive("--dmax"), default=31)
    p_t1.add_argument("--limit", type=_positive("--limit"), default=31,
                      help="refuse dmax beyond this bound")
    p_t1.add_argument("--engine", choices=("closed", "general", "both"),
                      default="both")
    p_t1.add_argument("--format", choices=("text", "csv", "json"), default="text")
    add_cache_flag(p_t1)

    p_t2 = sub.add_parser("table2", help="real invariants of P^5 or P^7")
    p_t2.add_argument("--space", choices=("p5", "p7"), required=True)
    p_t2.add_argument("--format", choices=("text", "csv", "json"), default="text")
    add_cache_flag(p_t2)

    p_check = sub.add_parser("check", help="consistency suites")
    p_check.add_argument("--suite", choices=SUITES + ("all",), default="all")

    p_cache = sub.add_parser("cache", help="inspect or rewrite a cache file")
    p_cache.add_argument("action", choices=("stats", "load", "save"))
    add_cache_flag(p_cache)

    return parser


def _cache_path(args: argparse.Namespace) -> str | None:
    path = getattr(args, "cache", None)
    if path:
        return path
    return os.environ.get("GW_CACHE") or None


def _open_store(path: str | None) -> CacheStore:
    if path and os.path.exists(path):
        return CacheStore.load(path)
    return CacheStore()


def _close_store(store: CacheStore, path: str | None,
                 cctx: ComplexEvalContext, rctx: RealEvalContext | None) -> None:
    if not path:
        return
    store.absorb(cctx, rctx)
    store.save(path)


def cmd_complex(args: argparse.Namespace) -> int:
    path = _cache_path(args)
    store = _open_store(path)
    cctx = ComplexEvalContext()
    store.warm(cctx=cctx)
    key = ComplexKey(N=args.dim, d=args.d,
                     insertions=CodimVector.from_entries(args.codims))
    value = eval_complex(key, cctx)
    _close_store(store, path, cctx, None)
    if args.json:
        print(json.dumps({
            "space": f"p{args.dim}",
            "d": args.d,
            "codims": sorted(args.codims),
            "value": str(value),
        }))
    else:
        print(value)
    return 0


def cmd_real(args: argparse.Namespace) -> int:
    path = _cache_path(args)
    store = _open_store(path)
    cctx = ComplexEvalContext()
    rctx = RealEvalContext(cctx)
    store.warm(cctx=cctx, rctx=rctx)
    key = RealKey(n=args.n, d=args.d,
                  insertions=CodimVector.from_entries(args.codims),
                  phi=args.phi)
    value = eval_real(key, rctx)
    _close_store(store, path, cctx, rctx)
    if args.json:
        print(json.dumps({
            "space": f"real-{args.n}",
            "d": args.d,
            "codims": sorted(args.codims),
            "value": str(value),
        }))
    else:
        print(value)
    return 0


def cmd_table1(args: argparse.Namespace) -> int:
    if args.dmax > args.limit:
        print(f"error: --dmax {args.dmax} exceeds --limit {args.limit}",
              file=sys.stderr)
        return 2
    path = _cache_path(args)
    store = _open_store(path)
    cctx = ComplexEvalContext()
    rctx = RealEvalContext(cctx)
    store.warm(cctx=cctx, rctx=rctx)
    try:
        rows = table1_rows(args.dmax, engine=args.engine, ctx=rctx)
    except EngineDisagreement as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        _close_store(store, path, cctx, rctx)
    sys.stdout.write(format_rows(rows, args.format))
    return 0


def cmd_table2(args: argparse.Namespace) -> int:
    path = _cache_path(args)
    store = _open_store(path)
    cctx = ComplexEvalContext()
    rctx = RealEvalContext(cctx)
    store.warm(cctx=cctx, rctx=rctx)
    rows = table2_rows(args.space, ctx=rctx)
    _close_store(store, path, cctx, rctx)
    sys.stdout.write(format_rows(rows, args.format))
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    names = SUITES if args.suite == "all" else (args.suite,)
    failed = 0
    for report in run_suites(names):
        for line in report.lines():
            print(line)
        print(report.summary())
        failed += report.failed_count
    return 0 if failed == 0 else 1


def cmd_cache(args: argparse.Namespace) -> int:
    path = _cache_path(args)
    if not path:
        print("error: cache path required (--cache or GW_CACHE)", file=sys.stderr)
        return 2
    if args.action == "stats":
        store = CacheStore.load(path)
        stats = store.stats()
        print(f"records: {stats['records']}")
        print(f"complex: {stats['complex']}")
        print(f"real: {stats['real']}")
        return 0
    if args.action == "load":
        store = CacheStore.load(path)
        print(f"ok: {len(store)} records")
        return 0
    # save: canonical rewrite (creates an empty store if the file is absent)
    store = _open_store(path)
    store.save(path)
    print(f"saved: {len(store)} records")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "complex": cmd_complex,
        "real": cmd_real,
        "table1": cmd_table1,
        "table2": cmd_table2,
        "check": cmd_check,
        "cache": cmd_cache,
    }
    try:
        return handlers[args.command](args)
    except CacheError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
