"""
Command-line front end.

    heckecount mult   --kappa 2 --left s1 --right s1 --backend both
    heckecount table  --kappa 4 --out h4.json
    heckecount verify --kappa 5 --suite isomorphism
    heckecount bench  --kappa 5 --repeat 3

Exit codes: 0 ok, 1 backend mismatch or failed verification, 2 usage,
3 unsupported geometric left factor, 4 resource guard, 5 I/O.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Iterator, Sequence

from . import kernel as kernel_mod
from .algebra import (
    DEFAULT_KAPPA_GUARD, HeckeElement, ResourceGuardError, basis, check_guard,
    mul, structure_constants,
)
from .crosscheck import SUITES, run_suites
from .hbar import HbarPoly
from .moduli import (
    UnsupportedLeftFactorError, clear_cache, geometric_product, supported_left_factors,
)
from .perm import Permutation, all_permutations, parse_permutation
from .tablefile import TableFormatError, cached_table_path, read_table, write_table

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_GUARD, EXIT_IO = 0, 1, 2, 3, 4, 5


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _cached_product(kappa: int, u: Permutation, v: Permutation) -> HeckeElement | None:
    path = cached_table_path(kappa, "algebraic")
    if path is None:
        return None
    try:
        header, entries = read_table(path)
    except (OSError, TableFormatError, ValueError):
        return None
    if header.get("kappa") != kappa:
        return None
    return HeckeElement(kappa, {w: c for a, b, w, c in entries if a == u and b == v})


def cmd_mult(args, parser) -> int:
    try:
        left = parse_permutation(args.left, args.kappa)
        right = parse_permutation(args.right, args.kappa)
    except ValueError as exc:
        parser.error(str(exc))

    results: dict[str, HeckeElement] = {}
    trace = None
    if args.backend in ("algebraic", "both"):
        cached = _cached_product(args.kappa, left, right)
        results["algebraic"] = cached if cached is not None else mul(basis(left), basis(right))
    if args.backend in ("geometric", "both"):
        try:
            gp = geometric_product(left, right, trace=args.trace)
        except UnsupportedLeftFactorError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_UNSUPPORTED
        results["geometric"] = gp.result
        trace = gp.trace_json() if args.trace else None

    match = None
    if len(results) == 2:
        match = results["algebraic"] == results["geometric"]

    if args.format == "json":
        if len(results) == 1:
            _emit_json(next(iter(results.values())).to_json())
        else:
            _emit_json({
                "kappa": args.kappa, "left": list(left), "right": list(right),
                **{k: v.to_json() for k, v in results.items()}, "match": match,
            })
    else:
        if len(results) == 1:
            print(next(iter(results.values())).render(ascii=args.ascii))
        else:
            for name, val in results.items():
                print(f"{name}: {val.render(ascii=args.ascii)}")
            print("MATCH" if match else "MISMATCH")
    for rec in trace or ():
        _emit_json(rec)
    return EXIT_MISMATCH if match is False else EXIT_OK


def table_entries(kappa: int, backend: str, guard: int | None = None,
                  kernel: str | None = None) -> Iterator[tuple[Permutation, Permutation, Permutation, HbarPoly]]:
    """Nonzero structure constants sorted by (u, v, w); geometric covers supported u only."""
    check_guard(kappa, guard)
    if backend == "algebraic":
        yield from structure_constants(kappa, guard=guard, kernel=kernel).entries()
        return
    group = all_permutations(kappa)
    for u in supported_left_factors(kappa):
        for v in group:
            for w, c in geometric_product(u, v).result.items():
                yield u, v, w, c


def cmd_table(args, parser) -> int:
    left_factors = "all" if args.backend == "algebraic" else "supported"
    try:
        check_guard(args.kappa, args.guard)
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD

    entries = None
    cached = cached_table_path(args.kappa, args.backend)
    if cached is not None:
        try:
            header, loaded = read_table(cached)
            if header.get("kappa") == args.kappa and header.get("backend") == args.backend:
                entries = loaded
        except (OSError, TableFormatError, ValueError) as exc:
            print(f"warning: ignoring cached table {cached}: {exc}", file=sys.stderr)
    if entries is None:
        entries = table_entries(args.kappa, args.backend, args.guard, args.kernel)
    try:
        n = write_table(args.out, args.kappa, args.backend, entries, left_factors)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"wrote {n} entries to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    try:
        reports = run_suites(args.kappa, args.suite, seed=args.seed)
    except ValueError as exc:
        parser.error(str(exc))
    timing = not args.no_timing
    for r in reports:
        if args.format == "json":
            _emit_json(r.to_json(timing=timing))
        else:
            print(r.render(timing=timing))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


def _bench_once(kappa: int, backend: str, kernel: str | None, guard: int | None) -> tuple[float, int]:
    start = time.perf_counter()
    if backend == "algebraic":
        structure_constants(kappa, guard=guard, kernel=kernel)
        pairs = len(all_permutations(kappa)) ** 2
    else:
        for _ in table_entries(kappa, "geometric", guard):
            pass
        pairs = len(supported_left_factors(kappa)) * len(all_permutations(kappa))
    return time.perf_counter() - start, pairs


def cmd_bench(args, parser) -> int:
    if args.repeat < 1:
        parser.error("--repeat must be at least 1")
    try:
        check_guard(args.kappa, args.guard)
    except ResourceGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if args.backend == "geometric":
        kernels = [None]
    elif args.kernel == "both":
        kernels = kernel_mod.available()
    else:
        kernels = [None if args.kernel == "auto" else args.kernel]
    try:
        for k in kernels:
            kernel_mod.get_kernel(k)
    except ValueError as exc:
        parser.error(str(exc))

    rows = []
    for k in kernels:
        times = []
        pairs = 0
        for _ in range(args.repeat):
            if args.backend == "geometric":
                clear_cache()
            t, pairs = _bench_once(args.kappa, args.backend, k, args.guard)
            times.append(t)
        best = min(times)
        rows.append({
            "kappa": args.kappa,
            "backend": args.backend,
            "kernel": (k or kernel_mod.ACTIVE) if args.backend == "algebraic" else "n/a",
            "repeat": args.repeat,
            "pairs": pairs,
            "best_s": round(best, 6),
            "mean_s": round(sum(times) / len(times), 6),
            "pairs_per_s": round(pairs / best, 1) if best > 0 else None,
        })
    for row in rows:
        if args.format == "json":
            _emit_json(row)
        else:
            print(
                f"kappa={row['kappa']} backend={row['backend']} kernel={row['kernel']} "
                f"pairs={row['pairs']} best={row['best_s'] * 1000:.2f}ms "
                f"mean={row['mean_s'] * 1000:.2f}ms rate={row['pairs_per_s']} pairs/s"
            )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heckecount", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mult", help="multiply two standard basis elements")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--left", required=True, help='one-line ("3 1 2") or word ("s2,s1")')
    p.add_argument("--right", required=True)
    p.add_argument("--backend", choices=("algebraic", "geometric", "both"), default="algebraic")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--trace", action="store_true", help="emit nonzero curve counts as JSON lines")
    p.add_argument("--ascii", action="store_true", help="write h instead of ħ")
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("table", help="write the structure-constant table")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--backend", choices=("algebraic", "geometric"), default="algebraic")
    p.add_argument("--guard", type=int, default=DEFAULT_KAPPA_GUARD)
    p.add_argument("--kernel", choices=("auto", "compiled", "python"), default="auto")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--kappa", type=int, default=4)
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for reproducible output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time full-table generation")
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--backend", choices=("algebraic", "geometric"), default="algebraic")
    p.add_argument("--kernel", choices=("auto", "compiled", "python", "both"), default="auto")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--guard", type=int, default=DEFAULT_KAPPA_GUARD)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "kernel", None) == "auto":
        args.kernel = None if args.command != "bench" else "auto"
    if args.kappa < 1:
        parser.error("--kappa must be positive")
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
