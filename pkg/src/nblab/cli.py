"""Command-line front end.

Subcommands: `distance` (distance sweeps), `residual` (Moebius approximant
residuals), `verify` (fixed-grid identity suites), `gram` (cache fill and
export). Tables go to standard output and are byte-identical across runs
with the same configuration; progress notes go to standard error.

Exit codes: 0 success, 1 error, 2 solver degradation (a ridge was needed),
64 usage, 65 cache-data problems. CI can therefore gate on degradation
separately from outright failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .arith import sieve_moebius
from .criterion import (
    BasisSelection,
    GramStore,
    SolveMethod,
    assemble_gram,
    asymptotic_rate_constant,
    distance_sweep,
    moebius_residual,
)
from .errors import CacheError, NBLabError
from .analytic import run_suite

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DEGRADED = 2
EXIT_USAGE = 64
EXIT_DATA = 65

CACHE_DIR_ENV = "NBLAB_CACHE_DIR"
_DEFAULT_CACHE_NAME = "gram-default-weight.nbbg"

DISTANCE_HEADER = "L,basis,d2,a_est,cond,ridge,method"


class _Parser(argparse.ArgumentParser):
    """argparse that reserves exit code 64 for usage problems."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    L_values: tuple[int, ...]
    basis: BasisSelection
    methods: tuple[SolveMethod, ...]
    eps: tuple[float, ...]
    n_trunc: Optional[int]
    tolerance: Optional[float]
    cache_path: Optional[Path]
    out_format: str
    threads: int


def _parse_cutoffs(text: str) -> tuple[int, ...]:
    """Cutoff list syntax: '30', '2,3,10', '2..30', or combinations."""
    values: set[int] = set()
    for token in text.split(","):
        token = token.strip()
        if ".." in token:
            lo_s, hi_s = token.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
            if lo < 1 or hi < lo:
                raise ValueError(f"bad cutoff range {token!r}")
            values.update(range(lo, hi + 1))
        else:
            v = int(token)
            if v < 1:
                raise ValueError(f"cutoff must be >= 1, got {v}")
            values.add(v)
    if not values:
        raise ValueError("empty cutoff list")
    return tuple(sorted(values))


def _parse_eps_list(text: str) -> tuple[float, ...]:
    values = tuple(float(tok) for tok in text.split(","))
    if any(e < 0 or not math.isfinite(e) for e in values):
        raise ValueError(f"eps values must be finite and >= 0: {text!r}")
    return values


def _default_threads() -> int:
    return os.cpu_count() or 1


def _cache_file(explicit: Optional[str]) -> Optional[Path]:
    if explicit is not None:
        return Path(explicit)
    env_dir = os.environ.get(CACHE_DIR_ENV)
    if env_dir:
        return Path(env_dir) / _DEFAULT_CACHE_NAME
    return None


def _load_store(path: Optional[Path]) -> GramStore:
    if path is not None and path.exists():
        return GramStore.load(path)
    return GramStore()


def _save_store(store: GramStore, path: Optional[Path]) -> None:
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        store.save(path)


def _config_from_args(args) -> RunConfig:
    methods = {
        "ls": (SolveMethod.LEAST_SQUARES,),
        "det": (SolveMethod.GRAM_DET_RATIO,),
        "both": (SolveMethod.LEAST_SQUARES, SolveMethod.GRAM_DET_RATIO),
    }[args.method]
    return RunConfig(
        L_values=args.L,
        basis=BasisSelection.parse(args.basis),
        methods=methods,
        eps=getattr(args, "eps", (0.0,)),
        n_trunc=args.N,
        tolerance=args.tol,
        cache_path=_cache_file(args.cache),
        out_format=args.format,
        threads=args.threads,
    )


# ---------------------------------------------------------------------------
# subcommands


def cmd_distance(args) -> int:
    cfg = _config_from_args(args)
    store = _load_store(cfg.cache_path)
    rows = []
    for method in cfg.methods:
        rows.extend(
            distance_sweep(
                list(cfg.L_values), cfg.basis, method, store,
                threads=cfg.threads, n_trunc=cfg.n_trunc,
            )
        )
    rows.sort(key=lambda r: (r.L, r.method.value))
    _save_store(store, cfg.cache_path)

    if cfg.out_format == "json":
        payload = [r.to_json_dict() for r in rows]
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print(DISTANCE_HEADER)
        for r in rows:
            print(r.csv_row())

    if cfg.tolerance is not None and len(cfg.methods) == 2:
        by_L = {}
        for r in rows:
            by_L.setdefault(r.L, []).append(r.d2)
        for L, pair in sorted(by_L.items()):
            if len(pair) == 2 and math.isfinite(pair[0]) and abs(pair[0] - pair[1]) > cfg.tolerance:
                print(
                    f"method disagreement at L={L}: |{pair[0]!r} - {pair[1]!r}| > {cfg.tolerance!r}",
                    file=sys.stderr,
                )
                return EXIT_ERROR
    if any(r.error for r in rows):
        for r in rows:
            if r.error:
                print(f"L={r.L}: {r.error}", file=sys.stderr)
        return EXIT_ERROR
    if any(r.ridge_used > 0.0 for r in rows):
        return EXIT_DEGRADED
    return EXIT_OK


def cmd_residual(args) -> int:
    cfg = _config_from_args(args)
    store = _load_store(cfg.cache_path)
    table = sieve_moebius(max(cfg.L_values))
    rows = [
        (L, eps, moebius_residual(L, eps, table, store, threads=cfg.threads))
        for L in cfg.L_values
        for eps in cfg.eps
    ]
    _save_store(store, cfg.cache_path)
    if cfg.out_format == "json":
        payload = [{"L": L, "eps": eps, "residual": value} for L, eps, value in rows]
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("L,eps,residual")
        for L, eps, value in rows:
            print(f"{L},{eps!r},{value!r}")
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = run_suite(args.suite)
    payload = [r.to_json_dict() for r in reports]
    print(json.dumps(payload, sort_keys=True, indent=2))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_ERROR


def cmd_gram(args) -> int:
    cfg = _config_from_args(args)
    path = cfg.cache_path
    store = _load_store(path)
    before = len(store)
    assemble_gram(
        max(cfg.L_values), cfg.basis, store, threads=cfg.threads, n_trunc=cfg.n_trunc
    )
    new = len(store) - before
    print(f"{new} newly computed entries, {len(store)} total", file=sys.stderr)
    if new or (path is not None and not path.exists()):
        _save_store(store, path)
    if args.export == "csv":
        lines = ["l,m,value,error_bound,method"]
        for (i, j), r in store.items_sorted():
            lines.append(f"{i},{j},{r.value!r},{r.error_bound!r},{r.method}")
        print("\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser assembly


def build_parser() -> _Parser:
    parser = _Parser(prog="nblab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, include_eps=False):
        p.add_argument("--L", type=_parse_cutoffs, default=(30,),
                       help="cutoff list: '30', '2,5,10', or '2..30'")
        p.add_argument("--basis", choices=("all", "exclude-one", "square-free"),
                       default="exclude-one")
        p.add_argument("--method", choices=("ls", "det", "both"), default="ls")
        if include_eps:
            p.add_argument("--eps", type=_parse_eps_list, default=(0.0,),
                           help="smoothing exponents, comma-separated")
        p.add_argument("--N", type=int, default=None,
                       help="use truncated sums at this cutoff instead of closed forms")
        p.add_argument("--tol", type=float, default=None,
                       help="with --method both: largest allowed cross-method gap")
        p.add_argument("--cache", default=None,
                       help=f"Gram cache file (default: ${CACHE_DIR_ENV}/{_DEFAULT_CACHE_NAME})")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--threads", type=int, default=_default_threads())

    p_dist = sub.add_parser("distance", help="distance from the constant sequence to the span")
    common(p_dist)
    p_dist.set_defaults(fn=cmd_distance)

    p_res = sub.add_parser("residual", help="Moebius approximant residuals")
    common(p_res, include_eps=True)
    p_res.set_defaults(fn=cmd_residual)

    p_ver = sub.add_parser("verify", help="run a fixed-grid verification suite")
    p_ver.add_argument("suite", choices=("mellin", "semigroup", "xi", "unitary", "moebius"))
    p_ver.set_defaults(fn=cmd_verify)

    p_gram = sub.add_parser("gram", help="fill and export the Gram entry cache")
    common(p_gram)
    p_gram.add_argument("--export", choices=("csv",), default=None)
    p_gram.set_defaults(fn=cmd_gram)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CacheError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NBLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def console_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    console_entry()
