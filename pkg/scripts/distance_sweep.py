#!/usr/bin/env python3
"""Sweep the squared distance over a range of cutoffs and report the rate.

Writes one CSV row per cutoff with the squared distance, the rate diagnostic
d2 * log L, and the gap to the conjectured limiting constant. A Gram cache
path makes repeat sweeps nearly free.
"""

import argparse
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from nblab import (
    BasisSelection,
    GramStore,
    SolveMethod,
    asymptotic_rate_constant,
    distance_sweep,
)


@dataclass(frozen=True)
class SweepConfig:
    l_max: int = 300
    l_step: int = 10
    basis: str = "exclude-one"
    method: str = "ls"
    threads: int = 4
    cache: Path | None = None


def run(cfg: SweepConfig) -> int:
    cutoffs = sorted({2, *range(cfg.l_step, cfg.l_max + 1, cfg.l_step)})
    store = GramStore()
    if cfg.cache and cfg.cache.exists():
        store = GramStore.load(cfg.cache)
    rows = distance_sweep(
        cutoffs,
        BasisSelection.parse(cfg.basis),
        SolveMethod.parse(cfg.method),
        store,
        threads=cfg.threads,
    )
    if cfg.cache:
        cfg.cache.parent.mkdir(parents=True, exist_ok=True)
        store.save(cfg.cache)

    limit = asymptotic_rate_constant()
    print("L,d2,rate,rate_minus_limit,cond")
    for r in rows:
        print(
            f"{r.L},{r.d2!r},{r.a_est!r},{r.a_est - limit!r},{r.cond_estimate:.6e}"
        )
    print(f"# conjectured limit {limit!r}", file=sys.stderr)
    return 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--l-max", type=int, default=300)
    ap.add_argument("--l-step", type=int, default=10)
    ap.add_argument("--basis", default="exclude-one",
                    choices=("all", "exclude-one", "square-free"))
    ap.add_argument("--method", default="ls", choices=("ls", "det"))
    ap.add_argument("--threads", type=int, default=4)
    ap.add_argument("--cache", type=Path, default=None)
    a = ap.parse_args()
    cfg = SweepConfig(a.l_max, a.l_step, a.basis, a.method, a.threads, a.cache)
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
