"""Refutation search: look for a term with two values over a symbol set.

Sweeps max_len from 1 up to --max-size and prints one row per size.
"""

import argparse
import time

from reflectica import Budget, consistency_scan
from reflectica.axiomfile import load_into
from reflectica.cli import parse_symbols
from reflectica.engine import base_kb


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--symbols", default="core")
    ap.add_argument("--max-size", type=int, default=6)
    ap.add_argument("--budget-steps", type=int, default=10_000)
    ap.add_argument("--budget-pool", type=int, default=2_000)
    ap.add_argument("--chunk", type=int, default=512)
    ap.add_argument("--prelude", action="append", default=[])
    args = ap.parse_args()

    kb = base_kb()
    for p in args.prelude:
        kb = load_into(kb, p)
    symbols = parse_symbols(args.symbols)
    budget = Budget(args.budget_steps, args.budget_pool)
    print(f"symbols {symbols}")
    print(f"{'size':>4} {'terms':>8} {'defined':>8} {'undef':>8} {'exhaust':>7} {'clash':>5} {'sec':>6}")
    for n in range(1, args.max_size + 1):
        t = time.perf_counter()
        r = consistency_scan(symbols, n, budget, kb, args.chunk)
        dt = time.perf_counter() - t
        print(f"{n:>4} {r.terms:>8} {r.defined:>8} {r.undefined:>8} "
              f"{r.exhausted_chunks:>7} {len(r.witnesses):>5} {dt:>6.1f}")
        for w in r.witnesses:
            print(w.format())


if __name__ == "__main__":
    main()
