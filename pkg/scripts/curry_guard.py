"""Saturate the conditional prelude for a fixed step budget and report.

Looks for val(⊥) = ⊤ or any clash. Finding neither is evidence within the
budget, not a proof of consistency.
"""

import argparse
import time
from collections import Counter

from reflectica import Budget, BudgetExhausted, Inconsistent, base_kb, saturate
from reflectica.axiomfile import load_into


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=100_000)
    ap.add_argument("--pool", type=int, default=100_000)
    ap.add_argument("--witness-len", type=int, default=8)
    ap.add_argument("--prelude", default="prelude-cond")
    args = ap.parse_args()

    kb = load_into(base_kb(), args.prelude)
    budget = Budget(args.steps, args.pool, args.witness_len)
    t = time.perf_counter()
    try:
        out, status = saturate(kb, budget), "fixpoint"
    except BudgetExhausted as e:
        out, status = e.kb, f"{e.reason} budget exhausted"
    except Inconsistent as e:
        print("CLASH")
        print(e.witness.format())
        raise SystemExit(3)
    dt = time.perf_counter() - t

    values = out.values()
    heads = Counter(term[0] for term in values)
    print(f"status: {status} after {dt:.1f}s")
    print(f"judgments: {len(values)}")
    print("by head: " + ", ".join(f"{h} {n}" for h, n in heads.most_common(8)))
    print(f"val(⊥) = {values['⊥']}")
    conds = sorted((t for t, v in values.items() if t.startswith("⇒") and v == "⊤"), key=len)
    print(f"true ⇒-formulas: {len(conds)}; shortest: {', '.join(conds[:6])}")
    bad = values["⊥"] != "⊥"
    print("Curry guard: " + ("FAILED" if bad else "held within budget"))
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
