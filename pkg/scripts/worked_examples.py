"""Evaluate the worked examples and print each value with its derivation size."""

import argparse

from reflectica import CORE, PLUS, Budget, base_kb, evaluate, replay
from reflectica.alphabet import render

EXAMPLES = [
    "⊤", "⊥", "¬⊤", "⌈⊤⌉", "=⊤⌈⊤⌉", "=⌈∀⌉⌈∀⌉", "=⌈∀⌉⌈∃⌉", "♯⌈¬⌉",
    "·⌈+⌉⌈=⌉", "0", "S0", "SS0", "†·⌈¬⌉⊤", "→⊥⊥", "∃x=x⌈∀⌉", "=♯⊤♯⌈⊤⌉",
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ascii", action="store_true")
    ap.add_argument("--trace", action="store_true")
    args = ap.parse_args()
    mode = "ascii" if args.ascii else "unicode"
    table = CORE.extended(PLUS)
    kb = base_kb(table)
    for term in EXAMPLES:
        r = evaluate(term, kb, Budget())
        shown = render(term, mode, table)
        if r is None:
            print(f"{shown:24} undefined")
            continue
        value, proof = r
        nodes = sum(1 for _ in proof.nodes())
        ok = "ok" if replay(proof, kb) else "REPLAY FAILED"
        print(f"{shown:24} {render(value, mode, table):10} nodes={nodes:<3} {ok}")
        if args.trace:
            print(proof.format(mode, table))


if __name__ == "__main__":
    main()
