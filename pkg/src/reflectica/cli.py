"""Command-line front end: ``reflectica eval|check|scan|repl``.

Exit codes: 0 defined (or no witnesses), 1 undefined, 2 input error,
3 inconsistency.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field, replace
from typing import Optional, TextIO

from .alphabet import Mode, TokenizeError, detect_mode, render, tokenize
from .axiomfile import AxiomFileError, load_axiom_file, apply_axioms
from .engine import (
    Budget,
    BudgetExhausted,
    Inconsistent,
    Judgment,
    KnowledgeBase,
    assert_axiom,
    base_kb,
    consistency_scan,
    evaluate,
)
from .syntax import NotATerm, is_formula, parse

EXIT_DEFINED, EXIT_UNDEFINED, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2, 3

SYMBOL_SETS = {
    "prop": "⊤⊥¬&∨→",
    "eq": "=",
    "quotes": "⌈⌉|♯♮",
    "quant": "∀∃",
    "num": "0S",
}
SYMBOL_SETS["core"] = SYMBOL_SETS["prop"] + SYMBOL_SETS["eq"] + SYMBOL_SETS["quotes"]

REASONS = {
    "steps": "step budget exhausted",
    "pool": "pool budget exhausted",
    None: "no rule applies at the fixpoint",
}


@dataclass
class SessionConfig:
    budget: Budget = field(default_factory=Budget)
    mode: Optional[Mode] = None  # None: follow the input
    preludes: list[str] = field(default_factory=list)
    trace: bool = False


class Session:
    """A knowledge base plus settings; one per CLI invocation or REPL."""

    def __init__(
        self, config: SessionConfig, out: Optional[TextIO] = None, err: Optional[TextIO] = None
    ):
        self.config = config
        self.out = sys.stdout if out is None else out
        self.err = sys.stderr if err is None else err
        self.kb: KnowledgeBase = base_kb()
        for p in config.preludes:
            self.load(p)

    def _modes(self, text: str) -> tuple[Mode, Mode]:
        if self.config.mode is not None:
            return self.config.mode, self.config.mode
        m = detect_mode(text)
        return m, m

    def _show(self, x: str, mode: Mode) -> str:
        return render(x, mode, self.kb.table)

    def load(self, path: str) -> int:
        ax = load_axiom_file(path, self.kb.table)
        self.kb = apply_axioms(self.kb, ax)
        return len(ax.axioms)

    def add_axiom(self, text: str) -> None:
        in_mode, _ = self._modes(text)
        t = parse(tokenize(text, in_mode, self.kb.table), self.kb.table)
        if not is_formula(t):
            raise NotATerm(0, "axiom must be a formula")
        self.kb = assert_axiom(self.kb, Judgment(t.text, "⊤"))

    def eval(self, text: str, expect: Optional[str] = None) -> int:
        in_mode, out_mode = self._modes(text)
        try:
            t = parse(tokenize(text, in_mode, self.kb.table), self.kb.table)
            want = None if expect is None else tokenize(expect, in_mode, self.kb.table)
        except (TokenizeError, NotATerm) as e:
            print(f"error: {e}", file=self.err)
            return EXIT_INPUT
        shown = self._show(t.text, out_mode)
        try:
            result = evaluate(t, self.kb, self.config.budget)
            reason = None
        except BudgetExhausted as e:
            result, reason = None, e.reason
        except Inconsistent as e:
            print("inconsistent: " + e.witness.format(out_mode, self.kb.table), file=self.out)
            return EXIT_INCONSISTENT
        if result is None:
            print(f"undefined within budget ({REASONS[reason]})", file=self.out)
            return EXIT_UNDEFINED
        value, proof = result
        print(f"val({shown}) = {self._show(value, out_mode)}", file=self.out)
        if self.config.trace:
            print(proof.format(out_mode, self.kb.table), file=self.out)
        if want is not None and want != value:
            print(f"expected {self._show(want, out_mode)}", file=self.out)
            return EXIT_UNDEFINED
        return EXIT_DEFINED

    def directive(self, line: str) -> Optional[int]:
        """Run one REPL line; returns None to stop the loop."""
        cmd, _, arg = line.partition(" ")
        arg = arg.strip()
        if cmd in (":quit", ":q"):
            return None
        try:
            if cmd == ":load":
                n = self.load(arg)
                print(f"loaded {n} axioms from {arg}", file=self.out)
            elif cmd == ":axiom":
                self.add_axiom(arg)
                print("ok", file=self.out)
            elif cmd == ":budget":
                self.config.budget = replace(self.config.budget, max_steps=int(arg))
                print(f"max_steps = {self.config.budget.max_steps}", file=self.out)
            elif cmd == ":trace":
                if arg not in ("on", "off"):
                    raise ValueError("expected :trace on|off")
                self.config.trace = arg == "on"
            else:
                raise ValueError(f"unknown directive {cmd}")
        except (OSError, ValueError, Inconsistent) as e:
            print(f"error: {e}", file=self.err)
            return EXIT_INPUT
        return EXIT_DEFINED

    def repl(self, stream: TextIO) -> int:
        interactive = stream.isatty()
        status = EXIT_DEFINED
        while True:
            if interactive:
                print("> ", end="", file=self.out, flush=True)
            line = stream.readline()
            if not line:
                break
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith(":"):
                r = self.directive(line)
                if r is None:
                    break
                status = r
            else:
                status = self.eval(line)
        return status


def parse_symbols(spec: str) -> str:
    out = []
    for part in spec.replace(",", "+").split("+"):
        part = part.strip()
        if part in SYMBOL_SETS:
            out.append(SYMBOL_SETS[part])
        elif part:
            out.append(tokenize(part, detect_mode(part)))
    return "".join(dict.fromkeys("".join(out)))


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--budget-steps", type=int, default=10_000)
    p.add_argument("--budget-pool", type=int, default=2_000)
    p.add_argument("--witness-len", type=int, default=8)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--prelude", action="append", default=[], metavar="FILE")
    p.add_argument("--ascii", action="store_true", help="read and print ascii names")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="reflectica", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("eval", parents=[common], help="compute val of a term")
    p.add_argument("term")
    p = sub.add_parser("check", parents=[common], help="test val(term) = value")
    p.add_argument("term")
    p.add_argument("value")
    p = sub.add_parser("scan", parents=[common], help="search for inconsistencies")
    p.add_argument("--symbols", default="core", help="sets (prop, eq, quotes, quant, num, core) or symbols, joined by +")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--chunk", type=int, default=512)
    sub.add_parser("repl", parents=[common], help="interactive session")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        budget = Budget(args.budget_steps, args.budget_pool, args.witness_len)
        config = SessionConfig(budget, "ascii" if args.ascii else None, args.prelude, args.trace)
        session = Session(config)
    except (OSError, ValueError, Inconsistent) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    if args.command == "eval":
        return session.eval(args.term)
    if args.command == "check":
        return session.eval(args.term, expect=args.value)
    if args.command == "repl":
        return session.repl(sys.stdin)

    try:
        symbols = parse_symbols(args.symbols)
    except TokenizeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    mode: Mode = "ascii" if args.ascii else "unicode"
    report = consistency_scan(symbols, args.max_size, budget, session.kb, args.chunk)
    print(f"symbols: {render(symbols, mode, session.kb.table)}")
    print(f"max size: {args.max_size}")
    print(f"terms: {report.terms}")
    print(f"defined: {report.defined}")
    print(f"undefined: {report.undefined}")
    print(f"exhausted chunks: {report.exhausted_chunks}")
    print(f"witnesses: {len(report.witnesses)}")
    for w in report.witnesses:
        print(w.format(mode, session.kb.table))
    return EXIT_INCONSISTENT if report.witnesses else EXIT_DEFINED


if __name__ == "__main__":
    sys.exit(main())
