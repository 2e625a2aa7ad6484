"""Symbols of reflectica and conversion between surface text and strings.

A reflectica string (``Str`` below) is represented as a plain Python ``str``
whose characters are symbol glyphs.  Every symbol has exactly one glyph, so
indexing, slicing, substring search and concatenation on the Python string
are the corresponding operations on reflectica strings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Literal, Optional

Str = str
Mode = Literal["unicode", "ascii"]

KINDS = ("logical", "predicate", "functional", "variable", "quote-component")

# Characters that may appear around symbols in surface text and are dropped.
PUNCTUATION = frozenset("()[],")

# Accepted in ascii input only; rendering always emits the table name.
ASCII_ALIASES = {"forall": "all", "exists": "ex"}


class TokenizeError(ValueError):
    """Surface text could not be turned into a string of symbols."""


class UnknownToken(TokenizeError):
    def __init__(self, token: str, position: int):
        super().__init__(f"unknown token {token!r} at position {position}")
        self.token = token
        self.position = position


class EmptyString(TokenizeError):
    def __init__(self) -> None:
        super().__init__("no symbols in input")


@dataclass(frozen=True)
class Symbol:
    display: str
    ascii_name: str
    arity: Optional[int]
    kind: str

    def __post_init__(self) -> None:
        if len(self.display) != 1:
            raise ValueError(f"display must be a single glyph: {self.display!r}")
        if not re.fullmatch(r"[A-Za-z]+|[!-~]", self.ascii_name):
            raise ValueError(f"bad ascii name {self.ascii_name!r}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if (self.kind == "quote-component") != (self.arity is None):
            raise ValueError("exactly the quote components lack an arity")
        if self.kind == "variable" and self.arity != 0:
            raise ValueError("variables have arity 0")

    @property
    def id(self) -> str:
        return self.ascii_name


_CORE_SPEC = [
    ("⊤", "top", 0, "logical"),
    ("⊥", "bot", 0, "logical"),
    ("¬", "not", 1, "logical"),
    ("&", "and", 2, "logical"),
    ("∨", "or", 2, "logical"),
    ("→", "imp", 2, "logical"),
    ("=", "eq", 2, "predicate"),
    ("♯", "sharp", 1, "functional"),
    ("♮", "flat", 1, "functional"),
    ("∀", "all", 2, "logical"),
    ("∃", "ex", 2, "logical"),
    ("·", "cat", 2, "functional"),
    ("0", "zero", 0, "functional"),
    ("S", "succ", 1, "functional"),
    ("†", "dag", 1, "functional"),
    ("↣", "yields", 2, "predicate"),
    ("⇒", "cond", 2, "predicate"),
    ("↓", "defd", 1, "predicate"),
    ("𝔽", "form", 1, "predicate"),
    ("⌈", "qo", None, "quote-component"),
    ("⌉", "qc", None, "quote-component"),
    ("|", "bar", None, "quote-component"),
]

GREEK_NAMES = [
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta",
    "iota", "kappa", "lambda", "mu", "nu", "xi", "omicron", "pi", "rho",
    "sigma", "tau", "upsilon", "phi", "chi", "psi", "omega",
]
GREEK_GLYPHS = "αβγδεζηθικλμνξοπρστυφχψω"


def _core_symbols() -> list[Symbol]:
    syms = [Symbol(*row) for row in _CORE_SPEC]
    syms += [Symbol(c, c, 0, "variable") for c in "abcdefghijklmnopqrstuvwxyz"]
    syms += [Symbol(g, n, 0, "variable") for g, n in zip(GREEK_GLYPHS, GREEK_NAMES)]
    return syms


class SymbolTable:
    """An immutable alphabet: the core symbols plus registered extensions."""

    def __init__(self, symbols: Iterable[Symbol], n_core: Optional[int] = None):
        self.symbols: tuple[Symbol, ...] = tuple(symbols)
        self.n_core = len(self.symbols) if n_core is None else n_core
        self.by_glyph: dict[str, Symbol] = {}
        self.by_ascii: dict[str, Symbol] = {}
        self.order: dict[str, int] = {}
        for i, s in enumerate(self.symbols):
            if s.display in self.by_glyph:
                raise ValueError(f"duplicate glyph {s.display!r}")
            if s.ascii_name in self.by_ascii or s.ascii_name in ASCII_ALIASES:
                raise ValueError(f"duplicate ascii name {s.ascii_name!r}")
            self.by_glyph[s.display] = s
            self.by_ascii[s.ascii_name] = s
            self.order[s.display] = i
        bad = [c for c in self.by_glyph if c.isspace() or c in PUNCTUATION]
        if bad:
            raise ValueError(f"glyphs clash with punctuation: {bad}")

    @property
    def core(self) -> tuple[Symbol, ...]:
        return self.symbols[: self.n_core]

    def extended(self, *symbols: Symbol) -> SymbolTable:
        """Return a new table with `symbols` registered after the existing ones."""
        for s in symbols:
            if s.kind == "quote-component":
                raise ValueError("quote components cannot be registered")
        return SymbolTable(self.symbols + tuple(symbols), self.n_core)

    def __getitem__(self, glyph: str) -> Symbol:
        return self.by_glyph[glyph]

    def __contains__(self, glyph: object) -> bool:
        return glyph in self.by_glyph

    def lookup(self, name: str) -> Symbol:
        """Find a symbol by ascii name, alias, or glyph."""
        name = ASCII_ALIASES.get(name, name)
        if name in self.by_ascii:
            return self.by_ascii[name]
        return self.by_glyph[name]

    def arity(self, glyph: str) -> Optional[int]:
        return self.by_glyph[glyph].arity

    def kind(self, glyph: str) -> str:
        return self.by_glyph[glyph].kind

    def is_valid(self, x: Str) -> bool:
        return len(x) > 0 and all(c in self.by_glyph for c in x)


CORE = SymbolTable(_core_symbols())

# `+' appears in worked examples but has no rules; tests and the
# shipped examples register it as an ordinary binary function symbol.
PLUS = Symbol("+", "plus", 2, "functional")

QO, QC, BAR = "⌈", "⌉", "|"
TOP, BOT = "⊤", "⊥"

_ASCII_TOKEN = re.compile(r"[A-Za-z]+|\S")


def tokenize(text: str, mode: Mode = "unicode", table: SymbolTable = CORE) -> Str:
    """Turn surface text into a reflectica string.

    Whitespace and the punctuation characters ``( ) [ ] ,`` are dropped.  In
    unicode mode every other character must be a symbol glyph; in ascii mode
    tokens are runs of letters (ascii names) or single non-letter glyphs.
    """
    out = []
    if mode == "unicode":
        for i, c in enumerate(text):
            if c.isspace() or c in PUNCTUATION:
                continue
            if c not in table.by_glyph:
                raise UnknownToken(c, i)
            out.append(c)
    elif mode == "ascii":
        for m in _ASCII_TOKEN.finditer(text):
            tok = m.group()
            if tok in PUNCTUATION:
                continue
            try:
                out.append(table.lookup(tok).display)
            except KeyError:
                raise UnknownToken(tok, m.start()) from None
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if not out:
        raise EmptyString()
    return "".join(out)


def render(x: Str, mode: Mode = "unicode", table: SymbolTable = CORE) -> str:
    if mode == "unicode":
        return x
    return " ".join(table[c].ascii_name for c in x)


def detect_mode(text: str) -> Mode:
    return "ascii" if text.isascii() else "unicode"


def arity_of(s: Symbol | str, table: SymbolTable = CORE) -> Optional[int]:
    if isinstance(s, str):
        s = table[s]
    return s.arity
