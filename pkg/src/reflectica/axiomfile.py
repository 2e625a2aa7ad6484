"""Axiom files.

Grammar, one entry per line (``#`` starts a comment)::

    axiom <formula>                  val(<formula>) = ⊤
    value <term> := <string>         val(<term>) = <string>
    symbol <glyph> <name> <arity> <kind>

The token mode (unicode or ascii) is chosen per file: a file containing any
non-ASCII character outside comments is read in unicode mode.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .alphabet import CORE, TOP, Mode, Str, Symbol, SymbolTable, TokenizeError, tokenize
from .engine import Inconsistent, Judgment, KnowledgeBase, assert_axiom
from .syntax import NotATerm, is_formula, parse


@dataclass(frozen=True)
class TruthAxiom:
    formula: Str
    line: int = 0

    @property
    def judgment(self) -> Judgment:
        return Judgment(self.formula, TOP)


@dataclass(frozen=True)
class ValueAxiom:
    term: Str
    value: Str
    line: int = 0

    @property
    def judgment(self) -> Judgment:
        return Judgment(self.term, self.value)


@dataclass(frozen=True)
class SymbolDecl:
    symbol: Symbol
    line: int = 0


Entry = Union[TruthAxiom, ValueAxiom, SymbolDecl]


class AxiomFileError(ValueError):
    def __init__(self, errors: list[tuple[int, str]], path: Optional[str] = None):
        where = f"{path}:" if path else "line "
        super().__init__("\n".join(f"{where}{n}: {msg}" for n, msg in errors))
        self.errors = errors


@dataclass
class AxiomFile:
    path: Optional[str]
    entries: list[Entry] = field(default_factory=list)
    table: SymbolTable = CORE

    @property
    def axioms(self) -> list[Union[TruthAxiom, ValueAxiom]]:
        return [e for e in self.entries if not isinstance(e, SymbolDecl)]


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_axiom_text(
    text: str, table: SymbolTable = CORE, path: Optional[str] = None
) -> AxiomFile:
    lines = [_strip_comment(s) for s in text.splitlines()]
    mode: Mode = "ascii" if all(s.isascii() for s in lines) else "unicode"
    out = AxiomFile(path)
    errors: list[tuple[int, str]] = []
    for n, line in enumerate(lines, start=1):
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        try:
            if keyword == "axiom":
                t = parse(tokenize(rest, mode, table), table)
                if not is_formula(t):
                    raise ValueError("axiom must be a formula")
                out.entries.append(TruthAxiom(t.text, n))
            elif keyword == "value":
                lhs, sep, rhs = rest.partition(":=")
                if not sep:
                    raise ValueError("expected 'value <term> := <string>'")
                t = parse(tokenize(lhs, mode, table), table)
                out.entries.append(ValueAxiom(t.text, tokenize(rhs, mode, table), n))
            elif keyword == "symbol":
                glyph, name, arity, kind = rest.split()
                sym = Symbol(glyph, name, int(arity), kind)
                table = table.extended(sym)
                out.entries.append(SymbolDecl(sym, n))
            else:
                raise ValueError(f"unknown entry {keyword!r}")
        except (TokenizeError, NotATerm, ValueError) as e:
            errors.append((n, str(e)))
    if errors:
        raise AxiomFileError(errors, path)
    out.table = table
    return out


PRELUDE_DIR = "preludes"


def resolve(name: str | Path) -> Path:
    """A path on disk, or the name of a prelude shipped with the package."""
    p = Path(name)
    if p.exists():
        return p
    shipped = resources.files("reflectica") / PRELUDE_DIR / str(name)
    if shipped.is_file():
        return Path(str(shipped))
    raise FileNotFoundError(f"no such axiom file: {name}")


def load_axiom_file(path: str | Path, table: SymbolTable = CORE) -> AxiomFile:
    p = resolve(path)
    return parse_axiom_text(p.read_text(encoding="utf-8"), table, str(p))


def apply_axioms(kb: KnowledgeBase, ax: AxiomFile) -> KnowledgeBase:
    """Add every axiom of `ax` to `kb`; on any error `kb` is left as it was."""
    new = KnowledgeBase(kb.axioms, kb.derived, kb.pool, ax.table) if ax.table is not kb.table else kb
    errors = []
    for e in ax.axioms:
        try:
            new = assert_axiom(new, e.judgment)
        except Inconsistent as exc:
            errors.append((e.line, f"conflicts with an existing value: {exc}"))
    if errors:
        raise AxiomFileError(errors, ax.path)
    return new


def load_into(kb: KnowledgeBase, path: str | Path) -> KnowledgeBase:
    return apply_axioms(kb, load_axiom_file(path, kb.table))
