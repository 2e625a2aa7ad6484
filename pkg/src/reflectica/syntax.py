"""Terms, formulas, variable binding and substitution."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Literal, NamedTuple, Optional

from .alphabet import BAR, CORE, QC, QO, Str, Symbol, SymbolTable
from .naming import QuotePair, quote_level, scan_name_prefix

SHARP, FLAT = "♯", "♮"
FORALL, EXISTS = "∀", "∃"
QUANTIFIERS = (FORALL, EXISTS)


class NotATerm(ValueError):
    def __init__(self, position: int, reason: str):
        super().__init__(f"not a term: {reason} at symbol {position}")
        self.position = position
        self.reason = reason


@dataclass(frozen=True)
class Term:
    """A parsed term.

    Canonical names have ``head is None`` and carry the named string in
    `content`; compound terms carry their head glyph and argument terms.
    Equality and hashing use the text alone.
    """

    text: Str
    head: Optional[str] = field(default=None, compare=False)
    args: tuple[Term, ...] = field(default=(), compare=False)
    content: Optional[Str] = field(default=None, compare=False)
    head_kind: Optional[str] = field(default=None, compare=False)

    @property
    def is_name(self) -> bool:
        return self.head is None

    @property
    def is_variable(self) -> bool:
        return self.head_kind == "variable"

    def __len__(self) -> int:
        return len(self.text)

    def __str__(self) -> str:
        return self.text


def _parse_at(x: Str, i: int, table: SymbolTable) -> tuple[Term, int]:
    if i >= len(x):
        raise NotATerm(i, "truncated input")
    found = scan_name_prefix(x, i)
    if found is not None:
        content, n = found
        return Term(x[i : i + n], content=content), i + n
    sym = table.by_glyph.get(x[i])
    if sym is None:
        raise NotATerm(i, f"unknown symbol {x[i]!r}")
    if sym.arity is None:
        raise NotATerm(i, f"{x[i]!r} has no arity outside a canonical name")
    args = []
    j = i + 1
    for _ in range(sym.arity):
        a, j = _parse_at(x, j, table)
        args.append(a)
    return Term(x[i:j], x[i], tuple(args), None, sym.kind), j


@lru_cache(maxsize=None)
def parse(x: Str, table: SymbolTable = CORE) -> Term:
    """Parse a string as a term; the whole string must be consumed."""
    t, end = _parse_at(x, 0, table)
    if end != len(x):
        raise NotATerm(end, "trailing symbols")
    return t


def try_parse(x: Str, table: SymbolTable = CORE) -> Optional[Term]:
    try:
        return parse(x, table)
    except NotATerm:
        return None


def is_formula(t: Term) -> bool:
    return t.head_kind in ("predicate", "logical")


def is_formula_string(x: Str, table: SymbolTable = CORE) -> bool:
    t = try_parse(x, table)
    return t is not None and is_formula(t)


def subterms(t: Term) -> Iterator[Term]:
    """Yield `t` and every argument term below it, outermost first."""
    stack = [t]
    while stack:
        u = stack.pop()
        yield u
        stack.extend(reversed(u.args))


def _glyph(v: Symbol | str) -> str:
    return v.display if isinstance(v, Symbol) else v


def binds(t: Term, v: str) -> bool:
    """Whether `t` binds every occurrence of `v` inside it."""
    if t.head == SHARP:
        return True
    return t.head in QUANTIFIERS and t.args[0].text == v


class Occurrence(NamedTuple):
    position: int
    status: Literal["free", "bound"]


def occurrences(t: Term, v: Symbol | str) -> list[Occurrence]:
    """Classify every occurrence of variable `v` in the text of `t`.

    Occurrences inside canonical names, inside the argument of ``♯``, and
    inside a quantifier acting on `v` (the variable slot included) are bound.
    """
    v = _glyph(v)
    out: list[Occurrence] = []

    def walk(u: Term, offset: int, bound: bool) -> None:
        if u.is_name:
            out.extend(
                Occurrence(offset + i, "bound") for i, c in enumerate(u.text) if c == v
            )
            return
        if u.head == v:
            out.append(Occurrence(offset, "bound" if bound else "free"))
        bound = bound or binds(u, v)
        pos = offset + 1
        for a in u.args:
            walk(a, pos, bound)
            pos += len(a.text)

    walk(t, 0, False)
    return out


def free_variables(t: Term) -> set[str]:
    if t.is_name:
        return set()
    if t.is_variable:
        return {t.head}
    if t.head == SHARP:
        return set()
    out: set[str] = set()
    for a in t.args:
        out |= free_variables(a)
    if t.head in QUANTIFIERS:
        out.discard(t.args[0].text)
    return out


def _sub(u: Term, v: str, tau: Term) -> Term:
    if u.is_name:
        return u
    if u.head == v:
        return tau
    if binds(u, v):
        return u
    args = tuple(_sub(a, v, tau) for a in u.args)
    if all(a is b for a, b in zip(args, u.args)):
        return u
    text = u.head + "".join(a.text for a in args)
    return Term(text, u.head, args, None, u.head_kind)


def substitute(phi: Term, v: Symbol | str, tau: Term) -> Term:
    """Replace the free occurrences of `v` in `phi` by `tau`, literally.

    No renaming is done, so variables of `tau` may be captured.  The result
    is assembled from the parts of `phi` and `tau`; by unique readability it
    is the term that parsing its text would give.
    """
    return _sub(phi, _glyph(v), tau)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


def enumerate_terms(
    pool: Iterable[Symbol | str], max_len: int, table: SymbolTable = CORE
) -> list[Term]:
    """All terms of length <= `max_len` whose symbols all come from `pool`.

    Ordered by length, then lexicographically by position in the symbol
    table.  Canonical names appear only when the quote components they use
    are in the pool.
    """
    glyphs = sorted({_glyph(s) for s in pool}, key=table.order.__getitem__)
    heads = [g for g in glyphs if table.arity(g) is not None]
    by_len: dict[int, list[Str]] = {}
    for n in range(1, max_len + 1):
        found: list[Str] = []
        for h in heads:
            k = table.arity(h)
            if k == 0:
                if n == 1:
                    found.append(h)
                continue
            for sizes in _compositions(n - 1, k):
                for args in itertools.product(*(by_len[s] for s in sizes)):
                    found.append(h + "".join(args))
        found.extend(_names_of_length(glyphs, n))
        found.sort(key=lambda s: [table.order[c] for c in s])
        by_len[n] = found
    return [parse(s, table) for n in range(1, max_len + 1) for s in by_len[n]]


def _names_of_length(glyphs: list[str], n: int) -> Iterator[Str]:
    if QO not in glyphs or QC not in glyphs:
        return
    level = 0
    while True:
        m = n - 2 - 2 * level
        if m < 1 or (level > 0 and BAR not in glyphs):
            return
        q = QuotePair(level)
        for content in itertools.product(glyphs, repeat=m):
            x = "".join(content)
            if quote_level(x) == level:
                yield q.opener + x + q.closer
        level += 1
