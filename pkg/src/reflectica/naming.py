"""Canonical names: escalating quotes ``|^n ⌈ x ⌉ |^n`` with minimal n."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .alphabet import BAR, QC, QO, Str


@dataclass(frozen=True)
class QuotePair:
    level: int

    @property
    def opener(self) -> Str:
        return BAR * self.level + QO

    @property
    def closer(self) -> Str:
        return QC + BAR * self.level


def quote_level(x: Str) -> int:
    """Least n such that the level-n closer does not occur in `x`."""
    n = 0
    while QC + BAR * n in x:
        n += 1
    return n


def make_name(x: Str) -> Str:
    if not x:
        raise ValueError("strings are nonempty")
    q = QuotePair(quote_level(x))
    return q.opener + x + q.closer


def _opener_level(c: Str, start: int) -> Optional[int]:
    i = start
    while i < len(c) and c[i] == BAR:
        i += 1
    if i < len(c) and c[i] == QO:
        return i - start
    return None


def scan_name_prefix(x: Str, start: int = 0) -> Optional[tuple[Str, int]]:
    """Find the canonical name beginning at `start`, if any.

    Returns the named string (the content) and the length of the name.  The
    content ends at the first occurrence of the matching closer; since
    canonical names are prefix-free this is the only candidate.
    """
    n = _opener_level(x, start)
    if n is None:
        return None
    q = QuotePair(n)
    body = start + n + 1
    end = x.find(q.closer, body)
    if end <= body:
        return None
    content = x[body:end]
    if quote_level(content) != n:
        return None
    return content, end + len(q.closer) - start


def try_decode(c: Str) -> Optional[Str]:
    found = scan_name_prefix(c, 0)
    if found is None or found[1] != len(c):
        return None
    return found[0]


def is_canonical_name(c: Str) -> bool:
    return try_decode(c) is not None
