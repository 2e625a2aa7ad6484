from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..alphabet import CORE, Str, SymbolTable, render
from ..syntax import Term


@dataclass(frozen=True)
class Judgment:
    """The assertion ``val(term) = value``; both sides are strings."""

    term: Str
    value: Str

    def __str__(self) -> str:
        return f"val({self.term}) = {self.value}"


Side = tuple[tuple[str, Str], ...]


@dataclass(frozen=True)
class Derivation:
    judgment: Judgment
    rule: str
    children: tuple[Derivation, ...] = ()
    side: Side = ()

    @property
    def value(self) -> Str:
        return self.judgment.value

    def nodes(self):
        seen = set()
        stack = [self]
        while stack:
            d = stack.pop()
            if id(d) in seen:
                continue
            seen.add(id(d))
            yield d
            stack.extend(d.children)

    def rules_used(self) -> set[str]:
        return {d.rule for d in self.nodes()}

    def format(self, mode: str = "unicode", table: SymbolTable = CORE) -> str:
        """One node per line, children indented two spaces under their parent."""
        lines: list[str] = []

        def emit(d: Derivation, depth: int) -> None:
            j = d.judgment
            line = (
                f"{'  ' * depth}{d.rule}: val({render(j.term, mode, table)})"
                f" = {render(j.value, mode, table)}"
            )
            if d.side:
                facts = "; ".join(f"{k} {render(v, mode, table)}" for k, v in d.side)
                line += f" [{facts}]"
            lines.append(line)
            for c in d.children:
                emit(c, depth + 1)

        emit(self, 0)
        return "\n".join(lines)


@dataclass(frozen=True)
class Budget:
    max_steps: int = 10_000
    max_pool: int = 2_000
    max_witness_len: int = 8

    def __post_init__(self) -> None:
        for name in ("max_steps", "max_pool", "max_witness_len"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def __le__(self, other: Budget) -> bool:
        return (
            self.max_steps <= other.max_steps
            and self.max_pool <= other.max_pool
            and self.max_witness_len <= other.max_witness_len
        )


@dataclass(frozen=True)
class InconsistencyWitness:
    term: Str
    first: Derivation
    second: Derivation

    def format(self, mode: str = "unicode", table: SymbolTable = CORE) -> str:
        return "\n".join(
            [
                f"term {render(self.term, mode, table)} has two values:",
                self.first.format(mode, table),
                self.second.format(mode, table),
            ]
        )


class Inconsistent(Exception):
    def __init__(self, witness: InconsistencyWitness):
        j1, j2 = witness.first.judgment, witness.second.judgment
        super().__init__(f"val({witness.term}) = {j1.value} and = {j2.value}")
        self.witness = witness


class BudgetExhausted(Exception):
    """Raised when a saturation stops before reaching its fixpoint.

    `kb` holds everything derived up to that point.
    """

    def __init__(self, reason: str, kb: Optional[KnowledgeBase] = None):
        super().__init__(f"{reason} budget exhausted")
        self.reason = reason
        self.kb = kb


@dataclass(frozen=True, eq=False)
class KnowledgeBase:
    """An immutable snapshot of axioms, derived judgments and the term pool.

    Treat the mappings as read-only; every operation that changes the
    knowledge base returns a new snapshot.
    """

    axioms: dict[Str, Str]
    derived: dict[Str, Derivation]
    pool: tuple[Str, ...] = ()
    table: SymbolTable = CORE

    def value(self, term: Term | Str) -> Optional[Str]:
        d = self.derived.get(term.text if isinstance(term, Term) else term)
        return None if d is None else d.judgment.value

    def values(self) -> dict[Str, Str]:
        return {t: d.judgment.value for t, d in self.derived.items()}

    def judgments(self) -> set[Judgment]:
        return {d.judgment for d in self.derived.values()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KnowledgeBase):
            return NotImplemented
        return (
            self.axioms == other.axioms
            and self.values() == other.values()
            and self.table is other.table
        )

    __hash__ = None  # type: ignore[assignment]
