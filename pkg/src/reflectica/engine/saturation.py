"""Budget-bounded forward saturation and the operations built on it."""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from ..alphabet import BOT, CORE, TOP, Str, SymbolTable
from ..naming import make_name
from ..syntax import EXISTS, FORALL, Term, enumerate_terms, parse, try_parse
from .core import (
    Budget,
    BudgetExhausted,
    Derivation,
    Inconsistent,
    InconsistencyWitness,
    Judgment,
    KnowledgeBase,
    Side,
)
from .rules import BUILTIN_RULES, CHECKS, IMP, NEG, OR


# Quantifier instantiation is interleaved with the other rules: a binder
# tries this many witnesses, then every pending cheap consequence is drawn
# before the next binder's turn.
WITNESSES_PER_TURN = 8


class _OutOfSteps(Exception):
    pass


def core_axioms() -> frozenset[Judgment]:
    return frozenset({Judgment(TOP, TOP), Judgment(BOT, BOT), Judgment("0", "0")})


def base_kb(table: SymbolTable = CORE) -> KnowledgeBase:
    axioms = {j.term: j.value for j in sorted(core_axioms(), key=str)}
    derived = {t: Derivation(Judgment(t, v), "axiom") for t, v in axioms.items()}
    return KnowledgeBase(axioms, derived, tuple(axioms), table)


class Saturation:
    """One run of the forward closure over a growing pool of terms.

    Rules are anchored at pool terms by head symbol.  A term is re-examined
    whenever it enters the pool, gets a value, or one of the terms it
    depends on gets a value.  Quantifier rules keep a cursor into the
    witness list so each witness is tried once, and take turns in a
    round-robin queue that runs only when the main agenda is empty.
    """

    def __init__(
        self, kb: KnowledgeBase, budget: Budget, goal: Optional[Str] = None
    ):
        self.table = kb.table
        self.budget = budget
        self.goal = goal
        self.axioms = dict(kb.axioms)
        self.proofs: dict[Str, Derivation] = dict(kb.derived)
        self.values: dict[Str, Str] = {t: d.judgment.value for t, d in self.proofs.items()}
        self.terms: dict[Str, Term] = {}
        self.dependents: defaultdict[Str, list[Str]] = defaultdict(list)
        self.witnesses: list[Str] = []
        self.cursors: dict[Str, int] = {}
        self.instances: dict[Str, list] = {}
        self.open_exists: dict[Str, None] = {}
        self.true_foralls: dict[Str, None] = {}
        self.agenda: deque[Str] = deque()
        self.queued: set[Str] = set()
        self.binders: deque[Str] = deque()
        self.binders_queued: set[Str] = set()
        self.instantiating = False
        self.steps = 0
        self.generated = 0
        self.overflow = False
        self.by_anchor: dict[Optional[str], list] = defaultdict(list)
        for r in BUILTIN_RULES:
            self.by_anchor[r.anchor].append(r)

        for t in (*kb.pool, *self.axioms, *self.proofs):
            self.admit(t, seed=True)
        for v in list(self.values.values()):
            self._admit_name_of(v)

    # -- pool ---------------------------------------------------------------

    def admit(self, text: Str, seed: bool = False) -> Optional[Term]:
        """Add a term and its subterms to the pool; None if not a term or no room."""
        t = self.terms.get(text)
        if t is not None:
            return t
        if not seed and self.generated >= self.budget.max_pool:
            self.overflow = True
            return None
        t = try_parse(text, self.table)
        if t is None:
            return None
        self._register(t, seed)
        return t

    def admit_term(self, t: Term) -> Optional[Term]:
        """Like `admit`, for a term that is already parsed."""
        known = self.terms.get(t.text)
        if known is not None:
            return known
        if self.generated >= self.budget.max_pool:
            self.overflow = True
            return None
        self._register(t, False)
        return t

    def _register(self, u: Term, seed: bool) -> None:
        if u.text in self.terms:
            return
        self.terms[u.text] = u
        if not seed:
            self.generated += 1
        for a in u.args:
            self._register(a, seed)
            self.dependents[a.text].append(u.text)
        if u.head == IMP:
            aux = parse(OR + NEG + u.args[0].text + u.args[1].text, self.table)
            self._register(aux, seed)
            self.dependents[aux.text].append(u.text)
        if u.head == EXISTS and u.args[0].is_variable and self.values.get(u.text) != TOP:
            self.open_exists[u.text] = None
        if u.text in self.values:
            self._note_value(u.text, self.values[u.text])
        if len(u.text) <= self.budget.max_witness_len:
            self.witnesses.append(u.text)
            for b in (*self.open_exists, *self.true_foralls):
                self._schedule_binder(b)
        self.enqueue(u.text)

    def _admit_name_of(self, value: Str) -> None:
        if len(value) + 2 <= self.budget.max_witness_len:
            name = make_name(value)
            if len(name) <= self.budget.max_witness_len:
                self.admit(name)

    def watch(self, text: Str, dependent: Str) -> None:
        deps = self.dependents[text]
        if dependent not in deps:
            deps.append(dependent)

    def new_witnesses(self, key: Str) -> list[Str]:
        """Witnesses not yet tried for the binder `key`, a few at a time.

        Outside an instantiation turn this only schedules the binder.
        """
        start = self.cursors.get(key, 0)
        if not self.instantiating:
            self._schedule_binder(key)
            return []
        end = min(len(self.witnesses), start + WITNESSES_PER_TURN)
        self.cursors[key] = end
        self._schedule_binder(key)
        return self.witnesses[start:end]

    def _schedule_binder(self, key: Str) -> None:
        if self.cursors.get(key, 0) < len(self.witnesses) and key not in self.binders_queued:
            self.binders_queued.add(key)
            self.binders.append(key)

    def enqueue(self, text: Str) -> None:
        if text not in self.queued:
            self.queued.add(text)
            self.agenda.append(text)

    # -- judgments ------------------------------------------------------------

    def val(self, text: Str) -> Optional[Str]:
        return self.values.get(text)

    def step(self) -> None:
        if self.steps >= self.budget.max_steps:
            raise _OutOfSteps
        self.steps += 1

    def derive(
        self,
        target: Str,
        value: Str,
        premises: tuple[Str, ...],
        name: str,
        side: Side = (),
    ) -> None:
        old = self.values.get(target)
        if old == value:
            return
        d = Derivation(
            Judgment(target, value),
            name,
            tuple(self.proofs[p] for p in premises),
            side,
        )
        if old is not None:
            raise Inconsistent(InconsistencyWitness(target, self.proofs[target], d))
        self.step()
        self.values[target] = value
        self.proofs[target] = d
        self._note_value(target, value)
        self.enqueue(target)
        for dep in self.dependents.get(target, ()):
            self.enqueue(dep)
        self._admit_name_of(value)

    def _note_value(self, text: Str, value: Str) -> None:
        t = self.terms.get(text)
        if t is None or value != TOP or t.head not in (FORALL, EXISTS):
            return
        if t.head == FORALL and t.args[0].is_variable:
            self.true_foralls[text] = None
        else:
            self.open_exists.pop(text, None)

    # -- driver -----------------------------------------------------------------

    def run(self) -> str:
        """Saturate; returns 'goal', 'fixpoint', 'steps' or 'pool'."""
        try:
            while True:
                while self.agenda:
                    text = self.agenda.popleft()
                    self.queued.discard(text)
                    if self._fire(text):
                        return "goal"
                if not self.binders:
                    break
                text = self.binders.popleft()
                self.binders_queued.discard(text)
                self.instantiating = True
                try:
                    if self._fire(text):
                        return "goal"
                finally:
                    self.instantiating = False
        except _OutOfSteps:
            return "steps"
        return "pool" if self.overflow else "fixpoint"

    def _fire(self, text: Str) -> bool:
        u = self.terms[text]
        for rule in self.by_anchor.get(u.head, ()):
            rule.fire(self, u)
        return self.goal is not None and self.goal in self.values

    def snapshot(self) -> KnowledgeBase:
        return KnowledgeBase(self.axioms, dict(self.proofs), tuple(self.terms), self.table)


def saturate(kb: KnowledgeBase, budget: Budget = Budget()) -> KnowledgeBase:
    """Close `kb` under the built-in rules.

    Raises BudgetExhausted (carrying the partial snapshot) if the step or pool
    budget stops the run before a fixpoint.
    """
    sat = Saturation(kb, budget)
    status = sat.run()
    if status != "fixpoint":
        raise BudgetExhausted(status, sat.snapshot())
    return sat.snapshot()


def evaluate(
    term: Term | Str, kb: Optional[KnowledgeBase] = None, budget: Budget = Budget()
) -> Optional[tuple[Str, Derivation]]:
    """Derive the value of `term`, stopping as soon as it is known.

    Returns None when saturation reaches a fixpoint without a value, and
    raises BudgetExhausted when the budget ran out first.
    """
    kb = base_kb() if kb is None else kb
    t = term if isinstance(term, Term) else parse(term, kb.table)
    sat = Saturation(kb, budget, goal=t.text)
    sat.admit(t.text, seed=True)
    status = sat.run()
    if t.text in sat.values:
        return sat.values[t.text], sat.proofs[t.text]
    if status in ("steps", "pool"):
        raise BudgetExhausted(status, sat.snapshot())
    return None


def assert_axiom(kb: KnowledgeBase, j: Judgment) -> KnowledgeBase:
    parse(j.term, kb.table)
    if not kb.table.is_valid(j.value):
        raise ValueError(f"not a string over the alphabet: {j.value!r}")
    d = Derivation(j, "axiom")
    old = kb.derived.get(j.term)
    if old is not None and old.judgment.value != j.value:
        raise Inconsistent(InconsistencyWitness(j.term, old, d))
    if kb.axioms.get(j.term) == j.value:
        return kb
    axioms = {**kb.axioms, j.term: j.value}
    derived = {**kb.derived, j.term: d}
    pool = kb.pool if j.term in kb.pool else (*kb.pool, j.term)
    return KnowledgeBase(axioms, derived, pool, kb.table)


def replay(d: Derivation, kb: KnowledgeBase) -> bool:
    """Re-check every node of `d` against the rule it names."""
    memo: dict[int, bool] = {}

    def ok(node: Derivation) -> bool:
        key = id(node)
        if key not in memo:
            check = CHECKS.get(node.rule)
            memo[key] = False
            if check is not None and all(ok(c) for c in node.children):
                try:
                    memo[key] = bool(
                        check(
                            node.judgment,
                            tuple(c.judgment for c in node.children),
                            node.side,
                            kb,
                        )
                    )
                except (ValueError, IndexError, KeyError):
                    memo[key] = False
        return memo[key]

    return ok(d)


@dataclass
class ScanReport:
    terms: int = 0
    defined: int = 0
    undefined: int = 0
    witnesses: list[InconsistencyWitness] = field(default_factory=list)
    exhausted_chunks: int = 0
    values: dict[Str, Str] = field(default_factory=dict)

    def summary(self) -> str:
        return (
            f"terms={self.terms} defined={self.defined} undefined={self.undefined} "
            f"witnesses={len(self.witnesses)} exhausted_chunks={self.exhausted_chunks}"
        )


def consistency_scan(
    symbols: Iterable[str],
    max_len: int,
    budget: Budget = Budget(),
    kb: Optional[KnowledgeBase] = None,
    chunk_size: int = 512,
) -> ScanReport:
    """Look for terms with two values among all terms over `symbols`.

    Terms are saturated in chunks, each together with `kb`.  Clashes inside
    a chunk and disagreements between chunks are both reported; the result
    does not depend on the order in which chunks are processed.
    """
    kb = base_kb() if kb is None else kb
    seeds = [t.text for t in enumerate_terms(symbols, max_len, kb.table)]
    report = ScanReport(terms=len(seeds))
    seen: dict[Str, Derivation] = {}
    clashes: dict[Str, InconsistencyWitness] = {}
    for start in range(0, len(seeds), chunk_size):
        sat = Saturation(kb, budget)
        for s in seeds[start : start + chunk_size]:
            sat.admit(s, seed=True)
        try:
            if sat.run() != "fixpoint":
                report.exhausted_chunks += 1
        except Inconsistent as e:
            clashes.setdefault(e.witness.term, e.witness)
        for t, d in sat.proofs.items():
            prev = seen.setdefault(t, d)
            if prev.judgment.value != d.judgment.value:
                clashes.setdefault(t, InconsistencyWitness(t, prev, d))
    report.witnesses = list(clashes.values())
    report.values = {s: seen[s].judgment.value for s in seeds if s in seen}
    report.defined = len(report.values)
    report.undefined = report.terms - report.defined
    return report
