"""Built-in rules.

Each rule has two independent halves: `fire`, used by the saturation loop to
produce conclusions from the current state, and `check`, used by `replay` to
decide whether a single derivation step is a valid instance of the rule.
`check` never consults the saturation state, only the step itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Optional

from ..alphabet import BOT, TOP, Str
from ..naming import try_decode
from ..syntax import (
    EXISTS,
    FLAT,
    FORALL,
    SHARP,
    Term,
    is_formula,
    is_formula_string,
    substitute,
    try_parse,
)
from .core import Judgment, KnowledgeBase, Side

if TYPE_CHECKING:
    from .saturation import Saturation

NEG, AND, OR, IMP, EQ = "¬", "&", "∨", "→", "="
CAT, SUCC, DAG, YIELDS, DEFD, FORM = "·", "S", "†", "↣", "↓", "𝔽"

Fire = Callable[["Saturation", Term], None]
Check = Callable[[Judgment, tuple[Judgment, ...], Side, KnowledgeBase], bool]


@dataclass(frozen=True)
class RuleDescriptor:
    name: str
    anchor: Optional[str]  # head glyph of the terms the rule fires on; None for names
    summary: str
    fire: Fire
    check: Check


def _term(kb: KnowledgeBase, text: Str, head: Optional[str]) -> Optional[Term]:
    t = try_parse(text, kb.table)
    if t is None or t.head != head:
        return None
    return t


# -- canonical names ---------------------------------------------------------


def _fire_name(ctx: Saturation, u: Term) -> None:
    ctx.derive(u.text, u.content, (), name="name")


def _check_name(j, prem, side, kb):
    return not prem and try_decode(j.term) == j.value


# -- propositional connectives ----------------------------------------------


def _truth_rule(name: str, head: str, needs: tuple[tuple[int, str], ...], give: str):
    """A connective rule: all arguments formulas, some arguments with fixed values."""

    def fire(ctx: Saturation, u: Term) -> None:
        if not all(is_formula(a) for a in u.args):
            return
        for i, v in needs:
            if ctx.val(u.args[i].text) != v:
                return
        ctx.derive(
            u.text,
            give,
            tuple(u.args[i].text for i, _ in needs),
            name=name,
            side=tuple(("formula", a.text) for a in u.args),
        )

    def check(j, prem, side, kb):
        t = _term(kb, j.term, head)
        if t is None or not all(is_formula(a) for a in t.args):
            return False
        expected = tuple(Judgment(t.args[i].text, v) for i, v in needs)
        return prem == expected and j.value == give

    return fire, check


def _fire_imp(ctx: Saturation, u: Term) -> None:
    tau, sigma = u.args
    if not (is_formula(tau) and is_formula(sigma)):
        return
    aux = OR + NEG + tau.text + sigma.text
    x = ctx.val(aux)
    if x is not None:
        ctx.derive(u.text, x, (aux,), name="imp-intro")


def _check_imp(j, prem, side, kb):
    t = _term(kb, j.term, IMP)
    if t is None or not all(is_formula(a) for a in t.args):
        return False
    tau, sigma = t.args
    return prem == (Judgment(OR + NEG + tau.text + sigma.text, j.value),)


# -- equality ------------------------------------------------------------------


def _fire_eq_top(ctx: Saturation, u: Term) -> None:
    tau, sigma = u.args
    x, y = ctx.val(tau.text), ctx.val(sigma.text)
    if x is not None and x == y:
        ctx.derive(u.text, TOP, (tau.text, sigma.text), name="eq-intro-top")


def _fire_eq_bot(ctx: Saturation, u: Term) -> None:
    tau, sigma = u.args
    x, y = ctx.val(tau.text), ctx.val(sigma.text)
    if x is not None and y is not None and x != y:
        ctx.derive(u.text, BOT, (tau.text, sigma.text), name="eq-intro-bot")


def _check_eq_intro(same: bool):
    def check(j, prem, side, kb):
        t = _term(kb, j.term, EQ)
        if t is None or len(prem) != 2:
            return False
        p, q = prem
        if (p.term, q.term) != (t.args[0].text, t.args[1].text):
            return False
        return (p.value == q.value) == same and j.value == (TOP if same else BOT)

    return check


def _eq_elim(name: str, known: int):
    other = 1 - known

    def fire(ctx: Saturation, u: Term) -> None:
        if ctx.val(u.text) != TOP:
            return
        x = ctx.val(u.args[known].text)
        if x is not None:
            ctx.derive(u.args[other].text, x, (u.args[known].text, u.text), name=name)

    def check(j, prem, side, kb):
        if len(prem) != 2:
            return False
        p, e = prem
        t = _term(kb, e.term, EQ)
        if t is None or e.value != TOP:
            return False
        return (
            p.term == t.args[known].text
            and j.term == t.args[other].text
            and j.value == p.value
        )

    return fire, check


# -- one-side quotes -------------------------------------------------------------


def _quote_rule(name: str, head: str):
    def fire(ctx: Saturation, u: Term) -> None:
        ctx.derive(u.text, u.args[0].text, (), name=name)

    def check(j, prem, side, kb):
        t = _term(kb, j.term, head)
        return t is not None and not prem and j.value == t.args[0].text

    return fire, check


# -- quantifiers -------------------------------------------------------------------


def _binder(u: Term) -> Optional[tuple[str, Term]]:
    v, phi = u.args
    if not v.is_variable:
        return None
    return v.text, phi


def _fire_exists(ctx: Saturation, u: Term) -> None:
    b = _binder(u)
    if b is None or ctx.val(u.text) == TOP:
        return
    v, phi = b
    found = ctx.instances.setdefault(u.text, [])
    for w in ctx.new_witnesses(u.text):
        ctx.step()
        inst = substitute(phi, v, ctx.terms[w])
        if ctx.admit_term(inst) is None:
            continue
        ctx.watch(inst.text, u.text)
        found.append((inst, w))
    for inst, w in found:
        if is_formula(inst) and ctx.val(inst.text) == TOP:
            ctx.derive(
                u.text, TOP, (inst.text,), name="exists-intro", side=(("witness", w),)
            )
            return


def _witness(kb: KnowledgeBase, side: Side) -> Optional[Term]:
    ws = [w for k, w in side if k == "witness"]
    if len(ws) != 1:
        return None
    return try_parse(ws[0], kb.table)


def _check_exists(j, prem, side, kb):
    t = _term(kb, j.term, EXISTS)
    w = _witness(kb, side)
    if t is None or w is None or not t.args[0].is_variable or len(prem) != 1:
        return False
    inst = substitute(t.args[1], t.args[0].text, w)
    return (
        is_formula(inst)
        and prem[0] == Judgment(inst.text, TOP)
        and j.value == TOP
    )


def _fire_forall(ctx: Saturation, u: Term) -> None:
    b = _binder(u)
    if b is None or ctx.val(u.text) != TOP:
        return
    v, phi = b
    for w in ctx.new_witnesses(u.text):
        ctx.step()
        inst = substitute(phi, v, ctx.terms[w])
        if ctx.admit_term(inst) is None:
            continue
        ctx.derive(inst.text, TOP, (u.text,), name="forall-elim", side=(("witness", w),))


def _check_forall(j, prem, side, kb):
    w = _witness(kb, side)
    if w is None or len(prem) != 1 or prem[0].value != TOP:
        return False
    t = _term(kb, prem[0].term, FORALL)
    if t is None or not t.args[0].is_variable:
        return False
    inst = substitute(t.args[1], t.args[0].text, w)
    return j.term == inst.text and j.value == TOP


# -- strings and numerals ------------------------------------------------------------


def _fire_cat(ctx: Saturation, u: Term) -> None:
    tau, sigma = u.args
    x, y = ctx.val(tau.text), ctx.val(sigma.text)
    if x is not None and y is not None:
        ctx.derive(u.text, x + y, (tau.text, sigma.text), name="cat-intro")


def _check_cat(j, prem, side, kb):
    t = _term(kb, j.term, CAT)
    if t is None or len(prem) != 2:
        return False
    return (
        tuple(p.term for p in prem) == (t.args[0].text, t.args[1].text)
        and j.value == prem[0].value + prem[1].value
    )


def _fire_succ(ctx: Saturation, u: Term) -> None:
    x = ctx.val(u.args[0].text)
    if x is not None:
        ctx.derive(u.text, SUCC + x, (u.args[0].text,), name="succ-intro")


def _check_succ(j, prem, side, kb):
    t = _term(kb, j.term, SUCC)
    return (
        t is not None
        and len(prem) == 1
        and prem[0].term == t.args[0].text
        and j.value == SUCC + prem[0].value
    )


# -- dagger ------------------------------------------------------------------------


def _fire_dag_intro(ctx: Saturation, u: Term) -> None:
    tau = u.args[0]
    sigma = ctx.val(tau.text)
    if sigma is None or ctx.admit(sigma) is None:
        return
    ctx.watch(sigma, u.text)
    x = ctx.val(sigma)
    if x is not None:
        ctx.derive(u.text, x, (tau.text, sigma), name="dag-intro", side=(("term", sigma),))


def _check_dag_intro(j, prem, side, kb):
    t = _term(kb, j.term, DAG)
    if t is None or len(prem) != 2:
        return False
    p, q = prem
    return (
        p.term == t.args[0].text
        and q.term == p.value
        and try_parse(q.term, kb.table) is not None
        and j.value == q.value
    )


def _fire_dag_elim(ctx: Saturation, u: Term) -> None:
    tau = u.args[0]
    sigma, x = ctx.val(tau.text), ctx.val(u.text)
    if sigma is None or x is None or ctx.admit(sigma) is None:
        return
    ctx.derive(sigma, x, (tau.text, u.text), name="dag-elim", side=(("term", sigma),))


def _check_dag_elim(j, prem, side, kb):
    if len(prem) != 2:
        return False
    p, d = prem
    t = _term(kb, d.term, DAG)
    return (
        t is not None
        and p.term == t.args[0].text
        and j.term == p.value
        and try_parse(j.term, kb.table) is not None
        and j.value == d.value
    )


# -- rules about rules and definedness ------------------------------------------------


def _fire_yields(ctx: Saturation, u: Term) -> None:
    phi, psi = u.args
    if not (is_formula(phi) and is_formula(psi)):
        return
    if ctx.val(u.text) == TOP and ctx.val(phi.text) == TOP:
        ctx.derive(
            psi.text,
            TOP,
            (u.text, phi.text),
            name="yields-elim",
            side=(("formula", phi.text), ("formula", psi.text)),
        )


def _check_yields(j, prem, side, kb):
    if len(prem) != 2:
        return False
    y, p = prem
    t = _term(kb, y.term, YIELDS)
    if t is None or not all(is_formula(a) for a in t.args):
        return False
    phi, psi = t.args
    return (
        y.value == TOP
        and p == Judgment(phi.text, TOP)
        and j == Judgment(psi.text, TOP)
    )


def _fire_defd(ctx: Saturation, u: Term) -> None:
    if ctx.val(u.args[0].text) is not None:
        ctx.derive(u.text, TOP, (u.args[0].text,), name="defd-intro")


def _check_defd(j, prem, side, kb):
    t = _term(kb, j.term, DEFD)
    return (
        t is not None
        and len(prem) == 1
        and prem[0].term == t.args[0].text
        and j.value == TOP
    )


def _form_rule(name: str, formula: bool):
    def fire(ctx: Saturation, u: Term) -> None:
        x = ctx.val(u.args[0].text)
        if x is None or is_formula_string(x, ctx.table) != formula:
            return
        label = "formula" if formula else "non-formula"
        ctx.derive(
            u.text, TOP if formula else BOT, (u.args[0].text,), name=name,
            side=((label, x),),
        )

    def check(j, prem, side, kb):
        t = _term(kb, j.term, FORM)
        if t is None or len(prem) != 1 or prem[0].term != t.args[0].text:
            return False
        return (
            is_formula_string(prem[0].value, kb.table) == formula
            and j.value == (TOP if formula else BOT)
        )

    return fire, check


def _check_axiom(j, prem, side, kb):
    return not prem and kb.axioms.get(j.term) == j.value


def _registry() -> tuple[RuleDescriptor, ...]:
    R = RuleDescriptor
    rules = [R("name", None, "c = name(x) gives val(c) = x", _fire_name, _check_name)]
    truth = [
        ("neg-intro-bot", NEG, ((0, TOP),), BOT),
        ("neg-intro-top", NEG, ((0, BOT),), TOP),
        ("and-intro-top", AND, ((0, TOP), (1, TOP)), TOP),
        ("and-intro-bot-left", AND, ((0, BOT),), BOT),
        ("and-intro-bot-right", AND, ((1, BOT),), BOT),
        ("or-intro-bot", OR, ((0, BOT), (1, BOT)), BOT),
        ("or-intro-top-left", OR, ((0, TOP),), TOP),
        ("or-intro-top-right", OR, ((1, TOP),), TOP),
    ]
    for name, head, needs, give in truth:
        fire, check = _truth_rule(name, head, needs, give)
        rules.append(R(name, head, f"Kleene rule for {head}", fire, check))
    rules.append(R("imp-intro", IMP, "→τσ takes the value of ∨¬τσ", _fire_imp, _check_imp))
    rules.append(R("eq-intro-top", EQ, "equal values", _fire_eq_top, _check_eq_intro(True)))
    rules.append(R("eq-intro-bot", EQ, "distinct values", _fire_eq_bot, _check_eq_intro(False)))
    rules.append(R("eq-elim-right", EQ, "value passes left to right", *_eq_elim("eq-elim-right", 0)))
    rules.append(R("eq-elim-left", EQ, "value passes right to left", *_eq_elim("eq-elim-left", 1)))
    rules.append(R("sharp-intro", SHARP, "♯τ names τ", *_quote_rule("sharp-intro", SHARP)))
    rules.append(R("flat-intro", FLAT, "♮τ names τ", *_quote_rule("flat-intro", FLAT)))
    rules.append(R("exists-intro", EXISTS, "a true instance", _fire_exists, _check_exists))
    rules.append(R("forall-elim", FORALL, "every instance is true", _fire_forall, _check_forall))
    rules.append(R("cat-intro", CAT, "concatenation of values", _fire_cat, _check_cat))
    rules.append(R("succ-intro", SUCC, "S prepended to the value", _fire_succ, _check_succ))
    rules.append(R("dag-intro", DAG, "the value of the value", _fire_dag_intro, _check_dag_intro))
    rules.append(R("dag-elim", DAG, "value flows back to the named term", _fire_dag_elim, _check_dag_elim))
    rules.append(R("yields-elim", YIELDS, "declared rules are obeyed", _fire_yields, _check_yields))
    rules.append(R("defd-intro", DEFD, "defined terms", _fire_defd, _check_defd))
    rules.append(R("form-intro-top", FORM, "value is a formula", *_form_rule("form-intro-top", True)))
    rules.append(R("form-intro-bot", FORM, "value is not a formula", *_form_rule("form-intro-bot", False)))
    return tuple(rules)


BUILTIN_RULES = _registry()

CHECKS: dict[str, Check] = {r.name: r.check for r in BUILTIN_RULES}
CHECKS["axiom"] = _check_axiom


def builtin_rules() -> tuple[RuleDescriptor, ...]:
    return BUILTIN_RULES
