import itertools
from collections import Counter

import pytest
from hypothesis import assume, given, strategies as st

from reflectica.alphabet import CORE
from reflectica.syntax import (
    NotATerm,
    Term,
    enumerate_terms,
    free_variables,
    is_formula,
    is_formula_string,
    occurrences,
    parse,
    subterms,
    substitute,
    try_parse,
)

from strategies import term_texts, variables


def brute_force_terms(pool, max_len, table=CORE):
    out = set()
    for n in range(1, max_len + 1):
        for tup in itertools.product(pool, repeat=n):
            x = "".join(tup)
            if try_parse(x, table) is not None:
                out.add(x)
    return out


def test_parse_compound(plus_table):
    t = parse("=⊤⌈+=⌉", plus_table)
    assert t.head == "=" and [a.text for a in t.args] == ["⊤", "⌈+=⌉"]
    assert t.args[1].is_name and t.args[1].content == "+="


def test_parse_name():
    t = parse("⌈+=⌉", CORE)
    assert t.is_name and t.content == "+=" and t.args == ()


@pytest.mark.parametrize(
    "x, reason",
    [("=⊤", "truncated"), ("⊤⊤", "trailing"), ("⌈", "arity"), ("¬|", "arity"), ("+", "unknown")],
)
def test_not_a_term(x, reason):
    with pytest.raises(NotATerm) as e:
        parse(x)
    assert reason in e.value.reason


def test_not_a_term_position():
    with pytest.raises(NotATerm) as e:
        parse("¬⊤⊥")
    assert e.value.position == 2


def test_is_formula():
    assert is_formula(parse("=⌈∀⌉⌈∀⌉"))
    assert not is_formula(parse("⌈+=⌉", CORE.extended()))
    assert not is_formula(parse("S0"))
    assert not is_formula(parse("x"))
    assert is_formula_string("↓x") and not is_formula_string("♯x")
    assert not is_formula_string("=x")


def test_term_equality_is_textual():
    assert parse("¬⊤") == Term("¬⊤")
    assert hash(parse("¬⊤")) == hash(Term("¬⊤"))


def test_subterms():
    assert [u.text for u in subterms(parse("&¬⊤⌈⊥⌉"))] == ["&¬⊤⌈⊥⌉", "¬⊤", "⊤", "⌈⊥⌉"]


SUB_PHI = "&=xy∀y=xy"  # &[=(x,y), ∀y=(x,y)]


def test_occurrences_example():
    occ = occurrences(parse(SUB_PHI), "y")
    assert [o.status for o in occ] == ["free", "bound", "bound"]
    assert [o.position for o in occ] == [3, 5, 8]


@pytest.mark.parametrize(
    "text, status",
    [("♯x", ["bound"]), ("♮x", ["free"]), ("⌈x⌉", ["bound"]), ("∀x=xx", ["bound"] * 3), ("∀y=xx", ["free"] * 2)],
)
def test_occurrence_statuses(text, status):
    assert [o.status for o in occurrences(parse(text), "x")] == status


def test_occurrences_accept_symbol():
    assert occurrences(parse("♮x"), CORE["x"])[0].status == "free"


def test_substitute_example(plus_table):
    phi = parse(SUB_PHI, plus_table)
    tau = parse("⌈+⌉", plus_table)
    assert substitute(phi, "y", tau).text == "&=x⌈+⌉∀y=xy"


def test_substitute_bound_by_sharp():
    assert substitute(parse("♯x"), "x", parse("⊤")).text == "♯x"


def test_substitute_flat_is_transparent():
    assert substitute(parse("♮x"), "x", parse("⊤")).text == "♮⊤"


def test_substitute_captures_literally():
    # no renaming: the y of the substituted term ends up bound by ∀y
    out = substitute(parse("∀y=xy"), "x", parse("y"))
    assert out.text == "∀y=yy"


@given(term_texts, variables)
def test_substitute_self_is_identity(x, v):
    t = parse(x)
    assert substitute(t, v, parse(v)).text == x


@given(term_texts, variables, term_texts)
def test_substitute_without_free_occurrence(x, v, tau):
    t = parse(x)
    assume(v not in free_variables(t))
    assert substitute(t, v, parse(tau)).text == x


@given(term_texts, variables, term_texts)
def test_substitute_result_reparses(x, v, tau):
    out = substitute(parse(x), v, parse(tau))
    again = parse(out.text)
    assert again.text == out.text
    assert [a.text for a in again.args] == [a.text for a in out.args]


@given(term_texts, variables, term_texts)
def test_substitute_replaces_exactly_free_occurrences(x, v, tau):
    # oracle: splice tau into the text at every free position, right to left
    t = parse(x)
    text = x
    for o in reversed(occurrences(t, v)):
        if o.status == "free":
            text = text[: o.position] + tau + text[o.position + 1 :]
    assert substitute(t, v, parse(tau)).text == text


@given(term_texts, variables)
def test_occurrences_partition(x, v):
    occ = occurrences(parse(x), v)
    assert len(occ) == x.count(v)
    assert len({o.position for o in occ}) == len(occ)
    assert Counter(o.status for o in occ).keys() <= {"free", "bound"}


@given(term_texts, variables)
def test_free_variables_agree_with_occurrences(x, v):
    t = parse(x)
    has_free = any(o.status == "free" for o in occurrences(t, v))
    assert has_free == (v in free_variables(t))


@given(term_texts)
def test_parse_print_identity(x):
    assert parse(x).text == x


@given(term_texts)
def test_no_proper_prefix_is_a_term(x):
    assert all(try_parse(x[:k]) is None for k in range(1, len(x)))


def test_enumerate_small_examples():
    assert [t.text for t in enumerate_terms("⊤", 1)] == ["⊤"]
    assert [t.text for t in enumerate_terms("⊤¬", 2)] == ["⊤", "¬⊤"]
    with_quotes = [t.text for t in enumerate_terms("⊤¬⌈⌉", 3)]
    assert with_quotes == ["⊤", "¬⊤", "¬¬⊤", "⌈⊤⌉", "⌈¬⌉", "⌈⌈⌉"]


@pytest.mark.parametrize(
    "pool, max_len",
    [("⊤⊥¬&", 3), ("⊤⊥¬&", 5), ("⊤¬⌈⌉|", 5), ("=x⌈⌉∀", 5), ("⊤⌈⌉|♯", 6)],
)
def test_enumerate_matches_brute_force(pool, max_len):
    got = [t.text for t in enumerate_terms(pool, max_len)]
    assert len(got) == len(set(got))
    assert set(got) == brute_force_terms(pool, max_len)
    key = [(len(s), [CORE.order[c] for c in s]) for s in got]
    assert key == sorted(key)


def test_enumerate_is_deterministic():
    a = [t.text for t in enumerate_terms("⌉⊤⌈¬", 4)]
    b = [t.text for t in enumerate_terms("¬⊤⌈⌉", 4)]
    assert a == b


@pytest.mark.parametrize("pool", ["⊤⊥¬&=⌈⌉|", "⊤∀x=⌈⌉|"])
def test_unique_readability_enumerated(pool):
    for t in enumerate_terms(pool, 6):
        assert parse(t.text).text == t.text
        assert all(try_parse(t.text[:k]) is None for k in range(1, len(t.text)))
