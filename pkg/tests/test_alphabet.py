import random

import pytest
from hypothesis import given, strategies as st

from reflectica.alphabet import (
    CORE,
    PLUS,
    EmptyString,
    Symbol,
    SymbolTable,
    UnknownToken,
    arity_of,
    detect_mode,
    render,
    tokenize,
)

GLYPHS = [s.display for s in CORE.core]
strs = st.lists(st.sampled_from(GLYPHS), min_size=1, max_size=12).map("".join)


def test_tokenize_strips_punctuation():
    assert tokenize("=(x,y)") == "=xy"


def test_tokenize_ascii_single_token():
    assert tokenize("top", "ascii") == "⊤"


def test_tokenize_ascii_with_brackets():
    text = "and [ eq(x, y), all y eq(x, y) ]"
    assert tokenize(text, "ascii") == "&=xy∀y=xy"


def test_forall_exists_aliases():
    assert tokenize("forall phi exists x eq(x, phi)", "ascii") == "∀φ∃x=xφ"


@pytest.mark.parametrize("text", ["   ", "", "(,)"])
def test_empty_string(text):
    with pytest.raises(EmptyString):
        tokenize(text)


def test_unknown_token_reports_position():
    with pytest.raises(UnknownToken) as e:
        tokenize("not frob top", "ascii")
    assert e.value.token == "frob"
    assert e.value.position == 4


def test_unknown_glyph():
    with pytest.raises(UnknownToken):
        tokenize("⊤+⊤")


def test_render_examples():
    assert render("⊤") == "⊤"
    assert render("¬⊤", "ascii") == "not top"


def test_render_round_trip_random():
    rng = random.Random(20261015)
    for _ in range(1000):
        x = "".join(rng.choice(GLYPHS) for _ in range(rng.randint(1, 12)))
        for mode in ("unicode", "ascii"):
            assert tokenize(render(x, mode), mode) == x


@given(strs, st.sampled_from(["unicode", "ascii"]))
def test_round_trip_property(x, mode):
    assert tokenize(render(x, mode), mode) == x


def test_ascii_output_is_seven_bit():
    x = "".join(GLYPHS)
    assert render(x, "ascii").isascii()


def test_detect_mode():
    assert detect_mode("not top") == "ascii"
    assert detect_mode("¬⊤") == "unicode"


@pytest.mark.parametrize("glyph, arity", [("=", 2), ("⊤", 0), ("⌈", None), ("⌉", None), ("|", None)])
def test_arity_examples(glyph, arity):
    assert arity_of(glyph) == arity


def test_quote_components():
    qc = [s for s in CORE.core if s.kind == "quote-component"]
    assert sorted(s.display for s in qc) == sorted("⌈⌉|")
    for s in CORE.core:
        assert (s.arity is None) == (s.kind == "quote-component")


def test_variables_have_arity_zero():
    variables = [s for s in CORE.core if s.kind == "variable"]
    assert len(variables) == 50
    assert all(s.arity == 0 for s in variables)


def test_table_is_unique():
    core = CORE.core
    for attr in ("display", "ascii_name", "id"):
        values = [getattr(s, attr) for s in core]
        assert len(values) == len(set(values))


def test_duplicate_symbols_rejected():
    with pytest.raises(ValueError):
        CORE.extended(Symbol("+", "top", 2, "functional"))
    with pytest.raises(ValueError):
        CORE.extended(Symbol("⊤", "plus", 0, "logical"))


def test_bad_symbol_rejected():
    with pytest.raises(ValueError):
        Symbol("v", "vv", 1, "variable")
    with pytest.raises(ValueError):
        Symbol("%", "pct", 1, "quote-component")


def test_extension_keeps_core():
    t = CORE.extended(PLUS)
    assert tokenize("plus top top", "ascii", t) == "+⊤⊤"
    assert t.core == CORE.core
    assert "+" not in CORE
    assert isinstance(t, SymbolTable)
