import itertools

import pytest
from hypothesis import given, strategies as st

from reflectica.alphabet import CORE
from reflectica.naming import (
    QuotePair,
    is_canonical_name,
    make_name,
    quote_level,
    scan_name_prefix,
    try_decode,
)

CORE_GLYPHS = [s.display for s in CORE.core]
QUOTE_HEAVY = list("⌈⌉|+=⊤")
strs = st.lists(st.sampled_from(CORE_GLYPHS), min_size=1, max_size=10).map("".join)
quotey = st.lists(st.sampled_from(QUOTE_HEAVY), min_size=1, max_size=10).map("".join)


def preimages(c):
    """Every x over the symbols of `c` with make_name(x) == c, by brute force."""
    glyphs = sorted(set(c))
    found = []
    for n in range(1, len(c) - 1):
        for tup in itertools.product(glyphs, repeat=n):
            x = "".join(tup)
            if make_name(x) == c:
                found.append(x)
    return found


def test_quote_pair():
    assert QuotePair(0).opener == "⌈" and QuotePair(0).closer == "⌉"
    assert QuotePair(2).opener == "||⌈" and QuotePair(2).closer == "⌉||"


@pytest.mark.parametrize("x, n", [("+⌉|", 2), ("⌉+|", 1), ("+", 0), ("⌉", 1), ("⌉|⌉", 2)])
def test_quote_level(x, n):
    assert quote_level(x) == n


@pytest.mark.parametrize(
    "x, name",
    [
        ("+=", "⌈+=⌉"),
        ("⌈+=⌉", "|⌈⌈+=⌉⌉|"),
        ("|⌈⌈+=⌉⌉|", "||⌈|⌈⌈+=⌉⌉|⌉||"),
    ],
)
def test_make_name_examples(x, name):
    assert make_name(x) == name
    assert try_decode(name) == x


def test_make_name_rejects_empty():
    with pytest.raises(ValueError):
        make_name("")


@pytest.mark.parametrize("c", ["|⌈+=⌉|", "⌈+=", "⌈⌉", "+=", "⌈+=⌉⊤", "⌈⌉⌉", "|⌈⌉|⌉|"])
def test_try_decode_rejects(c):
    assert try_decode(c) is None
    assert not is_canonical_name(c)


@pytest.mark.parametrize("c", ["|⌈+=⌉|", "⌈+=⌉", "|⌈⌉⌉|", "⌈⌈⌉", "||⌈⌉|⌉||"])
def test_try_decode_matches_brute_force(c):
    found = preimages(c)
    assert len(found) <= 1
    assert try_decode(c) == (found[0] if found else None)


def _decode_prefix_oracle(x, start):
    for end in range(start + 1, len(x) + 1):
        d = try_decode(x[start:end])
        if d is not None:
            return d, end - start
    return None


@pytest.mark.parametrize(
    "x, start, expected",
    [("⌈∀⌉⌈∃⌉", 0, ("∀", 3)), ("⌈∀⌉⌈∃⌉", 3, ("∃", 3)), ("¬⊤", 0, None)],
)
def test_scan_examples(x, start, expected):
    assert scan_name_prefix(x, start) == expected
    assert _decode_prefix_oracle(x, start) == expected


@given(quotey, quotey, st.integers(0, 3))
def test_scan_agrees_with_prefix_oracle(a, b, k):
    x = a + make_name(b) + a
    start = min(k, len(x) - 1)
    assert scan_name_prefix(x, start) == _decode_prefix_oracle(x, start)


@given(strs)
def test_round_trip(x):
    assert try_decode(make_name(x)) == x


@given(quotey)
def test_round_trip_quote_heavy(x):
    assert try_decode(make_name(x)) == x


@given(quotey, quotey)
def test_injective(x, y):
    if x != y:
        assert make_name(x) != make_name(y)


@given(quotey)
def test_prefix_free(x):
    c = make_name(x)
    assert all(try_decode(c[:k]) is None for k in range(1, len(c)))


@given(quotey)
def test_level_zero_iff_no_closer(x):
    assert (quote_level(x) == 0) == ("⌉" not in x)


@given(quotey)
def test_closer_absent_and_level_minimal(x):
    n = quote_level(x)
    assert QuotePair(n).closer not in x
    if n:
        assert QuotePair(n - 1).closer in x


def test_injective_exhaustive_small():
    seen = {}
    for n in range(1, 7):
        for tup in itertools.product("⌈⌉|+", repeat=n):
            x = "".join(tup)
            c = make_name(x)
            assert c not in seen, (x, seen.get(c))
            seen[c] = x
