"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from reflectica.naming import make_name

VARIABLES = "xyzφτ"
ATOMS = ["⊤", "⊥", "0", *VARIABLES]


def _compound(children):
    var = st.sampled_from(VARIABLES)
    return st.one_of(
        st.tuples(st.sampled_from("¬♯♮S†↓𝔽"), children).map("".join),
        st.tuples(st.sampled_from("&∨→=·↣"), children, children).map("".join),
        st.tuples(st.sampled_from("∀∃"), var, children).map("".join),
        children.map(make_name),
    )


term_texts = st.recursive(st.sampled_from(ATOMS), _compound, max_leaves=8)
variables = st.sampled_from(VARIABLES)
