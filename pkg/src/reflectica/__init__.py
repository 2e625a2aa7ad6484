"""An interpreter for reflectica, a self-reflecting interpreted theory."""

from .alphabet import CORE, PLUS, Symbol, SymbolTable, render, tokenize
from .engine import (
    Budget,
    BudgetExhausted,
    Inconsistent,
    Judgment,
    assert_axiom,
    base_kb,
    consistency_scan,
    evaluate,
    replay,
    saturate,
)
from .naming import make_name, quote_level, try_decode
from .syntax import Term, parse, substitute

__version__ = "0.1.0"
