from .core import (
    Budget,
    BudgetExhausted,
    Derivation,
    Inconsistent,
    InconsistencyWitness,
    Judgment,
    KnowledgeBase,
)
from .rules import RuleDescriptor, builtin_rules
from .saturation import (
    ScanReport,
    assert_axiom,
    base_kb,
    consistency_scan,
    core_axioms,
    evaluate,
    replay,
    saturate,
)

__all__ = [
    "Budget",
    "BudgetExhausted",
    "Derivation",
    "Inconsistent",
    "InconsistencyWitness",
    "Judgment",
    "KnowledgeBase",
    "RuleDescriptor",
    "ScanReport",
    "assert_axiom",
    "base_kb",
    "builtin_rules",
    "consistency_scan",
    "core_axioms",
    "evaluate",
    "replay",
    "saturate",
]
