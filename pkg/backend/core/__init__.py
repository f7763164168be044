"""
Core Package

Automaton data model, membership, emptiness, products, classic
determinisations, DFA minimisation and ambiguity profiling.
"""

from .ambiguity import count_accepting_runs, max_ambiguity_profile
from .determinize import breakpoint_determinize, dfa_equivalent, explore, minimize_dfa, subset_construction
from .models import (
    AcceptanceCondition,
    AcceptanceKind,
    Alphabet,
    Automaton,
    BreakpointState,
    Buchi,
    CoBuchi,
    FiniteReach,
    Rabin,
    RabinPair,
    SetState,
    UPWord,
    WordMode,
)
from .operations import (
    accepting_sinks,
    both_accepting,
    deterministic_member_up,
    either_accepting,
    emptiness,
    is_complete,
    is_deterministic,
    is_universal,
    left_acceptance,
    member_finite,
    member_up,
    product,
    reachable_states,
    sampled_equivalence,
    trim,
    trivial_universal,
    validate,
)

__version__ = "1.0.0"

__all__ = [
    "AcceptanceCondition",
    "AcceptanceKind",
    "Alphabet",
    "Automaton",
    "BreakpointState",
    "Buchi",
    "CoBuchi",
    "FiniteReach",
    "Rabin",
    "RabinPair",
    "SetState",
    "UPWord",
    "WordMode",
    "accepting_sinks",
    "both_accepting",
    "breakpoint_determinize",
    "count_accepting_runs",
    "dfa_equivalent",
    "deterministic_member_up",
    "either_accepting",
    "emptiness",
    "explore",
    "is_complete",
    "is_deterministic",
    "is_universal",
    "left_acceptance",
    "max_ambiguity_profile",
    "member_finite",
    "member_up",
    "minimize_dfa",
    "product",
    "reachable_states",
    "sampled_equivalence",
    "subset_construction",
    "trim",
    "trivial_universal",
    "validate",
]
