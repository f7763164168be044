"""
Hardness Package

Executable hardness reductions: the formula game G_c with its reduction to
the width problem, and the Hamiltonian-cycle reduction to DBP for coBüchi
automata, together with brute-force oracles.
"""

from .gc_game import gc_moves, solve_gc
from .generators import (
    bowtie_graph,
    ham_graph,
    random_gc_instance,
    random_strongly_connected_graph,
    running_example,
)
from .hamiltonian import (
    build_ham_nca,
    cycle_from_pruning,
    find_hamiltonian_cycle,
    ham_language_member,
    has_hamiltonian_cycle,
)
from .models import TURN_VARIABLE, DiGraph, GcInstance, Literal, clause
from .reduction import (
    CLayout,
    build_b,
    build_c,
    build_reduction,
    literal_state,
    reduction_alphabet,
    reduction_width_le,
)

__all__ = [
    "CLayout",
    "DiGraph",
    "GcInstance",
    "Literal",
    "TURN_VARIABLE",
    "bowtie_graph",
    "build_b",
    "build_c",
    "build_ham_nca",
    "build_reduction",
    "clause",
    "cycle_from_pruning",
    "find_hamiltonian_cycle",
    "gc_moves",
    "ham_graph",
    "ham_language_member",
    "has_hamiltonian_cycle",
    "literal_state",
    "random_gc_instance",
    "random_strongly_connected_graph",
    "reduction_alphabet",
    "reduction_width_le",
    "running_example",
    "solve_gc",
]
