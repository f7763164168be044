"""
Constructions Package

Parameterised determinisation constructions: k-subset (NFA),
k-breakpoint (coBüchi), Safra and k-Safra (Büchi to Rabin).
"""

from .k_breakpoint import k_breakpoint
from .k_subset import capped_successors, k_subset
from .safra import SafraNode, SafraState, check_tree, k_safra, safra

__all__ = [
    "SafraNode",
    "SafraState",
    "capped_successors",
    "check_tree",
    "k_breakpoint",
    "k_safra",
    "k_subset",
    "safra",
]
