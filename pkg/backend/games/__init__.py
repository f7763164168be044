"""
Games Package

Two-player arenas with safety and parity winning conditions and their
solvers.
"""

from .generators import random_arena
from .models import GameArena, GameSolution, Parity, Safety, Strategy, build_arena
from .solvers import attractor, solve, solve_parity, solve_safety

__all__ = [
    "GameArena",
    "GameSolution",
    "Parity",
    "Safety",
    "Strategy",
    "attractor",
    "build_arena",
    "random_arena",
    "solve",
    "solve_parity",
    "solve_safety",
]
