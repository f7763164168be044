"""
Simulation Package

Multipebble simulation games and their bridges to width and inclusion.
"""

from .simulation import SimulationGame, decide_sim, inclusion_via_width, width_via_sim

__all__ = [
    "SimulationGame",
    "decide_sim",
    "inclusion_via_width",
    "width_via_sim",
]
