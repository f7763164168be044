"""
Width Package

Width games on finite words, width of coBüchi automata through the
k-breakpoint construction, det-width and the incremental determinisation
loops.
"""

from .game import WIN, WidthGame, default_referee, width_le
from .manager import (
    det_width,
    incremental_determinize_nfa,
    incremental_gfg_nca,
    width_nca,
    width_nfa,
)
from .models import KVerdict, WidthMethod, WidthReport
from .pebbles import Config, config_moves, holds_sink, initial_config

__all__ = [
    "Config",
    "KVerdict",
    "WIN",
    "WidthGame",
    "WidthMethod",
    "WidthReport",
    "config_moves",
    "default_referee",
    "det_width",
    "holds_sink",
    "incremental_determinize_nfa",
    "incremental_gfg_nca",
    "initial_config",
    "width_le",
    "width_nca",
    "width_nfa",
]
