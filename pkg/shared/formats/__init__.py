"""
Text formats for automata, G_c instances and graphs.
"""

from .automaton_file import (
    AUTOMATON_TYPES,
    automaton_type,
    load_automaton,
    parse_automaton,
    save_automaton,
    write_automaton,
)
from .common import Directive, directives
from .gc_file import load_gc, parse_gc, save_gc, write_gc
from .graph_file import load_graph, parse_graph, save_graph, write_graph

__all__ = [
    "AUTOMATON_TYPES",
    "Directive",
    "automaton_type",
    "directives",
    "load_automaton",
    "load_gc",
    "load_graph",
    "parse_automaton",
    "parse_gc",
    "parse_graph",
    "save_automaton",
    "save_gc",
    "save_graph",
    "write_automaton",
    "write_gc",
    "write_graph",
]
