"""
Fixed instances and seeded corpora for the hardness reductions.
"""

import random
from typing import List

from .models import TURN_VARIABLE, DiGraph, GcInstance, Literal, clause


def running_example() -> GcInstance:
    """φ = (x ∨ y ∨ z ∨ t) ∧ (¬x ∨ y ∨ ¬z ∨ ¬t), X0 = {x, y}, X1 = {z}, everything true"""
    return GcInstance(
        vars0=("x", "y"),
        vars1=("z",),
        clauses=(clause("x", "y", "z", "t"), clause("-x", "y", "-z", "-t")),
        alpha_init={"x": True, "y": True, "z": True, "t": True},
    )


def ham_graph() -> DiGraph:
    """Four vertices with the Hamiltonian cycle 1 -> 2 -> 4 -> 3 -> 1"""
    return DiGraph.of(4, [(1, 2), (1, 3), (2, 4), (2, 3), (4, 3), (3, 1)])


def bowtie_graph() -> DiGraph:
    """Strongly connected, no Hamiltonian cycle: 2 <-> 1 <-> 3"""
    return DiGraph.of(3, [(1, 2), (2, 1), (1, 3), (3, 1)])


def random_gc_instance(
    rng: random.Random,
    vars0: int = 1,
    vars1: int = 1,
    clauses: int = 2,
) -> GcInstance:
    """Uniform literals over X0 = {x1..}, X1 = {y1..} and t; uniform initial valuation"""
    names0 = tuple(f"x{i}" for i in range(1, vars0 + 1))
    names1 = tuple(f"y{i}" for i in range(1, vars1 + 1))
    variables = names0 + names1 + (TURN_VARIABLE,)
    formula = []
    for _ in range(clauses):
        formula.append(tuple(Literal(rng.choice(variables), rng.random() < 0.5) for _ in range(4)))
    alpha = {v: rng.random() < 0.5 for v in variables}
    return GcInstance(names0, names1, tuple(formula), alpha)


def random_strongly_connected_graph(
    rng: random.Random,
    n: int,
    edge_probability: float = 0.35,
    max_tries: int = 10_000,
) -> DiGraph:
    """Random digraph without self-loops, redrawn until strongly connected"""
    for _ in range(max_tries):
        edges: List = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if i != j and rng.random() < edge_probability
        ]
        g = DiGraph.of(n, edges)
        if g.strongly_connected:
            return g
    raise RuntimeError(f"no strongly connected graph on {n} vertices after {max_tries} draws")
