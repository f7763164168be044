"""
Hardness Models

Instances of the two-player formula game G_c and directed graphs for the
Hamiltonian-cycle reduction.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

TURN_VARIABLE = "t"


@dataclass(frozen=True, order=True)
class Literal:
    """A variable or its negation"""
    var: str
    positive: bool = True

    @property
    def negation(self) -> "Literal":
        return Literal(self.var, not self.positive)

    @property
    def name(self) -> str:
        return self.var if self.positive else f"-{self.var}"

    @classmethod
    def parse(cls, token: str) -> "Literal":
        if token.startswith("-"):
            return cls(token[1:], False)
        return cls(token, True)

    def holds(self, value: bool) -> bool:
        return value if self.positive else not value

    def __str__(self) -> str:
        return self.name


Clause = Tuple[Literal, Literal, Literal, Literal]
Valuation = Tuple[bool, ...]


@dataclass(frozen=True)
class GcInstance:
    """
    Instance (φ, X0, X1, α_init) of G_c.

    ``clauses`` is a 4-CNF over V = X0 ∪ X1 ∪ {t}; valuations are tuples
    in the order of ``variables``.
    """
    vars0: Tuple[str, ...]
    vars1: Tuple[str, ...]
    clauses: Tuple[Clause, ...]
    alpha_init: Mapping[str, bool] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "vars0", tuple(self.vars0))
        object.__setattr__(self, "vars1", tuple(self.vars1))
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        object.__setattr__(self, "alpha_init", dict(self.alpha_init))
        problems = self.validate()
        if problems:
            raise ValueError("invalid G_c instance: " + "; ".join(problems))

    def validate(self) -> List[str]:
        problems: List[str] = []
        names = list(self.vars0) + list(self.vars1)
        if len(set(names)) != len(names):
            problems.append("X0 and X1 must be disjoint sets of distinct variables")
        if TURN_VARIABLE in names:
            problems.append(f"{TURN_VARIABLE!r} is reserved for the turn variable")
        for name in names:
            if not name or name.startswith("-") or any(ch.isspace() or ch == "=" for ch in name):
                problems.append(f"invalid variable name {name!r}")
        known = set(self.variables)
        for i, clause in enumerate(self.clauses, 1):
            if len(clause) != 4:
                problems.append(f"clause {i} has {len(clause)} literals, expected 4")
            for lit in clause:
                if lit.var not in known:
                    problems.append(f"clause {i} uses unknown variable {lit.var!r}")
        missing = [v for v in self.variables if v not in self.alpha_init]
        if missing:
            problems.append(f"initial valuation misses {missing}")
        extra = [v for v in self.alpha_init if v not in known]
        if extra:
            problems.append(f"initial valuation sets unknown variables {extra}")
        return problems

    # ---- Variables and literals ----

    @property
    def variables(self) -> Tuple[str, ...]:
        """V in canonical order: X0, X1, then t"""
        return self.vars0 + self.vars1 + (TURN_VARIABLE,)

    @property
    def literals(self) -> List[Literal]:
        return [lit for v in self.variables for lit in (Literal(v), Literal(v, False))]

    def owned(self, player: int) -> Tuple[str, ...]:
        return self.vars0 if player == 0 else self.vars1

    def index(self, var: str) -> int:
        return self.variables.index(var)

    # ---- Valuations ----

    @property
    def initial_valuation(self) -> Valuation:
        return tuple(bool(self.alpha_init[v]) for v in self.variables)

    def true_literal(self, var: str, alpha: Optional[Valuation] = None) -> Literal:
        """The literal of ``var`` made true by alpha (default α_init)"""
        value = self.initial_valuation[self.index(var)] if alpha is None else alpha[self.index(var)]
        return Literal(var, value)

    def clause_holds(self, clause: Sequence[Literal], alpha: Valuation) -> bool:
        positions = {v: i for i, v in enumerate(self.variables)}
        return any(lit.holds(alpha[positions[lit.var]]) for lit in clause)

    def evaluate(self, alpha: Valuation) -> bool:
        """φ(alpha)"""
        return all(self.clause_holds(clause, alpha) for clause in self.clauses)

    def render_valuation(self, alpha: Valuation) -> str:
        return " ".join(f"{v}={int(b)}" for v, b in zip(self.variables, alpha))

    def to_dict(self) -> Dict:
        """Konvertiert zu JSON-serialisierbarem Dict"""
        return {
            "vars0": list(self.vars0),
            "vars1": list(self.vars1),
            "clauses": [[lit.name for lit in clause] for clause in self.clauses],
            "alpha_init": {v: int(self.alpha_init[v]) for v in self.variables},
        }


def clause(*tokens: str) -> Clause:
    """Clause from literal tokens such as "x", "-y" """
    return tuple(Literal.parse(token) for token in tokens)


@dataclass(frozen=True)
class DiGraph:
    """Directed graph on vertices 1..n"""
    n: int
    edges: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset((int(i), int(j)) for i, j in self.edges))
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        for i, j in self.edges:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge ({i}, {j}) outside [1, {self.n}]")

    @classmethod
    def of(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "DiGraph":
        return cls(n, frozenset(edges))

    def successors(self, i: int) -> List[int]:
        return sorted(j for (p, j) in self.edges if p == i)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(1, self.n + 1))
        graph.add_edges_from(self.edges)
        return graph

    @property
    def strongly_connected(self) -> bool:
        return nx.is_strongly_connected(self.to_networkx())

    def without(self, i: int, j: int) -> "DiGraph":
        return DiGraph(self.n, self.edges - {(i, j)})
