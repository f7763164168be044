"""
Core Automaton Models

Dataclasses for alphabets, acceptance conditions, automata and
ultimately periodic words. All models are immutable after construction.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, ClassVar, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union


# ============================================================================
# Enums
# ============================================================================

class WordMode(str, Enum):
    """Finite or infinite input words"""
    FINITE = "finite"
    INFINITE = "infinite"


class AcceptanceKind(str, Enum):
    """Acceptance condition families"""
    FINITE = "finite"
    BUCHI = "buchi"
    COBUCHI = "cobuchi"
    RABIN = "rabin"


# ============================================================================
# Alphabet
# ============================================================================

@dataclass(frozen=True)
class Alphabet:
    """Ordered list of distinct symbol names, referred to by index internally"""
    symbols: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __getitem__(self, index: int) -> str:
        return self.symbols[index]

    @property
    def indices(self) -> range:
        return range(len(self.symbols))

    def index(self, name: str) -> int:
        try:
            return self._lookup[name]
        except KeyError:
            raise ValueError(f"unknown symbol: {name!r}") from None

    @property
    def _lookup(self) -> Dict[str, int]:
        lookup = self.__dict__.get("_lookup_cache")
        if lookup is None:
            lookup = {name: i for i, name in enumerate(self.symbols)}
            object.__setattr__(self, "_lookup_cache", lookup)
        return lookup

    def encode(self, names: Iterable[str]) -> Tuple[int, ...]:
        """Symbol names -> index word"""
        return tuple(self.index(name) for name in names)

    def decode(self, word: Iterable[int]) -> List[str]:
        """Index word -> symbol names"""
        return [self.symbols[a] for a in word]

    def parse_word(self, text: str) -> Tuple[int, ...]:
        """Whitespace separated symbol names -> index word"""
        return self.encode(text.split())


# ============================================================================
# Acceptance Conditions
# ============================================================================

@dataclass(frozen=True)
class FiniteReach:
    """Finite words: accept iff the run ends in F"""
    accepting: FrozenSet[int]
    kind: ClassVar[AcceptanceKind] = AcceptanceKind.FINITE

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))

    def states(self) -> FrozenSet[int]:
        return self.accepting


@dataclass(frozen=True)
class Buchi:
    """Infinite words: accept iff F is visited infinitely often"""
    accepting: FrozenSet[int]
    kind: ClassVar[AcceptanceKind] = AcceptanceKind.BUCHI

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))

    def states(self) -> FrozenSet[int]:
        return self.accepting


@dataclass(frozen=True)
class CoBuchi:
    """Infinite words: accept iff states outside F occur finitely often"""
    accepting: FrozenSet[int]
    kind: ClassVar[AcceptanceKind] = AcceptanceKind.COBUCHI

    def __post_init__(self):
        object.__setattr__(self, "accepting", frozenset(self.accepting))

    def states(self) -> FrozenSet[int]:
        return self.accepting


@dataclass(frozen=True)
class RabinPair:
    """Visit ``good`` infinitely often and ``bad`` finitely often"""
    good: FrozenSet[int]
    bad: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "good", frozenset(self.good))
        object.__setattr__(self, "bad", frozenset(self.bad))


@dataclass(frozen=True)
class Rabin:
    """Disjunction of Rabin pairs; an empty pair list rejects every run"""
    pairs: Tuple[RabinPair, ...]
    kind: ClassVar[AcceptanceKind] = AcceptanceKind.RABIN

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))

    def states(self) -> FrozenSet[int]:
        members = set()
        for pair in self.pairs:
            members |= pair.good | pair.bad
        return frozenset(members)


AcceptanceCondition = Union[FiniteReach, Buchi, CoBuchi, Rabin]

_STATE_SET_CONDITIONS = (FiniteReach, Buchi, CoBuchi)


def default_word_mode(acceptance: AcceptanceCondition) -> WordMode:
    return WordMode.FINITE if isinstance(acceptance, FiniteReach) else WordMode.INFINITE


# ============================================================================
# Words
# ============================================================================

@dataclass(frozen=True)
class UPWord:
    """Ultimately periodic word prefix · period^ω over symbol indices"""
    prefix: Tuple[int, ...]
    period: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("UPWord period must be non-empty")

    @property
    def positions(self) -> int:
        """Number of positions of the lasso structure"""
        return len(self.prefix) + len(self.period)

    def letter_at(self, position: int) -> int:
        if position < len(self.prefix):
            return self.prefix[position]
        return self.period[position - len(self.prefix)]

    def next_position(self, position: int) -> int:
        position += 1
        return position if position < self.positions else len(self.prefix)

    def render(self, alphabet: Alphabet) -> str:
        return f"{' '.join(alphabet.decode(self.prefix))} : {' '.join(alphabet.decode(self.period))}".strip()


# ============================================================================
# Automaton
# ============================================================================

EMPTY: FrozenSet[int] = frozenset()


@dataclass(frozen=True, eq=False)
class Automaton:
    """
    Nondeterministic automaton on finite or infinite words.

    ``transitions[q][a]`` is the (possibly empty) successor set of state q
    on symbol index a. ``labels`` optionally carries the construction-level
    name of each state (a SetState, a Safra tree, ...).
    """
    alphabet: Alphabet
    state_count: int
    initial: int
    transitions: Tuple[Tuple[FrozenSet[int], ...], ...]
    acceptance: AcceptanceCondition
    word_mode: WordMode = None
    labels: Tuple[Any, ...] = ()
    safety: bool = False

    def __post_init__(self):
        if self.word_mode is None:
            object.__setattr__(self, "word_mode", default_word_mode(self.acceptance))
        object.__setattr__(self, "labels", tuple(self.labels))

    # ---- Construction ----

    @classmethod
    def from_edges(
        cls,
        alphabet: Union[Alphabet, Sequence[str]],
        state_count: int,
        initial: int,
        edges: Iterable[Tuple[int, int, int]],
        acceptance: AcceptanceCondition,
        word_mode: Optional[WordMode] = None,
        labels: Sequence[Any] = (),
        safety: bool = False,
    ) -> "Automaton":
        """
        Build an automaton from (source, symbol index, target) triples.

        Duplicate edges are idempotent. Targets are stored as given so that
        validate() can report out-of-range ones; sources must be in range.
        """
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(tuple(alphabet))
        table: List[List[set]] = [[set() for _ in alphabet.indices] for _ in range(state_count)]
        for p, a, q in edges:
            if not 0 <= p < state_count:
                raise ValueError(f"transition source out of range: {p}")
            if not 0 <= a < len(alphabet):
                raise ValueError(f"symbol index out of range: {a}")
            table[p][a].add(q)
        transitions = tuple(tuple(frozenset(row) for row in state_rows) for state_rows in table)
        return cls(
            alphabet=alphabet,
            state_count=state_count,
            initial=initial,
            transitions=transitions,
            acceptance=acceptance,
            word_mode=word_mode,
            labels=tuple(labels),
            safety=safety,
        )

    # ---- Access ----

    @property
    def states(self) -> range:
        return range(self.state_count)

    def successors(self, q: int, a: int) -> FrozenSet[int]:
        return self.transitions[q][a]

    def post(self, states: Iterable[int], a: int) -> FrozenSet[int]:
        """Δ(X, a)"""
        result = set()
        for q in states:
            result |= self.transitions[q][a]
        return frozenset(result)

    def edges(self) -> Iterator[Tuple[int, int, int]]:
        """All transitions in (state, symbol, target) order"""
        for p in range(self.state_count):
            for a, targets in enumerate(self.transitions[p]):
                for q in sorted(targets):
                    yield p, a, q

    @property
    def accepting(self) -> FrozenSet[int]:
        """F for finite/Büchi/coBüchi conditions"""
        if not isinstance(self.acceptance, _STATE_SET_CONDITIONS):
            raise TypeError("Rabin automata have no single accepting set")
        return self.acceptance.accepting

    def is_accepting(self, q: int) -> bool:
        return q in self.accepting

    @property
    def kind(self) -> AcceptanceKind:
        return self.acceptance.kind

    @property
    def is_finite(self) -> bool:
        return self.word_mode == WordMode.FINITE

    def label(self, q: int) -> str:
        if self.labels:
            return str(self.labels[q])
        return str(q)

    def relabel(self, labels: Sequence[Any]) -> "Automaton":
        return Automaton(self.alphabet, self.state_count, self.initial, self.transitions,
                         self.acceptance, self.word_mode, tuple(labels), self.safety)

    def to_dict(self) -> Dict:
        """Konvertiert zu JSON-serialisierbarem Dict"""
        data = {
            "alphabet": list(self.alphabet.symbols),
            "state_count": self.state_count,
            "initial": self.initial,
            "word_mode": self.word_mode.value,
            "acceptance": self.kind.value,
            "transitions": [list(edge) for edge in self.edges()],
        }
        if isinstance(self.acceptance, Rabin):
            data["pairs"] = [
                {"good": sorted(pair.good), "bad": sorted(pair.bad)} for pair in self.acceptance.pairs
            ]
        else:
            data["accepting"] = sorted(self.acceptance.accepting)
        return data

    def __repr__(self) -> str:
        return (f"Automaton(kind={self.kind.value}, states={self.state_count}, "
                f"alphabet={list(self.alphabet.symbols)}, initial={self.initial})")


@dataclass(frozen=True)
class AutomatonStats:
    """Size summary used in reports and log lines"""
    states: int
    transitions: int
    nondeterministic_points: int = 0
    extra: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def of(cls, automaton: Automaton) -> "AutomatonStats":
        transitions = 0
        choice_points = 0
        for row in automaton.transitions:
            for targets in row:
                transitions += len(targets)
                if len(targets) > 1:
                    choice_points += 1
        return cls(automaton.state_count, transitions, choice_points)


# ============================================================================
# Construction State Labels
# ============================================================================

@dataclass(frozen=True, order=True)
class SetState:
    """Sorted set of source-automaton states (state of a (k-)subset construction)"""
    members: Tuple[int, ...]

    @classmethod
    def of(cls, states: Iterable[int]) -> "SetState":
        return cls(tuple(sorted(set(states))))

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, q: object) -> bool:
        return q in self.members

    def as_set(self) -> FrozenSet[int]:
        return frozenset(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(q) for q in self.members) + "}"


@dataclass(frozen=True, order=True)
class BreakpointState:
    """Pair (X, Y) with Y ⊆ X of a (k-)breakpoint construction"""
    x: SetState
    y: SetState

    def __post_init__(self):
        if not set(self.y.members) <= set(self.x.members):
            raise ValueError(f"breakpoint state requires Y ⊆ X: {self.x} / {self.y}")

    def __str__(self) -> str:
        return f"({self.x},{self.y})"
