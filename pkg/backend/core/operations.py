"""
Core operations on automata: validation, membership, products, emptiness
and a few structural helpers.
"""

import itertools
import logging
from collections import deque
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from backend.common.errors import AlphabetMismatchError

from .lasso import Lasso, find_lasso, loop_conditions
from .models import (
    AcceptanceCondition,
    Alphabet,
    Automaton,
    Buchi,
    CoBuchi,
    FiniteReach,
    Rabin,
    RabinPair,
    UPWord,
    WordMode,
)

logger = logging.getLogger(__name__)

Word = Sequence[int]


# ============================================================================
# Validation
# ============================================================================

def validate(a: Automaton) -> List[str]:
    """
    Check all type invariants of an automaton.

    Returns:
        One human-readable diagnostic per violation (empty list if valid)
    """
    diagnostics: List[str] = []
    n = a.state_count
    symbols = a.alphabet.symbols

    if len(set(symbols)) != len(symbols):
        diagnostics.append(f"alphabet has duplicate symbols: {list(symbols)}")
    for name in symbols:
        if not name or any(ch.isspace() for ch in name):
            diagnostics.append(f"invalid symbol name {name!r}")

    if n < 1:
        diagnostics.append("automaton has no states")
    if not 0 <= a.initial < max(n, 1):
        diagnostics.append(f"initial state out of range: {a.initial} (state_count={n})")

    if len(a.transitions) != n:
        diagnostics.append(f"transition table has {len(a.transitions)} rows for {n} states")
    for p, row in enumerate(a.transitions):
        if len(row) != len(symbols):
            diagnostics.append(f"state {p}: transition row has {len(row)} entries for {len(symbols)} symbols")
        for sym, targets in enumerate(row):
            for q in sorted(targets):
                if not 0 <= q < n:
                    name = symbols[sym] if sym < len(symbols) else sym
                    diagnostics.append(f"transition target out of range: {p} --{name}--> {q} (state_count={n})")

    acceptance = a.acceptance
    if isinstance(acceptance, FiniteReach):
        if a.word_mode != WordMode.FINITE:
            diagnostics.append("finite-acceptance condition requires word_mode=finite")
    elif a.word_mode != WordMode.INFINITE:
        diagnostics.append(f"{acceptance.kind.value} condition requires word_mode=infinite")

    for q in sorted(acceptance.states()):
        if not 0 <= q < n:
            diagnostics.append(f"acceptance state out of range: {q} (state_count={n})")

    if a.safety:
        if not isinstance(acceptance, FiniteReach):
            diagnostics.append("safety automaton must use finite-acceptance")
        else:
            missing = sorted(set(range(n)) - acceptance.accepting)
            if missing:
                diagnostics.append(f"safety automaton has non-accepting states: {missing}")

    if a.labels and len(a.labels) != n:
        diagnostics.append(f"{len(a.labels)} state labels for {n} states")
    return diagnostics


def is_deterministic(a: Automaton) -> bool:
    """Every (state, symbol) has at most one successor"""
    return all(len(targets) <= 1 for row in a.transitions for targets in row)


def deterministic_step(a: Automaton, q: int, sym: int) -> Optional[int]:
    """The unique successor of q on sym in a deterministic automaton, None if undefined"""
    for target in a.transitions[q][sym]:
        return target
    return None


def is_complete(a: Automaton) -> bool:
    """Every (state, symbol) has at least one successor"""
    return all(targets for row in a.transitions for targets in row)


def require_same_alphabet(a: Automaton, b: Automaton) -> None:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatchError(a.alphabet.symbols, b.alphabet.symbols)


def _require_mode(a: Automaton, mode: WordMode, operation: str) -> None:
    if a.word_mode != mode:
        raise ValueError(f"{operation} requires word_mode={mode.value}, got {a.word_mode.value}")


# ============================================================================
# Membership
# ============================================================================

def reachable_set(a: Automaton, word: Word) -> frozenset:
    """States reachable from the initial state on ``word``"""
    current = frozenset([a.initial])
    for letter in word:
        current = a.post(current, letter)
        if not current:
            break
    return current


def member_finite(a: Automaton, word: Word) -> bool:
    """On-the-fly subset propagation; true iff some run on word ends in F"""
    _require_mode(a, WordMode.FINITE, "member_finite")
    return bool(reachable_set(a, word) & a.accepting)


def member_up(a: Automaton, w: UPWord) -> bool:
    """
    Acceptance of u·v^ω via the product with the lasso structure of the word.

    Product nodes are (state, position); reading position i moves to
    w.next_position(i). An accepting cycle reachable from (q0, 0) exists
    iff the word is accepted.
    """
    _require_mode(a, WordMode.INFINITE, "member_up")

    def successors(node):
        q, i = node
        letter = w.letter_at(i)
        j = w.next_position(i)
        return [(letter, (r, j)) for r in sorted(a.transitions[q][letter])]

    conditions = loop_conditions(a.acceptance, project=lambda node: node[0])
    return find_lasso((a.initial, 0), successors, conditions) is not None


def deterministic_member_up(d: Automaton, w: UPWord) -> bool:
    """Membership for deterministic automata by running the word until it cycles"""
    seen: Dict[Tuple[int, int], int] = {}
    trace: List[int] = []
    q, i = d.initial, 0
    while (q, i) not in seen:
        seen[(q, i)] = len(trace)
        trace.append(q)
        targets = d.transitions[q][w.letter_at(i)]
        if not targets:
            return False
        (q,) = targets
        i = w.next_position(i)
    loop = set(trace[seen[(q, i)]:])
    acceptance = d.acceptance
    if isinstance(acceptance, Buchi):
        return bool(loop & acceptance.accepting)
    if isinstance(acceptance, CoBuchi):
        return loop <= acceptance.accepting
    if isinstance(acceptance, Rabin):
        return any(loop & pair.good and not loop & pair.bad for pair in acceptance.pairs)
    raise ValueError("deterministic_member_up requires an ω-automaton")


# ============================================================================
# Products
# ============================================================================

AcceptanceBuilder = Callable[[Sequence[Tuple[int, int]], Automaton, Automaton], AcceptanceCondition]


def both_accepting(pairs: Sequence[Tuple[int, int]], a: Automaton, b: Automaton) -> AcceptanceCondition:
    """F = F_a × F_b; intersection for finite words and coBüchi"""
    accepting = {i for i, (p, q) in enumerate(pairs) if p in a.accepting and q in b.accepting}
    return type(a.acceptance)(frozenset(accepting))


def either_accepting(pairs: Sequence[Tuple[int, int]], a: Automaton, b: Automaton) -> AcceptanceCondition:
    """Union of the accepting sets (finite words)"""
    accepting = {i for i, (p, q) in enumerate(pairs) if p in a.accepting or q in b.accepting}
    return type(a.acceptance)(frozenset(accepting))


def left_acceptance(pairs: Sequence[Tuple[int, int]], a: Automaton, b: Automaton) -> AcceptanceCondition:
    """Lift the acceptance of the left component"""
    acceptance = a.acceptance
    if isinstance(acceptance, Rabin):
        lifted = []
        for pair in acceptance.pairs:
            lifted.append(RabinPair(
                good=frozenset(i for i, (p, _) in enumerate(pairs) if p in pair.good),
                bad=frozenset(i for i, (p, _) in enumerate(pairs) if p in pair.bad),
            ))
        return Rabin(tuple(lifted))
    accepting = {i for i, (p, _) in enumerate(pairs) if p in acceptance.accepting}
    return type(acceptance)(frozenset(accepting))


def product(a: Automaton, b: Automaton, acceptance_builder: AcceptanceBuilder = both_accepting) -> Automaton:
    """
    Synchronous product on reachable pairs.

    Args:
        a, b: automata over the same alphabet
        acceptance_builder: (pairs, a, b) -> acceptance condition over pair indices

    Returns:
        Automaton whose labels are the (p, q) pairs, in BFS order
    """
    require_same_alphabet(a, b)
    index: Dict[Tuple[int, int], int] = {(a.initial, b.initial): 0}
    pairs: List[Tuple[int, int]] = [(a.initial, b.initial)]
    edges = []
    queue = deque([(a.initial, b.initial)])
    while queue:
        p, q = queue.popleft()
        source = index[(p, q)]
        for sym in a.alphabet.indices:
            for p2 in sorted(a.transitions[p][sym]):
                for q2 in sorted(b.transitions[q][sym]):
                    target = (p2, q2)
                    if target not in index:
                        index[target] = len(pairs)
                        pairs.append(target)
                        queue.append(target)
                    edges.append((source, sym, index[target]))
    acceptance = acceptance_builder(pairs, a, b)
    return Automaton.from_edges(a.alphabet, len(pairs), 0, edges, acceptance, a.word_mode, labels=pairs)


# ============================================================================
# Emptiness
# ============================================================================

def shortest_accepted(a: Automaton) -> Optional[Tuple[int, ...]]:
    """Breadth-first search for a shortest accepted finite word"""
    _require_mode(a, WordMode.FINITE, "shortest_accepted")
    parent: Dict[int, Tuple[int, int]] = {}
    seen = {a.initial}
    queue = deque([a.initial])
    while queue:
        q = queue.popleft()
        if q in a.accepting:
            word = []
            while q != a.initial:
                q, letter = parent[q]
                word.append(letter)
            return tuple(reversed(word))
        for sym in a.alphabet.indices:
            for r in sorted(a.transitions[q][sym]):
                if r not in seen:
                    seen.add(r)
                    parent[r] = (q, sym)
                    queue.append(r)
    return None


def accepting_lasso(a: Automaton) -> Optional[Lasso]:
    """Accepting lasso of an ω-automaton (nodes are its states)"""
    _require_mode(a, WordMode.INFINITE, "accepting_lasso")

    def successors(q):
        return [(sym, r) for sym in a.alphabet.indices for r in sorted(a.transitions[q][sym])]

    return find_lasso(a.initial, successors, loop_conditions(a.acceptance))


def emptiness(a: Automaton) -> Optional[Union[Tuple[int, ...], UPWord]]:
    """
    Emptiness check with witness.

    Returns:
        None if L(a) is empty; otherwise a shortest accepted word (finite
        words) or an accepted UPWord (Büchi/coBüchi/Rabin)
    """
    if a.word_mode == WordMode.FINITE:
        return shortest_accepted(a)
    lasso = accepting_lasso(a)
    return lasso.word if lasso is not None else None


# ============================================================================
# Structural helpers
# ============================================================================

def reachable_states(a: Automaton) -> List[int]:
    """States reachable from the initial state, in BFS order"""
    seen = {a.initial}
    order = [a.initial]
    queue = deque([a.initial])
    while queue:
        q = queue.popleft()
        for sym in a.alphabet.indices:
            for r in sorted(a.transitions[q][sym]):
                if r not in seen:
                    seen.add(r)
                    order.append(r)
                    queue.append(r)
    return order


def coreachable_states(a: Automaton, targets: Iterable[int]) -> set:
    """States from which some state of ``targets`` is reachable"""
    predecessors: Dict[int, set] = {q: set() for q in a.states}
    for p, _sym, q in a.edges():
        if 0 <= q < a.state_count:
            predecessors[q].add(p)
    result = set(targets)
    queue = deque(result)
    while queue:
        q = queue.popleft()
        for p in predecessors[q]:
            if p not in result:
                result.add(p)
                queue.append(p)
    return result


def restrict(a: Automaton, keep: Sequence[int]) -> Automaton:
    """
    Sub-automaton on ``keep`` (the initial state must be kept), renumbered
    in the given order.
    """
    index = {q: i for i, q in enumerate(keep)}
    edges = [
        (index[p], sym, index[q])
        for p in keep
        for sym in a.alphabet.indices
        for q in a.transitions[p][sym]
        if q in index
    ]
    acceptance = a.acceptance
    if isinstance(acceptance, Rabin):
        new_acceptance = Rabin(tuple(
            RabinPair(frozenset(index[q] for q in pair.good if q in index),
                      frozenset(index[q] for q in pair.bad if q in index))
            for pair in acceptance.pairs))
    else:
        new_acceptance = type(acceptance)(frozenset(index[q] for q in acceptance.accepting if q in index))
    labels = [a.labels[q] for q in keep] if a.labels else ()
    return Automaton.from_edges(a.alphabet, len(keep), index[a.initial], edges, new_acceptance,
                                a.word_mode, labels=labels, safety=a.safety)


def trim(a: Automaton) -> Automaton:
    """Finite words: keep reachable states that can still reach F (plus the initial state)"""
    _require_mode(a, WordMode.FINITE, "trim")
    useful = coreachable_states(a, a.accepting)
    keep = [q for q in reachable_states(a) if q in useful or q == a.initial]
    return restrict(a, keep)


def trivial_universal(alphabet: Alphabet, word_mode: WordMode = WordMode.FINITE) -> Automaton:
    """One-state automaton accepting every word (A_triv)"""
    edges = [(0, sym, 0) for sym in alphabet.indices]
    acceptance = FiniteReach(frozenset([0])) if word_mode == WordMode.FINITE else Buchi(frozenset([0]))
    return Automaton.from_edges(alphabet, 1, 0, edges, acceptance, word_mode)


def is_universal(a: Automaton) -> bool:
    """
    Finite words: the subset construction reaches neither a rejecting set nor
    the empty set. Sets holding an accepting universal sink are not expanded.
    """
    _require_mode(a, WordMode.FINITE, "is_universal")
    sinks = accepting_sinks(a)
    start = frozenset([a.initial])
    seen = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        if not current & a.accepting:
            return False
        if current & sinks:
            continue
        for sym in a.alphabet.indices:
            nxt = a.post(current, sym)
            if not nxt:
                return False
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


def accepting_sinks(a: Automaton) -> frozenset:
    """Accepting states with a self-loop on every letter (universal sinks)"""
    if not a.is_finite and not isinstance(a.acceptance, (Buchi, CoBuchi)):
        return frozenset()
    return frozenset(
        q for q in a.accepting
        if 0 <= q < a.state_count and all(q in a.transitions[q][sym] for sym in a.alphabet.indices)
    )


# ============================================================================
# Sampled equivalence
# ============================================================================

def all_words(alphabet_size: int, max_len: int) -> Iterator[Tuple[int, ...]]:
    """All words of length 0..max_len in length-lexicographic order"""
    for length in range(max_len + 1):
        yield from itertools.product(range(alphabet_size), repeat=length)


def all_upwords(alphabet_size: int, max_prefix: int, max_period: int) -> Iterator[UPWord]:
    """All UPWords with |u| <= max_prefix and 1 <= |v| <= max_period"""
    for prefix in all_words(alphabet_size, max_prefix):
        for length in range(1, max_period + 1):
            for period in itertools.product(range(alphabet_size), repeat=length):
                yield UPWord(prefix, period)


def sampled_equivalence(
    a: Automaton,
    b: Automaton,
    max_len: Optional[int] = None,
    max_prefix: Optional[int] = None,
    max_period: Optional[int] = None,
) -> Optional[Union[Tuple[int, ...], UPWord]]:
    """
    Compare two automata on a finite family of words.

    Returns:
        The first word (or UPWord) on which the verdicts differ, else None
    """
    require_same_alphabet(a, b)
    if a.word_mode != b.word_mode:
        raise ValueError("cannot compare finite-word and infinite-word automata")
    from config import get_config
    cfg = get_config()
    if a.word_mode == WordMode.FINITE:
        length = cfg.sample_word_length if max_len is None else max_len
        for word in all_words(len(a.alphabet), length):
            if member_finite(a, word) != member_finite(b, word):
                return word
        return None
    prefix = cfg.sample_prefix if max_prefix is None else max_prefix
    period = cfg.sample_period if max_period is None else max_period
    for w in all_upwords(len(a.alphabet), prefix, period):
        if member_up(a, w) != member_up(b, w):
            return w
    return None


__all__ = [
    "accepting_lasso",
    "accepting_sinks",
    "all_upwords",
    "all_words",
    "both_accepting",
    "coreachable_states",
    "deterministic_member_up",
    "deterministic_step",
    "either_accepting",
    "emptiness",
    "is_complete",
    "is_deterministic",
    "is_universal",
    "left_acceptance",
    "member_finite",
    "member_up",
    "product",
    "reachable_set",
    "reachable_states",
    "require_same_alphabet",
    "restrict",
    "sampled_equivalence",
    "shortest_accepted",
    "trim",
    "trivial_universal",
    "validate",
]
