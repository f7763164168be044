"""
Automaton text format.

Example::

    # E1
    @type nfa
    @alphabet a b
    @states 2
    @initial 0
    @accepting 1
    @trans 0 a 1
    @trans 1 b 1

Types: nfa (finite words), safety (finite words, every state accepting
unless @accepting says otherwise, which validate() reports),
nca (coBüchi), nba (Büchi), dra/nra (Rabin, one ``@rabin G: ... | B: ...``
line per pair). State indices are 0-based. All header directives precede
the first ``@trans``; duplicate transitions are idempotent.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional, Set, Tuple, Union

from backend.common.errors import FormatError
from backend.core.models import (
    AcceptanceCondition,
    Alphabet,
    Automaton,
    Buchi,
    CoBuchi,
    FiniteReach,
    Rabin,
    RabinPair,
    WordMode,
)
from backend.core.operations import is_deterministic

from .common import Directive, directives, read_text, write_text

logger = logging.getLogger(__name__)

AUTOMATON_TYPES = ("nfa", "safety", "nca", "nba", "dra", "nra")
_RABIN_TYPES = ("dra", "nra")
_HEADER = ("type", "alphabet", "states", "initial")


def _parse_rabin(d: Directive, n: int) -> RabinPair:
    """``G: 1 2 | B: 3`` (either side may be empty)"""
    text = " ".join(d.args)
    if text.count("|") != 1:
        raise d.error("expected 'G: <states> | B: <states>'")
    left, right = (part.split() for part in text.split("|"))
    if not left or left[0] != "G:" or not right or right[0] != "B:":
        raise d.error("expected 'G: <states> | B: <states>'")
    good = [d.int_arg(t) for t in left[1:]]
    bad = [d.int_arg(t) for t in right[1:]]
    for q in good + bad:
        if not 0 <= q < n:
            raise d.error(f"state {q} out of range [0, {n})")
    return RabinPair(frozenset(good), frozenset(bad))


def parse_automaton(text: str) -> Automaton:
    """
    Parse an automaton file.

    Raises:
        FormatError: syntax, range or type errors, with the 1-based line
    """
    header: Dict[str, Directive] = {}
    accepting: Set[int] = set()
    saw_accepting = False
    pairs: List[RabinPair] = []
    edges: Set[Tuple[int, int, int]] = set()
    alphabet: Optional[Alphabet] = None
    n = 0
    kind = ""

    def require_header(d: Directive) -> None:
        missing = [key for key in _HEADER if key not in header]
        if missing:
            raise d.error(f"missing {', '.join('@' + m for m in missing)} before this line")

    for d in directives(text):
        if d.keyword in _HEADER:
            if d.keyword in header:
                raise d.error(f"duplicate directive (first on line {header[d.keyword].line})")
            if edges:
                raise d.error("header directives must precede @trans")
            header[d.keyword] = d
            if d.keyword == "type":
                if len(d.args) != 1 or d.args[0] not in AUTOMATON_TYPES:
                    raise d.error(f"expected one of {', '.join(AUTOMATON_TYPES)}")
                kind = d.args[0]
            elif d.keyword == "alphabet":
                if not d.args:
                    raise d.error("empty alphabet")
                if len(set(d.args)) != len(d.args):
                    raise d.error("duplicate symbols")
                alphabet = Alphabet(tuple(d.args))
            elif d.keyword == "states":
                n = d.single_int()
                if n < 1:
                    raise d.error("an automaton needs at least one state")
            elif d.keyword == "initial":
                if "states" not in header:
                    raise d.error("@states must precede @initial")
                q0 = d.single_int()
                if not 0 <= q0 < n:
                    raise d.error(f"state {q0} out of range [0, {n})")

        elif d.keyword == "accepting":
            require_header(d)
            if kind in _RABIN_TYPES:
                raise d.error(f"@type {kind} takes @rabin pairs, not @accepting")
            if edges:
                raise d.error("header directives must precede @trans")
            saw_accepting = True
            for q in d.int_args():
                if not 0 <= q < n:
                    raise d.error(f"state {q} out of range [0, {n})")
                accepting.add(q)

        elif d.keyword == "rabin":
            require_header(d)
            if kind not in _RABIN_TYPES:
                raise d.error(f"@rabin requires @type dra or nra, not {kind}")
            if edges:
                raise d.error("header directives must precede @trans")
            pairs.append(_parse_rabin(d, n))

        elif d.keyword == "trans":
            require_header(d)
            if len(d.args) != 3:
                raise d.error("expected '<p> <sym> <q>'")
            p, sym, q = d.int_arg(d.args[0]), d.args[1], d.int_arg(d.args[2])
            for state in (p, q):
                if not 0 <= state < n:
                    raise d.error(f"state {state} out of range [0, {n})")
            try:
                edges.add((p, alphabet.index(sym), q))
            except ValueError:
                raise d.error(f"unknown symbol {sym!r}") from None

        else:
            raise d.error("unknown directive")

    missing = [key for key in _HEADER if key not in header]
    if missing:
        raise FormatError(f"missing {', '.join('@' + m for m in missing)}")

    acceptance: AcceptanceCondition
    word_mode = WordMode.INFINITE
    if kind == "nfa":
        acceptance, word_mode = FiniteReach(frozenset(accepting)), WordMode.FINITE
    elif kind == "safety":
        if not saw_accepting:
            accepting = set(range(n))
        elif accepting != set(range(n)):
            logger.warning(f"safety automaton lists non-accepting states {sorted(set(range(n)) - accepting)}; "
                           f"kept as given")
        acceptance, word_mode = FiniteReach(frozenset(accepting)), WordMode.FINITE
    elif kind == "nca":
        acceptance = CoBuchi(frozenset(accepting))
    elif kind == "nba":
        acceptance = Buchi(frozenset(accepting))
    else:
        acceptance = Rabin(tuple(pairs))

    automaton = Automaton.from_edges(alphabet, n, header["initial"].single_int(), sorted(edges),
                                     acceptance, word_mode, safety=kind == "safety")
    if kind == "dra" and not is_deterministic(automaton):
        raise FormatError("@type dra but the transitions are nondeterministic", header["type"].line)
    logger.debug(f"parsed {kind} automaton: {n} states, {len(edges)} transitions")
    return automaton


def automaton_type(a: Automaton) -> str:
    """File type keyword for an automaton"""
    if isinstance(a.acceptance, FiniteReach):
        return "safety" if a.safety else "nfa"
    if isinstance(a.acceptance, CoBuchi):
        return "nca"
    if isinstance(a.acceptance, Buchi):
        return "nba"
    return "dra" if is_deterministic(a) else "nra"


def write_automaton(a: Automaton, comment: Optional[str] = None) -> str:
    """Normalised text form: header, acceptance, then transitions in (p, sym, q) order"""
    lines: List[str] = []
    if comment:
        lines.extend(f"# {row}" for row in comment.splitlines())
    lines.append(f"@type {automaton_type(a)}")
    lines.append(f"@alphabet {' '.join(a.alphabet.symbols)}")
    lines.append(f"@states {a.state_count}")
    lines.append(f"@initial {a.initial}")
    if isinstance(a.acceptance, Rabin):
        for pair in a.acceptance.pairs:
            good = " ".join(str(q) for q in sorted(pair.good))
            bad = " ".join(str(q) for q in sorted(pair.bad))
            lines.append(f"@rabin G: {good} | B: {bad}".replace("  ", " ").rstrip())
    else:
        lines.append(" ".join(["@accepting", *(str(q) for q in sorted(a.accepting))]))
    for p, sym, q in a.edges():
        lines.append(f"@trans {p} {a.alphabet[sym]} {q}")
    return "\n".join(lines) + "\n"


def load_automaton(path: Union[str, Path]) -> Automaton:
    try:
        return parse_automaton(read_text(path))
    except FormatError as exc:
        raise FormatError(f"{path}: {exc.message}", exc.line) from None


def save_automaton(a: Automaton, path: Union[str, Path], comment: Optional[str] = None) -> Path:
    return write_text(path, write_automaton(a, comment))
