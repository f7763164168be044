"""
Unit Tests for the core data model
"""

import pytest

from backend.core.models import (
    Alphabet,
    Automaton,
    AutomatonStats,
    BreakpointState,
    FiniteReach,
    Rabin,
    RabinPair,
    SetState,
    UPWord,
    WordMode,
)


class TestAlphabet:
    """Symbol names and indices"""

    def test_encode_decode(self):
        alphabet = Alphabet(("a", "b", "#"))

        assert alphabet.encode(["b", "#", "a"]) == (1, 2, 0)
        assert alphabet.decode((2, 0)) == ["#", "a"]
        assert alphabet.parse_word(" a  b ") == (0, 1)
        assert alphabet.parse_word("") == ()

    def test_unknown_symbol(self):
        with pytest.raises(ValueError, match="unknown symbol"):
            Alphabet(("a",)).index("z")


class TestUPWord:
    """Ultimately periodic words"""

    def test_empty_period_rejected(self):
        with pytest.raises(ValueError):
            UPWord((0,), ())

    def test_positions_wrap_into_period(self):
        w = UPWord((0,), (1, 0))

        assert w.positions == 3
        assert [w.letter_at(i) for i in range(3)] == [0, 1, 0]
        assert w.next_position(2) == 1

    def test_render(self):
        alphabet = Alphabet(("a", "b"))

        assert UPWord((0,), (1,)).render(alphabet) == "a : b"
        assert UPWord((), (0, 1)).render(alphabet) == ": a b"


class TestAutomaton:
    """Construction and access"""

    def test_from_edges_is_idempotent(self, e1):
        again = Automaton.from_edges(e1.alphabet, 2, 0, list(e1.edges()) * 2, e1.acceptance)

        assert again.transitions == e1.transitions

    def test_source_out_of_range(self):
        with pytest.raises(ValueError, match="source out of range"):
            Automaton.from_edges(("a",), 1, 0, [(3, 0, 0)], FiniteReach({0}))

    def test_default_word_mode(self, e1):
        assert e1.word_mode == WordMode.FINITE
        assert e1.is_finite

    def test_rabin_has_no_accepting_set(self):
        a = Automaton.from_edges(("a",), 1, 0, [(0, 0, 0)], Rabin((RabinPair({0}, set()),)))

        assert a.word_mode == WordMode.INFINITE
        with pytest.raises(TypeError):
            _ = a.accepting

    def test_to_dict(self, e1):
        data = e1.to_dict()

        assert data["alphabet"] == ["a"]
        assert data["accepting"] == [1]
        assert data["transitions"] == [[0, 0, 0], [0, 0, 1]]

    def test_labels(self, far_a_m3):
        assert far_a_m3.label(0) == "s"
        assert far_a_m3.label(7) == "t"

    def test_stats(self, far_a_m3):
        stats = AutomatonStats.of(far_a_m3)

        assert stats.states == 8
        assert stats.transitions == 18
        assert stats.nondeterministic_points == 1


class TestConstructionLabels:
    """SetState / BreakpointState"""

    def test_set_state_is_sorted(self):
        state = SetState.of([3, 1, 3])

        assert state.members == (1, 3)
        assert str(state) == "{1,3}"
        assert 3 in state and len(state) == 2

    def test_breakpoint_requires_subset(self):
        with pytest.raises(ValueError):
            BreakpointState(SetState.of([1]), SetState.of([2]))
