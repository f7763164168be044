"""
Unit Tests for core operations

Membership, products, emptiness and structural helpers.
"""

import pytest

from backend.common.errors import AlphabetMismatchError
from backend.core.families import far_a, two_state_universal
from backend.core.models import Alphabet, Automaton, CoBuchi, FiniteReach, Rabin, RabinPair, UPWord, WordMode
from backend.core.operations import (
    accepting_sinks,
    all_upwords,
    all_words,
    deterministic_member_up,
    emptiness,
    is_complete,
    is_deterministic,
    is_universal,
    member_finite,
    member_up,
    product,
    reachable_states,
    sampled_equivalence,
    trim,
    trivial_universal,
    validate,
)


class TestValidate:
    """Type invariants"""

    def test_valid(self, e1, far_a_m3):
        assert validate(e1) == []
        assert validate(far_a_m3) == []

    def test_target_out_of_range(self):
        a = Automaton.from_edges(("a",), 1, 0, [(0, 0, 5)], FiniteReach({0}))

        assert any("out of range" in d for d in validate(a))

    def test_safety_reports_rejecting_states(self):
        a = Automaton.from_edges(("a",), 2, 0, [(0, 0, 1)], FiniteReach({0}), safety=True)

        assert any("non-accepting" in d for d in validate(a))

    def test_word_mode_mismatch(self):
        a = Automaton.from_edges(("a",), 1, 0, [], CoBuchi({0}), WordMode.FINITE)

        assert validate(a)


class TestMembership:
    """Finite and ultimately periodic membership"""

    def test_member_finite(self, e1):
        assert not member_finite(e1, ())
        assert member_finite(e1, (0,))
        assert member_finite(e1, (0, 0, 0))

    def test_member_finite_rejects_infinite_mode(self, finitely_many_b):
        with pytest.raises(ValueError):
            member_finite(finitely_many_b, (0,))

    def test_member_up_buchi(self, finitely_many_b):
        assert member_up(finitely_many_b, UPWord((1, 1), (0,)))
        assert not member_up(finitely_many_b, UPWord((), (0, 1)))

    def test_member_up_cobuchi(self, finitely_many_b_cobuchi):
        assert member_up(finitely_many_b_cobuchi, UPWord((1,), (0,)))
        assert not member_up(finitely_many_b_cobuchi, UPWord((0,), (1,)))

    def test_member_up_rabin(self):
        """Pair (G={1}, B={0}) over a deterministic two-state automaton: finitely many b"""
        a = Automaton.from_edges(("a", "b"), 2, 0, [(0, 0, 1), (0, 1, 0), (1, 0, 1), (1, 1, 0)],
                                 Rabin((RabinPair({1}, {0}),)))

        assert member_up(a, UPWord((1,), (0,)))
        assert not member_up(a, UPWord((), (0, 1)))

    def test_deterministic_member_up(self, infinitely_many_a):
        assert deterministic_member_up(infinitely_many_a, UPWord((), (0, 1)))
        assert not deterministic_member_up(infinitely_many_a, UPWord((0,), (1,)))
        assert member_up(infinitely_many_a, UPWord((), (0, 1)))


class TestProductAndEmptiness:
    """Products and emptiness witnesses"""

    def test_product_intersection(self, e1):
        p = product(e1, e1)

        assert not member_finite(p, ())
        assert member_finite(p, (0, 0))

    def test_alphabet_mismatch(self, e1, far_a_m3):
        with pytest.raises(AlphabetMismatchError):
            product(e1, far_a_m3)

    def test_finite_witness_is_shortest(self, e1, far_a_m3):
        assert emptiness(e1) == (0,)
        assert len(emptiness(far_a_m3)) == 4

    def test_empty_language(self):
        a = Automaton.from_edges(("a",), 2, 0, [(0, 0, 1)], FiniteReach(set()))

        assert emptiness(a) is None

    def test_omega_witness_is_accepted(self, finitely_many_b):
        w = emptiness(finitely_many_b)

        assert isinstance(w, UPWord)
        assert member_up(finitely_many_b, w)

    def test_omega_empty(self):
        """coBüchi with F off every cycle"""
        a = Automaton.from_edges(("a",), 2, 0, [(0, 0, 1), (1, 0, 1)], CoBuchi({0}))

        assert emptiness(a) is None

    def test_rabin_without_pairs_is_empty(self):
        a = Automaton.from_edges(("a",), 1, 0, [(0, 0, 0)], Rabin(()))

        assert emptiness(a) is None


class TestStructure:
    """Reachability, trimming and universality"""

    def test_is_deterministic_and_complete(self, e1, two_state_universal):
        assert not is_deterministic(e1)
        assert is_complete(two_state_universal)
        assert not is_complete(Automaton.from_edges(("a", "b"), 1, 0, [(0, 0, 0)], FiniteReach({0})))

    def test_trim_drops_dead_states(self):
        a = Automaton.from_edges(("a", "b"), 4, 0, [(0, 0, 1), (0, 1, 2), (2, 0, 2)], FiniteReach({1}))
        trimmed = trim(a)

        assert trimmed.state_count == 2
        assert member_finite(trimmed, (0,))
        assert not member_finite(trimmed, (1,))

    def test_reachable_states_bfs_order(self, far_a_m3):
        order = reachable_states(far_a_m3)

        assert order[0] == 0
        assert sorted(order) == list(range(8))

    def test_universality(self, e1, two_state_universal):
        assert is_universal(two_state_universal)
        assert is_universal(trivial_universal(Alphabet(("a", "b"))))
        assert not is_universal(e1)

    def test_accepting_sinks(self, far_a_m3, two_state_universal):
        assert accepting_sinks(far_a_m3) == frozenset({7})
        assert accepting_sinks(two_state_universal) == frozenset({0, 1})


class TestSampledEquivalence:
    """Word enumeration and sampled comparison"""

    def test_enumeration_sizes(self):
        assert len(list(all_words(2, 2))) == 7
        assert len(list(all_upwords(1, 1, 2))) == 4

    def test_equal_languages(self):
        assert sampled_equivalence(two_state_universal(), trivial_universal(Alphabet(("a", "b")))) is None

    def test_first_counterexample_is_shortest(self, e1):
        witness = sampled_equivalence(e1, trivial_universal(e1.alphabet), max_len=3)

        assert witness == ()

    def test_omega_counterexample(self, finitely_many_b, infinitely_many_a):
        witness = sampled_equivalence(finitely_many_b, infinitely_many_a)

        assert witness is not None
        assert member_up(finitely_many_b, witness) != member_up(infinitely_many_a, witness)

    def test_mixed_word_modes_rejected(self, finitely_many_b):
        with pytest.raises(ValueError):
            sampled_equivalence(far_a(1), finitely_many_b)
