import itertools
import random

import pytest

from omegarec import (
    BuchiAutomaton,
    CapacityError,
    UPWord,
    ba_accepts_up,
    full_automaton,
    full_letter_map,
    full_word_map,
    nfa_accepts,
    profile,
    thm6_automaton,
    thm6_word,
    thm6_word_set,
    thm8_reference_ba,
)
from omegarec.buchi import letter_profile, relation_mask, relation_token
from omegarec.errors import PreconditionError

from oracles import lasso_accepts_up, random_automaton, random_up_word


def one_state_loop():
    return BuchiAutomaton(1, ("a",), frozenset({(0, "a", 0)}),
                          frozenset({0}), frozenset({0}))


class TestNfaAccepts:
    def test_one_state_loop(self):
        aut = one_state_loop()
        for k in range(1, 6):
            assert nfa_accepts(aut, "a" * k)
        assert nfa_accepts(aut, "")  # initial is final

    def test_two_cycle_marker_path(self):
        aut = thm6_automaton(5)
        # the cell marker for (1, 1) runs from state 1 to state 3 (1-based)
        w = thm6_word(5, 1, 1)
        assert w == "a" * 3 + "b" + "a" * 9
        prof = profile(aut, w)
        assert (prof.reach[0] >> 2) & 1

    def test_full_automaton_letter_semantics(self):
        aut = full_automaton(2)
        for mask in range(16):
            tok = relation_token(2, mask)
            prof = profile(aut, (tok,))
            for p in range(2):
                for q in range(2):
                    assert ((prof.reach[p] >> q) & 1) == ((mask >> (p * 2 + q)) & 1)

    def test_unknown_letter(self):
        with pytest.raises(PreconditionError):
            nfa_accepts(one_state_loop(), "b")


class TestProfile:
    def test_single_letter_endpoint_final(self):
        aut = BuchiAutomaton(2, ("a",), frozenset({(0, "a", 1)}),
                             frozenset({0}), frozenset({1}))
        prof = profile(aut, "a", extended=True)
        assert prof.entry(0, 1) == 2

    def test_morphism_law(self):
        rng = random.Random(21)
        checks = 0
        for _ in range(30):
            aut = random_automaton(rng, rng.randint(1, 5))
            for extended in (False, True):
                for _ in range(10):
                    u = tuple(rng.choice("ab") for _ in range(rng.randint(1, 5)))
                    v = tuple(rng.choice("ab") for _ in range(rng.randint(1, 5)))
                    left = profile(aut, u + v, extended)
                    right = profile(aut, u, extended).compose(profile(aut, v, extended))
                    assert left == right
                    checks += 1
        assert checks >= 500

    def test_two_cycle_marker_profiles(self):
        for n in (3, 5, 7):
            aut = thm6_automaton(n)
            m = (n - 1) // 2
            for i in range(1, m + 1):
                for j in range(1, m + 1):
                    prof = profile(aut, thm6_word(n, i, j))
                    for k in range(n):
                        for l in range(n):
                            expected = (k == l) or (k, l) == (i - 1, j + m - 1)
                            assert bool((prof.reach[k] >> l) & 1) == expected

    def test_empty_word_rejected(self):
        with pytest.raises(PreconditionError):
            profile(one_state_loop(), "")


class TestBaAcceptsUp:
    def test_one_state_loop_a_omega(self):
        assert ba_accepts_up(one_state_loop(), UPWord("", "a"))

    def test_reference_family_examples(self):
        aut = thm8_reference_ba(3)
        assert ba_accepts_up(aut, UPWord("bab", "bab"))
        assert not ba_accepts_up(aut, UPWord("", "baaaab"))
        assert ba_accepts_up(aut, UPWord("baab", "baab"))

    def test_exhaustive_small_against_lasso_oracle(self):
        rng = random.Random(22)
        words = [UPWord(u, v)
                 for lu in range(0, 4) for u in itertools.product("ab", repeat=lu)
                 for lv in range(1, 4) for v in itertools.product("ab", repeat=lv)]
        for _ in range(20):
            aut = random_automaton(rng, rng.randint(1, 4))
            for w in words:
                assert ba_accepts_up(aut, w) == lasso_accepts_up(aut, w)

    def test_random_larger_against_lasso_oracle(self):
        rng = random.Random(23)
        checks = 0
        for _ in range(25):
            aut = random_automaton(rng, rng.randint(5, 7))
            for _ in range(40):
                w = random_up_word(rng, max_u=4, max_v=4)
                assert ba_accepts_up(aut, w) == lasso_accepts_up(aut, w)
                checks += 1
        assert checks >= 1000


class TestFullAutomaton:
    def test_one_state(self):
        aut = full_automaton(1)
        assert aut.alphabet == ("T0", "T1")
        assert len(aut.transitions) == 1
        assert nfa_accepts(aut, ("T1",))
        assert not nfa_accepts(aut, ("T0",))

    def test_two_states_counts(self):
        aut = full_automaton(2)
        assert len(aut.alphabet) == 16
        assert len(aut.transitions) == 32  # sum of |T| over all letters

    def test_context_distinguishes_letters(self):
        aut = full_automaton(2)
        for x in range(16):
            for y in range(16):
                if x == y:
                    continue
                diff = x ^ y
                bit = (diff & -diff).bit_length() - 1
                p, q = divmod(bit, 2)
                ctx_p = relation_token(2, 1 << (p * 2 + p))
                ctx_q = relation_token(2, 1 << (q * 2 + q))
                wx = (ctx_p, relation_token(2, x), ctx_q)
                wy = (ctx_p, relation_token(2, y), ctx_q)
                assert nfa_accepts(aut, wx) != nfa_accepts(aut, wy)

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            full_automaton(4)


class TestFullLetterMap:
    def test_letter_without_transitions(self):
        aut = BuchiAutomaton(2, ("a", "b"), frozenset({(0, "b", 1)}),
                             frozenset({0}), frozenset({1}))
        mapping = full_letter_map(aut)
        assert relation_mask(2, mapping["a"]) == 0

    def test_word_map_is_letterwise(self):
        rng = random.Random(24)
        aut = random_automaton(rng, 3)
        for _ in range(30):
            u = tuple(rng.choice("ab") for _ in range(rng.randint(1, 4)))
            v = tuple(rng.choice("ab") for _ in range(rng.randint(1, 4)))
            assert full_word_map(aut, u + v) == full_word_map(aut, u) + full_word_map(aut, v)

    def test_membership_transfers(self):
        rng = random.Random(25)
        sampled = 0
        while sampled < 200:
            aut = random_automaton(rng, rng.randint(1, 3))
            image = full_automaton(aut.states, aut.initial, aut.final)
            for _ in range(20):
                w = tuple(rng.choice("ab") for _ in range(rng.randint(1, 6)))
                assert nfa_accepts(aut, w) == nfa_accepts(image, full_word_map(aut, w))
                sampled += 1


class TestTwoCycleFamily:
    def test_even_or_small_rejected(self):
        for n in (1, 2, 4):
            with pytest.raises(PreconditionError):
                thm6_automaton(n)

    def test_marker_exponent_sum(self):
        for n in (3, 5, 7):
            m = (n - 1) // 2
            for i in range(1, m + 1):
                for j in range(1, m + 1):
                    w = thm6_word(n, i, j)
                    assert len(w) - 1 == 2 * m * (m + 1)

    def test_empty_set_marker_is_identity_profile(self):
        aut = thm6_automaton(5)
        w = thm6_word_set(5, [])
        assert w and set(w) == {"a"}
        prof = profile(aut, w)
        assert all(prof.reach[q] == 1 << q for q in range(5))

    def test_set_marker_rows(self):
        n, m = 5, 2
        aut = thm6_automaton(n)
        cells = [(i, j) for i in range(1, m + 1) for j in range(1, m + 1)]
        for r in range(len(cells) + 1):
            for chosen in itertools.combinations(cells, r):
                prof = profile(aut, thm6_word_set(n, chosen))
                for i in range(1, m + 1):
                    row = prof.reach[i - 1]
                    expected = 1 << (i - 1)
                    for (ci, cj) in chosen:
                        if ci == i:
                            expected |= 1 << (cj + m - 1)
                    assert row == expected

    def test_loop_letter_precondition_at_final_state(self):
        for n in (3, 5, 7):
            aut = thm6_automaton(n)
            final = next(iter(aut.final))
            for q in range(n):
                assert ((q, "b", final) in aut.transitions) == (q == final)


class TestReferenceFamily:
    def test_needs_three(self):
        with pytest.raises(PreconditionError):
            thm8_reference_ba(2)

    def test_block_length_two_accepts(self):
        aut = thm8_reference_ba(3)
        assert ba_accepts_up(aut, UPWord("baab", "baab"))

    def test_free_part_allowed(self):
        aut = thm8_reference_ba(3)
        assert ba_accepts_up(aut, UPWord("", ("b", "a", "b", "a", "a", "a", "a")))

    def test_against_lasso_oracle(self):
        rng = random.Random(26)
        aut = thm8_reference_ba(3)
        for _ in range(150):
            w = random_up_word(rng, max_u=4, max_v=6)
            assert ba_accepts_up(aut, w) == lasso_accepts_up(aut, w)
