import random

import pytest

from omegarec import (
    BuchiAutomaton,
    CertificationError,
    FormatError,
    UPWord,
    Witness,
    ba_accepts_up,
    ba_to_weak,
    cached_oracle,
    certify_distinct,
    certify_lower_bound,
    complement,
    full_automaton,
    leftzero_certificate_words,
    leftzero_recognizer,
    prop4_transfer,
    thm6_automaton,
    up_member_strong,
    weak_to_strong_simple,
)
from omegarec.errors import PreconditionError

EPS = ()


def complement_oracle(n):
    rec = complement(weak_to_strong_simple(leftzero_recognizer(n)))
    return lambda w: up_member_strong(rec, w)


class TestCertifyDistinct:
    def test_kind1_first_letter_family(self):
        # "a" and "b" separate under the loop context b^w in either orientation
        oracle = complement_oracle(2)
        assert certify_distinct(oracle, "a", "b", Witness(1, EPS, EPS, ("b",)))

    def test_kind2_subset_family(self):
        # markers b. and b.a differ only by kind-2 witnesses with x = "a"
        oracle = complement_oracle(2)
        u, v = ("b",), ("b", "a")
        assert not certify_distinct(oracle, u, v, Witness(1, EPS, EPS, ("a",)))
        assert not certify_distinct(oracle, u, v, Witness(1, EPS, EPS, ("b",)))
        assert certify_distinct(oracle, u, v, Witness(2, ("a",), EPS))

    def test_equal_words_never_certify(self):
        oracle = complement_oracle(2)
        for w in (Witness(1, EPS, EPS, ("b",)), Witness(2, ("a",), EPS)):
            assert not certify_distinct(oracle, "a", "a", w)

    def test_malformed_witnesses(self):
        oracle = complement_oracle(2)
        with pytest.raises(FormatError):
            certify_distinct(oracle, "a", "b", Witness(1, EPS, EPS, EPS))
        with pytest.raises(FormatError):
            certify_distinct(oracle, "a", "b", Witness(3, EPS, EPS))
        with pytest.raises(PreconditionError):
            certify_distinct(oracle, "", "b", Witness(2, EPS, EPS))


class TestCertifyLowerBound:
    def test_single_word(self):
        cert = certify_lower_bound(complement_oracle(2), ["a"], alphabet="ab", lmax=1)
        assert cert.claimed_bound == 1
        assert not cert.witnesses

    def test_first_letter_complement_family(self):
        for n in (2, 3):
            oracle = cached_oracle(complement_oracle(n))
            words = leftzero_certificate_words(n)
            cert = certify_lower_bound(oracle, words, alphabet="abc"[:n], lmax=2)
            assert cert.claimed_bound == n * 2 ** (n - 1)
            assert cert.verify(oracle)

    def test_search_is_deterministic(self):
        oracle = complement_oracle(3)
        words = leftzero_certificate_words(3)
        c1 = certify_lower_bound(oracle, words, alphabet="abc", lmax=2)
        c2 = certify_lower_bound(oracle, words, alphabet="abc", lmax=2)
        assert c1.witnesses == c2.witnesses

    def test_indistinct_words_fail(self):
        oracle = complement_oracle(2)
        with pytest.raises(CertificationError) as err:
            certify_lower_bound(oracle, ["a", "a"], alphabet="ab", lmax=1)
        assert err.value.pair == (("a",), ("a",))

    def test_needs_alphabet_for_search(self):
        with pytest.raises(PreconditionError):
            certify_lower_bound(complement_oracle(2), ["a", "b"], lmax=1)

    def test_provided_witnesses_are_verified(self):
        # kind 1 cannot separate markers that differ in their letter set only,
        # so a provider insisting on one must not certify
        oracle = complement_oracle(2)
        bad = lambda u, v: Witness(1, EPS, EPS, ("a",))
        with pytest.raises(CertificationError):
            certify_lower_bound(oracle, [("b",), ("b", "a")], witnesses=bad)


class TestProp4Transfer:
    def test_full_automaton_diagonal_letter(self):
        aut = full_automaton(2)
        diag = "T" + format(0b1001, "01x")
        holds, bound = prop4_transfer(aut, diag)
        assert holds and bound == 16

    def test_two_cycle_loop_letter(self):
        holds, bound = prop4_transfer(thm6_automaton(5), "b")
        assert holds
        assert bound >= 16
        assert bound == 379  # frozen regression value of the syntactic size

    def test_cross_edge_into_final_fails(self):
        aut = BuchiAutomaton(2, ("a",), frozenset({(0, "a", 1), (1, "a", 1)}),
                             frozenset({0}), frozenset({1}))
        holds, bound = prop4_transfer(aut, "a")
        assert not holds and bound is None

    def test_missing_self_loop_fails(self):
        aut = BuchiAutomaton(2, ("a",), frozenset({(0, "a", 0)}),
                             frozenset({0}), frozenset({1}))
        holds, _ = prop4_transfer(aut, "a")
        assert not holds

    def test_bound_below_constructed_recognizers(self):
        # the transferred bound never exceeds the weak recognizers the
        # toolkit itself builds for the same language
        aut = full_automaton(2)
        diag = "T9"
        _, bound = prop4_transfer(aut, diag)
        assert bound <= ba_to_weak(aut).h.target.size
        aut6 = thm6_automaton(5)
        _, bound6 = prop4_transfer(aut6, "b")
        assert bound6 <= ba_to_weak(aut6).h.target.size


class TestCachedOracle:
    def test_caches(self):
        calls = []

        def oracle(w):
            calls.append(w)
            return True

        wrapped = cached_oracle(oracle)
        w = UPWord("a", "b")
        assert wrapped(w) and wrapped(w)
        assert len(calls) == 1
