import random

import pytest

from omegarec import (
    UPWord,
    adjoin_identity,
    ba_accepts_up,
    check_associativity,
    h_of,
    idempotent_power,
    is_simple,
    leftzero_certificate_words,
    leftzero_recognizer,
    theorem8_recognizer,
    thm6_automaton,
    thm6_certificate_words,
    thm8_reference_ba,
    up_member_weak,
)
from omegarec.errors import PreconditionError
from omegarec.witnesses import full_certificate_words, leftzero_word

from oracles import random_up_word


class TestLeftZeroFamily:
    def test_simple_with_n_elements(self):
        for n in (1, 2, 3, 4):
            rec = leftzero_recognizer(n)
            assert rec.h.target.size == n
            assert is_simple(rec.h.target)

    def test_membership(self):
        rec = leftzero_recognizer(2)
        assert up_member_weak(rec, UPWord("a", "ba"))
        assert not up_member_weak(rec, UPWord("a", "b"))

    def test_semantics_is_first_letter_recurs(self):
        rng = random.Random(50)
        rec = leftzero_recognizer(3)
        for _ in range(300):
            w = random_up_word(rng, letters="abc")
            first = (w.u + w.v)[0]
            assert up_member_weak(rec, w) == (first in w.v)

    def test_certificate_words(self):
        words = leftzero_certificate_words(3)
        assert len(words) == 3 * 2 ** 2
        assert len(set(words)) == len(words)
        assert leftzero_word(3, "b", {"a", "c"}) == ("b", "a", "c")

    def test_word_guards(self):
        with pytest.raises(PreconditionError):
            leftzero_word(2, "c", set())
        with pytest.raises(PreconditionError):
            leftzero_word(2, "a", {"a"})


class TestBlockFamily:
    def test_size_and_associativity(self):
        for n in (1, 2, 3, 4, 5):
            sg, rec = theorem8_recognizer(n)
            assert sg.size == 4 * n + 3
            assert check_associativity(sg)
            assert not is_simple(sg)

    def test_displayed_products(self):
        sg, rec = theorem8_recognizer(3)
        b = rec.h.image["b"]
        a = rec.h.image["a"]
        assert sg.name_of(sg.mul(b, b)) == "bb"
        a2 = sg.mul(a, a)
        assert sg.name_of(sg.mul(a2, a2)) == "0"
        assert sg.name_of(idempotent_power(sg, a)) == "0"
        assert adjoin_identity(sg).size == 4 * 3 + 3 + 1

    def test_membership_examples(self):
        _, rec = theorem8_recognizer(3)
        assert up_member_weak(rec, UPWord("bab", "bab"))
        assert not up_member_weak(rec, UPWord("", ("b", "a", "a", "a", "a", "b")))
        assert up_member_weak(rec, UPWord("baab", "baab"))
        # free tails inside blocks stay in the language
        assert up_member_weak(rec, UPWord("", "bab" + "a" * 7))

    def test_matches_reference_acceptor_on_samples(self):
        rng = random.Random(51)
        for n in (3, 4):
            _, rec = theorem8_recognizer(n)
            ref = thm8_reference_ba(n)
            for _ in range(200):
                w = random_up_word(rng, max_u=4, max_v=7)
                assert up_member_weak(rec, w) == ba_accepts_up(ref, w)

    def test_word_images(self):
        sg, rec = theorem8_recognizer(3)
        names = {w: sg.name_of(h_of(rec.h, w)) for w in
                 ("a", "ab", "ba", "bab", "b", "bb", "aaaa", "baaaab", "abba")}
        assert names["a"] == "a1"
        assert names["ab"] == "a1b"
        assert names["ba"] == "ba1"
        assert names["bab"] == "ba1b"
        assert names["b"] == "b"
        assert names["bb"] == "bb"
        assert names["aaaa"] == "0"
        assert names["baaaab"] == "bb"
        assert names["abba"] == "a1b"


class TestMarkerFamilies:
    def test_two_cycle_words_and_witnesses(self):
        words, provider = thm6_certificate_words(5)
        assert len(words) == 16
        assert len(set(words)) == 16
        witness = provider(words[1], words[2])
        assert witness.kind == 1 and witness.z == ("b",)
        assert provider(words[3], words[3]) is None

    def test_full_words_and_witnesses(self):
        words, provider = full_certificate_words(2)
        assert len(words) == 16
        witness = provider(words[0], words[5])
        assert witness.kind == 1
        assert provider(words[7], words[7]) is None
