import pytest
from hypothesis import given, settings

from schottky_limits.freewords import (
    DEFAULT_FAMILY,
    EMPTY,
    BadIndex,
    NotReduced,
    PrefixFreeViolated,
    SymbolWord,
    Word,
    WordFamily,
    _symbol_words,
    doubled_word,
    expand,
    is_prefix_free,
    omega,
    reduce,
    reverse,
    theta,
    verify_free_generation,
)

from conftest import words


def all_b_rule(n):
    return Word(tuple([("b", 1)] * n))


def a_then_b_rule(n):
    return Word(tuple([("a", 1)] * n + [("b", 1)]))


class TestWord:
    def test_string_round_trip(self):
        for s in ("e", "a", "abAB", "bbaaBB"):
            assert Word.from_string(s).to_string() == s

    def test_bad_letter(self):
        with pytest.raises(ValueError):
            Word.from_string("abc")

    def test_inverse(self):
        assert Word.from_string("ab").inverse() == Word.from_string("BA")

    @given(words())
    def test_inverse_involution(self, w):
        assert w.inverse().inverse() == w


class TestOmega:
    def test_first_words(self):
        assert omega(1) == Word.from_string("ba")
        assert omega(2) == Word.from_string("bba")

    def test_lengths(self):
        for n in range(1, 51):
            assert len(omega(n)) == n + 1

    def test_bad_index(self):
        with pytest.raises(BadIndex):
            omega(0)


class TestReverse:
    def test_backwards_writing(self):
        assert reverse(omega(2)) == Word.from_string("abb")

    def test_empty(self):
        assert reverse(EMPTY) == EMPTY

    @given(words())
    def test_involution(self, w):
        assert reverse(reverse(w)) == w

    @given(words(), words())
    def test_anti_homomorphism(self, u, v):
        assert reverse(u * v) == reverse(v) * reverse(u)


class TestReduce:
    def test_cancelling_pair(self):
        assert reduce(Word.from_string("aA")) == EMPTY

    def test_outer_letters_survive(self):
        # ab times the inverse of bba: the boundary letters stay put
        w = Word.from_string("ab") * Word.from_string("abb").inverse()
        assert reduce(w) == Word.from_string("aBA")

    @given(words())
    def test_idempotent_and_nonincreasing(self, w):
        r = reduce(w)
        assert reduce(r) == r
        assert len(r) <= len(w)
        assert r.is_reduced()

    @given(words())
    @settings(max_examples=200)
    def test_word_times_inverse_cancels(self, w):
        assert reduce(w * w.inverse()) == EMPTY

    @given(words(), words())
    def test_reduction_is_congruence(self, u, v):
        assert reduce(u * v) == reduce(reduce(u) * reduce(v))


class TestTheta:
    def test_theta_1(self):
        assert theta(1) == Word.from_string("baab")

    def test_theta_2(self):
        assert theta(2) == Word.from_string("baabbbaabb")
        assert len(theta(2)) == 10

    def test_quadratic_lengths(self):
        for n in range(1, 21):
            assert len(theta(n, WordFamily(max_index=25))) == n * n + 3 * n

    def test_prefix_chain(self):
        fam = WordFamily(max_index=10)
        for n in range(1, 10):
            assert theta(n, fam).is_prefix_of(theta(n + 1, fam))

    def test_bad_index(self):
        with pytest.raises(BadIndex):
            theta(0)
        with pytest.raises(BadIndex):
            theta(7, WordFamily(max_index=6))


class TestPrefixFree:
    def test_default_family(self):
        assert is_prefix_free(WordFamily(max_index=50))

    def test_powers_of_b_fail(self):
        assert not is_prefix_free(WordFamily(rule=all_b_rule, max_index=3))

    def test_a_then_b_family(self):
        assert is_prefix_free(WordFamily(rule=a_then_b_rule, max_index=50))


class TestExpand:
    def test_single_syllable(self):
        assert expand(SymbolWord(((1, 1),)), DEFAULT_FAMILY) == theta(1)

    def test_mixed_signs(self):
        sw = SymbolWord(((1, 1), (2, -1)))
        assert expand(sw, DEFAULT_FAMILY) == Word.from_string("baaBAABB")

    def test_unreduced_rejected(self):
        with pytest.raises(NotReduced):
            expand(SymbolWord(((1, 1), (1, -1))), DEFAULT_FAMILY)

    def test_single_syllable_lengths(self):
        fam = WordFamily(max_index=10)
        for n in range(1, 11):
            for e in (1, -1):
                assert len(expand(SymbolWord(((n, e),)), fam)) == 2 * (n + 1)

    def test_homomorphism_on_enumeration(self):
        fam = WordFamily(max_index=3)
        small = [sw for sw in _symbol_words(3, 2)]
        for s in small[:40]:
            for t in small[:40]:
                joined = SymbolWord(s.syllables + t.syllables)
                if not joined.is_reduced():
                    continue
                assert expand(joined, fam) == reduce(
                    expand(s, fam) * expand(t, fam)
                )


class TestSymbolEnumeration:
    def test_counts(self):
        # 2N choices for the first syllable, 2N-1 for each further one
        got = sum(1 for _ in _symbol_words(3, 3))
        assert got == 6 + 6 * 5 + 6 * 25

    def test_all_reduced_and_distinct(self):
        seen = set(_symbol_words(2, 3))
        assert len(seen) == 4 + 4 * 3 + 4 * 9
        assert all(sw.is_reduced() for sw in seen)


class TestVerifyFreeGeneration:
    def test_small_exhaustive(self):
        rep = verify_free_generation(WordFamily(max_index=3), 3)
        assert rep.verified
        assert rep.words_checked == 186
        assert rep.counterexample is None

    def test_desk_scale(self):
        rep = verify_free_generation(WordFamily(max_index=6), 4)
        assert rep.verified
        assert rep.words_checked == 12 + 12 * 11 + 12 * 11**2 + 12 * 11**3

    def test_prefix_free_precondition(self):
        with pytest.raises(PrefixFreeViolated):
            verify_free_generation(WordFamily(rule=all_b_rule, max_index=3), 2)

    def test_alternative_family(self):
        rep = verify_free_generation(
            WordFamily(rule=a_then_b_rule, max_index=4), 3
        )
        assert rep.verified

    def test_doubled_word_blocks_are_positive(self):
        for n in range(1, 7):
            block = doubled_word(n, DEFAULT_FAMILY)
            assert all(e == 1 for _, e in block.letters)
