from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from sadic.words import (
    BINARY,
    TERNARY,
    AlphabetError,
    EPWord,
    canonicalize,
    first_difference,
    format_word,
    parse_word,
    rotations,
    shift,
    shift_set,
    ultrametric_distance,
)

from conftest import ep_words, ternary_words


def W(text):
    return parse_word(text)


def brute_first_difference(a, b, horizon=200):
    for i, (x, y) in enumerate(zip(a.take(horizon), b.take(horizon)), 1):
        if x != y:
            return i
    return None


class TestCanonical:
    def test_absorbs_preperiod(self):
        a = canonicalize((1, 0), (1, 0, 1, 0))
        assert (a.prefix, a.period) == ((), (1, 0))

    def test_primitive_period(self):
        a = canonicalize((), (0, 0))
        assert (a.prefix, a.period) == ((), (0,))

    def test_trailing_letter_absorbed(self):
        # 100(110) and 10(011) spell the same word
        a = canonicalize((1, 0, 0), (1, 1, 0))
        assert (a.prefix, a.period) == ((1, 0), (0, 1, 1))
        assert canonicalize((1, 0), (0, 1, 1)) == a

    def test_minimal_by_scan(self):
        a = canonicalize((1, 0), (0, 1, 1))
        target = a.take(40)
        for lu in range(3):
            for lv in range(1, 4):
                if (lu, lv) == (2, 3):
                    continue
                for u in product((0, 1), repeat=lu):
                    for v in product((0, 1), repeat=lv):
                        assert (u + v * 40)[:40] != target

    def test_empty_period_rejected(self):
        with pytest.raises(ValueError):
            EPWord((1,), ())

    def test_letters_checked(self):
        with pytest.raises(AlphabetError):
            EPWord((2,), (0,))
        with pytest.raises(AlphabetError):
            EPWord((), (-1,), BINARY)
        EPWord((), (-1,), TERNARY)

    @given(ep_words())
    def test_idempotent(self, a):
        assert canonicalize(a.prefix, a.period) == a
        assert (canonicalize(a.prefix, a.period).prefix) == a.prefix

    @given(st.lists(st.sampled_from((0, 1)), max_size=6), st.lists(st.sampled_from((0, 1)), min_size=1, max_size=6))
    def test_same_infinite_word(self, u, v):
        raw = (tuple(u) + tuple(v) * 60)[:60]
        assert EPWord(tuple(u), tuple(v)).take(60) == raw

    @given(ep_words(), ep_words())
    def test_equality_is_structural(self, a, b):
        assert (a == b) == (a.take(200) == b.take(200))


class TestFirstDifference:
    def test_examples(self):
        assert first_difference(W("(10)"), W("(100)")) == 3
        assert first_difference(W("(0)"), W("(0)")) is None
        # 1000... against 1010...: they part at index 3
        assert first_difference(W("1(0)"), W("(10)")) == 3

    @given(ep_words(), ep_words())
    def test_against_brute_scan(self, a, b):
        assert first_difference(a, b) == brute_first_difference(a, b)


class TestDistance:
    def test_examples(self):
        assert ultrametric_distance(W("(10)"), W("(100)")) == Fraction(1, 8)
        assert ultrametric_distance(W("(10)"), W("(10)")) == 0
        assert ultrametric_distance(W("(0)"), W("(1)")) == Fraction(1, 2)

    @given(ep_words(), ep_words(), ep_words())
    def test_ultrametric(self, a, b, c):
        d = ultrametric_distance
        assert d(a, b) == d(b, a)
        assert d(a, c) <= max(d(a, b), d(b, c))
        assert (d(a, b) == 0) == (a == b)


class TestShift:
    def test_examples(self):
        assert shift(W("(10)"), 1) == W("(01)")
        assert shift(W("1(0)"), 1) == W("(0)")
        # 10010010... with five letters removed is 0100100...
        assert shift(W("(100)"), 5) == W("(010)")

    @given(ep_words(), st.integers(0, 20), st.integers(0, 20))
    def test_additive(self, a, m, n):
        assert shift(shift(a, m), n) == shift(a, m + n)

    @given(ep_words(), st.integers(0, 20))
    def test_letters(self, a, n):
        assert shift(a, n).take(30) == a.take(n + 30)[n:]

    def test_shift_set(self):
        assert set(shift_set(W("(10)"))) == {W("(10)"), W("(01)")}
        assert shift_set(W("(0)")) == [W("(0)")]
        assert len(shift_set(W("1(100)"))) == 4

    @given(ep_words())
    def test_shift_set_complete(self, a):
        brute = {shift(a, n) for n in range(len(a.prefix) + len(a.period) + 5)}
        assert set(shift_set(a)) == brute
        assert len(shift_set(a)) == len(set(shift_set(a)))

    @given(ep_words())
    def test_rotations(self, a):
        assert set(rotations(a)) == {shift(a, len(a.prefix) + i) for i in range(len(a.period))}


class TestSyntax:
    @pytest.mark.parametrize("text", ["100(10011)", "(1T)", "(0)", "1(0)", "T0(1)"])
    def test_round_trip(self, text):
        assert format_word(parse_word(text)) == text

    def test_comma_letters(self):
        a = parse_word("(2,-2)")
        assert a.period == (2, -2)
        assert format_word(a) == "(2,-2)"

    @given(ternary_words)
    def test_printer_parser(self, a):
        assert parse_word(format_word(a), TERNARY) == a

    @pytest.mark.parametrize("bad", ["", "10", "(", "1(0", "(x)", "()"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_word(bad)

    def test_alphabet_enforced(self):
        with pytest.raises(ValueError):
            parse_word("(1T)", BINARY)

    def test_indexing(self):
        a = W("10(011)")
        assert [a[i] for i in range(8)] == [1, 0, 0, 1, 1, 0, 1, 1]
