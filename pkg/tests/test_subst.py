from itertools import product

import pytest
from hypothesis import given, strategies as st

from sadic.subst import (
    RHO0,
    RHO1,
    RHO2,
    Substitution,
    apply_ep,
    apply_transducer,
    compose,
    compose_pairs,
    flip_letters,
    letter_abs,
    level_images,
    limit_prefix,
    negate,
    parse_pairs,
    repeated,
    tau,
    theta,
    weight_apply,
)
from sadic.words import TERNARY, AlphabetError, EPWord, format_letters, parse_letters, parse_word, shift

from conftest import ep_words

ALT21 = "100111001001001110011"
UNI32 = "10111010101110111011101010111010"
FLIP48 = "100010101000100010001010100010101000101010001000"

binary_lists = st.lists(st.sampled_from((0, 1)), max_size=12).map(tuple)
pair_lists = st.lists(
    st.integers(1, 4).flatmap(lambda k: st.tuples(st.integers(0, k - 1), st.just(k))), min_size=1, max_size=6
)


def L(text):
    return parse_letters(text)


class TestSubstitutions:
    def test_tau_theta(self):
        assert (tau(0, 2).image(0), tau(0, 2).image(1)) == (L("1"), L("100"))
        assert (theta(1).image(0), theta(1).image(1)) == (L("1"), L("10"))
        assert (tau(1, 3).image(0), tau(1, 3).image(1)) == (L("10"), L("1000"))
        assert (theta(3).image(0), theta(3).image(1)) == (L("001"), L("0010"))

    def test_bounds(self):
        for j, k in ((2, 2), (3, 1), (-1, 2)):
            with pytest.raises(ValueError):
                tau(j, k)
        with pytest.raises(ValueError):
            theta(0)
        with pytest.raises(ValueError):
            Substitution((), (1,))

    def test_compose_example(self):
        s = compose(tau(0, 2), tau(0, 2))
        assert (s.image(0), s.image(1)) == (L("100"), L("10011"))

    @given(pair_lists, binary_lists)
    def test_compose_is_application(self, pairs, w):
        sigma = compose_pairs(pairs)
        expected = w
        for j, k in reversed(pairs):
            expected = tau(j, k)(expected)
        assert sigma(w) == expected

    @given(pair_lists, pair_lists, pair_lists)
    def test_associative(self, p, q, r):
        a, b, c = compose_pairs(p), compose_pairs(q), compose_pairs(r)
        assert compose(compose(a, b), c) == compose(a, compose(b, c))

    @given(pair_lists)
    def test_monoid_shape(self, pairs):
        s = compose_pairs(pairs)
        assert s.in_monoid_shape()
        s0, s1 = s.image(0), s.image(1)
        assert s0[0] == s1[0] == 1 and len(s0) < len(s1) and s1[: len(s0)] == s0

    @given(pair_lists)
    def test_prefix_extension(self, pairs):
        images = [w1 for _, w1 in level_images(pairs)]
        for short, long in zip(images, images[1:]):
            assert long[: len(short)] == short


class TestApplyEp:
    def test_examples(self):
        t = tau(0, 2)
        assert apply_ep(t, parse_word("(0)")) == parse_word("(1)")
        assert apply_ep(t, parse_word("(1)")) == parse_word("(100)")
        for j, k in ((0, 1), (1, 3), (2, 5)):
            assert apply_ep(tau(j, k), parse_word("(0)")) == EPWord((), (1,) + (0,) * j)

    @given(pair_lists, ep_words())
    def test_letters(self, pairs, a):
        sigma = compose_pairs(pairs)
        assert apply_ep(sigma, a).take(40) == sigma(a.take(40))[:40]

    @given(pair_lists, ep_words())
    def test_shift_alignment(self, pairs, a):
        sigma = compose_pairs(pairs)
        n = len(a.prefix) + len(a.period)
        off = len(sigma(a.take(n)))
        assert apply_ep(sigma, shift(a, n)) == shift(apply_ep(sigma, a), off)


class TestLimits:
    def test_golden_prefixes(self):
        assert format_letters(limit_prefix(repeated((0, 2)), 21)) == ALT21
        assert format_letters(limit_prefix(repeated((0, 2), head=[(0, 1)]), 32)) == UNI32
        assert format_letters(limit_prefix(repeated((0, 2), head=[(1, 3)]), 48)) == FLIP48

    def test_insufficient_pairs(self):
        with pytest.raises(ValueError):
            limit_prefix([(0, 2)], 10)

    def test_prefix_stability(self):
        p = limit_prefix(repeated((0, 2)), 500)
        assert limit_prefix(repeated((0, 2)), 250) == p[:250]

    def test_parse_pairs(self):
        assert parse_pairs("0,2;1,3") == [(0, 2), (1, 3)]
        assert parse_pairs("") == []


class TestTransducers:
    def test_examples(self):
        assert RHO2(parse_word("(0)")) == EPWord((), (1, -1), TERNARY)
        assert format_letters(RHO2(L(ALT21))[:14]) == "10T1T010T01T10"
        # parity toggles after each 1, so the period doubles
        assert RHO1(parse_word("(1)")) == EPWord((), (1, 0, -1, 0), TERNARY)
        assert RHO0(parse_word("(0)")) == EPWord((), (1, -1), TERNARY)
        assert RHO1(parse_word("(0)")) == EPWord((), (1,), TERNARY)

    def test_block_outputs(self):
        for t in (RHO0, RHO1, RHO2):
            for p in (0, 1):
                assert t.output(p, 1) == t.output(p, 0) + (0,)
                assert t.output(p, 0)[0] == (1 if p == 0 else -1)

    def test_toggle_rules(self):
        assert format_letters(RHO0(L("0110"))) == "1T0T0T"
        assert format_letters(RHO1(L("0110"))) == "110T01"
        assert format_letters(RHO2(L("0110"))) == "1T010T"

    def test_g_of_rho_is_tau01(self):
        t = tau(0, 1)
        for n in range(13):
            for w in product((0, 1), repeat=n):
                for r in (RHO0, RHO1, RHO2):
                    assert letter_abs(r(w)) == t(w)

    @given(ep_words())
    def test_ep_matches_letters(self, a):
        for r in (RHO0, RHO1, RHO2):
            img = apply_transducer(r, a)
            assert img.alphabet == TERNARY
            assert img.take(60) == r(a.take(60))[:60]


class TestLetterwise:
    def test_flip_relation(self):
        m_uni = L(UNI32)
        m_flip = L(FLIP48)
        assert flip_letters((0,) + m_flip)[:32] == m_uni

    @given(ep_words(TERNARY))
    def test_negate_involution(self, a):
        assert negate(negate(a)) == a

    def test_weight_examples(self):
        e = parse_word("(1T)", TERNARY)
        assert weight_apply(e, L("11")) == (1, -1)
        assert weight_apply(e, parse_word("(1)")) == EPWord((), (1, -1), TERNARY)
        # lcm alignment of the periods
        e3 = parse_word("(11T)", TERNARY)
        assert weight_apply(e3, parse_word("(10)")) == EPWord((), (1, 0, -1, 0, 1, 0), TERNARY)

    @given(ep_words(TERNARY, 4), ep_words(TERNARY))
    def test_weight_letters(self, e, a):
        signs = EPWord(tuple(1 if x >= 0 else -1 for x in e.prefix), tuple(1 if x >= 0 else -1 for x in e.period), TERNARY)
        got = weight_apply(signs, a)
        assert got.take(50) == tuple(x * y for x, y in zip(signs.take(50), a.take(50)))

    def test_weight_needs_signs(self):
        with pytest.raises(AlphabetError):
            weight_apply(parse_word("(10)"), parse_word("(1)"))

    def test_flip_binary_only(self):
        with pytest.raises(AlphabetError):
            flip_letters(parse_word("(1T)"))
