"""Shared strategies and reference orders written directly from their definitions."""

from __future__ import annotations

import os

from hypothesis import HealthCheck, settings, strategies as st

from sadic.words import BINARY, TERNARY, EPWord

settings.register_profile(
    "default", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def ep_words(alphabet=BINARY, max_len: int = 6):
    letters = st.sampled_from(alphabet.letters)
    return st.builds(
        lambda u, v: EPWord(tuple(u), tuple(v), alphabet),
        st.lists(letters, max_size=max_len),
        st.lists(letters, min_size=1, max_size=max_len),
    )


def close_ep_words(alphabet=BINARY, n: int = 2):
    """Tuples of words sharing a common stem, so comparisons reach deep states."""
    letters = st.sampled_from(alphabet.letters)
    return st.builds(
        lambda stem, ws: tuple(EPWord(tuple(stem) + w.prefix, w.period, alphabet) for w in ws),
        st.lists(letters, max_size=10),
        st.lists(ep_words(alphabet), min_size=n, max_size=n),
    )


ternary_words = ep_words(TERNARY)


# Orientation rules on the common prefix w: True when [w x] are ordered by increasing x.
REFERENCE_RULES = {
    "lex": lambda w: True,
    "alt": lambda w: len(w) % 2 == 0,
    "uni": lambda w: w.count(1) % 2 == 0,
    "flip": lambda w: w.count(0) % 2 == 0,
    "lex3": lambda w: True,
    "alt3": lambda w: len(w) % 2 == 0,
    "bi": lambda w: (w.count(1) + w.count(-1)) % 2 == 0,
    "biflip": lambda w: w.count(0) % 2 == 0,
}


def reference_compare(rule, a: EPWord, b: EPWord, horizon: int = 400) -> int:
    """Compare by expanding letters one at a time; independent of any automaton."""
    w = []
    for x, y in zip(a.take(horizon), b.take(horizon)):
        if x != y:
            less = (x < y) == rule(tuple(w))
            return -1 if less else 1
        w.append(x)
    return 0
