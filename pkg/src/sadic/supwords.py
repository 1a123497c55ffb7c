"""Sup-words, limsup-words and membership in the Markoff set of an order.

For an eventually periodic word the set of tails is finite, so the
supremum over tails is a maximum and can be computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import product
from typing import Iterator

from .orders import GT, LT, Order
from .words import BINARY, TERNARY, EPWord, first_difference, rotations, shift, shift_set

DEFAULT_PERIOD_LIMIT = 16


@dataclass(frozen=True)
class MemberRecord:
    word: EPWord
    is_member: bool
    sup: EPWord


def _max(order: Order, words) -> EPWord:
    best = None
    for w in words:
        if best is None or order.compare(w, best) == GT:
            best = w
    return best


def sup_word(order: Order, a: EPWord) -> EPWord:
    return _max(order, shift_set(a))


def limsup_word(order: Order, a: EPWord) -> EPWord:
    return _max(order, rotations(a))


def is_member(order: Order, a: EPWord) -> bool:
    return sup_word(order, a) == a


def member_record(order: Order, a: EPWord) -> MemberRecord:
    s = sup_word(order, a)
    return MemberRecord(a, s == a, s)


def abs_word(a: EPWord) -> EPWord:
    """``a`` if ``a >=_lex 0^∞``, else its letterwise negation."""
    for x in a.prefix + a.period:
        if x != 0:
            if x > 0:
                return a
            return EPWord(tuple(-y for y in a.prefix), tuple(-y for y in a.period), TERNARY)
    return a


def sup_word_abs(order3: Order, a: EPWord) -> EPWord:
    return _max(order3, (abs_word(t) for t in shift_set(a)))


def limsup_word_abs(order3: Order, a: EPWord) -> EPWord:
    return _max(order3, (abs_word(t) for t in rotations(a)))


def is_member_abs(order3: Order, a: EPWord) -> bool:
    return sup_word_abs(order3, a) == a


def approximant_periods(a: EPWord, bound: int = 50) -> list[int]:
    """All ``n <= bound`` with ``2^-n d(a, S^n a) < 2^-i d(a, S^i a)`` for all ``1 <= i < n``.

    The quantity ``2^-n d(a, S^n a)`` is tracked by its exponent
    ``n + first_difference(a, S^n a)``; equal tails give exponent infinity,
    i.e. the value 0.
    """
    inf = float("inf")
    exps = []
    out = []
    for n in range(1, bound + 1):
        f = first_difference(a, shift(a, n))
        e = inf if f is None else n + f
        if all(ei != inf and e > ei for ei in exps):
            out.append(n)
        exps.append(e)
    return out


def lyndon_words(max_len: int, k: int = 2) -> Iterator[tuple[int, ...]]:
    """Lyndon words over ``range(k)`` of length at most ``max_len`` (Duval's generator)."""
    w = [-1]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - m])
        while w and w[-1] == k - 1:
            w.pop()


def enumerate_members(order: Order, max_period: int, limit: int = DEFAULT_PERIOD_LIMIT) -> list[EPWord]:
    """Purely periodic binary members of primitive period ``<= max_period``, ascending.

    Each primitive necklace has exactly one rotation that is the maximum
    of its shift orbit, so one member per Lyndon word.
    """
    if max_period < 1:
        raise ValueError("max_period must be positive")
    if max_period > limit:
        raise ValueError(f"max_period {max_period} exceeds the configured limit {limit}")
    found = {sup_word(order, EPWord((), lw, BINARY)) for lw in lyndon_words(max_period)}
    return sorted(found, key=cmp_to_key(order.compare))


def brute_force_members(order: Order, max_period: int) -> list[EPWord]:
    """Reference enumeration over all binary strings; exponential, for checking only."""
    found = set()
    for p in range(1, max_period + 1):
        for v in product((0, 1), repeat=p):
            a = EPWord((), v, BINARY)
            if len(a.period) == p and is_member(order, a):
                found.add(a)
    return sorted(found, key=cmp_to_key(order.compare))


def below_cylinder(order: Order, a: EPWord, prefix) -> bool | None:
    """Whether ``a`` lies below every word starting with ``prefix``; None if ``a`` is in the cylinder.

    Outside the cylinder one representative suffices: the comparison is
    decided at the first difference with ``prefix``.
    """
    prefix = tuple(prefix)
    if a.take(len(prefix)) == prefix:
        return None
    return order.compare(a, EPWord(prefix, (0,), order.alphabet)) == LT
