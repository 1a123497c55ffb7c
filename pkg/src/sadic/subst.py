"""Substitutions ``tau_{j,k}``, ``theta_k``, the parity transducers rho0/rho1/rho2
and letterwise word maps.

``tau(j, k)`` maps ``0 -> 1 0^j`` and ``1 -> 1 0^k``.  Compositions of such
maps form the monoid used to describe smallest accumulation points; limit
words of infinite compositions are produced as finite prefixes by
:func:`limit_prefix`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice, repeat
from math import lcm
from typing import Iterable, Iterator, Sequence, Union

from .words import BINARY, SIGNS, TERNARY, Alphabet, AlphabetError, EPWord

Word = tuple[int, ...]


@dataclass(frozen=True)
class Substitution:
    """A binary morphism given by the images of 0 and 1."""

    image0: Word
    image1: Word

    def __post_init__(self) -> None:
        if not self.image0 or not self.image1:
            raise ValueError("substitution images must be nonempty")

    def image(self, letter: int) -> Word:
        if letter == 0:
            return self.image0
        if letter == 1:
            return self.image1
        raise AlphabetError(f"substitution input must be binary, got {letter}")

    def __call__(self, word: Iterable[int]) -> Word:
        out: list[int] = []
        for x in word:
            out.extend(self.image(x))
        return tuple(out)

    def apply_ep(self, a: EPWord, alphabet: Alphabet = BINARY) -> EPWord:
        return EPWord(self(a.prefix), self(a.period), alphabet)

    def in_monoid_shape(self) -> bool:
        """Both images start with 1 and image(0) is a proper prefix of image(1)."""
        a, b = self.image0, self.image1
        return a[0] == 1 and b[0] == 1 and len(a) < len(b) and b[: len(a)] == a


IDENTITY = Substitution((0,), (1,))


def tau(j: int, k: int) -> Substitution:
    if not 0 <= j < k:
        raise ValueError(f"tau requires 0 <= j < k, got j={j}, k={k}")
    return Substitution((1,) + (0,) * j, (1,) + (0,) * k)


def theta(k: int) -> Substitution:
    if k < 1:
        raise ValueError(f"theta requires k >= 1, got {k}")
    z = (0,) * (k - 1)
    return Substitution(z + (1,), z + (1, 0))


def compose(outer: Substitution, inner: Substitution) -> Substitution:
    """``outer ∘ inner``."""
    return Substitution(outer(inner.image0), outer(inner.image1))


def compose_pairs(pairs: Iterable[tuple[int, int]]) -> Substitution:
    sigma = IDENTITY
    for j, k in pairs:
        sigma = compose(sigma, tau(j, k))
    return sigma


def apply_ep(sigma: Substitution, a: EPWord, alphabet: Alphabet = BINARY) -> EPWord:
    return sigma.apply_ep(a, alphabet)


def level_images(pairs: Iterable[tuple[int, int]]) -> Iterator[tuple[Word, Word]]:
    """Yield ``(σ_[1,n](0), σ_[1,n](1))`` for n = 0, 1, 2, ...

    Uses ``σ_[1,n](0) = σ_[1,n-1](1) σ_[1,n-1](0)^j`` and likewise for 1,
    so no intermediate substitution table is needed.
    """
    w0: Word = (0,)
    w1: Word = (1,)
    yield w0, w1
    for j, k in pairs:
        if not 0 <= j < k:
            raise ValueError(f"malformed pair {(j, k)}")
        w0, w1 = w1 + w0 * j, w1 + w0 * k
        yield w0, w1


def limit_prefix(pairs: Iterable[tuple[int, int]], length: int) -> Word:
    """First ``length`` letters of the limit word ``σ(1^∞)``."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    for _, w1 in level_images(pairs):
        if len(w1) >= length:
            return w1[:length]
    raise ValueError(f"not enough pairs to determine a prefix of length {length}")


def repeated(pair: tuple[int, int], head: Sequence[tuple[int, int]] = ()) -> Iterator[tuple[int, int]]:
    """``head`` followed by ``pair`` forever."""
    yield from head
    yield from repeat(pair)


# ---------------------------------------------------------------------------
# parity transducers


@dataclass(frozen=True)
class SignedTransducer:
    """One of rho0, rho1, rho2: binary words to ternary words.

    In parity state ``p`` (0 = even) the letter 0 is written as ``s`` and
    the letter 1 as ``s 0``, where ``s = +1`` if ``p`` is even and ``-1``
    otherwise.  The parity counts zeros (rho0), ones (rho1) or all letters
    (rho2) read so far.
    """

    name: str
    toggles_on: frozenset[int]

    def sign(self, parity: int) -> int:
        return 1 if parity == 0 else -1

    def output(self, parity: int, letter: int) -> Word:
        s = self.sign(parity)
        if letter == 0:
            return (s,)
        if letter == 1:
            return (s, 0)
        raise AlphabetError(f"transducer input must be binary, got {letter}")

    def advance(self, parity: int, letter: int) -> int:
        return parity ^ 1 if letter in self.toggles_on else parity

    def run(self, word: Iterable[int], parity: int = 0) -> tuple[Word, int]:
        out: list[int] = []
        for x in word:
            out.extend(self.output(parity, x))
            parity = self.advance(parity, x)
        return tuple(out), parity

    def __call__(self, word: Union[EPWord, Iterable[int]]):
        if isinstance(word, EPWord):
            return self.apply_ep(word)
        return self.run(word)[0]

    def apply_ep(self, a: EPWord) -> EPWord:
        head, p = self.run(a.prefix)
        body, p_after = self.run(a.period, p)
        if p_after != p:
            # parity closes only after two passes over the period
            body2, _ = self.run(a.period, p_after)
            body = body + body2
        return EPWord(head, body, TERNARY)


RHO0 = SignedTransducer("rho0", frozenset({0}))
RHO1 = SignedTransducer("rho1", frozenset({1}))
RHO2 = SignedTransducer("rho2", frozenset({0, 1}))
TRANSDUCERS = {"rho0": RHO0, "rho1": RHO1, "rho2": RHO2}


def apply_transducer(t: SignedTransducer, a):
    return t(a)


# ---------------------------------------------------------------------------
# letterwise maps


def _map_letters(a, f, alphabet: Alphabet):
    if isinstance(a, EPWord):
        return EPWord(tuple(map(f, a.prefix)), tuple(map(f, a.period)), alphabet)
    return tuple(map(f, a))


def _letters_of(a) -> Iterable[int]:
    return a.prefix + a.period if isinstance(a, EPWord) else a


def flip_letters(a):
    """``F``: exchange 0 and 1."""
    BINARY.check(_letters_of(a))
    return _map_letters(a, lambda x: 1 - x, BINARY)


def letter_abs(a):
    """``G``: replace every letter by its absolute value."""
    TERNARY.check(_letters_of(a))
    return _map_letters(a, abs, BINARY)


def negate(a):
    alphabet = a.alphabet if isinstance(a, EPWord) else None
    if alphabet is not None and any(-x not in alphabet for x in alphabet.letters):
        raise AlphabetError("negation needs a symmetric alphabet")
    return _map_letters(a, lambda x: -x, alphabet or TERNARY)


def weight_apply(e: EPWord, a):
    """Letterwise product ``(e1 a1)(e2 a2)...`` with ``e`` over {±1}."""
    SIGNS.check(e.prefix + e.period)
    TERNARY.check(_letters_of(a))
    if not isinstance(a, EPWord):
        return tuple(x * y for x, y in zip(islice(iter(e), len(a)), a))
    n = max(len(e.prefix), len(a.prefix))
    p = lcm(len(e.period), len(a.period))
    letters = [x * y for x, y in islice(zip(e, a), n + p)]
    return EPWord(tuple(letters[:n]), tuple(letters[n:]), TERNARY)


def parse_pairs(text: str) -> list[tuple[int, int]]:
    """Parse ``"0,2;1,3"`` into ``[(0, 2), (1, 3)]``."""
    pairs = []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        j, k = (int(t) for t in chunk.split(","))
        pairs.append((j, k))
    return pairs

