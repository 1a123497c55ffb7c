"""Finite and eventually periodic infinite words.

An eventually periodic word ``u v v v ...`` is stored in canonical form:
the period ``v`` is primitive and the preperiod ``u`` is as short as
possible.  Equality of :class:`EPWord` values is therefore structural.

Letters are small integers.  The text syntax is ``u(v)`` with the letters
``0``, ``1`` and ``T`` (for -1), e.g. ``100(10011)`` or ``(1T)``; words over
larger alphabets use comma separated letters, e.g. ``(2,-2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice
from math import lcm
from typing import Iterable, Iterator, Optional, Sequence


class AlphabetError(ValueError):
    """A letter or word does not belong to the expected alphabet."""


@dataclass(frozen=True)
class Alphabet:
    letters: tuple[int, ...]

    def __contains__(self, letter: object) -> bool:
        return letter in self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def index(self, letter: int) -> int:
        try:
            return self.letters.index(letter)
        except ValueError:
            raise AlphabetError(f"letter {letter} not in alphabet {self.letters}") from None

    def issubset(self, other: "Alphabet") -> bool:
        return all(x in other for x in self.letters)

    def check(self, word: Iterable[int]) -> None:
        for x in word:
            if x not in self.letters:
                raise AlphabetError(f"letter {x} not in alphabet {self.letters}")


BINARY = Alphabet((0, 1))
TERNARY = Alphabet((-1, 0, 1))
SIGNS = Alphabet((-1, 1))


def symmetric_alphabet(q: int) -> Alphabet:
    """The digit set ``{0, ±1, ..., ±floor(q/2)}``."""
    h = q // 2
    return Alphabet(tuple(range(-h, h + 1)))


def _smallest_root(v: tuple[int, ...]) -> tuple[int, ...]:
    n = len(v)
    for d in range(1, n + 1):
        if n % d == 0 and v[:d] * (n // d) == v:
            return v[:d]
    return v  # unreachable


def is_primitive(v: Sequence[int]) -> bool:
    v = tuple(v)
    return len(v) > 0 and _smallest_root(v) == v


@dataclass(frozen=True)
class EPWord:
    """The infinite word ``prefix · period^∞``, always held in canonical form.

    The alphabet is a tag used for boundary checks; it does not take part
    in equality or hashing, since ``(10)^∞`` is the same infinite sequence
    whether it is read as a binary or as a ternary word.
    """

    prefix: tuple[int, ...]
    period: tuple[int, ...]
    alphabet: Alphabet = field(default=BINARY, compare=False)

    def __post_init__(self) -> None:
        u = tuple(self.prefix)
        v = tuple(self.period)
        if not v:
            raise ValueError("period of an eventually periodic word must be nonempty")
        self.alphabet.check(u)
        self.alphabet.check(v)
        v = _smallest_root(v)
        while u and u[-1] == v[-1]:
            u = u[:-1]
            v = v[-1:] + v[:-1]
        object.__setattr__(self, "prefix", u)
        object.__setattr__(self, "period", v)

    @classmethod
    def periodic(cls, v: Sequence[int], alphabet: Alphabet = BINARY) -> "EPWord":
        return cls((), tuple(v), alphabet)

    @classmethod
    def parse(cls, text: str, alphabet: Optional[Alphabet] = None) -> "EPWord":
        return parse_word(text, alphabet)

    @property
    def is_purely_periodic(self) -> bool:
        return not self.prefix

    def __getitem__(self, i: int) -> int:
        """Letter at 0-based position ``i``."""
        u, v = self.prefix, self.period
        if i < len(u):
            return u[i]
        return v[(i - len(u)) % len(v)]

    def __iter__(self) -> Iterator[int]:
        yield from self.prefix
        while True:
            yield from self.period

    def take(self, n: int) -> tuple[int, ...]:
        return tuple(islice(iter(self), n))

    def with_alphabet(self, alphabet: Alphabet) -> "EPWord":
        return EPWord(self.prefix, self.period, alphabet)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"EPWord({format_word(self)!r})"


def canonicalize(u: Sequence[int], v: Sequence[int], alphabet: Alphabet = BINARY) -> EPWord:
    return EPWord(tuple(u), tuple(v), alphabet)


def scan_bound(a: EPWord, b: EPWord) -> int:
    """Number of positions after which two distinct EP words must have differed."""
    return max(len(a.prefix), len(b.prefix)) + lcm(len(a.period), len(b.period))


def first_difference(a: EPWord, b: EPWord) -> Optional[int]:
    """1-based index of the first letter where ``a`` and ``b`` differ, or None."""
    if a == b:
        return None
    for n, (x, y) in enumerate(zip(a, b), start=1):
        if x != y:
            return n
        if n > scan_bound(a, b):  # pragma: no cover - canonical forms rule this out
            raise AssertionError("distinct canonical words agree beyond the scan bound")
    raise AssertionError("unreachable")


def ultrametric_distance(a: EPWord, b: EPWord) -> Fraction:
    n = first_difference(a, b)
    return Fraction(0) if n is None else Fraction(1, 2**n)


def shift(a: EPWord, n: int) -> EPWord:
    if n < 0:
        raise ValueError("shift amount must be nonnegative")
    u, v = a.prefix, a.period
    if n <= len(u):
        return EPWord(u[n:], v, a.alphabet)
    r = (n - len(u)) % len(v)
    return EPWord((), v[r:] + v[:r], a.alphabet)


def shift_set(a: EPWord) -> list[EPWord]:
    """All distinct tails of ``a``, in order of first appearance."""
    seen: dict[EPWord, None] = {}
    for n in range(len(a.prefix) + len(a.period)):
        seen.setdefault(shift(a, n))
    return list(seen)


def rotations(a: EPWord) -> list[EPWord]:
    """The tails of ``a`` lying in its periodic part."""
    v = a.period
    return [EPWord((), v[r:] + v[:r], a.alphabet) for r in range(len(v))]


def count(word: Iterable[int], letter: int) -> int:
    return sum(1 for x in word if x == letter)


# ---------------------------------------------------------------------------
# text syntax

_CHAR_TO_LETTER = {"T": -1, **{str(d): d for d in range(10)}}


def format_letters(word: Iterable[int]) -> str:
    word = tuple(word)
    if all(-1 <= x <= 9 for x in word):
        return "".join("T" if x == -1 else str(x) for x in word)
    return ",".join(str(x) for x in word)


def format_word(a: EPWord) -> str:
    letters = a.prefix + a.period
    if all(-1 <= x <= 9 for x in letters):
        return f"{format_letters(a.prefix)}({format_letters(a.period)})"
    u = ",".join(map(str, a.prefix))
    return f"{u}({','.join(map(str, a.period))})"


def parse_letters(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        try:
            return tuple(int(t) for t in text.split(",") if t.strip())
        except ValueError:
            raise ValueError(f"malformed letter list {text!r}") from None
    try:
        return tuple(_CHAR_TO_LETTER[c] for c in text)
    except KeyError as exc:
        raise ValueError(f"unknown letter {exc.args[0]!r} in {text!r}") from None


def infer_alphabet(letters: Iterable[int]) -> Alphabet:
    letters = set(letters)
    if letters <= {0, 1}:
        return BINARY
    if letters <= {-1, 0, 1}:
        return TERNARY
    h = max(abs(x) for x in letters)
    return symmetric_alphabet(2 * h)


def parse_word(text: str, alphabet: Optional[Alphabet] = None) -> EPWord:
    text = text.strip()
    if not text.endswith(")") or text.count("(") != 1:
        raise ValueError(f"expected an eventually periodic word like '10(01)', got {text!r}")
    head, _, rest = text.partition("(")
    u = parse_letters(head.rstrip(","))
    v = parse_letters(rest[:-1])
    if not v:
        raise ValueError(f"empty period in {text!r}")
    return EPWord(u, v, alphabet or infer_alphabet(u + v))
