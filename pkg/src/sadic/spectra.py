"""Exact and interval evaluation of digit words, and the multiplicative
Lagrange spectrum ``limsup ||x q^n||`` for integer bases.

Values of eventually periodic words at rational bases are exact
``Fraction`` objects; values involving infinite aperiodic words are
enclosed in :class:`RealInterval` with rational endpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .orders import builtin
from .subst import RHO2, limit_prefix, repeated, weight_apply
from .supwords import sup_word
from .words import BINARY, EPWord, rotations, symmetric_alphabet

Number = Union[int, Fraction]


class SpectrumError(ValueError):
    pass


class NotAMemberError(SpectrumError):
    """The word is not a sup-word for the lexicographic order."""


class EndsInZerosError(SpectrumError):
    """The word ends in ``0^∞``, so it is no quasi-greedy expansion."""


class NoRootError(SpectrumError):
    """No base in (1, 2] gives the value 1."""


@dataclass(frozen=True)
class RealInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: Number) -> "RealInterval":
        return cls(Fraction(x), Fraction(x))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x: Number) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other: "RealInterval") -> "RealInterval":
        return RealInterval(self.lo + other.lo, self.hi + other.hi)

    def scale(self, c: Number) -> "RealInterval":
        a, b = self.lo * c, self.hi * c
        return RealInterval(min(a, b), max(a, b))

    def outward(self, bits: int) -> "RealInterval":
        """Round the endpoints outward to multiples of ``2^-bits``."""
        d = 2**bits
        return RealInterval(
            Fraction(math.floor(self.lo * d), d), Fraction(math.ceil(self.hi * d), d)
        )

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def _as_fraction(q: Number) -> Fraction:
    q = Fraction(q)
    if q <= 1:
        raise SpectrumError(f"base must exceed 1, got {q}")
    return q


def pi_finite(word: Sequence[int], q: Number) -> Fraction:
    """``sum a_n q^-n`` over a finite word (Horner from the right)."""
    q = Fraction(q)
    acc = Fraction(0)
    for x in reversed(word):
        acc = (acc + x) / q
    return acc


def pi_exact(a: EPWord, q: Number) -> Fraction:
    """``pi_q(u v^∞) = pi_q(u) + q^-|u| pi_q(v) / (1 - q^-|v|)``."""
    q = _as_fraction(q)
    u, v = a.prefix, a.period
    periodic = pi_finite(v, q) / (1 - q ** -len(v))
    return pi_finite(u, q) + periodic / q ** len(u)


def pi_interval(prefix: Sequence[int], beta: RealInterval, max_digit: int) -> RealInterval:
    """Enclosure of ``pi_beta(prefix · t)`` over all tails ``t`` with ``|t_n| <= max_digit``."""
    if beta.lo <= 1:
        raise SpectrumError("beta interval must lie above 1")
    xlo, xhi = 1 / beta.hi, 1 / beta.lo
    total = RealInterval.point(0)
    plo = phi = Fraction(1)
    for a in prefix:
        plo *= xlo
        phi *= xhi
        total = total + RealInterval(plo, phi).scale(a)
    tail = max_digit * phi * xhi / (1 - xhi)
    return RealInterval(total.lo - tail, total.hi + tail)


def digits_symmetric(x: Number, q: int) -> EPWord:
    """Symmetric base-q digits of ``x`` in [-1/2, 1/2] via ``y -> q y - floor(q y + 1/2)``."""
    x = Fraction(x)
    if q < 2:
        raise SpectrumError("q must be an integer >= 2")
    if abs(x) > Fraction(1, 2):
        raise SpectrumError(f"x = {x} lies outside [-1/2, 1/2]")
    seen: dict[Fraction, int] = {}
    digits: list[int] = []
    y = x
    while y not in seen:
        seen[y] = len(digits)
        # odd q at y = 1/2 would give the digit (q+1)/2; round that tie down
        d = min(math.floor(q * y + Fraction(1, 2)), q // 2)
        digits.append(d)
        y = q * y - d
    start = seen[y]
    return EPWord(tuple(digits[:start]), tuple(digits[start:]), symmetric_alphabet(q))


def reduce_mod_one(x: Number) -> Fraction:
    """Representative of ``x`` modulo 1 in [-1/2, 1/2)."""
    x = Fraction(x)
    return x - math.floor(x + Fraction(1, 2))


def lagrange_value(x: Number, q: int) -> Fraction:
    """``limsup_n ||x q^n||`` for rational ``x``, exactly."""
    a = digits_symmetric(reduce_mod_one(x), q)
    return max(abs(pi_exact(r, q)) for r in rotations(a))


def alt_discrete_words(count: int) -> list[EPWord]:
    """``(tau_{0,2}^n(0))^∞`` for n = 0 .. count-1."""
    out = []
    w0, w1 = (0,), (1,)
    for _ in range(count):
        out.append(EPWord((), w0, BINARY))
        w0, w1 = w1, w1 + w0 + w0
    return out


def lagrange_discrete(q: int, count: int) -> list[Fraction]:
    """The first ``count`` points of the spectrum below its smallest accumulation point.

    These are 0 followed by ``pi_q(rho2((tau_{0,2}^n(0))^∞))``, n = 0, 1, ...
    """
    if count <= 0:
        return []
    return [Fraction(0)] + [pi_exact(RHO2(a), q) for a in alt_discrete_words(count - 1)]


def mtilde(q: int, precision_bits: int) -> RealInterval:
    """Enclosure of ``pi_q(rho2(m_alt))`` of width at most ``2^-precision_bits``."""
    q = Fraction(q)
    target = Fraction(1, 2**precision_bits)
    n = 32
    while True:
        digits = RHO2(limit_prefix(repeated((0, 2)), n))[:n]
        value = pi_finite(digits, q)
        tail = q**-n / (q - 1)
        if 2 * tail <= target / 2:
            enc = RealInterval(value - tail, value + tail).outward(precision_bits + 2)
            if enc.width <= target:
                return enc
        n *= 2


def beta_from_expansion(a: EPWord, tol: Number = Fraction(1, 10**9)) -> RealInterval:
    """Enclosure of the base ``beta`` in (1, 2] with ``pi_beta(a) = 1``.

    ``a`` must be a lexicographic sup-word not ending in ``0^∞``; bisection
    on exact values at dyadic bases, since ``pi_beta(a)`` decreases in beta.
    """
    tol = Fraction(tol)
    if a.period == (0,):
        raise EndsInZerosError(f"{a} ends in 0^∞")
    if sup_word(builtin("lex"), a) != a:
        raise NotAMemberError(f"{a} is not maximal in its shift orbit under the lexicographic order")
    f_hi = pi_exact(a, 2) - 1
    if f_hi > 0:
        raise NoRootError(f"pi_2({a}) > 1, no base in (1, 2] works")
    if f_hi == 0:
        return RealInterval.point(2)
    lo, hi = Fraction(3, 2), Fraction(2)
    while pi_exact(a, lo) <= 1:
        if pi_exact(a, lo) == 1:
            return RealInterval.point(lo)
        hi = lo
        lo = 1 + (lo - 1) / 2
    while hi - lo > tol:
        mid = (lo + hi) / 2
        v = pi_exact(a, mid)
        if v == 1:
            return RealInterval.point(mid)
        if v > 1:
            lo = mid
        else:
            hi = mid
    return RealInterval(lo, hi)


def weighted_value(e: EPWord, prefix: Sequence[int], beta: RealInterval) -> RealInterval:
    """Enclosure of ``pi_beta(e · (prefix t))`` over ternary tails ``t``."""
    return pi_interval(weight_apply(e, tuple(prefix)), beta, 1)


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_interval(iv: RealInterval) -> str:
    return f"[{format_fraction(iv.lo)},{format_fraction(iv.hi)}]"


def strictly_increasing(values: Iterable[Fraction]) -> bool:
    values = list(values)
    return all(a < b for a, b in zip(values, values[1:]))
