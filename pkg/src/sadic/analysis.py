"""Factor complexity and bispecial factors of word prefixes, plus identity
checks for the substitution families.

Counts taken from a finite prefix can undercount, so every count carries a
``stabilized`` flag: the same count is already seen in the first half of
the prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .subst import level_images, limit_prefix, repeated, tau, theta
from .words import EPWord


class PrefixTooShortError(ValueError):
    pass


class UnstableCountError(ValueError):
    """Factor counts differ between the prefix and its first half."""


@dataclass(frozen=True)
class FactorCensus:
    n: int
    count: int
    stabilized: bool


def factors(word: Sequence[int], n: int) -> set[tuple[int, ...]]:
    word = tuple(word)
    return {word[i : i + n] for i in range(len(word) - n + 1)}


def factor_complexity(prefix: Sequence[int], n: int, strict: bool = True) -> FactorCensus:
    prefix = tuple(prefix)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if strict and len(prefix) < 4 * n:
        raise PrefixTooShortError(f"need at least {4 * n} letters for n = {n}, got {len(prefix)}")
    full = len(factors(prefix, n))
    half = len(factors(prefix[: len(prefix) // 2], n))
    return FactorCensus(n, full, full == half)


def complexity_profile(prefix: Sequence[int], n_max: int) -> list[FactorCensus]:
    return [factor_complexity(prefix, n) for n in range(1, n_max + 1)]


def check_complexity_bound(prefix: Sequence[int], n_max: int, slope: int = 3, offset: int = 2) -> bool:
    """``p(n) <= slope*n - offset`` for ``2 <= n <= n_max``, on stabilized counts."""
    for n in range(2, n_max + 1):
        c = factor_complexity(prefix, n)
        if not c.stabilized:
            raise UnstableCountError(f"count for n = {n} has not stabilized; use a longer prefix")
        if c.count > slope * n - offset:
            return False
    return True


@dataclass(frozen=True)
class BispecialCensus:
    strong: tuple[tuple[int, ...], ...]
    weak: tuple[tuple[int, ...], ...]
    maxlen: int


def bispecial_census(prefix: Sequence[int], maxlen: int) -> BispecialCensus:
    """Strong and weak bispecial factors of length ``<= maxlen``, the empty word included."""
    prefix = tuple(prefix)
    top = maxlen + 2
    if len(prefix) < 4 * top:
        raise PrefixTooShortError(f"need at least {4 * top} letters, got {len(prefix)}")
    half = prefix[: len(prefix) // 2]
    by_len = {}
    for n in range(top + 1):
        f = factors(prefix, n)
        if f != factors(half, n):
            raise UnstableCountError(f"factors of length {n} have not stabilized")
        by_len[n] = f
    strong, weak = [], []
    for n in range(maxlen + 1):
        ext = by_len[n + 2]
        for v in sorted(by_len[n]):
            has = {(a, b) for a in (0, 1) for b in (0, 1) if (a,) + v + (b,) in ext}
            if len(has) == 4:
                strong.append(v)
            elif has == {(0, 1), (1, 0)}:
                weak.append(v)
    return BispecialCensus(tuple(strong), tuple(weak), maxlen)


def telescoping_holds(prefix: Sequence[int], maxlen: int) -> bool:
    """``p(n+2) - p(n+1) - 1 = #strong - #weak`` up to length n, for n <= maxlen."""
    census = bispecial_census(prefix, maxlen)
    p = [len(factors(prefix, n)) for n in range(maxlen + 3)]
    for n in range(maxlen + 1):
        s = sum(1 for v in census.strong if len(v) <= n)
        w = sum(1 for v in census.weak if len(v) <= n)
        if p[n + 2] - p[n + 1] - 1 != s - w:
            return False
    return True


def bispecial_closed_form(pairs: Sequence[tuple[int, int]], maxlen: int) -> BispecialCensus:
    """Bispecial factors of ``σ(1^∞)`` predicted from the expansion.

    They are ``w_{l,h} = σ_[1,0](0^{j_1}) ... σ_[1,h-1](0^{j_h}) σ_[1,h](0^l) w_h``
    for every h with ``k_{h+1} >= j_{h+1} + 2``; ``l = j_{h+1}`` gives a strong
    factor, ``l = k_{h+1} - 1`` a weak one.
    """
    strong, weak = [], []
    head: tuple[int, ...] = ()
    wh: tuple[int, ...] = ()
    for h, ((j, k), (s0, _)) in enumerate(zip(pairs, level_images(pairs))):
        if h > 0:
            wh = s0 + wh
        # every later candidate contains head and wh, so nothing short remains
        if len(head) > maxlen or len(wh) > maxlen:
            break
        if k >= j + 2:
            for ell, bucket in ((j, strong), (k - 1, weak)):
                w = head + s0 * ell + wh
                if len(w) <= maxlen:
                    bucket.append(w)
        head = head + s0 * j

    def key(w):
        return (len(w), w)

    return BispecialCensus(tuple(sorted(set(strong), key=key)), tuple(sorted(set(weak), key=key)), maxlen)


def wn_word(pairs: Sequence[tuple[int, int]], n: int) -> tuple[int, ...]:
    """``w_n = σ_[1,n](0) σ_[1,n-1](0) ... σ_[1,1](0)``, with ``w_0`` empty."""
    if n > len(pairs):
        raise ValueError("n exceeds the number of pairs")
    images = list(level_images(pairs[:n]))
    out: tuple[int, ...] = ()
    for i in range(1, n + 1):
        out = images[i][0] + out
    return out


def wn_words(
    pairs: Sequence[tuple[int, int]], n: int, tests: Iterable[EPWord] = ()
) -> tuple[tuple[int, ...], bool]:
    """``w_n`` and whether ``σ_[1,n]`` maps [0] and [1] into the cylinders the parity of n dictates.

    Even n: ``[0] -> [w_n 0]`` and ``[1] -> [w_n 1]``; odd n swaps the letters.
    """
    w = wn_word(pairs, n)
    sigma_images = list(level_images(pairs[:n]))[-1]
    sigma0, sigma1 = sigma_images

    def sigma(word: EPWord) -> EPWord:
        def img(letters):
            return tuple(x for a in letters for x in (sigma1 if a else sigma0))

        return EPWord(img(word.prefix), img(word.period))

    tests = list(tests) or [
        EPWord((), (0,)),
        EPWord((), (1,)),
        EPWord((0,), (1,)),
        EPWord((1,), (0,)),
        EPWord((), (0, 1)),
        EPWord((), (1, 0)),
        EPWord((), (0, 0, 1)),
        EPWord((), (1, 1, 0)),
    ]
    ok = True
    for x in tests:
        want = x[0] if n % 2 == 0 else 1 - x[0]
        if sigma(x).take(len(w) + 1) != w + (want,):
            ok = False
    return w, ok


def conjugacy_check(k: int, w: Sequence[int]) -> bool:
    """``theta_k(w) 0^{k-1} == 0^{k-1} tau_{k-1,k}(w)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    z = (0,) * (k - 1)
    return theta(k)(w) + z == z + tau(k - 1, k)(w)


def fibonacci_prefix(length: int) -> tuple[int, ...]:
    return limit_prefix(repeated((0, 1)), length)


def fixed_point_prefix(j: int, k: int, length: int) -> tuple[int, ...]:
    """Prefix of the fixed point of ``tau_{j,k}`` starting with 1."""
    return limit_prefix(repeated((j, k)), length)
