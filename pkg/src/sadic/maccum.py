"""Smallest accumulation point of the Markoff set of a binary cylinder order.

At each level the current order is scanned for the indices ``j`` with
``[1 0^j 1] < [1 0^j 0]``.  With fewer than two such indices the smallest
accumulation point of the current order is ``1 0^∞`` and the expansion
terminates; otherwise the two smallest ``j < k`` are recorded and the order
is replaced by its pullback through ``tau_{j,k}``.

For automaton orders every step is exact: the states along ``1 0^j`` are
eventually periodic, and the pulled-back automata live on a bounded state
set, so a repetition among them proves the expansion eventually periodic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import islice
from typing import Iterator, Optional, Union

from .orders import (
    LT,
    DirectionAutomaton,
    OracleOrder,
    PulledBackOracle,
    cylinder_less,
    pullback_tau,
)
from .subst import compose, level_images, tau
from .words import BINARY, EPWord

DEFAULT_LEVELS = 32
DEFAULT_PREFIX = 256
DEFAULT_J_MAX = 64


class Status(enum.Enum):
    EXACT = "exact"
    TRUNCATED = "truncated"
    INCONCLUSIVE = "inconclusive"


class OrderPreconditionError(ValueError):
    """The order does not satisfy ``0^∞ < 1^∞``."""


@dataclass(frozen=True)
class SAdicExpansion:
    """Pairs ``(j_n, k_n)`` of ``σ_n = tau_{j_n,k_n}``.

    ``terminal`` is the number ``h`` of pairs when the point is
    ``σ_[1,h](1 0^∞)``; ``extra_j`` is the unique ``j`` (if any) with
    ``σ_[1,h]((1 0^j)^∞)`` below it.  ``cycle`` = ``(start, length)`` marks an
    infinite expansion whose pairs repeat with that period from ``start``.
    """

    pairs: tuple[tuple[int, int], ...]
    terminal: Optional[int] = None
    extra_j: Optional[int] = None
    cycle: Optional[tuple[int, int]] = None

    def __post_init__(self) -> None:
        for j, k in self.pairs:
            if not 0 <= j < k:
                raise ValueError(f"malformed pair {(j, k)}")
        if self.terminal is not None:
            if self.terminal != len(self.pairs) or self.cycle is not None:
                raise ValueError("a terminal expansion lists exactly its h pairs")

    @property
    def is_finite(self) -> bool:
        return self.terminal is not None

    def iter_pairs(self) -> Iterator[tuple[int, int]]:
        yield from self.pairs
        if self.cycle is not None:
            start, length = self.cycle
            period = self.pairs[start : start + length]
            n = len(self.pairs)
            while True:
                yield period[(n - start) % length]
                n += 1

    def pair(self, n: int) -> tuple[int, int]:
        """The n-th pair, 0-based."""
        return next(islice(self.iter_pairs(), n, None))

    def take(self, n: int) -> list[tuple[int, int]]:
        """Up to ``n`` leading pairs (fewer only if the expansion has fewer)."""
        return list(islice(self.iter_pairs(), n))

    def available(self) -> Optional[int]:
        """Number of known pairs, None if unbounded."""
        if self.cycle is not None:
            return None
        return len(self.pairs)


@dataclass(frozen=True)
class LevelRecord:
    level: int
    j: Optional[int]
    k: Optional[int]
    evidence: tuple[bool, ...]  # qualifying flag for j = 0, 1, ... as scanned
    states: int


@dataclass(frozen=True)
class MaccumResult:
    expansion: SAdicExpansion
    m_prefix: tuple[int, ...]
    status: Status
    discrete: tuple[EPWord, ...]
    level_log: tuple[LevelRecord, ...] = field(default=())

    @property
    def m_word(self) -> Optional[EPWord]:
        """The exact point when it is eventually periodic (terminal case)."""
        return terminal_word(self.expansion)


def terminal_word(expansion: SAdicExpansion) -> Optional[EPWord]:
    if expansion.terminal is None:
        return None
    *_, (s0, s1) = level_images(expansion.pairs)
    return EPWord(s1, s0, BINARY)


def _scan_automaton(aut: DirectionAutomaton) -> tuple[list[int], tuple[bool, ...]]:
    """Indices j with ``[1 0^j 1] < [1 0^j 0]``, at most the two smallest.

    Qualifying means the state after ``1 0^j`` is reversed.  The state path
    is eventually periodic with preperiod + period at most the state count,
    so two qualifying indices, if they exist, occur below twice that.
    """
    q = aut.step(aut.initial, 1)
    flags = []
    hits: list[int] = []
    for j in range(2 * aut.size + 1):
        rev = not aut.natural[q]
        flags.append(rev)
        if rev:
            hits.append(j)
            if len(hits) == 2:
                break
        q = aut.step(q, 0)
    return hits, tuple(flags)


def _scan_oracle(order, j_max: int) -> tuple[list[int], tuple[bool, ...]]:
    flags = []
    hits: list[int] = []
    for j in range(j_max + 1):
        w = (1,) + (0,) * j
        rev = cylinder_less(order, w + (1,), w + (0,))
        flags.append(rev)
        if rev:
            hits.append(j)
            if len(hits) == 2:
                break
    return hits, tuple(flags)


def _check_precondition(order) -> None:
    if order.alphabet != BINARY:
        raise ValueError("maccum needs a binary order")
    if order.compare(EPWord((), (0,)), EPWord((), (1,))) != LT:
        raise OrderPreconditionError(
            "the order has 1^∞ < 0^∞; exchange the letters 0 and 1 (or reverse the order) first"
        )


def maccum(
    order: Union[DirectionAutomaton, OracleOrder],
    levels: int = DEFAULT_LEVELS,
    prefix_len: int = DEFAULT_PREFIX,
    j_max: Optional[int] = None,
) -> MaccumResult:
    if levels < 1 or prefix_len < 1:
        raise ValueError("levels and prefix_len must be positive")
    _check_precondition(order)
    is_aut = isinstance(order, DirectionAutomaton)
    if not is_aut and j_max is None:
        j_max = getattr(order, "j_max", DEFAULT_J_MAX)

    pairs: list[tuple[int, int]] = []
    log: list[LevelRecord] = []
    status = Status.TRUNCATED
    terminal = extra_j = None
    cycle = None
    seen: dict[DirectionAutomaton, int] = {}
    current = order.minimize() if is_aut else order
    sigma = None

    for level in range(levels):
        if is_aut:
            if current in seen:
                start = seen[current]
                cycle = (start, level - start)
                status = Status.EXACT
                break
            seen[current] = level
            hits, flags = _scan_automaton(current)
        else:
            hits, flags = _scan_oracle(current, j_max)
        size = current.size if is_aut else 0
        if len(hits) < 2:
            log.append(LevelRecord(level, hits[0] if hits else None, None, flags, size))
            if not is_aut:
                status = Status.INCONCLUSIVE
                break
            terminal = level
            extra_j = hits[0] if hits else None
            status = Status.EXACT
            break
        j, k = hits
        log.append(LevelRecord(level, j, k, flags, size))
        pairs.append((j, k))
        if is_aut:
            current = pullback_tau(current, j, k).minimize()
        else:
            sigma = tau(j, k) if sigma is None else compose(sigma, tau(j, k))
            current = PulledBackOracle(order, sigma)

    else:
        if is_aut and current in seen:
            start = seen[current]
            cycle = (start, levels - start)
            status = Status.EXACT

    expansion = SAdicExpansion(tuple(pairs), terminal, extra_j, cycle)
    prefix = m_prefix_of(expansion, prefix_len, allow_short=True)
    disc = tuple(discrete_part_of(expansion, max_len=prefix_len))
    return MaccumResult(expansion, prefix, status, disc, tuple(log))


def m_prefix_of(expansion: SAdicExpansion, length: int, allow_short: bool = False) -> tuple[int, ...]:
    """Length-``length`` prefix of ``σ(1^∞)``, or of ``σ_[1,h](1 0^∞)`` when terminal.

    For a truncated expansion only ``σ_[1,n](1)`` is known to be a prefix;
    with ``allow_short`` that shorter word is returned instead of raising.
    """
    if expansion.terminal is not None:
        return terminal_word(expansion).take(length)
    w1: tuple[int, ...] = (1,)
    for _, w1 in level_images(expansion.iter_pairs()):
        if len(w1) >= length:
            return w1[:length]
    if allow_short:
        return w1
    raise ValueError(f"expansion too short for a prefix of length {length}")


def discrete_part_of(
    expansion: SAdicExpansion, count: Optional[int] = None, max_len: Optional[int] = None
) -> list[EPWord]:
    """Words of the Markoff set below the smallest accumulation point.

    These are ``(σ_[1,n](0))^∞`` for n = 0, 1, ..., and in the terminal case
    also the single extra word ``σ_[1,h]((1 0^j)^∞)``.  Generation stops after
    ``count`` words, or before a period would exceed ``max_len``.
    """
    out: list[EPWord] = []
    complete = True
    for s0, _ in level_images(expansion.iter_pairs()):
        if count is not None and len(out) >= count:
            return out
        if max_len is not None and len(s0) > max_len:
            complete = False
            break
        out.append(EPWord((), s0, BINARY))
    if expansion.terminal is not None and expansion.extra_j is not None:
        *_, (s0, s1) = level_images(expansion.pairs)
        extra = EPWord((), s1 + s0 * expansion.extra_j, BINARY)
        if (count is None or len(out) < count) and (max_len is None or len(extra.period) <= max_len):
            out.append(extra)
        return out
    if expansion.terminal is None and complete and count is not None and len(out) < count:
        raise ValueError(f"only {len(out)} discrete words available from {len(expansion.pairs)} levels")
    return out


def discrete_part(result: MaccumResult, count: int) -> list[EPWord]:
    if result.status is Status.INCONCLUSIVE:
        raise ValueError("discrete part is not determined for an inconclusive result")
    return discrete_part_of(result.expansion, count=count)
