"""Cylinder orders as finite-state direction automata.

A direction automaton reads the common prefix ``w`` of two words and its
state then decides how the cylinders ``[wx]`` are ordered: ``natural``
means by increasing letter, otherwise by decreasing letter.  Every such
automaton defines a cylinder order, and for ternary automata the order is
consistent with ``-1 < 0 < 1`` (or its reversal) at each prefix.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cmp_to_key
from pathlib import Path
from typing import Callable, Iterable, Optional, Protocol, Sequence

from .subst import RHO0, RHO1, RHO2, Substitution, level_images, tau
from .words import BINARY, SIGNS, TERNARY, Alphabet, AlphabetError, EPWord, parse_word, ultrametric_distance

LT, EQ, GT = -1, 0, 1


class Orientation(Enum):
    NATURAL = "natural"
    REVERSED = "reversed"


class Order(Protocol):
    alphabet: Alphabet

    def compare(self, a: EPWord, b: EPWord) -> int: ...


@dataclass(frozen=True)
class DirectionAutomaton:
    alphabet: Alphabet
    initial: int
    transitions: tuple[tuple[int, ...], ...]
    natural: tuple[bool, ...]
    _offset: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.transitions)
        if n == 0 or len(self.natural) != n:
            raise ValueError("automaton needs one orientation per state")
        if not 0 <= self.initial < n:
            raise ValueError("initial state out of range")
        for row in self.transitions:
            if len(row) != len(self.alphabet) or not all(0 <= t < n for t in row):
                raise ValueError("transition table must be total on the alphabet")
        if self.alphabet not in (BINARY, TERNARY):
            raise ValueError("only binary and ternary automata are supported")
        object.__setattr__(self, "_offset", self.alphabet.letters[0])

    @property
    def size(self) -> int:
        return len(self.transitions)

    def step(self, q: int, letter: int) -> int:
        i = letter - self._offset
        if not 0 <= i < len(self.alphabet):
            raise AlphabetError(f"letter {letter} not in alphabet {self.alphabet.letters}")
        return self.transitions[q][i]

    def run(self, q: int, word: Iterable[int]) -> int:
        for x in word:
            q = self.step(q, x)
        return q

    def state_after(self, word: Iterable[int]) -> int:
        return self.run(self.initial, word)

    def orientation(self, q: int) -> Orientation:
        return Orientation.NATURAL if self.natural[q] else Orientation.REVERSED

    def direction_at(self, word: Iterable[int]) -> Orientation:
        return self.orientation(self.state_after(word))

    def compare(self, a: EPWord, b: EPWord) -> int:
        self.alphabet.check(a.prefix + a.period)
        self.alphabet.check(b.prefix + b.period)
        if a == b:
            return EQ
        q = self.initial
        for x, y in zip(a, b):
            if x != y:
                return LT if (x < y) == self.natural[q] else GT
            q = self.step(q, x)
        raise AssertionError("unreachable")

    # -- structure ---------------------------------------------------------

    def reachable(self) -> list[int]:
        seen = {self.initial: None}
        queue = deque([self.initial])
        while queue:
            q = queue.popleft()
            for t in self.transitions[q]:
                if t not in seen:
                    seen[t] = None
                    queue.append(t)
        return list(seen)

    def minimize(self) -> "DirectionAutomaton":
        """The minimal equivalent automaton with states numbered in BFS order.

        Two automata define the same order iff their minimizations are equal.
        """
        states = self.reachable()
        block = {q: int(self.natural[q]) for q in states}
        while True:
            sig = {q: (block[q],) + tuple(block[t] for t in self.transitions[q]) for q in states}
            ids: dict[tuple, int] = {}
            new = {q: ids.setdefault(sig[q], len(ids)) for q in states}
            if len(ids) == len(set(block.values())):
                break
            block = new
        # renumber blocks by BFS from the initial block
        order: dict[int, int] = {}
        rep: dict[int, int] = {}
        for q in states:
            rep.setdefault(block[q], q)
        queue = deque([block[self.initial]])
        order[block[self.initial]] = 0
        while queue:
            b = queue.popleft()
            for t in self.transitions[rep[b]]:
                if block[t] not in order:
                    order[block[t]] = len(order)
                    queue.append(block[t])
        inv = sorted(order, key=order.get)
        transitions = tuple(tuple(order[block[t]] for t in self.transitions[rep[b]]) for b in inv)
        natural = tuple(self.natural[rep[b]] for b in inv)
        return DirectionAutomaton(self.alphabet, 0, transitions, natural)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "alphabet": len(self.alphabet),
            "initial": self.initial,
            "states": [
                {
                    "orient": "natural" if nat else "reversed",
                    "next": {str(x): row[i] for i, x in enumerate(self.alphabet.letters)},
                }
                for row, nat in zip(self.transitions, self.natural)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DirectionAutomaton":
        size = data.get("alphabet")
        if size == 2:
            alphabet = BINARY
        elif size == 3:
            alphabet = TERNARY
        else:
            raise ValueError(f"alphabet must be 2 or 3, got {size!r}")
        transitions, natural = [], []
        for st in data["states"]:
            orient = st.get("orient", "natural")
            if orient not in ("natural", "reversed"):
                raise ValueError(f"unknown orientation {orient!r}")
            natural.append(orient == "natural")
            try:
                transitions.append(tuple(int(st["next"][str(x)]) for x in alphabet.letters))
            except KeyError as exc:
                raise ValueError(f"missing transition on letter {exc.args[0]}") from None
        return cls(alphabet, int(data.get("initial", 0)), tuple(transitions), tuple(natural))


@dataclass(frozen=True)
class OracleOrder:
    """An arbitrary comparator with explicit search bounds.

    Nothing about such an order can be decided beyond ``j_max``; callers
    report Inconclusive when a bound is hit.
    """

    comparator: Callable[[EPWord, EPWord], int]
    alphabet: Alphabet = BINARY
    j_max: int = 64

    def compare(self, a: EPWord, b: EPWord) -> int:
        return self.comparator(a, b)


@dataclass(frozen=True)
class PulledBackOracle:
    """``a ⪯ b`` iff ``sigma(a) <= sigma(b)`` in the base order."""

    base: OracleOrder
    sigma: Substitution

    alphabet = BINARY

    @property
    def j_max(self) -> int:
        return self.base.j_max

    def compare(self, a: EPWord, b: EPWord) -> int:
        return self.base.compare(self.sigma.apply_ep(a), self.sigma.apply_ep(b))


def compare(order: Order, a: EPWord, b: EPWord) -> int:
    return order.compare(a, b)


def cylinder_less(order: Order, x: Sequence[int], y: Sequence[int]) -> bool:
    """``[x] < [y]``, i.e. ``x^∞ < y^∞``, for distinct words of equal length."""
    x, y = tuple(x), tuple(y)
    if len(x) != len(y) or not x:
        raise ValueError("cylinders must be nonempty and of equal length")
    if x == y:
        raise ValueError("cylinders must be distinct")
    return order.compare(EPWord((), x, order.alphabet), EPWord((), y, order.alphabet)) == LT


def equivalent(a: DirectionAutomaton, b: DirectionAutomaton) -> bool:
    """Exact check that two automata define the same order."""
    if a.alphabet != b.alphabet:
        return False
    start = (a.initial, b.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if a.natural[p] != b.natural[q]:
            return False
        for s, t in zip(a.transitions[p], b.transitions[q]):
            if (s, t) not in seen:
                seen.add((s, t))
                queue.append((s, t))
    return True


def check_cylinder_axiom(order: Order, samples: Iterable[tuple[EPWord, EPWord, EPWord]]) -> bool:
    """``a <= b <= c`` implies ``d(a,b) <= d(a,c)`` on every sampled triple."""
    key = cmp_to_key(order.compare)
    for triple in samples:
        a, b, c = sorted(triple, key=key)
        dac = ultrametric_distance(a, c)
        if ultrametric_distance(a, b) > dac or ultrametric_distance(b, c) > dac:
            return False
    return True


# ---------------------------------------------------------------------------
# builtins


def _parity_automaton(alphabet: Alphabet, toggles: Iterable[int]) -> DirectionAutomaton:
    toggles = set(toggles)
    row0 = tuple(1 if x in toggles else 0 for x in alphabet.letters)
    row1 = tuple(0 if x in toggles else 1 for x in alphabet.letters)
    return DirectionAutomaton(alphabet, 0, (row0, row1), (True, False))


def _single(alphabet: Alphabet) -> DirectionAutomaton:
    return DirectionAutomaton(alphabet, 0, ((0,) * len(alphabet),), (True,))


def eorder(e: EPWord) -> DirectionAutomaton:
    """``a <=_e b`` iff ``e·a <=_lex e·b`` for an eventually periodic sign word ``e``."""
    SIGNS.check(e.prefix + e.period)
    u, v = e.prefix, e.period
    n = len(u) + len(v)
    nxt = [i + 1 for i in range(n - 1)] + [len(u)]
    natural = tuple(x == 1 for x in u + v)
    return DirectionAutomaton(TERNARY, 0, tuple((t, t, t) for t in nxt), natural)


BUILTIN_NAMES = ("lex", "alt", "uni", "flip", "lex3", "alt3", "bi", "biflip")


def builtin(name: str, e: Optional[EPWord] = None) -> DirectionAutomaton:
    if name == "lex":
        return _single(BINARY)
    if name == "alt":
        return _parity_automaton(BINARY, (0, 1))
    if name == "uni":
        return _parity_automaton(BINARY, (1,))
    if name == "flip":
        return _parity_automaton(BINARY, (0,))
    if name == "lex3":
        return _single(TERNARY)
    if name == "alt3":
        return _parity_automaton(TERNARY, (-1, 0, 1))
    if name == "bi":
        return _parity_automaton(TERNARY, (-1, 1))
    if name == "biflip":
        return _parity_automaton(TERNARY, (0,))
    if name == "eorder":
        if e is None:
            raise ValueError("eorder needs a sign word parameter")
        return eorder(e)
    raise ValueError(f"unknown order {name!r}; expected one of {', '.join(BUILTIN_NAMES)} or eorder:<word>")


def parse_sign_word(text: str) -> EPWord:
    table = str.maketrans({"+": "1", "-": "T"})
    return parse_word(text.translate(table), TERNARY)


def parse_order(spec: str) -> DirectionAutomaton:
    """A builtin name, ``eorder:(+-)``, or a path to a JSON order file."""
    if spec in BUILTIN_NAMES:
        return builtin(spec)
    if spec.startswith("eorder:"):
        return builtin("eorder", parse_sign_word(spec[len("eorder:"):]))
    path = Path(spec)
    if path.is_file():
        return DirectionAutomaton.from_json(json.loads(path.read_text()))
    raise ValueError(f"unknown order {spec!r}; expected a builtin name, eorder:<word> or a JSON file")


# ---------------------------------------------------------------------------
# pullbacks


def _pullback(aut: DirectionAutomaton, parities: int, output, advance) -> DirectionAutomaton:
    """Binary automaton for ``a ⪯ b`` iff ``f(a) <= f(b)``, ``f`` a sequential map.

    ``output(p, 1)`` must extend ``output(p, 0)`` by the letter 0 and every
    block must start with a nonzero letter.  Then ``f(w0...)`` and
    ``f(w1...)`` first differ right after ``f(w) output(p, 0)``: the
    0-branch shows the first letter of the next block, the 1-branch shows 0.
    """
    transitions, natural = [], []
    for q in range(aut.size):
        for p in range(parities):
            transitions.append(
                tuple(aut.run(q, output(p, a)) * parities + advance(p, a) for a in (0, 1))
            )
            head = output(p, 0)
            assert output(p, 1)[len(head)] == 0
            r = aut.run(q, head)
            x = output(advance(p, 0), 0)[0]
            natural.append((x < 0) == aut.natural[r])
    return DirectionAutomaton(BINARY, aut.initial * parities, tuple(transitions), tuple(natural))


def pullback_substitution(aut: DirectionAutomaton, sigma: Substitution) -> DirectionAutomaton:
    """Pullback through ``0 -> 1 0^j, 1 -> 1 0^k`` shaped maps (``tau``, ``theta_1``)."""
    s0, s1 = sigma.image(0), sigma.image(1)
    if not (s0[:1] == (1,) and s1[: len(s0)] == s0 and len(s1) > len(s0) and not any(s1[len(s0):])):
        raise ValueError("pullback_substitution needs images 1 0^j and 1 0^k with j < k")
    return _pullback(aut, 1, lambda p, a: sigma.image(a), lambda p, a: 0)


def pullback_tau(aut: DirectionAutomaton, j: int, k: int) -> DirectionAutomaton:
    """The order ``a ⪯ b`` iff ``tau_{j,k}(a) <= tau_{j,k}(b)``, on the same state set."""
    if not 0 <= j < k:
        raise ValueError(f"pullback_tau requires j < k, got j={j}, k={k}")
    return pullback_substitution(aut, tau(j, k))


REDUCTIONS = ("rho0", "rho1", "rho2", "tau01")


def pullback_rho(aut3: DirectionAutomaton, which: str) -> DirectionAutomaton:
    """Binary order induced on words ``a`` by comparing ``sigma(a)`` in a ternary order.

    States are pairs (ternary state, transducer parity).
    """
    if aut3.alphabet != TERNARY:
        raise ValueError("pullback_rho needs a ternary automaton")
    if which == "tau01":
        return pullback_substitution(aut3, tau(0, 1))
    t = {"rho0": RHO0, "rho1": RHO1, "rho2": RHO2}.get(which)
    if t is None:
        raise ValueError(f"unknown reduction {which!r}; expected one of {REDUCTIONS}")
    return _pullback(aut3, 2, t.output, t.advance)


# ---------------------------------------------------------------------------
# converse construction


def _lift(inner: DirectionAutomaton, j: int, k: int) -> DirectionAutomaton:
    """An order whose tau_{j,k}-pullback is ``inner`` and whose scan picks (j, k).

    The automaton parses its input into blocks ``1 0^m``.  Blocks with
    ``m = j`` or ``m = k`` are decoded as the letters 0 and 1 and fed to
    ``inner``; any other block drops into a lexicographic sink.
    """
    start, sink = 0, 1

    def st(q: int, m: int) -> int:
        return 2 + q * (k + 1) + m

    transitions = [(sink, st(inner.initial, 0)), (sink, sink)]
    natural = [True, True]
    for q in range(inner.size):
        for m in range(k + 1):
            on0 = st(q, m + 1) if m < k else sink
            if m == j:
                on1 = st(inner.step(q, 0), 0)
            elif m == k:
                on1 = st(inner.step(q, 1), 0)
            else:
                on1 = sink
            transitions.append((on0, on1))
            natural.append(not inner.natural[q] if m == j else m != k)
    return DirectionAutomaton(BINARY, start, tuple(transitions), tuple(natural)).minimize()


def order_from_sadic(
    pairs: Sequence[tuple[int, int]],
    terminal: Optional[int] = None,
    depth: Optional[int] = None,
) -> DirectionAutomaton:
    """A binary automaton whose smallest accumulation point starts like ``pairs``.

    With ``terminal = h`` the order realizes ``m = σ_[1,h](1 0^∞)`` exactly,
    using the first ``h`` pairs.  Otherwise the first ``depth`` pairs are
    reproduced and the expansion terminates after them.
    """
    pairs = [tuple(p) for p in pairs]
    for p in pairs:
        if len(p) != 2 or not 0 <= p[0] < p[1]:
            raise ValueError(f"malformed pair {p}")
    if terminal is not None:
        if not 0 <= terminal <= len(pairs):
            raise ValueError("terminal index exceeds the number of pairs")
        used = pairs[:terminal]
    else:
        d = len(pairs) if depth is None else depth
        if not 0 <= d <= len(pairs):
            raise ValueError("depth exceeds the number of pairs")
        used = pairs[:d]
    aut = builtin("lex")
    for j, k in reversed(used):
        aut = _lift(aut, j, k)
    return aut


def wn_constraints(pairs: Sequence[tuple[int, int]], depth: int) -> list[tuple[tuple[int, ...], bool]]:
    """The prefixes ``σ_[1,n](1 0^i) w_n`` with their required orientation (True = natural).

    For even n the cylinder ``[.. 0]`` must lie below ``[.. 1]`` for
    ``i < k_{n+1}``, ``i != j_{n+1}``, and above it for ``i in {j, k}``; odd
    levels are reversed.
    """
    out = []
    images = list(level_images(pairs[:depth]))
    wn: tuple[int, ...] = ()
    for n in range(depth):
        s0, s1 = images[n]
        if n > 0:
            wn = s0 + wn
        j, k = pairs[n]
        for i in range(k + 1):
            word = s1 + s0 * i + wn
            want_natural = i not in (j, k)
            if n % 2 == 1:
                want_natural = not want_natural
            out.append((word, want_natural))
    return out
