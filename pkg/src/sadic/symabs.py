"""Consistent ternary orders and the smallest accumulation point of ``M^abs``.

Consistency leaves two orientation bits that matter: at ``1`` (is
``[1 -1] < [1 0]``?) and at ``10`` (is ``[10 -1] < [10 0]``?).  They select one
of rho2, rho0, rho1, tau01, which reduces the problem to a binary order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .maccum import DEFAULT_LEVELS, DEFAULT_PREFIX, MaccumResult, OrderPreconditionError, Status, discrete_part_of, maccum
from .orders import LT, DirectionAutomaton, pullback_rho
from .subst import RHO0, RHO1, RHO2, tau
from .words import TERNARY, EPWord

_CHOICE = {
    (True, True): "rho2",
    (True, False): "rho0",
    (False, True): "rho1",
    (False, False): "tau01",
}


@dataclass(frozen=True)
class SymResult:
    sigma_choice: str
    inner: MaccumResult
    m_abs_prefix: tuple[int, ...]
    discrete: tuple[EPWord, ...]


def reduction_map(name: str):
    """Word map for a reduction name, acting on finite words and EP words."""
    if name == "tau01":
        t = tau(0, 1)

        def apply(w):
            if isinstance(w, EPWord):
                return t.apply_ep(w, TERNARY)
            return t(w)

        return apply
    return {"rho0": RHO0, "rho1": RHO1, "rho2": RHO2}[name]


def classify(order3: DirectionAutomaton) -> str:
    if order3.alphabet != TERNARY:
        raise ValueError("classify needs a ternary order")
    zero = EPWord((), (0,), TERNARY)
    one = EPWord((), (1,), TERNARY)
    if order3.compare(zero, one) != LT:
        raise OrderPreconditionError("the order has 1^∞ < 0^∞; negate the letters first")
    at_1 = order3.natural[order3.state_after((1,))]
    at_10 = order3.natural[order3.state_after((1, 0))]
    return _CHOICE[(at_1, at_10)]


def m_abs(order3: DirectionAutomaton, levels: int = DEFAULT_LEVELS, prefix_len: int = DEFAULT_PREFIX) -> SymResult:
    choice = classify(order3)
    inner = maccum(pullback_rho(order3, choice), levels=levels, prefix_len=prefix_len)
    f = reduction_map(choice)
    prefix = f(inner.m_prefix)[:prefix_len]
    disc = (EPWord((), (0,), TERNARY),) + tuple(f(a) for a in inner.discrete)
    return SymResult(choice, inner, prefix, disc)


def discrete_abs(result: SymResult, count: int) -> list[EPWord]:
    """``0^∞`` followed by the images of the inner discrete part."""
    if result.inner.status is Status.INCONCLUSIVE:
        raise ValueError("inner binary computation is inconclusive")
    f = reduction_map(result.sigma_choice)
    if count <= 0:
        return []
    inner = discrete_part_of(result.inner.expansion, count=count - 1) if count > 1 else []
    return [EPWord((), (0,), TERNARY)] + [f(a) for a in inner]
