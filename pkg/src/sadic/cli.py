"""Command line front end: ``sadic <command> ...``.

Exit codes: 0 on success, 1 on usage or input errors, 2 when a result is
inconclusive.  Numbers are printed exactly as ``p/q`` or as ``[lo,hi]``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import analysis, maccum as maccum_mod, spectra, supwords, symabs
from .orders import (
    BUILTIN_NAMES,
    DirectionAutomaton,
    builtin,
    check_cylinder_axiom,
    order_from_sadic,
    parse_order,
    pullback_rho,
    pullback_tau,
)
from .words import BINARY, TERNARY, Alphabet, EPWord, format_letters, parse_word

EXIT_OK, EXIT_ERROR, EXIT_INCONCLUSIVE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _order(spec: str) -> DirectionAutomaton:
    return parse_order(spec)


def _word_for(order: DirectionAutomaton, text: str) -> EPWord:
    return parse_word(text, order.alphabet)


# ---------------------------------------------------------------------------
# random inputs for the verification sweeps


def random_epword(rng: random.Random, alphabet: Alphabet = BINARY, max_len: int = 6) -> EPWord:
    letters = alphabet.letters
    u = tuple(rng.choice(letters) for _ in range(rng.randint(0, max_len)))
    v = tuple(rng.choice(letters) for _ in range(rng.randint(1, max_len)))
    return EPWord(u, v, alphabet)


def random_close_triple(rng: random.Random, alphabet: Alphabet = BINARY) -> tuple[EPWord, EPWord, EPWord]:
    """Three words sharing a random common stem, so that orders are actually exercised deep down."""
    stem = tuple(rng.choice(alphabet.letters) for _ in range(rng.randint(0, 8)))
    out = []
    for _ in range(3):
        w = random_epword(rng, alphabet)
        out.append(EPWord(stem + w.prefix, w.period, alphabet))
    return tuple(out)


def random_pairs(rng: random.Random, depth: int, k_max: int = 3) -> list[tuple[int, int]]:
    pairs = []
    for _ in range(depth):
        k = rng.randint(1, k_max)
        pairs.append((rng.randint(0, k - 1), k))
    return pairs


def _verify_conjugacy(rng: random.Random, iters: int) -> int:
    cases = 0
    for k in range(1, 6):
        for n in range(11):
            for bits in range(2**n):
                w = tuple((bits >> i) & 1 for i in range(n))
                if not analysis.conjugacy_check(k, w):
                    raise AssertionError(f"conjugacy fails for k={k}, w={format_letters(w)}")
                cases += 1
    return cases


def _verify_lemma_wn(rng: random.Random, iters: int) -> int:
    for _ in range(iters):
        pairs = random_pairs(rng, 6)
        n = rng.randint(0, 6)
        _, ok = analysis.wn_words(pairs, n)
        if not ok:
            raise AssertionError(f"containment fails for pairs={pairs}, n={n}")
    return iters


def _verify_axioms(rng: random.Random, iters: int) -> int:
    autos = [builtin(name) for name in BUILTIN_NAMES]
    autos.append(builtin("eorder", parse_word("(1T)", TERNARY)))
    for _ in range(4):
        j, k = random_pairs(rng, 1)[0]
        autos.append(pullback_tau(rng.choice(autos[:4]), j, k))
    for name in ("rho0", "rho1", "rho2", "tau01"):
        autos.append(pullback_rho(builtin("lex3"), name))
    per = max(1, iters // len(autos))
    for aut in autos:
        triples = [random_close_triple(rng, aut.alphabet) for _ in range(per)]
        if not check_cylinder_axiom(aut, triples):
            raise AssertionError(f"cylinder axiom fails for {aut.to_json()}")
    return per * len(autos)


def _verify_roundtrip(rng: random.Random, iters: int) -> int:
    for _ in range(iters):
        d = rng.randint(0, 5)
        pairs = random_pairs(rng, d)
        res = maccum_mod.maccum(order_from_sadic(pairs, depth=d), levels=d + 2, prefix_len=8)
        got = res.expansion.take(d)
        if got != pairs:
            raise AssertionError(f"round trip of {pairs} gave {got}")
    return iters


VERIFIERS = {
    "conjugacy": _verify_conjugacy,
    "lemma-wn": _verify_lemma_wn,
    "axioms": _verify_axioms,
    "roundtrip": _verify_roundtrip,
}


# ---------------------------------------------------------------------------
# commands


def _cmd_order_show(args) -> int:
    aut = _order(args.order)
    if args.json:
        print(_dump(aut.to_json()))
        return EXIT_OK
    letters = aut.alphabet.letters
    print(f"alphabet {format_letters(letters)}, {aut.size} states, initial {aut.initial}")
    for q, (row, nat) in enumerate(zip(aut.transitions, aut.natural)):
        moves = " ".join(f"{format_letters((x,))}->{t}" for x, t in zip(letters, row))
        print(f"{q}: {'natural' if nat else 'reversed'}  {moves}")
    return EXIT_OK


def _maccum_json(res: maccum_mod.MaccumResult) -> dict:
    e = res.expansion
    return {
        "pairs": [list(p) for p in e.pairs],
        "terminal": e.terminal,
        "extra_j": e.extra_j,
        "cycle": list(e.cycle) if e.cycle else None,
        "prefix": format_letters(res.m_prefix),
        "status": res.status.value,
        "discrete": [str(a) for a in res.discrete],
    }


def _cmd_maccum(args) -> int:
    order = _order(args.order)
    res = maccum_mod.maccum(order, levels=args.levels, prefix_len=args.prefix)
    if args.json:
        print(_dump(_maccum_json(res)))
    else:
        print(format_letters(res.m_prefix))
    return EXIT_INCONCLUSIVE if res.status is maccum_mod.Status.INCONCLUSIVE else EXIT_OK


def _cmd_discrete(args) -> int:
    order = _order(args.order)
    if order.alphabet == TERNARY:
        res = symabs.m_abs(order, levels=args.levels)
        words = symabs.discrete_abs(res, args.count)
    else:
        res = maccum_mod.maccum(order, levels=args.levels)
        if res.status is maccum_mod.Status.INCONCLUSIVE:
            print("inconclusive", file=sys.stderr)
            return EXIT_INCONCLUSIVE
        words = maccum_mod.discrete_part(res, args.count)
    if args.json:
        print(_dump([str(a) for a in words]))
    else:
        for a in words:
            print(a)
    return EXIT_OK


def _cmd_supword(args) -> int:
    order = _order(args.order)
    a = _word_for(order, args.word)
    if args.abs:
        f = supwords.limsup_word_abs if args.limsup else supwords.sup_word_abs
    else:
        f = supwords.limsup_word if args.limsup else supwords.sup_word
    s = f(order, a)
    print(_dump({"word": str(a), "sup": str(s)}) if args.json else s)
    return EXIT_OK


def _cmd_member(args) -> int:
    order = _order(args.order)
    a = _word_for(order, args.word)
    ok = supwords.is_member_abs(order, a) if args.abs else supwords.is_member(order, a)
    print(_dump({"word": str(a), "member": ok}) if args.json else ("true" if ok else "false"))
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    order = _order(args.order)
    if order.alphabet != BINARY:
        raise ValueError("enumerate needs a binary order")
    found = supwords.enumerate_members(order, args.max_period, limit=args.limit)
    if args.json:
        print(_dump([{"word": str(a), "member": True} for a in found]))
    else:
        for a in found:
            print(a)
    return EXIT_OK


def _cmd_symabs(args) -> int:
    order = _order(args.order)
    res = symabs.m_abs(order, levels=args.levels, prefix_len=args.prefix)
    if args.json:
        body = _maccum_json(res.inner)
        print(
            _dump(
                {
                    "sigma": res.sigma_choice,
                    "inner": body,
                    "prefix": format_letters(res.m_abs_prefix),
                    "status": res.inner.status.value,
                    "discrete": [str(a) for a in res.discrete],
                }
            )
        )
    else:
        print(format_letters(res.m_abs_prefix))
    return EXIT_INCONCLUSIVE if res.inner.status is maccum_mod.Status.INCONCLUSIVE else EXIT_OK


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {text!r}") from None


def _cmd_spectrum(args) -> int:
    ff = spectra.format_fraction
    if args.what == "lagrange":
        vals = spectra.lagrange_discrete(args.q, args.points)
        print(_dump([ff(v) for v in vals]) if args.json else ", ".join(ff(v) for v in vals))
    elif args.what == "mtilde":
        iv = spectra.mtilde(args.q, args.bits)
        print(_dump({"lo": ff(iv.lo), "hi": ff(iv.hi)}) if args.json else spectra.format_interval(iv))
    elif args.what == "value":
        v = spectra.lagrange_value(_fraction(args.x), args.q)
        print(_dump({"x": args.x, "value": ff(v)}) if args.json else ff(v))
    else:
        iv = spectra.beta_from_expansion(parse_word(args.word, BINARY), _fraction(args.tol))
        print(_dump({"lo": ff(iv.lo), "hi": ff(iv.hi)}) if args.json else spectra.format_interval(iv))
    return EXIT_OK


def _cmd_complexity(args) -> int:
    order = _order(args.order)
    if order.alphabet == TERNARY:
        res = symabs.m_abs(order, prefix_len=args.prefix_len)
        prefix, slope, offset = res.m_abs_prefix, 6, 4
        status = res.inner.status
    else:
        res = maccum_mod.maccum(order, prefix_len=args.prefix_len)
        prefix, slope, offset = res.m_prefix, 3, 2
        status = res.status
    if len(prefix) < args.prefix_len:
        raise ValueError(f"only {len(prefix)} letters of the point are known")
    rows = analysis.complexity_profile(prefix, args.n)
    bound_ok = all(r.count <= slope * r.n - offset for r in rows if r.n >= 2)
    stable = all(r.stabilized for r in rows)
    if args.json:
        print(
            _dump(
                {
                    "counts": [{"n": r.n, "count": r.count, "stabilized": r.stabilized} for r in rows],
                    "bound": f"{slope}n-{offset}",
                    "bound_holds": bound_ok,
                    "stabilized": stable,
                }
            )
        )
    else:
        for r in rows:
            print(f"{r.n} {r.count}{'' if r.stabilized else ' unstable'}")
        print(f"p(n) <= {slope}n-{offset}: {'true' if bound_ok else 'false'}")
    if status is maccum_mod.Status.INCONCLUSIVE or not stable:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    try:
        n = VERIFIERS[args.what](rng, args.iters)
    except AssertionError as exc:
        print(_dump({"check": args.what, "ok": False, "detail": str(exc)}) if args.json else f"{args.what}: FAIL {exc}")
        return EXIT_ERROR
    print(_dump({"check": args.what, "ok": True, "cases": n}) if args.json else f"{args.what}: ok ({n} cases)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sadic", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_order(sp, json_flag: bool = True):
        sp.add_argument("--order", required=True, help="builtin name, eorder:<signs> or JSON file")
        if json_flag:
            sp.add_argument("--json", action="store_true")
        return sp

    order = sub.add_parser("order").add_subparsers(dest="what", required=True, parser_class=_Parser)
    with_order(order.add_parser("show")).set_defaults(func=_cmd_order_show)

    for name, func in (("maccum", _cmd_maccum), ("symabs", _cmd_symabs)):
        sp = with_order(sub.add_parser(name))
        sp.add_argument("--levels", type=int, default=maccum_mod.DEFAULT_LEVELS)
        sp.add_argument("--prefix", type=int, default=maccum_mod.DEFAULT_PREFIX)
        sp.set_defaults(func=func)

    sp = with_order(sub.add_parser("discrete"))
    sp.add_argument("--count", type=int, default=5)
    sp.add_argument("--levels", type=int, default=maccum_mod.DEFAULT_LEVELS)
    sp.set_defaults(func=_cmd_discrete)

    for name, func in (("supword", _cmd_supword), ("member", _cmd_member)):
        sp = with_order(sub.add_parser(name))
        sp.add_argument("--word", required=True, help="u(v) with letters 0, 1, T")
        sp.add_argument("--abs", action="store_true", help="apply abs to every tail (ternary orders)")
        if name == "supword":
            sp.add_argument("--limsup", action="store_true")
        sp.set_defaults(func=func)

    sp = with_order(sub.add_parser("enumerate"))
    sp.add_argument("--max-period", type=int, required=True)
    sp.add_argument("--limit", type=int, default=supwords.DEFAULT_PERIOD_LIMIT)
    sp.set_defaults(func=_cmd_enumerate)

    spec = sub.add_parser("spectrum").add_subparsers(dest="what", required=True, parser_class=_Parser)
    sp = spec.add_parser("lagrange")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--points", type=int, default=4)
    sp = spec.add_parser("mtilde")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--bits", type=int, default=40)
    sp = spec.add_parser("value")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--x", required=True, help="rational p/q")
    sp = spec.add_parser("beta")
    sp.add_argument("--word", required=True)
    sp.add_argument("--tol", default="1e-9")
    for sp in spec.choices.values():
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=_cmd_spectrum)

    sp = with_order(sub.add_parser("complexity"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--prefix-len", type=int, default=1024)
    sp.set_defaults(func=_cmd_complexity)

    sp = sub.add_parser("verify")
    sp.add_argument("what", choices=sorted(VERIFIERS))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--iters", type=int, default=1000)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError, KeyError) as exc:
        print(f"sadic: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
