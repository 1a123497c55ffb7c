"""Smallest accumulation points of sup-word sets under cylinder orders.

Submodules: ``words``, ``orders``, ``subst``, ``supwords``, ``maccum``,
``symabs``, ``spectra``, ``analysis`` and the command line in ``cli``.
"""

from .orders import DirectionAutomaton, builtin, parse_order
from .words import BINARY, TERNARY, EPWord, parse_word

__all__ = ["BINARY", "TERNARY", "EPWord", "parse_word", "DirectionAutomaton", "builtin", "parse_order"]
