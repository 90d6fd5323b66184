"""Free group words, Whitehead graphs, primitivity and epsilon-maps."""

import json
from fractions import Fraction

from ._fgcx import (
    Error,
    UndecidedError,
    abelianize,
    find_k,
    gen_wk,
    reduce,
    run_cli,
    trace,
    whitehead_graph,
)
from . import _fgcx

__all__ = [
    "Error",
    "UndecidedError",
    "abelianize",
    "epsilon",
    "find_k",
    "gen_wk",
    "is_primitive",
    "reduce",
    "run_cli",
    "trace",
    "verify",
    "whitehead_graph",
]


def epsilon(k):
    """Exact epsilon(f_k) as a Fraction in units of 2*pi."""
    num, den = _fgcx.epsilon(k)
    return Fraction(num, den)


def is_primitive(word, rank, gens=None, rank_guard=11):
    """Primitivity certificate as a dict with "verdict" and "method"."""
    return json.loads(_fgcx._is_primitive_json(word, rank, gens, rank_guard))


def verify(k, rank_guard=11):
    """Full verification report for w_k and f_k as a dict."""
    return json.loads(_fgcx._verify_json(k, rank_guard))
