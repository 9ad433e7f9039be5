"""Exact Virasoro computations: singular vectors, reducibility verdicts for
intermediate series (x) highest-weight tensor products, minimal-model fusion.

Rational inputs may be int, fractions.Fraction or strings like "-22/5".
"""

import json
from fractions import Fraction

from . import _core
from ._core import InternalError, UserError

__all__ = [
    "InternalError",
    "UserError",
    "fusion",
    "minimal_table",
    "oracle",
    "ppoly",
    "reducibility_degree",
    "reducible_pairs",
    "replay",
    "replay_case_ids",
    "singular_vectors",
    "verdict",
]


def _q(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (int, str)):
        return str(x)
    raise TypeError(f"expected int, Fraction or str, got {type(x).__name__}")


def singular_vectors(c, h, level, quotient=False):
    return json.loads(_core.singular_vectors(_q(c), _q(h), level, quotient))


def reducibility_degree(c, h, max_level=12):
    return _core.reducibility_degree(_q(c), _q(h), max_level)


def ppoly(c, h, alpha, beta, method="phi", cutoff=12):
    return json.loads(_core.ppoly(_q(c), _q(h), _q(alpha), _q(beta), method, cutoff))


def verdict(alpha, beta, c, h, cutoff=12, cross_check=False, window=6, level_max=8):
    return json.loads(
        _core.verdict(_q(alpha), _q(beta), _q(c), _q(h), cutoff, cross_check, window, level_max)
    )


def fusion(p, q, m1, n1, m2, n2):
    return [tuple(x) for x in _core.fusion(p, q, m1, n1, m2, n2)]


def minimal_table(p, q):
    return json.loads(_core.minimal_table(p, q))


def reducible_pairs(p, q, m, n):
    return json.loads(_core.reducible_pairs(p, q, m, n))


def oracle(c, h, alpha, beta, window=6, level_max=8, margin=4):
    return json.loads(_core.oracle(_q(c), _q(h), _q(alpha), _q(beta), window, level_max, margin))


def replay_case_ids():
    return list(_core.replay_case_ids())


def replay(case=None):
    return json.loads(_core.replay(case))
