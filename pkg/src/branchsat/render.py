"""Epsilon-coordinate renderings of weights, coweights and inequality rows.

Type A uses the partition convention, where the last epsilon coordinate of a
weight is 0 and is dropped.  Other types use their usual epsilon space.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .embeddings import EmbeddedPair
from .rootsystem import RootSystem


def _drop_last(rs: RootSystem) -> bool:
    return len(rs.factors) == 1 and rs.factors[0][0] == "A"


def _clean(v):
    return tuple(int(x) if Fraction(x).denominator == 1 else Fraction(x) for x in v)


def weight_eps(rs: RootSystem, x: Sequence[int]) -> tuple:
    v = rs.fw_to_eps_vec(x)
    return _clean(v[:-1] if _drop_last(rs) else v)


def coweight_eps(rs: RootSystem, lam: Sequence[int]) -> tuple:
    """Coefficients c with <lam, nu> = c . weight_eps(nu)."""
    v = rs.coweight_to_eps(lam)
    return _clean(v[:-1] if _drop_last(rs) else v)


def pair_eps(pair: EmbeddedPair, v: Sequence[int]) -> tuple:
    r = pair.g.rank
    return weight_eps(pair.g, v[:r]) + weight_eps(pair.ghat, v[r:])


def row_eps(pair: EmbeddedPair, row: Sequence[int]) -> tuple:
    r = pair.g.rank
    return coweight_eps(pair.g, row[:r]) + coweight_eps(pair.ghat, row[r:])


def fmt_vec(v: Sequence) -> str:
    return " ".join(str(x) for x in v)
