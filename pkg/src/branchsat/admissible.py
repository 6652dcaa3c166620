"""Dominant indivisible admissible one-parameter subgroups."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .embeddings import EmbeddedPair
from .linalg import nullspace, primitive, rank
from .rootsystem import Coweight


@dataclass(frozen=True)
class AdmissibleResult:
    coweights: list[Coweight]
    degenerate: bool = False


def _canonical_sign(v: tuple[int, ...]) -> tuple[int, ...]:
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def admissible_one_param_subgroups(pair: EmbeddedPair) -> list[Coweight]:
    """Sorted list of dominant indivisible admissible coweights of G.

    A coweight is admissible when the kernel of its pairing on X(T) is
    spanned by tangent weights.  For rank 1 the simple coroot is returned
    (see :func:`admissible_details` for the degeneracy flag).
    """
    return admissible_details(pair).coweights


def admissible_details(pair: EmbeddedPair) -> AdmissibleResult:
    g = pair.g
    r = g.rank
    if r < 2:
        return AdmissibleResult([(1,)], degenerate=True)
    # Coweight lambda pairs with a weight x (fw coords) as lambda . x, so the
    # hyperplane normal is the kernel of the matrix whose rows are weights.
    weights = {_canonical_sign(w) for w in pair.tangent_weights}
    weights = sorted(weights)
    found: set[Coweight] = set()
    seen_planes: set[tuple[int, ...]] = set()

    def extend(chosen: list, start: int) -> None:
        if len(chosen) == r - 1:
            normal = _canonical_sign(primitive(nullspace(chosen, r)[0]))
            if normal in seen_planes:
                return
            seen_planes.add(normal)
            for s in (1, -1):
                lam = tuple(s * x for x in normal)
                dom, _ = g.dominant_coweight(lam)
                found.add(tuple(dom))
            return
        for k in range(start, len(weights)):
            cand = chosen + [weights[k]]
            if rank(cand) == len(cand):
                extend(cand, k + 1)

    extend([], 0)
    return AdmissibleResult(sorted(found))


def is_admissible(pair: EmbeddedPair, lam: Coweight) -> bool:
    """True when the tangent weights orthogonal to lam span a hyperplane."""
    perp = [w for w in pair.tangent_weights if sum(a * b for a, b in zip(lam, w)) == 0]
    return bool(perp) and rank(perp) == pair.g.rank - 1 or (pair.g.rank == 1 and any(lam))
