"""Exact pointed polyhedral cones: double description, facets, Hilbert bases.

Inequalities use the convention ``a . x <= 0``.  Rays are primitive integer
vectors.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .exceptions import CatalogFormatError, DimensionError, NotPointed
from .linalg import (
    det,
    dot,
    inverse,
    primitive,
    primitive_rational,
    rank,
    smith_normal_form,
    vecmat,
)

__all__ = [
    "Cone",
    "HilbertBasis",
    "extreme_rays",
    "minimal_h_representation",
    "cone_contains",
    "smith_normal_form",
    "hilbert_basis",
    "facet_rows",
    "read_matrix",
    "write_matrix",
]

Vec = tuple[int, ...]


# ---------------------------------------------------------- double description
def _popcount(x: int) -> int:
    return bin(x).count("1")


_INT64_SAFE = 1 << 62


def _evaluate(rows: list[Vec], idx: list[int], rays: list[Vec]):
    """Matrix of a . r for rows[idx] x rays, via int64 when provably exact."""
    if not idx or not rays:
        return [[0] * len(rays) for _ in idx]
    a_max = max(abs(x) for i in idx for x in rows[i]) or 1
    r_max = max(abs(x) for r in rays for x in r) or 1
    if a_max * r_max * len(rays[0]) < _INT64_SAFE:
        a = np.array([rows[i] for i in idx], dtype=np.int64)
        return (a @ np.array(rays, dtype=np.int64).T).tolist()
    return [[dot(rows[i], r) for r in rays] for i in idx]


def extreme_rays(h_rep: Sequence[Sequence[int]], dim: int | None = None, order: str = "lex") -> list[Vec]:
    """Extreme rays of {x : a . x <= 0 for all rows a}.

    Starts from a simplicial cone on the first independent rows (in
    lexicographic order).  ``order="lex"`` then inserts the remaining rows
    lexicographically; ``order="maxcutoff"`` always inserts the row cutting
    off the most current rays (ties by lexicographic position), which keeps
    intermediate cones much smaller on large systems.  Adjacency is decided
    combinatorially from zero sets.  The result does not depend on ``order``.
    """
    if order not in ("lex", "maxcutoff"):
        raise ValueError(f"unknown insertion order {order!r}")
    rows = sorted({primitive(r) for r in h_rep if any(r)})
    if dim is None:
        if not rows:
            raise NotPointed("empty inequality system")
        dim = len(rows[0])
    if any(len(r) != dim for r in rows):
        raise DimensionError("inequality rows of different lengths")
    if rank(rows) < dim:
        raise NotPointed("the cone contains a line")

    basis: list[int] = []
    for k, r in enumerate(rows):
        if rank([rows[i] for i in basis] + [r]) > len(basis):
            basis.append(k)
            if len(basis) == dim:
                break
    binv = inverse([rows[i] for i in basis])
    # columns of -B^{-1}: ray j is tight on every basis row except j
    rays: list[Vec] = [primitive_rational([-binv[i][j] for i in range(dim)]) for j in range(dim)]
    zeros: list[int] = []
    for j in range(dim):
        z = 0
        for t in range(dim):
            if t != j:
                z |= 1 << basis[t]
        zeros.append(z)

    in_basis = set(basis)
    remaining = [k for k in range(len(rows)) if k not in in_basis]
    while remaining:
        if order == "lex":
            k = remaining.pop(0)
            vals = [dot(rows[k], r) for r in rays]
        else:
            table = _evaluate(rows, remaining, rays)
            cut = [sum(1 for v in t if v > 0) for t in table]
            best = max(range(len(remaining)), key=lambda i: (cut[i], -i))
            k = remaining.pop(best)
            vals = table[best]
        pos = [i for i, v in enumerate(vals) if v > 0]
        if not pos:
            for i, v in enumerate(vals):
                if v == 0:
                    zeros[i] |= 1 << k
            continue
        neg = [i for i, v in enumerate(vals) if v < 0]
        zer = [i for i, v in enumerate(vals) if v == 0]
        new_rays, new_zeros = [], []
        need = dim - 2
        # tight[row] = bitmask of the current rays lying on that row's hyperplane
        tight: dict[int, int] = {}
        for q, z in enumerate(zeros):
            while z:
                low = z & -z
                b = low.bit_length() - 1
                tight[b] = tight.get(b, 0) | (1 << q)
                z ^= low
        for p in pos:
            for n in neg:
                common = zeros[p] & zeros[n]
                if _popcount(common) < need:
                    continue
                # adjacent iff no third ray is tight on every row of `common`
                pair_mask = (1 << p) | (1 << n)
                mask = (1 << len(rays)) - 1
                z = common
                while z and mask != pair_mask:
                    low = z & -z
                    mask &= tight[low.bit_length() - 1]
                    z ^= low
                if mask != pair_mask:
                    continue
                vp, vn = vals[p], vals[n]
                r = primitive(vp * x - vn * y for x, y in zip(rays[n], rays[p]))
                new_rays.append(r)
                new_zeros.append(common | (1 << k))
        keep = neg + zer
        rays = [rays[i] for i in keep] + new_rays
        zeros = [zeros[i] | ((1 << k) if vals[i] == 0 else 0) for i in keep] + new_zeros
    return sorted(set(rays))


def minimal_h_representation(v_rep: Sequence[Sequence[int]]) -> list[Vec]:
    """Facet normals of the cone generated by v_rep (rows a, a . x <= 0).

    Computed as the extreme rays of the dual cone.
    """
    return extreme_rays(v_rep)


def facet_rows(h_rep: Sequence[Sequence[int]], rays: Sequence[Sequence[int]]) -> list[int]:
    """Indices of input rows defining facets (first occurrence of each facet)."""
    if not rays:
        return []
    dim = len(rays[0])
    out, seen = [], set()
    for i, a in enumerate(h_rep):
        p = primitive(a)
        if not any(p) or p in seen:
            continue
        tight = [r for r in rays if dot(a, r) == 0]
        if tight and rank(tight) == dim - 1:
            seen.add(p)
            out.append(i)
    return out


def cone_contains(cone: "Cone | Sequence[Sequence[int]]", point: Sequence[int]) -> bool:
    rows = cone.inequalities if isinstance(cone, Cone) else cone
    for a in rows:
        if len(a) != len(point):
            raise DimensionError("point and inequality dimensions differ")
        if dot(a, point) > 0:
            return False
    return True


@dataclass
class Cone:
    """A pointed cone held in H- and/or V-representation."""

    dim: int
    h_rep: list[Vec] | None = None
    v_rep: list[Vec] | None = None

    @classmethod
    def from_inequalities(cls, rows: Iterable[Sequence[int]]) -> "Cone":
        rows = [tuple(r) for r in rows]
        return cls(len(rows[0]), h_rep=rows)

    @classmethod
    def from_rays(cls, rays: Iterable[Sequence[int]]) -> "Cone":
        rays = [primitive(r) for r in rays]
        return cls(len(rays[0]), v_rep=sorted(set(rays)))

    @property
    def rays(self) -> list[Vec]:
        if self.v_rep is None:
            self.v_rep = extreme_rays(self.h_rep, self.dim)
        return self.v_rep

    @property
    def inequalities(self) -> list[Vec]:
        if self.h_rep is None:
            self.h_rep = minimal_h_representation(self.v_rep)
        return self.h_rep

    @property
    def facets(self) -> list[Vec]:
        return minimal_h_representation(self.rays)

    def contains(self, point: Sequence[int]) -> bool:
        return cone_contains(self, point)


# ------------------------------------------------------------- triangulation
def pulling_triangulation(rays: Sequence[Vec], facets: Sequence[Vec]) -> list[tuple[int, ...]]:
    """Simplicial subcones (tuples of ray indices) covering the cone.

    Recursive pulling: cone over the smallest ray index with the
    triangulations of the facets not containing it.
    """
    dim = len(rays[0])
    facet_sets = [frozenset(i for i, r in enumerate(rays) if dot(f, r) == 0) for f in facets]
    memo: dict[frozenset, list[tuple[int, ...]]] = {}

    def subfaces(face: frozenset, k: int) -> list[frozenset]:
        cands = set()
        for fs in facet_sets:
            g = face & fs
            if g != face and len(g) >= k - 1:
                cands.add(g)
        good = [g for g in cands if rank([rays[i] for i in g]) == k - 1]
        return sorted(good, key=lambda s: sorted(s))

    def tri(face: frozenset, k: int) -> list[tuple[int, ...]]:
        if face in memo:
            return memo[face]
        if len(face) == k:
            res = [tuple(sorted(face))]
        else:
            v0 = min(face)
            res = []
            for g in subfaces(face, k):
                if v0 in g:
                    continue
                for s in tri(g, k - 1):
                    res.append(tuple(sorted(s + (v0,))))
        memo[face] = res
        return res

    return tri(frozenset(range(len(rays))), dim)


def parallelepiped_points(gens: Sequence[Vec]) -> list[Vec]:
    """Nonzero integer points of sum t_i g_i with 0 <= t_i < 1 (g_i independent)."""
    n = len(gens)
    u, d, v = smith_normal_form([list(g) for g in gens])
    diag = [d[i][i] for i in range(n)]
    if all(x == 1 for x in diag):
        return []
    vinv = inverse(v)
    minv = inverse(gens)
    out = set()
    for c in product(*(range(x) for x in diag)):
        if not any(c):
            continue
        x = vecmat(c, vinv)
        t = vecmat(x, minv)
        t = [ti - (ti.numerator // ti.denominator) for ti in t]
        p = vecmat(t, gens)
        out.add(tuple(int(Fraction(pi)) for pi in p))
    out.discard(tuple([0] * n))
    return sorted(out)


# -------------------------------------------------------------- hilbert basis
@dataclass
class HilbertBasis:
    elements: list[Vec]
    minimal: bool = True
    simplices: int = 0
    candidates: int = 0
    stats: dict = field(default_factory=dict)


def _to_lattice(v: Sequence[int], binv) -> tuple[Fraction, ...]:
    return vecmat(v, binv)


def hilbert_basis(cone: Cone, lattice=None) -> HilbertBasis:
    """Minimal generating set of cone cap lattice.

    ``lattice`` is a LatticeDescription or a list of basis rows; None means
    the full integer lattice.
    """
    rays = cone.rays
    dim = cone.dim
    if rank(rays) < dim:
        raise NotPointed("Hilbert basis requires a full-dimensional cone")
    basis = getattr(lattice, "basis", lattice)
    if basis is None:
        basis = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    basis = [list(b) for b in basis]
    binv = inverse(basis)
    lrays = [primitive_rational(_to_lattice(r, binv)) for r in rays]
    lfacets = minimal_h_representation(lrays)
    simplices = pulling_triangulation(lrays, lfacets)
    cands = set(lrays)
    for s in simplices:
        cands.update(parallelepiped_points([lrays[i] for i in s]))
    cand_list = sorted(cands, key=lambda x: (sum(abs(c) for c in x), x))

    def inside(x):
        return all(dot(f, x) <= 0 for f in lfacets)

    # reduce: x is redundant iff x - y lies in the cone for another candidate y
    keep = []
    fvals = {x: tuple(dot(f, x) for f in lfacets) for x in cand_list}
    for x in cand_list:
        fx = fvals[x]
        red = False
        for y in cand_list:
            if y == x:
                continue
            fy = fvals[y]
            if all(a - b <= 0 for a, b in zip(fx, fy)):
                red = True
                break
        if not red:
            keep.append(x)
    elements = sorted(tuple(int(c) for c in vecmat(x, basis)) for x in keep)
    return HilbertBasis(elements, True, len(simplices), len(cand_list))


def normalized_volume(gens: Sequence[Vec]) -> int:
    return abs(det([list(g) for g in gens]))


# ---------------------------------------------------------------- matrix I/O
def format_matrix(rows: Sequence[Sequence[int]], ncols: int | None = None) -> str:
    """'rows cols' header then one row per line (lattice-tool convention)."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    lines = [f"{len(rows)} {ncols}"]
    lines += [" ".join(str(int(x)) for x in r) for r in rows]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> list[Vec]:
    toks = text.split()
    if len(toks) < 2:
        raise CatalogFormatError("matrix file needs a 'rows cols' header")
    try:
        nr, nc = int(toks[0]), int(toks[1])
        vals = [int(t) for t in toks[2:]]
    except ValueError as exc:
        raise CatalogFormatError(f"non-integer matrix entry: {exc}") from None
    if len(vals) != nr * nc:
        raise CatalogFormatError(f"expected {nr * nc} entries, found {len(vals)}")
    return [tuple(vals[i * nc : (i + 1) * nc]) for i in range(nr)]


def write_matrix(path: str | Path, rows: Sequence[Sequence[int]], ncols: int | None = None) -> None:
    Path(path).write_text(format_matrix(rows, ncols))


def read_matrix(path: str | Path) -> list[Vec]:
    return parse_matrix(Path(path).read_text())
