"""Chevalley basis of a semisimple Lie algebra with integer structure constants.

Basis order: one root vector ``e_alpha`` per root, in ``rs.roots`` order
(positive roots first), followed by the Cartan generators ``h_1..h_r``
(``h_i`` is the simple coroot).  Elements are sparse dicts
``{basis index: coefficient}``.

Signs are fixed by declaring ``N_{alpha,beta} = +(p+1)`` on extraspecial
pairs (smallest ``alpha`` in the height order of positive roots); all other
constants follow from the Chevalley relations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .rootsystem import Coweight, Root, RootSystem

Element = dict[int, Fraction | int]

MASK64 = (1 << 64) - 1


def splitmix64(state: int) -> tuple[int, int]:
    """One step of SplitMix64: returns (next_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def derive_seed(*parts: int) -> int:
    """Mix several integers into one 64-bit seed (order sensitive)."""
    s = 0x5EED
    for p in parts:
        s, out = splitmix64(s ^ (int(p) & MASK64))
        s = out
    return s


class LieAlgebra:
    """Chevalley basis and brackets for the Lie algebra of a root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.nroots = len(rs.roots)
        self.dim = self.nroots + rs.rank
        self._pos_order = {a: i for i, a in enumerate(rs.positive_roots)}
        self._extraspecial = self._find_extraspecial()
        self._N: dict[tuple[Root, Root], int] = {}
        # full table for quick brackets
        self.table: dict[tuple[int, int], int] = {}
        for i, a in enumerate(rs.roots):
            for j, b in enumerate(rs.roots):
                s = tuple(x + y for x, y in zip(a, b))
                if s in rs.root_index:
                    self.table[(i, j)] = self.N(a, b)

    # ---------------------------------------------------------- constants
    def _form(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        g = self.rs.gram
        r = self.rs.rank
        return sum(a[i] * b[j] * g[i][j] for i in range(r) if a[i] for j in range(r) if b[j])

    def _is_root(self, a) -> bool:
        return tuple(a) in self.rs.root_index

    def _is_pos(self, a) -> bool:
        return tuple(a) in self._pos_order

    def _p(self, a: Root, b: Root) -> int:
        """Largest p with b - p a a root."""
        p = 0
        while self._is_root(tuple(y - (p + 1) * x for x, y in zip(a, b))):
            p += 1
        return p

    def _find_extraspecial(self) -> dict[Root, tuple[Root, Root]]:
        out = {}
        for xi in self.rs.positive_roots:
            if sum(xi) == 1:
                continue
            for a in self.rs.positive_roots:
                b = tuple(x - y for x, y in zip(xi, a))
                if self._is_pos(b):
                    out[xi] = (a, b)
                    break
        return out

    def N(self, a: Root, b: Root) -> int:
        """Structure constant: [e_a, e_b] = N(a, b) e_{a+b}."""
        a, b = tuple(a), tuple(b)
        key = (a, b)
        if key in self._N:
            return self._N[key]
        s = tuple(x + y for x, y in zip(a, b))
        if not any(s) or not self._is_root(s):
            val = 0
        elif self._is_pos(a) and self._is_pos(b):
            val = self._N_positive(a, b)
        elif not self._is_pos(a) and not self._is_pos(b):
            val = -self.N(tuple(-x for x in a), tuple(-x for x in b))
        else:
            c = tuple(-x for x in s)
            if self._is_pos(a) == self._is_pos(c):
                val = self._form(c, c) / self._form(b, b) * self.N(c, a)
            else:
                val = self._form(c, c) / self._form(a, a) * self.N(b, c)
            assert Fraction(val).denominator == 1
            val = int(val)
        self._N[key] = val
        return val

    def _N_positive(self, a: Root, b: Root) -> int:
        xi = tuple(x + y for x, y in zip(a, b))
        e1, e2 = self._extraspecial[xi]
        if (a, b) == (e1, e2):
            return self._p(e1, e2) + 1
        if (b, a) == (e1, e2):
            return -(self._p(e1, e2) + 1)
        if self._pos_order[a] > self._pos_order[b]:
            return -self.N(b, a)
        neg = lambda v: tuple(-x for x in v)
        diff = lambda u, v: tuple(x - y for x, y in zip(u, v))
        total = Fraction(0)
        d1 = diff(b, e1)
        if self._is_root(d1):
            total += Fraction(self.N(b, neg(e1)) * self.N(a, neg(e2))) / self._form(d1, d1)
        d2 = diff(a, e1)
        if self._is_root(d2):
            total += Fraction(self.N(neg(e1), a) * self.N(b, neg(e2))) / self._form(d2, d2)
        val = self._form(xi, xi) / self.N(e1, e2) * total
        assert val.denominator == 1 and val != 0, (a, b, val)
        return int(val)

    # --------------------------------------------------------------- basis
    def root_vector(self, a: Root) -> int:
        return self.rs.root_index[tuple(a)]

    def h_index(self, i: int) -> int:
        return self.nroots + i

    def label(self, k: int) -> str:
        if k >= self.nroots:
            return f"h{k - self.nroots + 1}"
        return "e" + str(self.rs.roots[k])

    def bracket_basis(self, i: int, j: int) -> Element:
        nr = self.nroots
        rs = self.rs
        if i >= nr and j >= nr:
            return {}
        if i >= nr:
            a = rs.roots[j]
            c = rs.root_pair_simple_coroot(a, i - nr)
            return {j: c} if c else {}
        if j >= nr:
            out = self.bracket_basis(j, i)
            return {k: -v for k, v in out.items()}
        a, b = rs.roots[i], rs.roots[j]
        s = tuple(x + y for x, y in zip(a, b))
        if not any(s):
            cv = rs.coroots[i]
            return {nr + t: c for t, c in enumerate(cv) if c}
        n = self.table.get((i, j))
        if n:
            return {rs.root_index[s]: n}
        return {}

    def bracket(self, x: Element, y: Element) -> Element:
        out: dict[int, Fraction | int] = {}
        for i, a in x.items():
            if not a:
                continue
            for j, b in y.items():
                if not b:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}

    def ad_root_map(self, gamma: Root) -> dict[int, Element]:
        """ad(e_gamma) as a map basis index -> image."""
        g = self.root_vector(gamma)
        return {j: self.bracket_basis(g, j) for j in range(self.dim)}


@lru_cache(maxsize=None)
def _cached(rs: RootSystem) -> LieAlgebra:
    return LieAlgebra(rs)


def build_lie_algebra(rs: RootSystem) -> LieAlgebra:
    return _cached(rs)


def bracket(L: LieAlgebra, x: Element, y: Element) -> Element:
    return L.bracket(x, y)


@dataclass
class AdjointOperator:
    """Linear operator on the Lie algebra, as a dense integer matrix.

    ``matrix[i][j]`` is the coefficient of basis vector i in the image of
    basis vector j.  ``factors`` records how it was built: a list of
    ``(root, coefficient)`` with the rightmost factor applied first.
    """

    matrix: list[list[int]]
    unipotent: bool = True
    factors: list[tuple[Root, int]] = field(default_factory=list)
    seed: int | None = None

    def apply(self, x: Element) -> Element:
        out: dict[int, int] = {}
        for j, c in x.items():
            for i in range(len(self.matrix)):
                v = self.matrix[i][j]
                if v:
                    out[i] = out.get(i, 0) + v * c
        return {k: v for k, v in out.items() if v}

    def compose(self, other: "AdjointOperator") -> "AdjointOperator":
        a, b = self.matrix, other.matrix
        n = len(a)
        bt = list(zip(*b))
        prod = [[sum(a[i][k] * bt[j][k] for k in range(n) if a[i][k]) for j in range(n)] for i in range(n)]
        return AdjointOperator(prod, self.unipotent and other.unipotent, self.factors + other.factors)


def exp_ad_restricted(L: LieAlgebra, gamma: Root, t, basis: Sequence[int]) -> list[list]:
    """exp(ad t e_gamma) restricted to an invariant span of basis vectors.

    ``basis`` must be stable under ad(e_gamma).  Returns a square matrix in
    the given basis order (column j = image of basis[j]).
    """
    pos = {b: k for k, b in enumerate(basis)}
    n = len(basis)
    g = L.root_vector(gamma)
    ad = [[0] * n for _ in range(n)]
    for j, b in enumerate(basis):
        for k, c in L.bracket_basis(g, b).items():
            if k not in pos:
                raise ValueError("basis is not ad(e_gamma)-stable")
            ad[pos[k]][j] = c
    result = [[int(i == j) for j in range(n)] for i in range(n)]
    power = [row[:] for row in result]
    k = 0
    while True:
        k += 1
        power = [[sum(ad[i][m] * power[m][j] for m in range(n) if ad[i][m]) for j in range(n)] for i in range(n)]
        if not any(any(r) for r in power):
            break
        scale = Fraction(t) ** k / factorial(k)
        for i in range(n):
            for j in range(n):
                if power[i][j]:
                    result[i][j] += power[i][j] * scale
    out = []
    for row in result:
        new = []
        for v in row:
            v = Fraction(v)
            new.append(int(v) if v.denominator == 1 else v)
        out.append(new)
    return out


def adjoint_exp(L: LieAlgebra, gamma: Root, t) -> AdjointOperator:
    """exp(ad t e_gamma) on the whole algebra (finite sum, exact)."""
    mat = exp_ad_restricted(L, gamma, t, list(range(L.dim)))
    return AdjointOperator(mat, True, [(tuple(gamma), t)])


def levi_factors(rs: RootSystem, lam: Coweight, seed: int) -> list[tuple[Root, int]]:
    """Seeded coefficients for the Levi element: negative roots, then positive."""
    roots = [a for a in rs.roots if rs.pair_root(lam, a) == 0]
    npos = set(rs.positive_roots)
    ordered = [a for a in roots if a not in npos] + [a for a in roots if a in npos]
    state = seed & MASK64
    out = []
    for a in ordered:
        state, z = splitmix64(state)
        out.append((a, 1 + z % 9))
    return out


def random_levi_element(L: LieAlgebra, lam: Coweight, seed: int) -> AdjointOperator:
    """Product of exp(ad c e_gamma) over the roots of the Levi of lambda.

    Torus factors are omitted: they rescale root vectors and never change
    whether two spans of root vectors are transverse.
    """
    factors = levi_factors(L.rs, lam, seed)
    op = AdjointOperator([[int(i == j) for j in range(L.dim)] for i in range(L.dim)], True, [], seed)
    for a, c in factors:
        op = op.compose(adjoint_exp(L, a, c))
    op.seed = seed
    return op
