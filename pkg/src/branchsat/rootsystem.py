"""Root systems, Weyl groups and graded inversion sets.

Coordinates used throughout the package:

* weights (characters of T): fundamental-weight basis, integer tuples;
* coweights (one-parameter subgroups of T): simple-coroot basis, integer
  tuples (all catalog groups are simply connected, so this is all of Y(T));
* roots: simple-root basis, integer tuples.

With these choices the pairing between a coweight and a weight is the
plain dot product.  ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row ``i``
of the Cartan matrix is ``alpha_i`` written in fundamental weights.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .exceptions import DimensionError, InvalidType, NotDominant
from .linalg import dot, inverse, matmul

Weight = tuple[int, ...]
Coweight = tuple[int, ...]
Root = tuple[int, ...]

_F = Fraction


def _unit(n: int, i: int, c=1) -> list[Fraction]:
    v = [_F(0)] * n
    v[i] = _F(c)
    return v


def _simple_eps(series: str, rank: int) -> list[list[Fraction]]:
    """Bourbaki simple roots in epsilon coordinates."""
    if series == "A" and rank >= 1:
        n = rank + 1
        return [[_F(int(j == i) - int(j == i + 1)) for j in range(n)] for i in range(rank)]
    if series in "BCD" and rank >= 1 and not (series == "D" and rank < 2):
        n = rank
        rows = [[_F(int(j == i) - int(j == i + 1)) for j in range(n)] for i in range(rank - 1)]
        if series == "B":
            rows.append(_unit(n, n - 1))
        elif series == "C":
            rows.append(_unit(n, n - 1, 2))
        else:
            last = [_F(0)] * n
            last[n - 2] = last[n - 1] = _F(1)
            rows.append(last)
        return rows
    if series == "G" and rank == 2:
        return [[_F(1), _F(-1), _F(0)], [_F(-2), _F(1), _F(1)]]
    if series == "F" and rank == 4:
        h = _F(1, 2)
        return [
            [_F(0), _F(1), _F(-1), _F(0)],
            [_F(0), _F(0), _F(1), _F(-1)],
            [_F(0), _F(0), _F(0), _F(1)],
            [h, -h, -h, -h],
        ]
    if series == "E" and rank == 6:
        h = _F(1, 2)
        a1 = [h, -h, -h, -h, -h, -h, -h, h]
        rows = [a1, [_F(1), _F(1)] + [_F(0)] * 6, [_F(-1), _F(1)] + [_F(0)] * 6]
        for i in range(1, 4):
            r = [_F(0)] * 8
            r[i] = _F(-1)
            r[i + 1] = _F(1)
            rows.append(r)
        return rows
    raise InvalidType(f"unsupported Cartan type {series}{rank}")


def parse_type(spec) -> list[tuple[str, int]]:
    """Accept 'A2', 'B3xB3', ('G', 2) or a list of such pieces."""
    if isinstance(spec, str):
        parts = [p.strip() for p in spec.replace("*", "x").split("x") if p.strip()]
        out = []
        for p in parts:
            try:
                out.append((p[0].upper(), int(p[1:])))
            except (ValueError, IndexError):
                raise InvalidType(f"cannot parse Cartan type {p!r}") from None
        return out
    if isinstance(spec, tuple) and len(spec) == 2 and isinstance(spec[0], str):
        return [(spec[0].upper(), int(spec[1]))]
    out = []
    for s in spec:
        out.extend(parse_type(s))
    return out


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: reduced word and its action on weights.

    ``action`` acts on row vectors of fundamental-weight coordinates:
    ``w(x) = x @ action``.  Equality is equality of action matrices.
    """

    word: tuple[int, ...]
    action: tuple[tuple[int, ...], ...] = field(compare=True)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.action == other.action

    def __hash__(self):
        return hash(self.action)

    def __len__(self):
        return len(self.word)


class RootSystem:
    """Finite crystallographic root system of a (possibly non-simple) group.

    Parameters
    ----------
    factors : list of (series, rank)
        Simple factors in Bourbaki labelling, factor-major order.
    """

    def __init__(self, factors: Sequence[tuple[str, int]]):
        self.factors = tuple((s.upper(), int(r)) for s, r in factors)
        if not self.factors:
            raise InvalidType("empty Cartan type")
        blocks = [_simple_eps(s, r) for s, r in self.factors]
        self.rank = sum(r for _, r in self.factors)
        self.eps_dim = sum(len(b[0]) for b in blocks)
        simple = []
        off = 0
        self.factor_of = []
        for fi, b in enumerate(blocks):
            width = len(b[0])
            for row in b:
                simple.append([_F(0)] * off + list(row) + [_F(0)] * (self.eps_dim - off - width))
                self.factor_of.append(fi)
            off += width
        self.simple_eps = simple
        r = self.rank
        self.gram = [[dot(simple[i], simple[j]) for j in range(r)] for i in range(r)]
        self.cartan = [[int(2 * self.gram[i][j] / self.gram[j][j]) for j in range(r)] for i in range(r)]
        # half squared lengths of simple roots
        self.d = [self.gram[i][i] / 2 for i in range(r)]
        self._build_roots()
        self._build_fw_to_eps(blocks)

    # ------------------------------------------------------------------ build
    def _build_roots(self) -> None:
        r = self.rank
        simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        known = set(simple)
        layer = list(simple)
        pos = list(simple)
        while layer:
            nxt = []
            for a in layer:
                for i in range(r):
                    # alpha_i string through a: a - p alpha_i, ..., a + q alpha_i
                    p = 0
                    b = list(a)
                    while True:
                        b[i] -= 1
                        if tuple(b) in known:
                            p += 1
                        else:
                            break
                    q = p - self.root_pair_simple_coroot(a, i)
                    if q > 0:
                        c = list(a)
                        c[i] += 1
                        c = tuple(c)
                        if c not in known:
                            known.add(c)
                            nxt.append(c)
            layer = nxt
            pos.extend(nxt)
        pos.sort(key=lambda a: (sum(a), tuple(-x for x in a)))
        self.positive_roots: list[Root] = pos
        self.roots: list[Root] = pos + [tuple(-x for x in a) for a in pos]
        self.root_index = {a: i for i, a in enumerate(self.roots)}
        self.num_positive = len(pos)
        self.root_fw_list = [self.root_to_fw(a) for a in self.roots]
        self.coroots = [self._coroot(a) for a in self.roots]
        self.simple_root_indices = [self.root_index[s] for s in simple]
        # permutation of root indices induced by each simple reflection
        self.reflection_perms = []
        for i in range(r):
            perm = []
            for a in self.roots:
                c = self.root_pair_simple_coroot(a, i)
                b = list(a)
                b[i] -= c
                perm.append(self.root_index[tuple(b)])
            self.reflection_perms.append(tuple(perm))

    def _build_fw_to_eps(self, blocks) -> None:
        r = self.rank
        ainv = inverse(self.cartan)
        fw = matmul(ainv, self.simple_eps)
        # type A factors use the partition convention varpi_i = e_1 + ... + e_i
        off_r = off_e = 0
        for (s, k), b in zip(self.factors, blocks):
            width = len(b[0])
            if s == "A":
                for i in range(k):
                    row = [_F(0)] * self.eps_dim
                    for j in range(i + 1):
                        row[off_e + j] = _F(1)
                    fw[off_r + i] = row
            off_r += k
            off_e += width
        self.fw_to_eps = [list(row) for row in fw]
        assert len(self.fw_to_eps) == r

    # ------------------------------------------------------------ basic maps
    def __repr__(self):
        return "RootSystem(" + "x".join(f"{s}{r}" for s, r in self.factors) + ")"

    @property
    def name(self) -> str:
        return "x".join(f"{s}{r}" for s, r in self.factors)

    @cached_property
    def dimension(self) -> int:
        """Dimension of the Lie algebra."""
        return len(self.roots) + self.rank

    def root_pair_simple_coroot(self, a: Root, i: int) -> int:
        """<alpha, alpha_i^vee> for alpha in simple-root coordinates."""
        return sum(a[j] * self.cartan[j][i] for j in range(self.rank))

    def root_to_fw(self, a: Root) -> Weight:
        r = self.rank
        return tuple(sum(a[j] * self.cartan[j][i] for j in range(r)) for i in range(r))

    def _coroot(self, a: Root) -> Coweight:
        norm = self.root_norm(a)
        return tuple(int(a[j] * self.gram[j][j] / norm) for j in range(self.rank))

    def root_norm(self, a: Root) -> Fraction:
        r = self.rank
        return sum(a[i] * a[j] * self.gram[i][j] for i in range(r) for j in range(r) if a[i] and a[j])

    def is_long(self, a: Root) -> bool:
        fi = next(self.factor_of[i] for i in range(self.rank) if a[i])
        m = max(self.gram[i][i] for i in range(self.rank) if self.factor_of[i] == fi)
        return self.root_norm(a) == m

    def pair(self, lam: Coweight, chi: Weight) -> int:
        """Natural pairing between a coweight and a weight."""
        if len(lam) != self.rank or len(chi) != self.rank:
            raise DimensionError(f"expected length {self.rank}, got {len(lam)} and {len(chi)}")
        return sum(x * y for x, y in zip(lam, chi))

    def pair_root(self, lam: Coweight, a: Root) -> int:
        return self.pair(lam, self.root_to_fw(a))

    def eps_to_fw(self, v: Sequence) -> Weight:
        out = []
        for i in range(self.rank):
            x = 2 * dot(v, self.simple_eps[i]) / self.gram[i][i]
            if Fraction(x).denominator != 1:
                raise ValueError(f"{tuple(v)} is not in the weight lattice")
            out.append(int(x))
        return tuple(out)

    def fw_to_eps_vec(self, x: Sequence[int]) -> tuple[Fraction, ...]:
        out = [_F(0)] * self.eps_dim
        for c, row in zip(x, self.fw_to_eps):
            if c:
                for j, y in enumerate(row):
                    out[j] += c * y
        return tuple(out)

    def coweight_to_eps(self, lam: Coweight) -> tuple[Fraction, ...]:
        """Coweight as a vector of the epsilon space (identified via the form)."""
        out = [_F(0)] * self.eps_dim
        for c, i in zip(lam, range(self.rank)):
            if c:
                scale = 2 / self.gram[i][i]
                for j, y in enumerate(self.simple_eps[i]):
                    out[j] += c * scale * y
        return tuple(out)

    def eps_to_coweight(self, v: Sequence) -> Coweight:
        """Inverse of :meth:`coweight_to_eps` for vectors in the coroot lattice."""
        vals = [dot(v, row) for row in self.fw_to_eps]
        out = []
        for x in vals:
            if Fraction(x).denominator != 1:
                raise ValueError(f"{tuple(v)} is not in the coroot lattice")
            out.append(int(x))
        return tuple(out)

    @cached_property
    def fw_gram(self) -> list[list[Fraction]]:
        """Invariant form on weights in the fundamental-weight basis."""
        ainv = inverse(self.cartan)
        r = self.rank
        return [[ainv[i][j] * self.d[j] for j in range(r)] for i in range(r)]

    def weight_form(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.fw_gram
        return sum(x[i] * g[i][j] * y[j] for i in range(self.rank) if x[i] for j in range(self.rank) if y[j])

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    # -------------------------------------------------------------- reflections
    def reflect_weight(self, x: Sequence[int], i: int) -> Weight:
        c = x[i]
        if not c:
            return tuple(x)
        row = self.cartan[i]
        return tuple(a - c * b for a, b in zip(x, row))

    def reflect_coweight(self, lam: Sequence[int], i: int) -> Coweight:
        c = sum(lam[j] * self.cartan[i][j] for j in range(self.rank))
        if not c:
            return tuple(lam)
        out = list(lam)
        out[i] -= c
        return tuple(out)

    def coweight_pair_simple(self, lam: Sequence[int], i: int) -> int:
        """<lambda, alpha_i>."""
        return sum(lam[j] * self.cartan[i][j] for j in range(self.rank))

    def apply_word_weight(self, word: Iterable[int], x: Sequence[int]) -> Weight:
        x = tuple(x)
        for i in reversed(tuple(word)):
            x = self.reflect_weight(x, i)
        return x

    def apply_word_coweight(self, word: Iterable[int], lam: Sequence[int]) -> Coweight:
        lam = tuple(lam)
        for i in reversed(tuple(word)):
            lam = self.reflect_coweight(lam, i)
        return lam

    def apply_word_root(self, word: Iterable[int], a: Root) -> Root:
        k = self.root_index[tuple(a)]
        for i in reversed(tuple(word)):
            k = self.reflection_perms[i][k]
        return self.roots[k]

    def word_perm(self, word: Iterable[int]) -> tuple[int, ...]:
        """Permutation of root indices: perm[k] = index of w(root_k)."""
        perm = list(range(len(self.roots)))
        for i in tuple(word):
            s = self.reflection_perms[i]
            perm = [perm[s[k]] for k in range(len(perm))]
        return tuple(perm)

    def weyl_element(self, word: Sequence[int]) -> WeylElement:
        word = tuple(word)
        r = self.rank
        rows = tuple(self.apply_word_weight(word, tuple(int(i == j) for j in range(r))) for i in range(r))
        return WeylElement(word, rows)

    def is_dominant(self, x: Sequence[int]) -> bool:
        return all(c >= 0 for c in x)

    def is_dominant_coweight(self, lam: Sequence[int]) -> bool:
        return all(self.coweight_pair_simple(lam, i) >= 0 for i in range(self.rank))

    def dominant_weight(self, x: Sequence[int]) -> tuple[Weight, tuple[int, ...]]:
        """Dominant element of the orbit of x and a word w with w(x) dominant."""
        x = tuple(x)
        word: list[int] = []
        while True:
            i = next((k for k, c in enumerate(x) if c < 0), None)
            if i is None:
                return x, tuple(reversed(word))
            x = self.reflect_weight(x, i)
            word.append(i)

    def dominant_coweight(self, lam: Sequence[int]) -> tuple[Coweight, tuple[int, ...]]:
        lam = tuple(lam)
        word: list[int] = []
        while True:
            i = next((k for k in range(self.rank) if self.coweight_pair_simple(lam, k) < 0), None)
            if i is None:
                return lam, tuple(reversed(word))
            lam = self.reflect_coweight(lam, i)
            word.append(i)

    # ------------------------------------------------------------ enumeration
    def weyl_orbit(self, x: Sequence[int]) -> set[Weight]:
        """Orbit of a weight, by closure under simple reflections."""
        start, _ = self.dominant_weight(x)
        seen = {start}
        todo = [start]
        while todo:
            y = todo.pop()
            for i in range(self.rank):
                if y[i] > 0:
                    z = self.reflect_weight(y, i)
                    if z not in seen:
                        seen.add(z)
                        todo.append(z)
        return seen

    def weyl_group(self) -> list[WeylElement]:
        """All of W, breadth-first from the identity (reduced words)."""
        return [self.weyl_element(w) for w in self.weyl_words()]

    def weyl_words(self) -> list[tuple[int, ...]]:
        rho = self.rho
        seen = {rho: ()}
        layer = [(rho, ())]
        out = [()]
        while layer:
            nxt = []
            for y, word in layer:
                for i in range(self.rank):
                    if y[i] > 0:
                        z = self.reflect_weight(y, i)
                        if z not in seen:
                            seen[z] = (i,) + word
                            nxt.append((z, (i,) + word))
            nxt.sort(key=lambda t: t[1])
            out.extend(w for _, w in nxt)
            layer = nxt
        return out

    @cached_property
    def weyl_order(self) -> int:
        return len(self.weyl_words())

    def weyl_signed_elements(self) -> list[tuple[int, Weight]]:
        """(sign, w(rho)) for every w in W."""
        return [(-1 if len(w) % 2 else 1, self.apply_word_weight(w, self.rho)) for w in self.weyl_words()]

    def coset_reps_min_length(self, lam: Coweight) -> list[WeylElement]:
        """Minimal length representatives of W / W_P(lambda), lambda dominant."""
        return [self.weyl_element(word) for word, _ in self.coweight_orbit_words(lam)]

    def coweight_orbit_words(self, lam: Coweight) -> list[tuple[tuple[int, ...], Coweight]]:
        """(word, w lambda) for the minimal coset representatives w."""
        lam = tuple(lam)
        if not self.is_dominant_coweight(lam):
            raise NotDominant(f"coweight {lam} is not dominant")
        seen = {lam}
        out = [((), lam)]
        layer = [((), lam)]
        while layer:
            nxt = []
            for word, mu in layer:
                for i in range(self.rank):
                    if self.coweight_pair_simple(mu, i) > 0:
                        nu = self.reflect_coweight(mu, i)
                        if nu not in seen:
                            seen.add(nu)
                            nxt.append(((i,) + word, nu))
            nxt.sort()
            out.extend(nxt)
            layer = nxt
        return out

    def levi_roots(self, lam: Coweight) -> list[Root]:
        return [a for a in self.roots if self.pair_root(lam, a) == 0]

    def graded_inversion_set(self, word: Sequence[int], lam: Coweight) -> dict[int, list[Root]]:
        """Map k < 0 to the roots alpha with <lambda, alpha> = -k and w(alpha) < 0.

        For dominant lambda and w in W^P this is the graded inversion set
        Phi(w)^k of Phi(w) = Phi+ cap w^-1 Phi-.
        """
        perm = self.word_perm(word)
        npos = self.num_positive
        out: dict[int, list[Root]] = {}
        for k, a in enumerate(self.roots):
            d = self.pair_root(lam, a)
            if d > 0 and perm[k] >= npos:
                out.setdefault(-d, []).append(a)
        return dict(sorted(out.items()))

    def graded_tangent_dims(self, lam: Coweight) -> dict[int, int]:
        """k -> number of roots alpha with <lambda, alpha> = -k < 0 ... as positive counts."""
        out: dict[int, int] = {}
        for a in self.roots:
            d = self.pair_root(lam, a)
            if d > 0:
                out[-d] = out.get(-d, 0) + 1
        return dict(sorted(out.items()))

    def dual_weight(self, x: Sequence[int]) -> Weight:
        """nu* = -w0 nu, the highest weight of the dual representation."""
        if not self.is_dominant(x):
            raise NotDominant(f"weight {tuple(x)} is not dominant")
        return self.dominant_weight(tuple(-c for c in x))[0]

    def weyl_dimension(self, x: Sequence[int]) -> int:
        """Dimension of the irreducible module of highest weight x."""
        num = Fraction(1)
        for k in range(self.num_positive):
            cv = self.coroots[k]
            num *= Fraction(sum((x[i] + 1) * cv[i] for i in range(self.rank)), sum(cv))
        assert num.denominator == 1
        return int(num)


_CACHE: dict = {}


def build_root_system(spec) -> RootSystem:
    """Build (and memoize) the root system of a Cartan type such as 'F4' or [('A', 2)]."""
    key = tuple(parse_type(spec))
    if key not in _CACHE:
        _CACHE[key] = RootSystem(key)
    return _CACHE[key]


def pair(rs: RootSystem, lam: Coweight, chi: Weight) -> int:
    return rs.pair(lam, chi)


def weyl_orbit(rs: RootSystem, chi: Weight) -> set[Weight]:
    return rs.weyl_orbit(chi)


def coset_reps_min_length(rs: RootSystem, lam: Coweight) -> list[WeylElement]:
    return rs.coset_reps_min_length(lam)


def graded_inversion_set(rs: RootSystem, w: WeylElement, lam: Coweight) -> dict[int, list[Root]]:
    return rs.graded_inversion_set(w.word, lam)


def dual_weight(rs: RootSystem, nu: Weight) -> Weight:
    return rs.dual_weight(nu)
