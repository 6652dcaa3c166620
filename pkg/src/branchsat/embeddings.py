"""Catalog of embedded pairs G in Ghat and the data derived from an embedding.

An embedding is given at the Lie algebra level by the images of the
Chevalley generators ``e_i, f_i`` of g as integer combinations of root
vectors of ghat.  Everything else (restriction map on characters, images
of all root vectors, tangent weights, the lattice generated by the
branching semigroup) is derived from those images.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Sequence

from .chevalley import Element, LieAlgebra, build_lie_algebra
from .exceptions import CatalogFormatError, HypothesisViolated, UnknownPair
from .linalg import det, hermite_basis, rank
from .rootsystem import Coweight, Root, RootSystem, Weight, build_root_system

Image = tuple[tuple[Root, int], ...]


@dataclass(frozen=True)
class EmbeddingSpec:
    """Lie-algebra level description of G in Ghat.

    ``e_images[i]`` / ``f_images[i]`` list ``(root of Ghat, coefficient)``.
    """

    name: str
    g_type: str
    ghat_type: str
    e_images: tuple[Image, ...]
    f_images: tuple[Image, ...]
    rho: tuple[tuple[int, ...], ...] | None = None


@dataclass
class LatticeDescription:
    """A sublattice of X(T) x X(That) given by a basis (rows, fw coordinates)."""

    basis: list[tuple[int, ...]]
    ambient_rank: int

    @cached_property
    def index(self) -> int:
        if len(self.basis) != self.ambient_rank:
            raise ValueError("lattice is not of full rank")
        return abs(det(self.basis))

    def contains(self, v: Sequence[int]) -> bool:
        from .linalg import solve_left

        x = solve_left(v, self.basis)
        return x is not None and all(c.denominator == 1 for c in x)

    def congruences(self) -> list[tuple[tuple[int, ...], int]]:
        """Conditions (c, m) meaning c . v = 0 mod m, equivalent to membership."""
        from .linalg import inverse

        inv = inverse(self.basis)  # columns: dual basis
        out = []
        d = self.ambient_rank
        for j in range(d):
            col = [inv[i][j] for i in range(d)]
            den = 1
            for c in col:
                den = den * c.denominator // _gcd(den, c.denominator)
            if den > 1:
                out.append((tuple(int(c * den) % den for c in col), den))
        return out


def _gcd(a, b):
    from math import gcd

    return gcd(a, b)


def _elem(L: LieAlgebra, image: Image) -> Element:
    return {L.root_vector(a): c for a, c in image if c}


class EmbeddedPair:
    """A validated embedding with all derived data."""

    def __init__(self, spec: EmbeddingSpec, validate: bool = True):
        self.spec = spec
        self.name = spec.name
        self.g: RootSystem = build_root_system(spec.g_type)
        self.ghat: RootSystem = build_root_system(spec.ghat_type)
        self.Lg = build_lie_algebra(self.g)
        self.Lhat = build_lie_algebra(self.ghat)
        if len(spec.e_images) != self.g.rank or len(spec.f_images) != self.g.rank:
            raise CatalogFormatError(f"{spec.name}: need {self.g.rank} generator images")
        self.rho = self._derive_rho()
        if spec.rho is not None and [list(r) for r in spec.rho] != [list(r) for r in self.rho]:
            raise CatalogFormatError(f"{spec.name}: stated restriction map does not match generator images")
        self.g_root_images = self._generate_root_images()
        if validate:
            diag = validate_embedding(spec, _pair=self)
            if not diag.ok:
                raise CatalogFormatError(f"{spec.name}: invalid embedding: {diag.failures[0]}")
            self._check_hypothesis()
        self.tangent_weights, self.zero_weights = self._tangent_weights()

    # ------------------------------------------------------------- derived
    def _derive_rho(self) -> list[tuple[int, ...]]:
        Lh = self.Lhat
        rows = []
        for i in range(self.g.rank):
            h = Lh.bracket(_elem(Lh, self.spec.e_images[i]), _elem(Lh, self.spec.f_images[i]))
            if any(k < Lh.nroots for k in h):
                raise CatalogFormatError(f"{self.name}: [e_{i+1}, f_{i+1}] is not in the Cartan subalgebra")
            row = []
            for j in range(self.ghat.rank):
                c = h.get(Lh.nroots + j, 0)
                if getattr(c, "denominator", 1) != 1:
                    raise CatalogFormatError(f"{self.name}: non-integral coroot image")
                row.append(int(c))
            rows.append(tuple(row))
        return rows

    def restrict(self, xhat: Sequence[int]) -> Weight:
        """rho: X(That) -> X(T) in fundamental-weight coordinates."""
        return tuple(sum(r[j] * xhat[j] for j in range(len(xhat))) for r in self.rho)

    def embed_coweight(self, lam: Coweight) -> Coweight:
        """rho*: Y(T) -> Y(That), the transpose of rho."""
        rh = self.ghat.rank
        return tuple(sum(lam[i] * self.rho[i][j] for i in range(len(lam))) for j in range(rh))

    def _generate_root_images(self) -> dict[Root, Element]:
        g, Lg, Lh = self.g, self.Lg, self.Lhat
        imgs: dict[Root, Element] = {}
        r = g.rank
        for i in range(r):
            a = tuple(int(i == j) for j in range(r))
            imgs[a] = _elem(Lh, self.spec.e_images[i])
            imgs[tuple(-x for x in a)] = _elem(Lh, self.spec.f_images[i])
        for sign in (1, -1):
            for xi in g.positive_roots:
                if sum(xi) == 1:
                    continue
                for i in range(r):
                    b = list(xi)
                    b[i] -= 1
                    b = tuple(b)
                    if b in g.root_index and all(x >= 0 for x in b):
                        si = tuple(sign * int(i == j) for j in range(r))
                        sb = tuple(sign * x for x in b)
                        n = Lg.N(si, sb)
                        br = Lh.bracket(imgs[si], imgs[sb])
                        imgs[tuple(sign * x for x in xi)] = {k: _div(v, n) for k, v in br.items()}
                        break
        return imgs

    def image(self, x: Element) -> Element:
        """Image in ghat of an element of g given in g's Chevalley basis."""
        out: dict[int, int] = {}
        Lg = self.Lg
        for k, c in x.items():
            if k < Lg.nroots:
                img = self.g_root_images[self.g.roots[k]]
            else:
                i = k - Lg.nroots
                img = {self.Lhat.nroots + j: v for j, v in enumerate(self.rho[i]) if v}
            for kk, v in img.items():
                out[kk] = out.get(kk, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def _tangent_weights(self) -> tuple[Counter, int]:
        hat = Counter(self.restrict(b) for b in self.ghat.root_fw_list)
        zero = tuple([0] * self.g.rank)
        hat[zero] += self.ghat.rank
        sub = Counter(self.g.root_fw_list)
        sub[zero] += self.g.rank
        rest = hat - sub
        if sum((sub - hat).values()):
            raise CatalogFormatError(f"{self.name}: weights of g do not embed in weights of ghat")
        zeros = rest.pop(zero, 0)
        return rest, zeros

    def _check_hypothesis(self) -> None:
        Lh = self.Lhat
        rows = []
        for k in range(self.Lg.dim):
            img = self.image({k: 1})
            rows.append([img.get(j, 0) for j in range(Lh.dim)])
        base = rank(rows)
        for fi in range(len(self.ghat.factors)):
            simple = [i for i in range(self.ghat.rank) if self.ghat.factor_of[i] == fi]
            extra = []
            for i in simple:
                k = Lh.root_vector(tuple(int(i == j) for j in range(self.ghat.rank)))
                extra.append([int(j == k) for j in range(Lh.dim)])
            if rank(rows + extra) == base:
                raise HypothesisViolated(
                    f"{self.name}: simple factor {self.ghat.factors[fi]} of Ghat is contained in G"
                )

    # ---------------------------------------------------------------- misc
    @cached_property
    def distinct_tangent_weights(self) -> list[Weight]:
        return sorted(self.tangent_weights)

    def __repr__(self):
        return f"EmbeddedPair({self.name}: {self.g.name} in {self.ghat.name})"


def _div(v, n):
    from fractions import Fraction

    q = Fraction(v) / n
    return int(q) if q.denominator == 1 else q


# ------------------------------------------------------------------ validation
@dataclass
class Diagnostics:
    ok: bool
    failures: list[str] = field(default_factory=list)
    checked: int = 0


def validate_embedding(spec: EmbeddingSpec, _pair: EmbeddedPair | None = None) -> Diagnostics:
    """Check that the generator images define a Lie algebra homomorphism.

    Verifies the restriction of weights, the Chevalley relations and the
    full bracket table of g against brackets of the images in ghat.
    Never raises on a bad embedding; failures are reported.
    """
    try:
        pair = _pair if _pair is not None else EmbeddedPair(spec, validate=False)
    except CatalogFormatError as exc:
        return Diagnostics(False, [str(exc)])
    g, Lg, Lh = pair.g, pair.Lg, pair.Lhat
    failures: list[str] = []
    # weights of generator images
    for i in range(g.rank):
        target = g.root_to_fw(tuple(int(i == j) for j in range(g.rank)))
        for sign, imgs in ((1, spec.e_images), (-1, spec.f_images)):
            for b, c in imgs[i]:
                if tuple(b) not in pair.ghat.root_index:
                    failures.append(f"generator {i+1}: {b} is not a root of {pair.ghat.name}")
                    continue
                w = pair.restrict(pair.ghat.root_to_fw(b))
                if w != tuple(sign * x for x in target):
                    failures.append(f"generator {i+1}: root {b} restricts to {w}, expected {tuple(sign*x for x in target)}")
    if failures:
        return Diagnostics(False, failures)
    # homomorphism on all basis pairs
    checked = 0
    for i in range(Lg.dim):
        xi = pair.image({i: 1})
        for j in range(i + 1, Lg.dim):
            lhs = pair.image(Lg.bracket_basis(i, j))
            rhs = Lh.bracket(xi, pair.image({j: 1}))
            checked += 1
            if lhs != rhs:
                failures.append(f"[{Lg.label(i)}, {Lg.label(j)}]: image of bracket {lhs} != bracket of images {rhs}")
                return Diagnostics(False, failures, checked)
    return Diagnostics(True, [], checked)


# --------------------------------------------------------------------- lattice
def integer_kernel(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Basis of {x in Z^n : x . M = 0} for the n x k integer matrix M."""
    n = len(rows)
    k = len(rows[0]) if n else 0
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    hb = hermite_basis(aug)
    return [tuple(r[k:]) for r in hb if not any(r[:k])]


def lr_lattice(pair: EmbeddedPair) -> LatticeDescription:
    """Basis of the group generated by LR(G, Ghat).

    (nu, nuhat) belongs to it iff nu + rho(nuhat) lies in the lattice spanned
    by the restrictions of the simple roots of Ghat.
    """
    r, rh = pair.g.rank, pair.ghat.rank
    gens = []
    for j in range(rh):
        a = tuple(int(i == j) for i in range(rh))
        gens.append(tuple(pair.restrict(pair.ghat.root_to_fw(a))) + (0,) * rh)
    for j in range(rh):
        e = [0] * rh
        e[j] = 1
        gens.append(tuple(-x for x in pair.restrict(e)) + tuple(e))
    basis = hermite_basis(gens)
    return LatticeDescription(basis, r + rh)


def restrict_lattice(lattice: LatticeDescription, coeffs: Sequence[int], modulus: int) -> LatticeDescription:
    """Intersect with {v : coeffs . v = 0 mod modulus}."""
    vals = [[sum(b * c for b, c in zip(row, coeffs))] for row in lattice.basis]
    # (y, t) with y . vals + t * modulus = 0; drop t afterwards
    ker = integer_kernel(vals + [[modulus]])
    d = len(lattice.basis)
    combos = [k[:d] for k in ker]
    gens = [tuple(sum(c * row[j] for c, row in zip(combo, lattice.basis)) for j in range(lattice.ambient_rank)) for combo in combos]
    return LatticeDescription(hermite_basis(gens), lattice.ambient_rank)


# --------------------------------------------------------------------- catalog
def _unit(r: int, i: int, s: int = 1) -> Root:
    return tuple(s * int(i == j) for j in range(r))


def _spec_from_simple_images(name: str, g: str, ghat: str, images: Sequence[Sequence[Root]]) -> EmbeddingSpec:
    e = tuple(tuple((tuple(b), 1) for b in imgs) for imgs in images)
    f = tuple(tuple((tuple(-x for x in b), 1) for b in imgs) for imgs in images)
    return EmbeddingSpec(name, g, ghat, e, f)


def spec_spin_odd_even(n: int) -> EmbeddingSpec:
    if n < 2:
        raise UnknownPair("spin_odd_even needs n >= 2")
    images = [[_unit(n, i)] for i in range(n - 2)] + [[_unit(n, n - 2), _unit(n, n - 1)]]
    return _spec_from_simple_images(f"spin_odd_even({n})", f"B{n-1}", f"D{n}", images)


def spec_sl3_g2() -> EmbeddingSpec:
    return _spec_from_simple_images("sl3_g2", "A2", "G2", [[(0, 1)], [(3, 1)]])


def spec_g2_spin7() -> EmbeddingSpec:
    return _spec_from_simple_images("g2_spin7", "G2", "B3", [[(1, 0, 0), (0, 0, 1)], [(0, 1, 0)]])


def spec_spin9_f4() -> EmbeddingSpec:
    images = [[(0, 1, 2, 2)], [(1, 0, 0, 0)], [(0, 1, 0, 0)], [(0, 0, 1, 0)]]
    return _spec_from_simple_images("spin9_f4", "B4", "F4", images)


def spec_f4_e6() -> EmbeddingSpec:
    u = lambda i: _unit(6, i)
    images = [[u(1)], [u(3)], [u(2), u(4)], [u(0), u(5)]]
    return _spec_from_simple_images("f4_e6", "F4", "E6", images)


def spec_sp_sl(n: int) -> EmbeddingSpec:
    if n < 1:
        raise UnknownPair("sp_sl needs n >= 1")
    m = 2 * n - 1
    images = [[_unit(m, i), _unit(m, m - 1 - i)] for i in range(n - 1)] + [[_unit(m, n - 1)]]
    return _spec_from_simple_images(f"sp_sl({n})", f"C{n}", f"A{m}", images)


def spec_diagonal(series: str, r: int) -> EmbeddingSpec:
    rr = 2 * r
    images = [[_unit(rr, i), _unit(rr, i + r)] for i in range(r)]
    return _spec_from_simple_images(f"diagonal({series},{r})", f"{series}{r}", f"{series}{r}x{series}{r}", images)


CATALOG_FAMILIES = {
    "spin_odd_even": "spin_odd_even(n), n >= 2: Spin(2n-1) in Spin(2n)",
    "sl3_g2": "SL3 in G2 (long roots)",
    "g2_spin7": "G2 in Spin7",
    "spin9_f4": "Spin9 in F4",
    "f4_e6": "F4 in E6",
    "sp_sl": "sp_sl(n): Sp(2n) in SL(2n)",
    "diagonal": "diagonal(X,r): X_r in X_r x X_r (tensor products)",
}

_NAME_RE = re.compile(r"^\s*([a-z0-9_]+?)\s*(?:[\(:]\s*([^)]*)\)?)?\s*$", re.I)

_USER_CATALOG: dict[str, EmbeddingSpec] = {}


def parse_pair_name(name: str) -> tuple[str, list[str]]:
    m = _NAME_RE.match(name)
    if not m:
        raise UnknownPair(name)
    base = m.group(1).lower()
    args = [a.strip() for a in (m.group(2) or "").split(",") if a.strip()]
    return base, args


def pair_spec(name: str) -> EmbeddingSpec:
    if name in _USER_CATALOG:
        return _USER_CATALOG[name]
    base, args = parse_pair_name(name)
    try:
        if base == "spin_odd_even" and len(args) == 1:
            return spec_spin_odd_even(int(args[0]))
        if base == "sp_sl" and len(args) == 1:
            return spec_sp_sl(int(args[0]))
        if base == "diagonal" and len(args) == 2:
            return spec_diagonal(args[0].upper(), int(args[1]))
        if base == "diagonal" and len(args) == 1:
            return spec_diagonal(args[0][0].upper(), int(args[0][1:]))
    except ValueError:
        raise UnknownPair(name) from None
    fixed = {"sl3_g2": spec_sl3_g2, "g2_spin7": spec_g2_spin7, "spin9_f4": spec_spin9_f4, "f4_e6": spec_f4_e6}
    if base in fixed and not args:
        return fixed[base]()
    raise UnknownPair(name)


_PAIR_CACHE: dict[str, EmbeddedPair] = {}


def builtin_pair(name: str) -> EmbeddedPair:
    """Build and validate a catalog pair, e.g. ``'sp_sl(3)'`` or ``'f4_e6'``."""
    spec = pair_spec(name)
    key = spec.name
    if key not in _PAIR_CACHE:
        _PAIR_CACHE[key] = EmbeddedPair(spec)
    return _PAIR_CACHE[key]


def list_pairs() -> list[str]:
    return list(CATALOG_FAMILIES.values()) + [f"{k} (user)" for k in _USER_CATALOG]


def embed_coweight(pair: EmbeddedPair, lam: Coweight) -> Coweight:
    return pair.embed_coweight(lam)


# ------------------------------------------------------------ text file format
def _fmt_image(img: Image) -> str:
    return " ".join(",".join(str(x) for x in root) + f":{c}" for root, c in img)


def dump_pair(spec: EmbeddingSpec, rho: Sequence[Sequence[int]] | None = None) -> str:
    """Serialize an embedding to the plain-text catalog format."""
    lines = [f"pair {spec.name}", f"g {spec.g_type}", f"ghat {spec.ghat_type}"]
    rho = rho if rho is not None else spec.rho
    if rho is not None:
        lines.append(f"rho {len(rho)} {len(rho[0])}")
        lines.extend(" ".join(str(x) for x in row) for row in rho)
    for i, (e, f) in enumerate(zip(spec.e_images, spec.f_images)):
        lines.append(f"e {i+1} {_fmt_image(e)}")
        lines.append(f"f {i+1} {_fmt_image(f)}")
    lines.append("end")
    return "\n".join(lines) + "\n"


def _parse_image(tokens: list[str], lineno: int) -> Image:
    out = []
    for t in tokens:
        try:
            root, c = t.rsplit(":", 1)
            out.append((tuple(int(x) for x in root.split(",")), int(c)))
        except ValueError:
            raise CatalogFormatError(f"line {lineno}: bad image term {t!r}") from None
    return tuple(out)


def load_pairs(text: str) -> list[EmbeddingSpec]:
    """Parse one or more pairs from catalog text.

    Format, one record per pair::

        pair <name>
        g <Cartan type>
        ghat <Cartan type>
        rho <rows> <cols>          (optional, checked against the images)
        <rows lines of integers>
        e <i> <root>:<coef> ...    (root in simple-root coordinates of ghat)
        f <i> <root>:<coef> ...
        end
    """
    specs = []
    lines = [(n + 1, l.split("#", 1)[0].strip()) for n, l in enumerate(text.splitlines())]
    lines = [(n, l) for n, l in lines if l]
    k = 0
    cur: dict = {}
    while k < len(lines):
        n, line = lines[k]
        tok = line.split()
        head = tok[0]
        if head == "pair":
            cur = {"name": tok[1], "e": {}, "f": {}, "rho": None}
        elif head in ("g", "ghat"):
            cur[head] = tok[1]
        elif head == "rho":
            nr, nc = int(tok[1]), int(tok[2])
            rows = []
            for t in range(nr):
                k += 1
                if k >= len(lines):
                    raise CatalogFormatError(f"line {n}: truncated rho matrix")
                vals = [int(x) for x in lines[k][1].split()]
                if len(vals) != nc:
                    raise CatalogFormatError(f"line {lines[k][0]}: expected {nc} entries")
                rows.append(tuple(vals))
            cur["rho"] = tuple(rows)
        elif head in ("e", "f"):
            cur[head][int(tok[1])] = _parse_image(tok[2:], n)
        elif head == "end":
            try:
                r = len(cur["e"])
                spec = EmbeddingSpec(
                    cur["name"],
                    cur["g"],
                    cur["ghat"],
                    tuple(cur["e"][i] for i in range(1, r + 1)),
                    tuple(cur["f"][i] for i in range(1, r + 1)),
                    cur["rho"],
                )
            except KeyError as exc:
                raise CatalogFormatError(f"line {n}: incomplete pair record ({exc})") from None
            specs.append(spec)
            cur = {}
        else:
            raise CatalogFormatError(f"line {n}: unknown keyword {head!r}")
        k += 1
    return specs


def register_catalog_file(path: str | Path) -> list[str]:
    """Load user pairs from a catalog file; returns the registered names."""
    specs = load_pairs(Path(path).read_text())
    for s in specs:
        EmbeddedPair(s)  # validate before registering
        _USER_CATALOG[s.name] = s
    return [s.name for s in specs]
