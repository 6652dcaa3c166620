"""Weight multiplicities and branching multiplicities for G in Ghat."""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .embeddings import EmbeddedPair, lr_lattice
from .exceptions import CatalogFormatError, DimensionError, NotDominant
from .linalg import inverse
from .rootsystem import RootSystem, Weight

CACHE_ENV = "BRANCHSAT_CACHE_DIR"
CACHE_HEADER = "# branchsat character v1"


@dataclass
class DominantCharacter:
    highest_weight: Weight
    mults: dict[Weight, int]

    def dimension(self, rs: RootSystem) -> int:
        return sum(m * len(rs.weyl_orbit(mu)) for mu, m in self.mults.items())


class CharacterCache:
    """Plain-text on-disk cache of dominant characters keyed by (type, weight)."""

    def __init__(self, directory: str | Path | None = None):
        directory = directory or os.environ.get(CACHE_ENV)
        self.dir = Path(directory) if directory else None
        self.mem: dict[tuple[str, Weight], DominantCharacter] = {}

    def _path(self, name: str, hw: Weight) -> Path:
        return self.dir / f"{name}__{'_'.join(map(str, hw))}.txt"

    def get(self, name: str, hw: Weight) -> DominantCharacter | None:
        key = (name, hw)
        if key in self.mem:
            return self.mem[key]
        if self.dir is None:
            return None
        path = self._path(name, hw)
        if not path.exists():
            return None
        ch = parse_character(path.read_text())
        self.mem[key] = ch
        return ch

    def put(self, name: str, ch: DominantCharacter) -> None:
        self.mem[(name, ch.highest_weight)] = ch
        if self.dir is None:
            return
        self.dir.mkdir(parents=True, exist_ok=True)
        path = self._path(name, ch.highest_weight)
        if path.exists():
            return
        tmp = path.with_suffix(f".tmp{os.getpid()}")
        tmp.write_text(format_character(name, ch))
        os.replace(tmp, path)  # atomic insert-if-absent is good enough here


def format_character(type_name: str, ch: DominantCharacter) -> str:
    lines = [CACHE_HEADER, f"type {type_name}", "highest " + " ".join(map(str, ch.highest_weight))]
    for mu, m in sorted(ch.mults.items(), reverse=True):
        lines.append(" ".join(map(str, mu)) + f" {m}")
    return "\n".join(lines) + "\n"


def parse_character(text: str) -> DominantCharacter:
    lines = text.splitlines()
    if not lines or lines[0].strip() != CACHE_HEADER:
        raise CatalogFormatError("character cache: missing or unsupported header")
    hw = tuple(int(x) for x in lines[2].split()[1:])
    mults = {}
    for line in lines[3:]:
        if line.strip():
            *mu, m = (int(x) for x in line.split())
            mults[tuple(mu)] = m
    return DominantCharacter(hw, mults)


_default_cache = CharacterCache()


def set_cache_dir(directory: str | Path | None) -> None:
    global _default_cache
    _default_cache = CharacterCache(directory)


def dominant_character(rs: RootSystem, hw: Sequence[int], cache: CharacterCache | None = None) -> DominantCharacter:
    """Freudenthal recursion restricted to dominant weights."""
    hw = tuple(int(x) for x in hw)
    if len(hw) != rs.rank or not rs.is_dominant(hw):
        raise NotDominant(f"highest weight {hw} is not dominant for {rs.name}")
    cache = cache or _default_cache
    hit = cache.get(rs.name, hw)
    if hit is not None:
        return hit

    r = rs.rank
    ainv = inverse(rs.cartan)  # fw -> simple-root coordinates: x @ ainv
    pos_fw = [rs.root_to_fw(a) for a in rs.positive_roots]

    def depth(mu):
        diff = [h - m for h, m in zip(hw, mu)]
        return sum(sum(diff[i] * ainv[i][j] for i in range(r)) for j in range(r))

    # dominant weights below hw
    dom = {hw}
    todo = [hw]
    while todo:
        mu = todo.pop()
        for a in pos_fw:
            nu = tuple(x - y for x, y in zip(mu, a))
            if nu not in dom and all(c >= 0 for c in nu):
                dom.add(nu)
                todo.append(nu)
    order = sorted(dom, key=lambda m: (depth(m), tuple(-c for c in m)))

    rho = rs.rho
    hr = tuple(x + y for x, y in zip(hw, rho))
    norm_hr = rs.weight_form(hr, hr)
    mults: dict[Weight, int] = {hw: 1}
    dom_cache: dict[Weight, Weight] = {}

    def mult(x):
        if x not in dom_cache:
            dom_cache[x] = rs.dominant_weight(x)[0]
        return mults.get(dom_cache[x], 0)

    for mu in order[1:]:
        total = Fraction(0)
        for a in pos_fw:
            k = 1
            while True:
                nu = tuple(m + k * c for m, c in zip(mu, a))
                d = dom_cache.get(nu) or rs.dominant_weight(nu)[0]
                dom_cache[nu] = d
                if d not in dom:
                    break
                m = mults.get(d, 0)
                if m:
                    total += m * rs.weight_form(nu, a)
                k += 1
        mr = tuple(x + y for x, y in zip(mu, rho))
        denom = norm_hr - rs.weight_form(mr, mr)
        val = 2 * total / denom
        assert val.denominator == 1, (mu, val)
        if val:
            mults[mu] = int(val)
    ch = DominantCharacter(hw, mults)
    cache.put(rs.name, ch)
    return ch


def restricted_character(pair: EmbeddedPair, nu_hat: Sequence[int]) -> Counter:
    """T-weight multiplicities of V_Ghat(nu_hat) restricted through rho."""
    ch = dominant_character(pair.ghat, nu_hat)
    out: Counter = Counter()
    for mu, m in ch.mults.items():
        for x in pair.ghat.weyl_orbit(mu):
            out[pair.restrict(x)] += m
    return out


def branch_multiplicity(pair: EmbeddedPair, nu: Sequence[int], nu_hat: Sequence[int]) -> int:
    """dim Hom_G(V_G(nu)*, V_Ghat(nu_hat)), by Weyl-alternated counting."""
    g = pair.g
    nu = tuple(nu)
    if len(nu) != g.rank or len(nu_hat) != pair.ghat.rank:
        raise DimensionError(f"expected weights of lengths {g.rank} and {pair.ghat.rank}")
    if not g.is_dominant(nu):
        raise NotDominant(f"{nu} is not dominant for {g.name}")
    if not pair.ghat.is_dominant(tuple(nu_hat)):
        raise NotDominant(f"{tuple(nu_hat)} is not dominant for {pair.ghat.name}")
    kappa = g.dual_weight(nu)
    D = restricted_character(pair, nu_hat)
    rho = g.rho
    total = 0
    for sign, wrho in g.weyl_signed_elements():
        pt = tuple(k + r - w for k, r, w in zip(kappa, rho, wrho))
        total += sign * D.get(pt, 0)
    return total


def decompose(pair: EmbeddedPair, nu_hat: Sequence[int]) -> dict[Weight, int]:
    """All (nu, multiplicity) with V_G(nu)* inside V_Ghat(nu_hat)."""
    g = pair.g
    D = restricted_character(pair, nu_hat)
    rho = g.rho
    signed = g.weyl_signed_elements()
    out = {}
    for kappa in sorted(k for k in D if g.is_dominant(k)):
        total = 0
        for sign, wrho in signed:
            total += sign * D.get(tuple(k + r - w for k, r, w in zip(kappa, rho, wrho)), 0)
        if total:
            out[g.dual_weight(kappa)] = total
    return out


def in_lr(pair: EmbeddedPair, nu: Sequence[int], nu_hat: Sequence[int]) -> bool:
    """Membership in the branching semigroup LR(G, Ghat)."""
    ok = branch_multiplicity(pair, nu, nu_hat) >= 1
    if ok:
        assert lr_lattice(pair).contains(tuple(nu) + tuple(nu_hat)), "LR element outside ZLR"
    return ok
