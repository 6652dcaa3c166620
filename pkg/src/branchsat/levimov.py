"""Candidate Schubert pairs, Levi-movability certificates and inequalities."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .admissible import admissible_one_param_subgroups
from .chevalley import derive_seed, exp_ad_restricted, levi_factors
from .embeddings import EmbeddedPair
from .linalg import PRIME, rank, rank_mod
from .rootsystem import Coweight, Root, RootSystem, WeylElement

DEFAULT_MAX_ATTEMPTS = 5


@dataclass(frozen=True)
class CandidatePair:
    """A pair (w, what) satisfying the graded dimension condition for lambda.

    ``graded_dims[d] = (|Phi(w)^d|, |Phihat(what)^d|, |Phihat^d|)`` for each
    degree d = <lambda, alpha> > 0.
    """

    lam: Coweight
    lam_hat: Coweight
    w: WeylElement
    w_hat: WeylElement
    w_lam: Coweight
    w_hat_lam: Coweight
    graded_dims: tuple[tuple[int, tuple[int, int, int]], ...]

    @property
    def lengths(self) -> tuple[int, int]:
        return (sum(a for _, (a, _, _) in self.graded_dims), sum(b for _, (_, b, _) in self.graded_dims))


@dataclass(frozen=True)
class Movable:
    seed: int
    attempt: int
    factors: tuple[tuple[Root, int], ...]

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Unknown:
    attempts: int

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Dominance:
    side: str  # "g" or "ghat"
    index: int


@dataclass
class InequalityRecord:
    """Row ``coeffs`` with the convention coeffs . (nu, nuhat) <= 0."""

    coeffs: tuple[int, ...]
    provenance: CandidatePair | Dominance
    status: str = "candidate"
    certificate: Movable | None = None

    @property
    def is_dominance(self) -> bool:
        return isinstance(self.provenance, Dominance)


# ------------------------------------------------------------------ orbits
def _orbit_words(rs: RootSystem, lam: Coweight) -> list[tuple[tuple[int, ...], Coweight]]:
    """One Weyl word per element of the orbit of lam (any lam, BFS order)."""
    lam = tuple(lam)
    seen = {lam}
    out = [((), lam)]
    layer = out[:]
    while layer:
        nxt = []
        for word, mu in layer:
            for i in range(rs.rank):
                nu = rs.reflect_coweight(mu, i)
                if nu not in seen:
                    seen.add(nu)
                    nxt.append(((i,) + word, nu))
        nxt.sort()
        out.extend(nxt)
        layer = nxt
    return out


def _degrees(rs: RootSystem, lam: Coweight) -> dict[int, int]:
    out: dict[int, int] = defaultdict(int)
    for a in rs.roots:
        d = rs.pair_root(lam, a)
        if d > 0:
            out[d] += 1
    return dict(sorted(out.items()))


def _graded_counts(rs: RootSystem, word, lam: Coweight, degrees: Sequence[int]) -> tuple[int, ...]:
    inv = rs.graded_inversion_set(word, lam)
    return tuple(len(inv.get(-d, ())) for d in degrees)


# -------------------------------------------------------------- candidates
def candidate_pairs(pair: EmbeddedPair, lam: Coweight) -> list[CandidatePair]:
    """All (w, what) with |Phi(w)^d| + |Phihat(what)^d| = |Phihat^d| for all d.

    w runs over minimal coset representatives for the parabolic of lam in G
    and what over one representative per coset for the (possibly
    non-dominant) embedded coweight in Ghat.
    """
    g, gh = pair.g, pair.ghat
    lam = tuple(lam)
    lam_hat = pair.embed_coweight(lam)
    total = _degrees(gh, lam_hat)
    degrees = list(total)
    full = tuple(total[d] for d in degrees)
    hat_by_dims: dict[tuple[int, ...], list] = defaultdict(list)
    for word, mu in _orbit_words(gh, lam_hat):
        hat_by_dims[_graded_counts(gh, word, lam_hat, degrees)].append((word, mu))
    out = []
    for word, mu in g.coweight_orbit_words(lam):
        dims = _graded_counts(g, word, lam, degrees) if _degrees_ok(g, lam, degrees) else None
        if dims is None:
            continue
        need = tuple(f - a for f, a in zip(full, dims))
        for hword, hmu in hat_by_dims.get(need, ()):
            gd = tuple((d, (a, b, f)) for d, a, b, f in zip(degrees, dims, need, full))
            out.append(
                CandidatePair(lam, lam_hat, g.weyl_element(word), gh.weyl_element(hword), tuple(mu), tuple(hmu), gd)
            )
    return out


def _degrees_ok(g: RootSystem, lam: Coweight, degrees: Sequence[int]) -> bool:
    # every degree occurring in g also occurs in ghat (roots of g restrict from roots of ghat)
    return set(_degrees(g, lam)) <= set(degrees)


# --------------------------------------------------------------- movability
class _LeviContext:
    """Per (lambda, seed) data: the Levi element restricted to graded pieces."""

    def __init__(self, pair: EmbeddedPair, lam_hat: Coweight, seed: int):
        gh = pair.ghat
        L = pair.Lhat
        self.seed = seed
        self.factors = tuple(levi_factors(gh, lam_hat, seed))
        self.pieces: dict[int, list[int]] = defaultdict(list)
        for k, b in enumerate(gh.roots):
            d = -gh.pair_root(lam_hat, b)
            if d > 0:
                self.pieces[d].append(k)
        self.pos = {d: {b: i for i, b in enumerate(basis)} for d, basis in self.pieces.items()}
        self._L = L
        self._mats: dict[int, list[list]] = {}

    def matrix(self, d: int) -> list[list]:
        if d not in self._mats:
            basis = self.pieces[d]
            n = len(basis)
            m = [[int(i == j) for j in range(n)] for i in range(n)]
            for a, c in self.factors:
                e = exp_ad_restricted(self._L, a, c, basis)
                m = [[sum(m[i][k] * e[k][j] for k in range(n) if m[i][k]) for j in range(n)] for i in range(n)]
            self._mats[d] = m
        return self._mats[d]


def _transverse(pair: EmbeddedPair, cand: CandidatePair, ctx: _LeviContext) -> bool:
    g, gh = pair.g, pair.ghat
    inv = g.graded_inversion_set(cand.w.word, cand.lam)
    inv_hat = gh.graded_inversion_set(cand.w_hat.word, cand.lam_hat)
    for d, (a, b, f) in cand.graded_dims:
        if a == 0 or b == 0:
            continue
        pos = ctx.pos[d]
        n = len(pos)
        rows = []
        for alpha in inv.get(-d, ()):
            img = pair.g_root_images[tuple(-x for x in alpha)]
            v = [0] * n
            for k, c in img.items():
                v[pos[k]] = c
            rows.append(v)
        m = ctx.matrix(d)
        for alpha in inv_hat.get(-d, ()):
            j = pos[gh.root_index[tuple(-x for x in alpha)]]
            rows.append([m[i][j] for i in range(n)])
        if any(isinstance(x, Fraction) for r in rows for x in r):
            if rank(rows) < a + b:
                return False
        elif rank_mod(rows, PRIME) < a + b and rank(rows) < a + b:
            return False
    return True


def attempt_seed(run_seed: int, lam: Coweight, attempt: int) -> int:
    return derive_seed(run_seed, *lam, attempt)


def is_levi_movable(
    pair: EmbeddedPair,
    cand: CandidatePair,
    seed: int = 0,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    _contexts: dict | None = None,
) -> Movable | Unknown:
    """Search for a Levi element making the tangent spaces transverse.

    Attempt t uses the Levi element built from ``attempt_seed(seed, lam, t)``,
    so a larger budget only appends attempts (monotone).
    """
    cache = _contexts if _contexts is not None else {}
    for t in range(max_attempts):
        s = attempt_seed(seed, cand.lam, t)
        key = (cand.lam, s)
        if key not in cache:
            cache[key] = _LeviContext(pair, cand.lam_hat, s)
        ctx = cache[key]
        if _transverse(pair, cand, ctx):
            return Movable(s, t, ctx.factors)
    return Unknown(max_attempts)


# -------------------------------------------------------------- inequalities
def inequality(pair: EmbeddedPair, cand: CandidatePair) -> InequalityRecord:
    """<w lambda, nu> + <what lambdahat, nuhat> <= 0 as a coefficient row."""
    return InequalityRecord(tuple(cand.w_lam) + tuple(cand.w_hat_lam), cand)


def dominance_rows(pair: EmbeddedPair) -> list[InequalityRecord]:
    r, rh = pair.g.rank, pair.ghat.rank
    out = []
    for i in range(r + rh):
        row = tuple(-int(i == j) for j in range(r + rh))
        prov = Dominance("g", i) if i < r else Dominance("ghat", i - r)
        out.append(InequalityRecord(row, prov, "dominance"))
    return out


@dataclass
class LambdaSummary:
    lam: Coweight
    candidates: list[CandidatePair]
    results: list[Movable | Unknown]

    @property
    def movable(self) -> int:
        return sum(1 for r in self.results if r)


@dataclass
class HRepresentation:
    rows: list[InequalityRecord]
    per_lambda: list[LambdaSummary] = field(default_factory=list)
    degenerate: bool = False

    @property
    def unknown(self) -> list[CandidatePair]:
        return [c for s in self.per_lambda for c, r in zip(s.candidates, s.results) if not r]


def generate_h_representation(
    pair: EmbeddedPair,
    seed: int = 0,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    lambdas: Sequence[Coweight] | None = None,
) -> HRepresentation:
    """Certified-movable inequalities over all admissible lambda plus dominance rows."""
    lambdas = list(lambdas) if lambdas is not None else admissible_one_param_subgroups(pair)
    rows: list[InequalityRecord] = []
    summaries = []
    contexts: dict = {}
    for lam in lambdas:
        cands = candidate_pairs(pair, lam)
        results = [is_levi_movable(pair, c, seed, max_attempts, contexts) for c in cands]
        summaries.append(LambdaSummary(tuple(lam), cands, results))
        for c, res in zip(cands, results):
            if res:
                rec = inequality(pair, c)
                rec.status = "certified-movable"
                rec.certificate = res
                rows.append(rec)
    rows.extend(dominance_rows(pair))
    return HRepresentation(rows, summaries, degenerate=pair.g.rank < 2)


# ------------------------------------------------------------------ render
def _eps_terms(vals, names) -> str:
    parts = []
    for v, n in zip(vals, names):
        if not v:
            continue
        c = "" if abs(v) == 1 else f"{abs(v)}"
        parts.append(("-" if v < 0 else "+") + c + n)
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


def render_inequality(pair: EmbeddedPair, coeffs: Sequence[int], coords: str = "fw") -> str:
    """Human form 'lhs <= rhs' with positive terms on both sides.

    In fw coordinates the variables are nu_i, nuhat_j (fundamental-weight
    coordinates of the weights).  In eps coordinates the coefficients are
    the coweights written in the dual eps basis, so the variables are the
    eps-coordinates of the weights.
    """
    from .render import coweight_eps

    r = pair.g.rank
    a, b = list(coeffs[:r]), list(coeffs[r:])
    if coords == "eps":
        a = list(coweight_eps(pair.g, a))
        b = list(coweight_eps(pair.ghat, b))
    na = [f"n{i+1}" for i in range(len(a))]
    nb = [f"N{i+1}" for i in range(len(b))]
    coeff = a + b
    names = na + nb
    pos = [max(c, 0) for c in coeff]
    neg = [max(-c, 0) for c in coeff]
    return f"{_eps_terms(pos, names)} <= {_eps_terms(neg, names)}"
