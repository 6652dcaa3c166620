"""End-to-end computation of the branching cone and the saturation check."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from . import __version__
from .admissible import admissible_details
from .branching import branch_multiplicity
from .embeddings import EmbeddedPair, LatticeDescription, builtin_pair, lr_lattice, parse_pair_name, restrict_lattice
from .levimov import (
    DEFAULT_MAX_ATTEMPTS,
    Dominance,
    InequalityRecord,
    dominance_rows,
    generate_h_representation,
    inequality,
    is_levi_movable,
)
from .linalg import primitive
from .polycone import Cone, extreme_rays, facet_rows, hilbert_basis
from .render import pair_eps, row_eps

REPORT_FORMAT = "branchsat-report/1"
RETRY_BUDGETS = (5, 25, 125)


def _long_cone(name: str) -> bool:
    base, args = parse_pair_name(name)
    return base == "f4_e6" or (base == "sp_sl" and args and int(args[0]) >= 5)


def _long_hilbert(name: str) -> bool:
    base, args = parse_pair_name(name)
    return _long_cone(name) or (base == "sp_sl" and args and int(args[0]) >= 4)


@dataclass
class RayCheck:
    ray: tuple[int, ...]
    multiplicity: int | None

    @property
    def ok(self) -> bool:
        return bool(self.multiplicity)


@dataclass
class ConeReport:
    pair: str
    seed: int
    lambdas: list[tuple[int, ...]]
    degenerate: bool
    candidates: list[int]
    movable: list[int]
    inequalities: list[InequalityRecord]
    facets: list[InequalityRecord]
    rays: list[tuple[int, ...]]
    ray_checks: list[RayCheck] = field(default_factory=list)
    retry_log: list[str] = field(default_factory=list)
    status: str = "verified"  # verified | incomplete
    reason: str = ""

    @property
    def verified(self) -> bool:
        return self.status == "verified"


@dataclass
class SaturationReport:
    cone: ConeReport
    lattice: LatticeDescription | None
    hilbert: list[tuple[int, ...]]
    multiplicities: list[int | None]
    verdict: str  # saturated | counterexample | incomplete
    detail: str = ""

    @property
    def saturated(self) -> bool:
        return self.verdict == "saturated"


def verify_rays(pair: EmbeddedPair, rays: Sequence[Sequence[int]]) -> list[RayCheck]:
    """Branching multiplicity of each primitive ray generator."""
    out = []
    r = pair.g.rank
    for ray in rays:
        ray = tuple(ray)
        if not any(ray) or primitive(ray) != ray:
            raise ValueError(f"ray {ray} is not a primitive nonzero vector")
        out.append(RayCheck(ray, branch_multiplicity(pair, ray[:r], ray[r:])))
    return out


def compute_cone(
    pair: EmbeddedPair | str,
    seed: int = 0,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    verify: bool | None = None,
    allow_long: bool = False,
) -> ConeReport:
    """Steps 1-6: inequalities, rays, ray verification with the retry loop.

    ``verify=None`` verifies rays unless the pair is in the long-run class
    and ``allow_long`` is off.
    """
    if isinstance(pair, str):
        pair = builtin_pair(pair)
    if verify is None:
        verify = allow_long or not _long_cone(pair.name)
    adm = admissible_details(pair)
    H = generate_h_representation(pair, seed, max_attempts, adm.coweights)
    rows = list(H.rows)
    log: list[str] = []
    contexts: dict = {}
    budgets = [b for b in RETRY_BUDGETS if b > max_attempts]
    while True:
        rays = extreme_rays([r.coeffs for r in rows], order="maxcutoff")
        checks = verify_rays(pair, rays) if verify else []
        bad = [c.ray for c in checks if not c.ok]
        if not bad:
            break
        unresolved = [
            (s, i) for s in H.per_lambda for i, res in enumerate(s.results) if not res
        ]
        if not budgets or not unresolved:
            status = "incomplete"
            reason = f"{len(bad)} ray(s) fail verification" + (
                " with every candidate resolved" if not unresolved else " after the full retry budget"
            )
            return _cone_report(pair, seed, adm, H, rows, rays, checks, log, status, reason)
        budget = budgets.pop(0)
        log.append(f"{len(bad)} ray(s) not in LR; retrying {len(unresolved)} unknown candidate(s) with {budget} attempts")
        added = 0
        for s, i in unresolved:
            cand = s.candidates[i]
            res = is_levi_movable(pair, cand, seed, budget, contexts)
            if res:
                s.results[i] = res
                rec = inequality(pair, cand)
                rec.status = "certified-movable"
                rec.certificate = res
                rows.insert(len(rows) - len(dominance_rows(pair)), rec)
                added += 1
        log.append(f"  {added} new movable pair(s)")
    status, reason = ("verified", "") if verify else ("incomplete", "ray verification gated (long run)")
    return _cone_report(pair, seed, adm, H, rows, rays, checks, log, status, reason)


def _cone_report(pair, seed, adm, H, rows, rays, checks, log, status, reason) -> ConeReport:
    idx = facet_rows([r.coeffs for r in rows], rays)
    return ConeReport(
        pair=pair.name,
        seed=seed,
        lambdas=list(adm.coweights),
        degenerate=adm.degenerate,
        candidates=[len(s.candidates) for s in H.per_lambda],
        movable=[s.movable for s in H.per_lambda],
        inequalities=rows,
        facets=[rows[i] for i in idx],
        rays=rays,
        ray_checks=checks,
        retry_log=log,
        status=status,
        reason=reason,
    )


def check_saturation(
    pair: EmbeddedPair | str,
    seed: int = 0,
    allow_long: bool = False,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    lattice: LatticeDescription | None = None,
    congruence: tuple[Sequence[int], int] | None = None,
    cone: ConeReport | None = None,
) -> SaturationReport:
    """Hilbert basis of the cone in the lattice and branching check of each element."""
    if isinstance(pair, str):
        pair = builtin_pair(pair)
    rep = cone or compute_cone(pair, seed, max_attempts, allow_long=allow_long)
    if not rep.verified:
        return SaturationReport(rep, None, [], [], "incomplete", rep.reason)
    if _long_hilbert(pair.name) and not allow_long:
        return SaturationReport(rep, None, [], [], "incomplete", "Hilbert basis gated (long run)")
    lat = lattice or lr_lattice(pair)
    if congruence is not None:
        lat = restrict_lattice(lat, congruence[0], congruence[1])
    hb = hilbert_basis(Cone.from_rays(rep.rays), lat).elements
    r = pair.g.rank
    mults = [branch_multiplicity(pair, h[:r], h[r:]) for h in hb]
    bad = [h for h, m in zip(hb, mults) if m < 1]
    if bad:
        return SaturationReport(rep, lat, hb, mults, "counterexample", f"{bad[0]} has multiplicity 0")
    return SaturationReport(rep, lat, hb, mults, "saturated")


# ------------------------------------------------------------------ reports
def _provenance(rec: InequalityRecord):
    p = rec.provenance
    if isinstance(p, Dominance):
        return {"kind": "dominance", "side": p.side, "index": p.index + 1}
    out = {
        "kind": "movable",
        "lambda": list(p.lam),
        "w": list(p.w.word),
        "w_hat": list(p.w_hat.word),
    }
    if rec.certificate is not None:
        out["seed"] = rec.certificate.seed
        out["attempt"] = rec.certificate.attempt
        out["levi_factors"] = [[list(a), c] for a, c in rec.certificate.factors]
    return out


def _num(x):
    return x if isinstance(x, int) else str(x)


def cone_to_dict(pair: EmbeddedPair, rep: ConeReport, coords: str = "fw") -> dict:
    def vec(v, rowlike=False):
        if coords == "eps":
            v = row_eps(pair, v) if rowlike else pair_eps(pair, v)
        return [_num(x) for x in v]

    return {
        "format": REPORT_FORMAT,
        "version": __version__,
        "pair": rep.pair,
        "g": pair.g.name,
        "ghat": pair.ghat.name,
        "seed": rep.seed,
        "coords": coords,
        "status": rep.status,
        "reason": rep.reason,
        "admissible": [list(l) for l in rep.lambdas],
        "degenerate_rank_one": rep.degenerate,
        "candidates": rep.candidates,
        "movable": rep.movable,
        "inequality_count": len(rep.inequalities),
        "facets": [{"coeffs": vec(f.coeffs, True), "provenance": _provenance(f)} for f in rep.facets],
        "rays": [vec(r) for r in rep.rays],
        "ray_checks": [{"ray": list(c.ray), "multiplicity": c.multiplicity} for c in rep.ray_checks],
        "retry_log": rep.retry_log,
    }


def saturation_to_dict(pair: EmbeddedPair, rep: SaturationReport, coords: str = "fw") -> dict:
    d = cone_to_dict(pair, rep.cone, coords)
    d["lattice"] = None if rep.lattice is None else {
        "basis": [list(b) for b in rep.lattice.basis],
        "index": rep.lattice.index,
    }
    conv = (lambda v: [_num(x) for x in pair_eps(pair, v)]) if coords == "eps" else list
    d["hilbert_basis"] = [{"element": conv(h), "multiplicity": m} for h, m in zip(rep.hilbert, rep.multiplicities)]
    d["hilbert_equals_rays"] = sorted(rep.hilbert) == sorted(rep.cone.rays) if rep.hilbert else None
    d["verdict"] = rep.verdict
    d["detail"] = rep.detail
    return d


def to_json(d: dict) -> str:
    return json.dumps(d, indent=2, sort_keys=False) + "\n"


def _fmt(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def cone_to_text(pair: EmbeddedPair, rep: ConeReport, coords: str = "fw") -> str:
    from .levimov import render_inequality

    lines = [f"pair {rep.pair}: {pair.g.name} in {pair.ghat.name}  (seed {rep.seed})"]
    lines.append(f"admissible 1-ps: {len(rep.lambdas)}" + ("  [rank one: degenerate]" if rep.degenerate else ""))
    for lam, c, m in zip(rep.lambdas, rep.candidates, rep.movable):
        lines.append(f"  lambda {_fmt(lam)}: {c} candidate pair(s), {m} Levi-movable")
    lines.append(f"inequalities: {len(rep.inequalities)}, irredundant: {len(rep.facets)}")
    for f in rep.facets:
        lines.append("  " + render_inequality(pair, f.coeffs, coords))
    lines.append(f"rays: {len(rep.rays)}")
    checks = {c.ray: c.multiplicity for c in rep.ray_checks}
    for r in rep.rays:
        shown = pair_eps(pair, r) if coords == "eps" else r
        m = checks.get(r)
        tag = "" if m is None else f"  mult {m}"
        lines.append(f"  {_fmt(shown)}{tag}")
    for entry in rep.retry_log:
        lines.append("retry: " + entry)
    lines.append(f"status: {rep.status}" + (f" ({rep.reason})" if rep.reason else ""))
    return "\n".join(lines) + "\n"


def saturation_to_text(pair: EmbeddedPair, rep: SaturationReport, coords: str = "fw") -> str:
    out = cone_to_text(pair, rep.cone, coords)
    lines = []
    if rep.lattice is not None:
        lines.append(f"lattice index: {rep.lattice.index}")
    if rep.hilbert:
        eq = sorted(rep.hilbert) == sorted(rep.cone.rays)
        lines.append(f"hilbert basis: {len(rep.hilbert)} element(s)" + ("  (= ray generators)" if eq else ""))
        for h, m in zip(rep.hilbert, rep.multiplicities):
            shown = pair_eps(pair, h) if coords == "eps" else h
            lines.append(f"  {_fmt(shown)}  mult {m}")
    lines.append(f"verdict: {rep.verdict}" + (f" ({rep.detail})" if rep.detail else ""))
    return out + "\n".join(lines) + "\n"
