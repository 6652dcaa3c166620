"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s``.  Criterion 8 needs
``BRANCHSAT_LONG=1``.
"""

import random
from fractions import Fraction

import pytest

import reference_data as ref
from branchsat.branching import branch_multiplicity, dominant_character, restricted_character
from branchsat.embeddings import builtin_pair, lr_lattice
from branchsat.levimov import generate_h_representation
from branchsat.linalg import dot, primitive, primitive_rational
from branchsat.pipeline import check_saturation, compute_cone
from branchsat.polycone import Cone, extreme_rays, facet_rows, hilbert_basis, minimal_h_representation
from branchsat.render import pair_eps, row_eps


def eps_rows(pair, recs):
    return {primitive_rational(row_eps(pair, r.coeffs)) for r in recs}


def eps_to_pair(pair, v):
    """(nu_eps, nuhat_eps) -> fw coordinates; type A nuhat is a partition."""
    g, gh = pair.g, pair.ghat
    nu, nuhat = list(v[: g.eps_dim]), list(v[g.eps_dim :])
    if gh.factors[0][0] == "A" and len(nuhat) == gh.eps_dim - 1:
        nuhat = nuhat + [0]
    return g.eps_to_fw(nu) + gh.eps_to_fw(nuhat)


def chain_rows(n):
    """Interleaving inequalities for Spin(2n-1) in Spin(2n), eps variables (nu, nuhat)."""
    k = n - 1
    seq = []
    for i in range(n - 1):
        seq.append(k + i)  # nuhat_{i+1}
        seq.append(i)  # nu_{i+1}
    rows = set()
    dim = 2 * n - 1
    for a, b in zip(seq, seq[1:]):  # x_b - x_a <= 0
        r = [0] * dim
        r[b] += 1
        r[a] -= 1
        rows.add(tuple(r))
    last = seq[-1]
    for s in (1, -1):  # s*nuhat_n - nu_{n-1} <= 0
        r = [0] * dim
        r[k + n - 1] = s
        r[last] = -1
        rows.add(tuple(r))
    return rows


# ---------------------------------------------------------------- criterion 1
def test_criterion_01_spin_odd_even(criterion):
    problems = []
    for n in range(2, 7):
        pair = builtin_pair(f"spin_odd_even({n})")
        rep = check_saturation(pair)
        if len(rep.cone.facets) != 2 * n - 1:
            problems.append(f"n={n}: {len(rep.cone.facets)} facets")
        if eps_rows(pair, rep.cone.facets) != chain_rows(n):
            problems.append(f"n={n}: facets differ from the interleaving chain")
        expected = {eps_to_pair(pair, nu + nuhat) for nu, nuhat in ref.spin_chain_basis(n)}
        if set(rep.hilbert) != expected or len(rep.hilbert) != 2 * n - 1:
            problems.append(f"n={n}: Hilbert basis mismatch")
        if rep.verdict != "saturated":
            problems.append(f"n={n}: verdict {rep.verdict}")
    criterion(1, "spin_odd_even(2..6): 2n-1 chain facets, 2n-1 Hilbert elements, saturated", not problems, "; ".join(problems))


# ---------------------------------------------------------------- criterion 2
def test_criterion_02_sl3_g2(criterion):
    pair = builtin_pair("sl3_g2")
    rep = check_saturation(pair)
    c = rep.cone
    checks = {
        "1 admissible": len(c.lambdas) == 1,
        "4 candidates": c.candidates == [4],
        "4 movable": c.movable == [4],
        "6 rays": sorted(c.rays) == sorted(ref.SL3_G2_RAYS),
        "HB = rays": sorted(rep.hilbert) == sorted(c.rays),
        "saturated": rep.verdict == "saturated",
    }
    bad = [k for k, v in checks.items() if not v]
    criterion(2, "sl3_g2: 1 lambda, 4/4 pairs, 6 listed rays, HB = rays, saturated", not bad, ", ".join(bad))


# ---------------------------------------------------------------- criterion 3
def test_criterion_03_g2_spin7(criterion):
    pair = builtin_pair("g2_spin7")
    rep = check_saturation(pair)
    so7 = check_saturation(pair, congruence=((0, 0, 0, 0, 1), 2), cone=rep.cone)
    c = rep.cone
    checks = {
        "8 candidates": c.candidates == [8],
        "7 movable": c.movable == [7],
        "7 rays": sorted(c.rays) == sorted(ref.G2_SPIN7_RAYS),
        "HB 7": sorted(rep.hilbert) == sorted(ref.G2_SPIN7_RAYS),
        "SO7 HB 10": sorted(so7.hilbert) == sorted(ref.SO7_RAY_GENERATORS + ref.SO7_EXTRA),
        "saturated": rep.verdict == "saturated" and so7.verdict == "saturated",
    }
    bad = [k for k, v in checks.items() if not v]
    criterion(3, "g2_spin7: 8 candidates, 7 movable, 7 rays, HB 7, SO7 HB 10, saturated", not bad, ", ".join(bad))


# ---------------------------------------------------------------- criterion 4
def test_criterion_04_spin9_f4(criterion):
    pair = builtin_pair("spin9_f4")
    rep = check_saturation(pair)
    c = rep.cone
    per = dict(zip(c.lambdas, zip(c.candidates, c.movable)))
    # lambda = eps1+..+eps4 has 6 candidates, eps1+eps2 has 30
    lam_all = pair.g.eps_to_coweight((1, 1, 1, 1))
    lam_two = pair.g.eps_to_coweight((1, 1, 0, 0))
    checks = {
        "2 admissible": len(c.lambdas) == 2,
        "6+30 candidates": per.get(lam_all, (0,))[0] == 6 and per.get(lam_two, (0,))[0] == 30,
        "28 movable": sum(c.movable) == 28,
        "36 facets": len(c.facets) == 36 and len(c.inequalities) == 36,
        "20 rays": sorted(c.rays) == sorted(ref.SPIN9_F4_RAYS),
        "HB = rays": sorted(rep.hilbert) == sorted(c.rays),
        "saturated": rep.verdict == "saturated",
    }
    bad = [k for k, v in checks.items() if not v]
    criterion(4, "spin9_f4: 2 lambdas, 36 (6+30) candidates, 28 movable, 36 facets, 20 rays, saturated", not bad, ", ".join(bad))


# ---------------------------------------------------------------- criterion 5
def test_criterion_05_sp4(criterion):
    pair = builtin_pair("sp_sl(2)")
    rep = check_saturation(pair)
    c = rep.cone
    want = {primitive(ref.parse_inequality(s, 2, 3)) for s in ref.SP4_FACETS}
    checks = {
        "facets": eps_rows(pair, c.facets) == want,
        "5 rays": len(c.rays) == 5,
        "HB = rays": sorted(rep.hilbert) == sorted(c.rays),
        "saturated": rep.verdict == "saturated",
    }
    bad = [k for k, v in checks.items() if not v]
    criterion(5, "sp_sl(2): listed inequalities, 5 rays, HB = rays, saturated", not bad, ", ".join(bad))


# ---------------------------------------------------------------- criterion 6
def test_criterion_06_sp6(criterion):
    pair = builtin_pair("sp_sl(3)")
    rep = check_saturation(pair)
    c = rep.cone
    want = {primitive(ref.parse_inequality(s, 3, 5)) for s in ref.SP6_FACETS}
    checks = {
        "15 rays (eps)": {pair_eps(pair, r) for r in c.rays} == set(ref.SP6_RAYS_EPS) and len(c.rays) == 15,
        "inequality families": eps_rows(pair, c.facets) == want,
        "HB = rays": sorted(rep.hilbert) == sorted(c.rays),
        "saturated": rep.verdict == "saturated",
    }
    bad = [k for k, v in checks.items() if not v]
    got = {pair_eps(pair, r) for r in c.rays}
    if got != set(ref.SP6_RAYS_EPS):
        bad.append(f"computed-only {sorted(got - set(ref.SP6_RAYS_EPS))}, listed-only {sorted(set(ref.SP6_RAYS_EPS) - got)}")
    criterion(6, "sp_sl(3): 15 listed rays, families (1)-(7) + dominance, HB = rays, saturated", not bad, ", ".join(bad))


# ---------------------------------------------------------------- criterion 7
def test_criterion_07_sp8(criterion):
    pair = builtin_pair("sp_sl(4)")
    rep = check_saturation(pair, allow_long=True)
    c = rep.cone
    rows = [r.coeffs for r in c.inequalities]
    fac = set(facet_rows(rows, c.rays))
    redundant = [i for i in range(len(rows)) if i not in fac]
    red_eps = primitive(ref.parse_inequality(ref.SP8_REDUNDANT, 4, 7))
    red_ok = len(redundant) == 1 and primitive_rational(row_eps(pair, rows[redundant[0]])) == red_eps
    face = {pair_eps(pair, r) for r in c.rays if redundant and dot(rows[redundant[0]], r) == 0}
    highlighted = [eps_to_pair(pair, v) for v in ref.SP8_HIGHLIGHTED_EPS]
    checks = {
        "movable 14/47/53": c.movable == ref.SP8_MOVABLE,
        "125 inequalities": len(rows) == 125,
        "one redundant (listed)": red_ok,
        "49 rays": len(c.rays) == 49,
        "face rays": face == set(ref.SP8_FACE_RAYS_EPS),
        "HB = 49 rays": sorted(rep.hilbert) == sorted(c.rays),
        "highlighted verify": all(branch_multiplicity(pair, h[:4], h[4:]) >= 1 for h in highlighted),
        "saturated": rep.verdict == "saturated",
    }
    bad = [k for k, v in checks.items() if not v]
    criterion(7, "sp_sl(4): 14/47/53 movable, 125 ineqs, 1 redundant, 49 rays, face rays, HB = rays, saturated", not bad, ", ".join(bad))


# ---------------------------------------------------------------- criterion 8
def test_criterion_08_sp10(criterion):
    pair = builtin_pair("sp_sl(5)")
    rep = compute_cone(pair, verify=False)
    checks = {
        "534 movable": sum(rep.movable) == ref.SP10_MOVABLE,
        "548 inequalities": len(rep.inequalities) == 548,
        "519 facets (29 redundant)": len(rep.facets) == 519,
        "194 rays": len(rep.rays) == 194,
    }
    bad = [k for k, v in checks.items() if not v]
    if bad:
        bad.append(f"got {sum(rep.movable)} movable, {len(rep.inequalities)} ineqs, {len(rep.facets)} facets, {len(rep.rays)} rays")
    criterion(8, "sp_sl(5): 534 movable, 548 ineqs, 29 redundant, 194 rays (Hilbert step not required)", not bad, ", ".join(bad))


# ---------------------------------------------------------------- criterion 9
def test_criterion_09_f4_e6(criterion):
    pair = builtin_pair("f4_e6")
    rep = check_saturation(pair, allow_long=True)
    c = rep.cone
    checks = {
        "61 facets": len(c.facets) == 61,
        "37 rays": sorted(c.rays) == sorted(ref.F4_E6_RAYS),
        "37 verify": len(c.ray_checks) == 37 and all(r.ok for r in c.ray_checks),
        "saturated": rep.verdict == "saturated",
    }
    bad = [k for k, v in checks.items() if not v]
    criterion(9, "f4_e6: 61 facets, 37 listed rays, all verify by branching, saturated", not bad, ", ".join(bad))


# --------------------------------------------------------------- criterion 10
def _random_pointed_cone(rng, dim):
    while True:
        nrays = rng.randint(dim, dim + 4)
        rays = [tuple(rng.randint(0, 4) for _ in range(dim)) for _ in range(nrays)]
        # shift into the positive orthant interior direction keeps the cone pointed
        rays = [tuple(x + (1 if i == 0 else 0) for i, x in enumerate(r)) for r in rays]
        from branchsat.linalg import rank

        if rank(rays) == dim:
            return rays


def _dd_roundtrip(rng, trials=100):
    for _ in range(trials):
        dim = rng.randint(2, 8)
        gens = _random_pointed_cone(rng, dim)
        rays = extreme_rays(minimal_h_representation(gens))
        again = extreme_rays(minimal_h_representation(rays))
        if rays != again:
            return False
        # every generator lies in the cone spanned by the rays
        fac = minimal_h_representation(rays)
        if not all(all(dot(f, g) <= 0 for f in fac) for g in gens):
            return False
        if not set(rays) <= {primitive(g) for g in gens}:
            return False
    return True


def _lattice_points(lattice, cone_rows, dim, bound):
    from itertools import product

    for v in product(range(bound + 1), repeat=dim):
        if sum(v) == 0 or sum(v) > bound:
            continue
        if all(dot(f, v) <= 0 for f in cone_rows) and lattice.contains(v):
            yield v


def _is_n_combination(v, basis):
    """Depth-first check that v is a sum of basis vectors (all entries are >= 0 here)."""
    if not any(v):
        return True
    for b in basis:
        w = tuple(x - y for x, y in zip(v, b))
        if all(x >= 0 for x in w) and _is_n_combination(w, basis):
            return True
    return False


def _hilbert_oracle(name, bound):
    pair = builtin_pair(name)
    H = generate_h_representation(pair)
    rows = [r.coeffs for r in H.rows]
    lat = lr_lattice(pair)
    hb = hilbert_basis(Cone.from_inequalities(rows), lat).elements
    dim = pair.g.rank + pair.ghat.rank
    return all(_is_n_combination(v, hb) for v in _lattice_points(lat, rows, dim, bound))


def _bookkeeping(rng, samples=20):
    pairs = ["sl3_g2", "g2_spin7", "sp_sl(2)", "spin_odd_even(3)", "diagonal(A,2)"]
    for _ in range(samples):
        pair = builtin_pair(rng.choice(pairs))
        gh, g = pair.ghat, pair.g
        nuhat = tuple(rng.randint(0, 2) for _ in range(gh.rank))
        D = restricted_character(pair, nuhat)
        total = 0
        for kappa in {k for k in D if g.is_dominant(k)}:
            nu = g.dual_weight(kappa)
            m = branch_multiplicity(pair, nu, nuhat)
            total += m * g.weyl_dimension(nu)
        if total != gh.weyl_dimension(nuhat):
            return False
        ch = dominant_character(gh, nuhat)
        if ch.dimension(gh) != gh.weyl_dimension(nuhat):
            return False
    return True


def _clebsch_gordan():
    pair = builtin_pair("diagonal(A,1)")
    for a in range(7):
        for b in range(5):
            for c in range(5):
                want = int(abs(b - c) <= a <= b + c and (a + b + c) % 2 == 0)
                if branch_multiplicity(pair, (a,), (b, c)) != want:
                    return False
    return True


def _parity():
    # sp_sl(n): sum nu_i + sum nuhat_j even (eps coordinates)
    for n in (2, 3, 4):
        pair = builtin_pair(f"sp_sl({n})")
        lat = lr_lattice(pair)
        if lat.index != 2:
            return False
        for v in _small_vectors(pair.g.rank + pair.ghat.rank):
            e = pair_eps(pair, v)
            if lat.contains(v) != (sum(e) % 2 == 0):
                return False
    # spin_odd_even(n): all 2 nu_i, 2 nuhat_j have the same parity
    for n in (2, 3, 4):
        pair = builtin_pair(f"spin_odd_even({n})")
        lat = lr_lattice(pair)
        for v in _small_vectors(pair.g.rank + pair.ghat.rank):
            e = pair_eps(pair, v)
            parities = {int(2 * Fraction(x)) % 2 for x in e}
            if lat.contains(v) != (len(parities) == 1):
                return False
    return True


def _small_vectors(dim, count=60, seed=7):
    rng = random.Random(seed)
    return [tuple(rng.randint(0, 3) for _ in range(dim)) for _ in range(count)]


def test_criterion_10_properties(criterion):
    rng = random.Random(20240601)
    checks = {
        "DD round trip x100": _dd_roundtrip(rng),
        "Hilbert oracle sp_sl(2)": _hilbert_oracle("sp_sl(2)", 6),
        "Hilbert oracle sl3_g2": _hilbert_oracle("sl3_g2", 6),
        "Hilbert oracle spin_odd_even(3)": _hilbert_oracle("spin_odd_even(3)", 5),
        "branching bookkeeping x20": _bookkeeping(rng),
        "Clebsch-Gordan": _clebsch_gordan(),
        "ZLR parity": _parity(),
    }
    bad = [k for k, v in checks.items() if not v]
    criterion(10, "property suites: DD round trip, Hilbert oracle, bookkeeping, Clebsch-Gordan, ZLR parity", not bad, ", ".join(bad))
