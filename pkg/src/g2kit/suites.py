"""Named verification suites over the whole library; each check returns a
pass/fail status with a counterexample string on failure.  The CLI and
the acceptance tests both run these."""

from __future__ import annotations

import random
import time
from fractions import Fraction

from . import fixtures
from .endo import (EndV, d_torus_lie, is_derivation, random_so,
                   u_root_lie)
from .errors import G2KitError, PrecisionError
from .filtration import (cayley, character_counts, enumerate_subspaces,
                         gamma_perp, lie_generators, moy_counterexample,
                         psi_b, quotient_iso_check, random_stable_subspace,
                         standard_symplectic_cycle, standard_symplectic_swap,
                         trace_triality_invariance)
from .norms import (HermitianNorm, NormFn, dual_norm, extend_dim4,
                    extend_sl3, extend_su21, filtration_lattice,
                    is_algebra_norm, is_self_dual, lattice_seq_from_norm,
                    standard_norm)
from .octonions import (Octonion, anisotropic_plane,
                        basis_octonion, bilinear_f, center_subalgebra,
                        division_quaternion, double, hyperbolic_plane,
                        idempotents_from_isotropic_pair, octonion_unit,
                        ramified_plane, random_isotropic_pair,
                        random_octonion, split_polarization,
                        standard_split_dim4)
from .scalars import FieldConfig
from .strata import classify, validate
from .triality import (GroupTriality, HermitianModel,
                       LieTrialityGroup, check_related, diag_lie_triple,
                       orbit_triples, random_g2_lie, root_triple, solve_dim2,
                       solve_dim4, solve_glw, solve_lie_triple)

SUITE_NAMES = ("octonion", "triality", "norms", "filtration", "strata")


def _all_root_pairs():
    for i in (-4, -1, -2, -3, 3, 2, 1, 4):
        for j in (-4, -1, -2, -3, 3, 2, 1, 4):
            if i != j and i != -j:
                yield i, j


# -- octonion suite ---------------------------------------------------------------

def _octonion_checks(cfg, rng):
    unit = octonion_unit(cfg)
    yield "unit-law", lambda: _sweep(
        500, lambda: _expect(lambda x: unit * x == x and x * unit == x,
                             random_octonion(cfg, rng)))
    yield "norm-multiplicative", lambda: _sweep(
        500, lambda: _expect(
            lambda xy: (xy[0] * xy[1]).norm() == xy[0].norm() * xy[1].norm(),
            (random_octonion(cfg, rng), random_octonion(cfg, rng))))
    yield "conjugation", lambda: _sweep(
        500, lambda: _expect(
            lambda xy: (xy[0] * xy[1]).conj() == xy[1].conj() * xy[0].conj()
            and xy[0].conj().conj() == xy[0],
            (random_octonion(cfg, rng), random_octonion(cfg, rng))))
    yield "f-transfer", lambda: _sweep(
        200, lambda: _expect(
            lambda xyz: bilinear_f(xyz[0] * xyz[1], xyz[2])
            == bilinear_f(xyz[1], xyz[0].conj() * xyz[2])
            and bilinear_f(xyz[0] * xyz[1], xyz[2])
            == bilinear_f(xyz[0], xyz[2] * xyz[1].conj()),
            tuple(random_octonion(cfg, rng) for _ in range(3))))
    yield "alternative-laws", lambda: _sweep(
        500, lambda: _expect(
            lambda xy: xy[0] * (xy[0] * xy[1]) == (xy[0] * xy[0]) * xy[1]
            and (xy[1] * xy[0]) * xy[0] == xy[1] * (xy[0] * xy[0]),
            (random_octonion(cfg, rng), random_octonion(cfg, rng))))
    yield "doubling-chains", lambda: _doubling_chains(cfg)
    yield "idempotent-identities", lambda: _idempotent_sweep(cfg, rng, 100)
    yield "split-polarization", lambda: _polarization_check(cfg)


def _doubling_chains(cfg):
    e = lambda l: basis_octonion(cfg, l)
    chains = [
        (e(1) + e(-1), e(2) + e(-2), e(3) - e(-3)),
        (e(2) + e(-2), e(3) + e(-3), e(1) - e(-1)),
        (e(1) + e(-1).scale(cfg.t(2)), e(2) + e(-2), e(-3) - e(3).scale(cfg.t(2))),
    ]
    for chain in chains:
        d = center_subalgebra(cfg)
        for a in chain:
            d = double(d, a)  # verifies the product rule entrywise
        if d.dim != 8 or not d.is_composition():
            return f"chain {chain} did not rebuild the full algebra"
    return None


def _idempotent_sweep(cfg, rng, count):
    unit = octonion_unit(cfg)
    one = cfg.one()
    for _ in range(count):
        h, hp = random_isotropic_pair(cfg, rng)
        ep, em, c = idempotents_from_isotropic_pair(h, hp)
        lam = cfg.random(rng, width=1, vmin=-1, vmax=1, nonzero=True)
        ep2, em2, c2 = idempotents_from_isotropic_pair(
            h.scale(lam), hp.scale(lam.inv()))
        ok = ((h + hp).norm() == one
              and (h - hp).norm() == -one
              and (h + hp) * (h - hp) == hp * h - h * hp
              and -(hp * h) - h * hp == unit
              and ep * ep == ep and em * em == em
              and (ep * em).is_zero
              and c * h == h and c * hp == -hp
              and (ep2, em2, c2) == (ep, em, c))
        if not ok:
            return f"identity failed at pair ({h!r}, {hp!r})"
    return None


def _polarization_check(cfg):
    d = hyperbolic_plane(cfg)
    wplus, wminus = split_polarization(d)
    wp = [Octonion(cfg, r) for r in wplus.rows]
    for x in wp:
        for y in wp:
            if not bilinear_f(x, y).is_zero:
                return "W+ is not totally isotropic"
            if not wminus.contains((x * y).coords):
                return "W+ . W+ does not drop into W-"
    return None


# -- triality suite ---------------------------------------------------------------

def _triality_checks(cfg, rng):
    yield "root-triples", lambda: _root_triples(cfg)
    yield "diagonal-triples", lambda: _diag_triples(cfg)
    yield "glw-family", lambda: _glw_family(cfg)
    yield "dim4-family", lambda: _dim4_family(cfg)
    yield "dim2-family", lambda: _dim2_family(cfg)
    yield "orbit-triples", lambda: _orbits(cfg)
    yield "fixed-point-consistency", lambda: _fixed_points(cfg, rng, 200)
    yield "product-decomposition", lambda: _barwedge(cfg, rng, 200)


def _root_triples(cfg):
    lam = cfg.t()
    for (i, j) in _all_root_pairs():
        for lie in (False, True):
            tri = root_triple(cfg, i, j, lam, lie=lie)
            if not check_related(tri.t1, tri.t2, tri.t3, lie):
                return f"root triple ({i},{j}) lie={lie}"
    return None


def _diag_triples(cfg):
    for i in (1, 2, 3, 4):
        tri = diag_lie_triple(cfg, i, cfg.t())
        if not check_related(tri.t1, tri.t2, tri.t3, lie=True):
            return f"diagonal triple {i}"
    return None


def _glw_family(cfg):
    from .octonions import sqrt_scalar
    u = cfg.one() + cfg.t()
    g = [[cfg.from_int(4), cfg.zero(), cfg.zero()],
         [cfg.zero(), cfg.one(), cfg.zero()],
         [cfg.zero(), cfg.zero(), cfg.one()]]
    lam = sqrt_scalar(u * cfg.from_int(4))
    for w in (lam, -lam):
        solve_glw(cfg, u, g, w)
    return None


def _dim4_family(cfg):
    d4 = standard_split_dim4(cfg)
    e = lambda l: basis_octonion(cfg, l)
    a = e(2) + e(-2)
    one = octonion_unit(cfg)
    two = cfg.from_int(2)
    u1 = e(-4).scale(two) + e(4).scale(two.inv())      # Q(u1) = 1
    u2 = e(-4).scale(cfg.from_int(4)) + e(4).scale(cfg.from_int(4))
    solve_dim4(d4, a, one, u1, one, u1, cfg.one())
    solve_dim4(d4, a, one, u2, one, one, cfg.from_int(4))
    solve_dim4(d4, a, one, u2, one, one, -cfg.from_int(4))
    return None


def _dim2_family(cfg):
    d = anisotropic_plane(cfg)
    from .endo import special_hermitian_basis
    wm, w0, wp = special_hermitian_basis(d)
    one = octonion_unit(cfg)
    z = Octonion(cfg, [cfg.zero()] * 8)
    ident3 = [[one if i == j else z for j in range(3)] for i in range(3)]
    c = d.traceless_generator()
    mu = None
    for x in range(cfg.p):
        for y in range(1, cfg.p):
            cand = one.scale(cfg.from_int(x)) + c.scale(cfg.from_int(y))
            if cand.norm() == cfg.one():
                mu = cand
                break
        if mu is not None:
            break
    solve_dim2(d, [wm, w0, wp], one, ident3, one)
    solve_dim2(d, [wm, w0, wp], mu * mu, ident3, mu)
    return None


def _orbits(cfg):
    tri = root_triple(cfg, -1, -3, cfg.t())
    if len(orbit_triples(tri)) != 6:
        return "orbit size"
    tri_l = root_triple(cfg, -1, -3, cfg.t(), lie=True)
    orbit_triples(tri_l)
    return None


def _fixed_points(cfg, rng, count):
    for k in range(count):
        if k % 2 == 0:
            x = random_g2_lie(cfg, rng, width=1, vmin=0, vmax=1)
        else:
            x = random_so(cfg, rng, width=1, vmin=0, vmax=1)
        tri = solve_lie_triple(x)
        diag = tri.t2 == x and tri.t3 == x
        if diag != is_derivation(x):
            return f"fixed-point mismatch at sample {k}"
    return None


def _barwedge(cfg, rng, count):
    d = anisotropic_plane(cfg)
    model = HermitianModel(d)
    one = octonion_unit(cfg)
    c = d.traceless_generator()

    def rand_v0():
        return (one.scale(cfg.random(rng, width=1, vmin=0, vmax=0))
                + c.scale(cfg.random(rng, width=1, vmin=0, vmax=0)))

    def rand_w():
        out = Octonion(cfg, [cfg.zero()] * 8)
        for bb in model.basis3:
            out = out + rand_v0() * bb
        return out

    for k in range(count):
        v1, v2, w1, w2 = rand_v0(), rand_v0(), rand_w(), rand_w()
        if model.product_via_decomposition(v1, w1, v2, w2) \
                != (v1 + w1) * (v2 + w2):
            return f"product decomposition failed at sample {k}"
    return None


# -- norm suite -------------------------------------------------------------------

def _norm_checks(cfg, rng):
    yield "extend-sl3", lambda: _extend_sl3_fixtures(cfg)
    yield "extend-su21", lambda: _extend_su21_fixtures(cfg)
    yield "extend-dim4", lambda: _extend_dim4_fixtures(cfg)
    yield "duality-involution", lambda: _duality_involution(cfg)
    yield "maximinorante", lambda: _maximinorante(cfg, rng, 500)
    yield "uniqueness-perturbation", lambda: _uniqueness(cfg)
    yield "exponent-identities", lambda: _exponent_identities(cfg)
    yield "filtration-multiplicativity", lambda: _filtration_mult(cfg)


def _extend_sl3_fixtures(cfg):
    d = hyperbolic_plane(cfg)
    for vals in fixtures.sl3_norm_values():
        alpha = fixtures.wplus_norm(cfg, vals)
        ext = extend_sl3(alpha, d)
        if not (is_algebra_norm(ext) and is_self_dual(ext)):
            return f"sl3 extension of {vals}"
        for b, v in zip(alpha.basis, alpha.values):
            if ext.eval(b) != v:
                return f"sl3 restriction of {vals}"
        seq = lattice_seq_from_norm(ext)
        if not seq.is_self_dual():
            return f"sl3 sequence of {vals}"
    return None


def _extend_su21_fixtures(cfg):
    from .endo import special_hermitian_basis
    for plane, e_expected in ((anisotropic_plane(cfg), 1),
                              (ramified_plane(cfg), 2)):
        wm, w0, wp = special_hermitian_basis(plane)
        for a in fixtures.su21_values():
            ah = HermitianNorm(plane, [wm, w0, wp], [-a, 0, a])
            if ah.e != e_expected:
                return "ramification index"
            ext = extend_su21(ah, plane)
            if not (is_algebra_norm(ext) and is_self_dual(ext)):
                return f"su21 extension a={a}, e={e_expected}"
            if ext.eval(wp) != Fraction(a, ah.e):
                return f"su21 restriction a={a}, e={e_expected}"
    return None


def _extend_dim4_fixtures(cfg):
    d4 = standard_split_dim4(cfg)
    e = lambda l: basis_octonion(cfg, l)
    for (ah, ak) in fixtures.dim4_witt_values():
        alpha_w = NormFn(cfg, [e(2), e(-2), e(3), e(-3)], [ah, -ah, ak, -ak])
        ext = extend_dim4(alpha_w, d4)
        if not (is_algebra_norm(ext) and is_self_dual(ext)):
            return f"dim4 extension {ah},{ak}"
    div = division_quaternion(cfg)
    wbasis = div.orthogonal_basis_octonions()
    ortho = []
    for x in wbasis:
        y = x
        for z in ortho:
            y = y - z.scale(bilinear_f(y, z) * (2 * z.norm()).inv())
        if not y.is_zero:
            ortho.append(y)
    alpha_w = NormFn(cfg, ortho,
                     [Fraction(x.norm().valuation, 2) for x in ortho])
    ext = extend_dim4(alpha_w, div)
    if not (is_algebra_norm(ext) and is_self_dual(ext)):
        return "anisotropic dim4 extension"
    return None


def _duality_involution(cfg):
    d = hyperbolic_plane(cfg)
    for vals in fixtures.sl3_norm_values():
        ext = extend_sl3(fixtures.wplus_norm(cfg, vals), d)
        if dual_norm(dual_norm(ext)) != ext or dual_norm(ext) != ext:
            return f"duality at {vals}"
    return None


def _maximinorante(cfg, rng, count):
    d = hyperbolic_plane(cfg)
    alpha = extend_sl3(fixtures.wplus_norm(
        cfg, [Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3)]), d)
    for _ in range(count):
        x = random_octonion(cfg, rng)
        y = random_octonion(cfg, rng)
        fv = bilinear_f(x, y)
        if x.is_zero or y.is_zero or fv.is_zero:
            continue
        if alpha.eval(x) + alpha.eval(y) > fv.valuation:
            return f"maximinorante at {x!r}, {y!r}"
    return None


def _uniqueness(cfg):
    d = hyperbolic_plane(cfg)
    ext = extend_sl3(fixtures.wplus_norm(
        cfg, [Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3)]), d)
    for k in range(len(ext.values)):
        bad_vals = list(ext.values)
        bad_vals[k] += 1
        bad = NormFn(cfg, ext.basis, bad_vals)
        if is_algebra_norm(bad) and is_self_dual(bad):
            return f"perturbation at position {k} accepted"
    return None


def _exponent_identities(cfg):
    d = hyperbolic_plane(cfg)
    e = lambda l: basis_octonion(cfg, l)
    for vals in fixtures.sl3_norm_values():
        ext = extend_sl3(fixtures.wplus_norm(cfg, vals), d)
        if ext.eval(e(4)) != 0 or ext.eval(e(-4)) != 0:
            return f"unit values at {vals}"
        total = Fraction(0)
        for i in (1, 2, 3):
            if ext.eval(e(i)) + ext.eval(e(-i)) != 0:
                return f"pairing values at {vals}"
            total += ext.eval(e(i))
        if total != 0:
            return f"volume values at {vals}"
    return None


def _filtration_mult(cfg):
    d = hyperbolic_plane(cfg)
    ext = extend_sl3(fixtures.wplus_norm(
        cfg, [Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3)]), d)
    seq = lattice_seq_from_norm(ext)
    gens = {k: lie_generators(seq, k) for k in (1, 2)}
    for k1 in (1, 2):
        for k2 in (1, 2):
            target = filtration_lattice(seq, k1 + k2)
            for ga in gens[k1][:10]:
                for gb in gens[k2][:10]:
                    if not target.contains(ga.lie * gb.lie):
                        return f"A_{k1} A_{k2} leaves A_{k1+k2}"
    return None


# -- filtration suite -------------------------------------------------------------

def _filtration_checks(cfg, rng):
    yield "moy-counterexample", lambda: _moy(cfg)
    yield "quotient-congruences", lambda: _quotients(cfg)
    yield "psi-homomorphism", lambda: _psi_hom(cfg, rng)
    yield "psi-equivariance", lambda: _psi_equi(cfg)
    yield "psi-injectivity", lambda: _psi_inj(cfg)
    yield "trace-invariance", lambda: _trace_inv(cfg, rng)
    yield "gamma-perp-exhaustive", lambda: _gamma_exhaustive()
    yield "gamma-perp-random", lambda: _gamma_random(rng)


def _moy(cfg):
    for u in (cfg.t(), cfg.t(2), cfg.t() * 3):
        if not moy_counterexample(u):
            return f"u = {u}"
    return None


def _quotient_seqs(cfg):
    d = hyperbolic_plane(cfg)
    std = lattice_seq_from_norm(standard_norm(cfg))
    thirds = lattice_seq_from_norm(extend_sl3(fixtures.wplus_norm(
        cfg, [Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3)]), d))
    return (std, thirds)


def _quotients(cfg):
    for seq in _quotient_seqs(cfg):
        for (r, s) in ((1, 1), (1, 2), (2, 3), (2, 4)):
            rep = quotient_iso_check(seq, r, s)
            if rep["violations"]:
                return f"m={seq.m} (r,s)=({r},{s}): {rep['violations'][0]}"
    return None


def _psi_hom(cfg, rng):
    seq = lattice_seq_from_norm(standard_norm(cfg))
    r, s = 1, 2
    b = d_torus_lie(cfg, 1, cfg.t(-1)) + u_root_lie(cfg, 1, 2, cfg.t(-1))
    xs = [cayley(g.lie) for g in lie_generators(seq, r)]
    if any(psi_b(seq, s, EndV.zero(cfg), x, r) != 0 for x in xs):
        return "zero element is not the trivial character"
    for _ in range(100):
        x = xs[rng.randrange(len(xs))]
        y = xs[rng.randrange(len(xs))]
        if psi_b(seq, s, b, x * y, r) != (
                psi_b(seq, s, b, x, r) + psi_b(seq, s, b, y, r)) % cfg.p:
            return f"homomorphism at {x!r}, {y!r}"
    return None


def _psi_equi(cfg):
    seq = lattice_seq_from_norm(standard_norm(cfg))
    r, s = 1, 2
    lie_gamma = LieTrialityGroup()
    grp_gamma = GroupTriality(cfg)
    bs = [d_torus_lie(cfg, 1, cfg.t(-1)),
          u_root_lie(cfg, -1, -3, cfg.t(-1)),
          u_root_lie(cfg, 1, -2, cfg.t(-1))]
    gens = lie_generators(seq, r)
    for b in bs:
        for word in LieTrialityGroup.WORDS:
            dnu_b = lie_gamma.apply(word, b)
            winv = grp_gamma.inverse_word(word)
            for g in gens:
                lhs = psi_b(seq, s, dnu_b, g.group.matrix(cfg), r)
                rhs = psi_b(seq, s, b, grp_gamma.apply(winv, g.group), r)
                if lhs != rhs:
                    return f"equivariance at {g.name}, {word}"
    return None


def _psi_inj(cfg):
    seq = lattice_seq_from_norm(standard_norm(cfg))
    r, s = 1, 2
    d1, d2 = character_counts(seq, r, s)
    if d1 != d2:
        return f"dimension count {d1} != {d2}"
    xs = [g.group.matrix(cfg) for g in lie_generators(seq, r)]
    a0 = filtration_lattice(seq, 0)
    for c in range(1, cfg.p):
        for b in (d_torus_lie(cfg, 1, cfg.monomial(c, -1)),
                  u_root_lie(cfg, 1, 2, cfg.monomial(c, -1)),
                  u_root_lie(cfg, 2, -4, cfg.monomial(c, -1))):
            if a0.contains(b):
                return "spanning element fell into A_0"
            if not any(psi_b(seq, s, b, x, r) != 0 for x in xs):
                return f"character of {b!r} is trivial"
    return None


def _trace_inv(cfg, rng):
    pairs = [(d_torus_lie(cfg, 1, cfg.t()), d_torus_lie(cfg, 1, cfg.one())),
             (u_root_lie(cfg, 1, 2, cfg.t()), u_root_lie(cfg, 2, 1, cfg.one())),
             (random_g2_lie(cfg, rng, width=1, vmin=0, vmax=1),
              random_g2_lie(cfg, rng, width=1, vmin=0, vmax=1))]
    for x, y in pairs:
        if not trace_triality_invariance(x, y):
            return "trace pairing moved under triality"
    return None


def _gamma_exhaustive():
    sp = standard_symplectic_swap(5)
    for x in enumerate_subspaces(5, 4):
        if sp.stable(x) and not gamma_perp(sp, x):
            return f"failed at a stable subspace of dim {x.dim}"
    return None


def _gamma_random(rng):
    sp = standard_symplectic_cycle(7)
    for k in range(50):
        x = random_stable_subspace(sp, rng)
        if not gamma_perp(sp, x):
            return f"failed at random stable subspace {k}"
    return None


# -- strata suite -----------------------------------------------------------------

def _strata_checks(cfg, rng):
    yield "corpus-classification", lambda: _corpus(cfg)
    yield "lift-depth", lambda: _lift_depth(cfg)
    yield "lift-roundtrip", lambda: _lift_roundtrip(cfg)
    yield "corrupted-rejection", lambda: _corrupted(cfg)
    yield "refinement-congruence", lambda: _refinement(cfg)


def _corpus(cfg):
    corpus = fixtures.stratum_corpus(cfg)
    if len(corpus) < 12:
        return f"corpus too small: {len(corpus)}"
    for tag, s in corpus:
        rep = validate(s)
        if rep["violations"]:
            return f"{tag}: {rep['violations'][0]}"
        got = classify(s).case_tag
        if got != tag:
            return f"expected {tag}, got {got}"
    return None


def _lift_depth(cfg):
    from .norms import seq_valuation
    for tag, s in fixtures.stratum_corpus(cfg):
        if not s.is_null and seq_valuation(s.seq, s.beta) != -s.n:
            return f"{tag}: depth not -n"
    return None


def _lift_roundtrip(cfg):
    d = hyperbolic_plane(cfg)
    from .strata import lift_type_d_sl3
    data = fixtures.sl3_regular_data(cfg)
    s = lift_type_d_sl3(data, d)
    cl = classify(s)
    bw = cl.restricted["beta_matrix"]
    for i in range(3):
        for j in range(3):
            if bw[i][j] != data.phi[i][j]:
                return "restricted matrix differs from the input"
    return None


def _corrupted(cfg):
    for name, s in fixtures.corrupted_strata(cfg):
        rep = validate(s)
        if not rep["violations"]:
            return f"corruption {name} was not caught"
        if not any(name in v for v in rep["violations"]):
            return f"corruption {name} misreported: {rep['violations']}"
    return None


def _refinement(cfg):
    d = hyperbolic_plane(cfg)
    from .strata import lift_type_d_sl3, SL3StratumData
    r = 0
    data = fixtures.sl3_regular_data(cfg, r=r)
    pert = cfg.one()
    phi2 = [row[:] for row in data.phi]
    phi2[0][0] = phi2[0][0] + pert
    phi2[2][2] = phi2[2][2] - pert
    e = lambda l: basis_octonion(cfg, l)
    data2 = SL3StratumData(data.alpha_plus, 1, r, phi2,
                           [([-phi2[0][0], 1], [e(1)]),
                            ([-phi2[1][1], 1], [e(2)]),
                            ([-phi2[2][2], 1], [e(3)])])
    s1 = lift_type_d_sl3(data, d)
    s2 = lift_type_d_sl3(data2, d)
    if not filtration_lattice(s1.seq, -(r + 1)).contains(s1.beta - s2.beta):
        return "lift broke the congruence"
    return None


# -- runner -----------------------------------------------------------------------

def _sweep(count, one):
    for k in range(count):
        bad = one()
        if bad is not None:
            return f"sample {k}: {bad}"
    return None


def _expect(pred, value):
    try:
        return None if pred(value) else repr(value)
    except G2KitError as exc:
        return f"{exc} at {value!r}"


_SUITES = {
    "octonion": _octonion_checks,
    "triality": _triality_checks,
    "norms": _norm_checks,
    "filtration": _filtration_checks,
    "strata": _strata_checks,
}


def run_suite(name: str, cfg: FieldConfig, seed: int) -> dict:
    """Run one suite; the report is deterministic for a given (cfg, seed)
    up to the wall-time field."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}")
    rng = random.Random(seed)
    checks = []
    start = time.monotonic()
    for check_name, thunk in _SUITES[name](cfg, rng):
        entry = {"name": check_name, "status": "pass"}
        try:
            counterexample = thunk()
        except PrecisionError as exc:
            entry["status"] = "precision-exhausted"
            entry["counterexample"] = str(exc)
        except (G2KitError, ZeroDivisionError) as exc:
            counterexample = f"{type(exc).__name__}: {exc}"
            entry["status"] = "fail"
            entry["counterexample"] = counterexample
        else:
            if counterexample is not None:
                entry["status"] = "fail"
                entry["counterexample"] = counterexample
        checks.append(entry)
    return {
        "schema": "g2kit-report/1",
        "suite": name,
        "config": {"p": cfg.p, "precision": cfg.precision, "seed": seed},
        "checks": checks,
        "wall_time": round(time.monotonic() - start, 3),
    }


def run_all(cfg: FieldConfig, seed: int):
    """All suites, merged in the fixed suite order."""
    return [run_suite(name, cfg, seed) for name in SUITE_NAMES]
