"""Tests for related triples: root/diagonal families, GLW, the dim-4 and
anisotropic dim-2 stabilizer families, orbits and fixed points."""

import random

import pytest

from g2kit.endo import (EndV, d_torus, is_derivation, is_isometry, random_so,
                        so_basis_labels, d_torus_lie, u_root, u_root_lie,
                        special_hermitian_basis)
from g2kit.errors import TripleError, WitnessError
from g2kit.linalg import Subspace
from g2kit.octonions import (Octonion, anisotropic_plane, basis_octonion,
                             octonion_unit, sqrt_scalar, standard_split_dim4)
from g2kit.scalars import FieldConfig
from g2kit.triality import (GroupGenerator, GroupTriality, HermitianModel,
                            LieTrialityGroup, TrialityTriple, check_related,
                            diag_lie_triple, hat, iota, is_g2_element,
                            is_g2_lie, orbit_triples, random_g2_lie,
                            root_family_triple, root_triple, solve_dim2,
                            solve_dim4, solve_glw, solve_lie_triple)

CFG = FieldConfig(5, 8)
E = {lbl: basis_octonion(CFG, lbl) for lbl in (-4, -1, -2, -3, 3, 2, 1, 4)}
ONE = octonion_unit(CFG)
IDENT = EndV.identity(CFG)


def all_root_pairs():
    for i in (-4, -1, -2, -3, 3, 2, 1, 4):
        for j in (-4, -1, -2, -3, 3, 2, 1, 4):
            if i != j and i != -j:
                yield i, j


def test_hat_identity_and_involution():
    assert hat(IDENT) == IDENT
    rng = random.Random(41)
    for _ in range(100):
        t = random_so(CFG, rng, width=1, vmin=0, vmax=1)
        assert hat(hat(t)) == t


def test_hat_swaps_diagonal_weights():
    g = iota(CFG, CFG.one() + CFG.t(), [[CFG.one() if i == j else CFG.zero()
                                         for j in range(3)] for i in range(3)])
    h = hat(g)
    assert h.entry(4, 4) == (CFG.one() + CFG.t()).inv()
    assert h.entry(-4, -4) == CFG.one() + CFG.t()


def test_check_related_trivial_cases():
    assert check_related(IDENT, IDENT, IDENT)
    assert check_related(IDENT, -IDENT, -IDENT)
    assert not check_related(IDENT, IDENT, -IDENT)


def test_all_root_triples_related():
    lam = CFG.t()
    for (i, j) in all_root_pairs():
        for lie in (False, True):
            tri = root_triple(CFG, i, j, lam, lie=lie)
            assert check_related(tri.t1, tri.t2, tri.t3, lie)


def test_root_family_triples_all_six_patterns():
    lam = CFG.t()
    for i in (1, 2, 3):
        for negative in (False, True):
            for lie in (False, True):
                tri = root_family_triple(CFG, i, negative, lam, lie=lie)
                assert check_related(tri.t1, tri.t2, tri.t3, lie)


def test_group_triples_are_special_isometries():
    from g2kit.linalg import det
    lam = CFG.t()
    one = CFG.one()
    samples = [root_triple(CFG, -1, -3, lam),
               root_triple(CFG, 4, 2, lam),
               solve_glw(CFG, one, [[4, 0, 0], [0, 1, 0], [0, 0, 1]],
                         CFG.from_int(2))]
    for tri in samples:
        for t in (tri.t1, tri.t2, tri.t3):
            assert is_isometry(t)
            assert det(t.rows) == one


def test_mixed_sign_roots_fixed():
    lam = CFG.t()
    tri = root_triple(CFG, 1, -2, lam)
    assert tri.t1 == tri.t2 == tri.t3
    assert is_g2_element(tri.t1)


def test_spec_root_triple_example():
    # the (1,2,3)-pattern triple at lam = t
    lam = CFG.t()
    tri = root_triple(CFG, -1, -3, lam)
    assert tri.t1 == u_root(CFG, -1, -3, lam)
    assert tri.t2 == u_root(CFG, 4, 2, lam)
    assert tri.t3 == u_root(CFG, 2, -4, lam)


def test_diag_lie_triples():
    s = CFG.t()
    half = s * CFG.from_int(2).inv()
    for i in (1, 2, 3, 4):
        tri = diag_lie_triple(CFG, i, s)
        assert check_related(tri.t1, tri.t2, tri.t3, lie=True)
    tri4 = diag_lie_triple(CFG, 4, s)
    expect_t3 = EndV.zero(CFG)
    for k in (1, 2, 3, 4):
        expect_t3 = expect_t3 + d_torus_lie(CFG, k, half)
    assert tri4.t3 == expect_t3


def test_orbit_triples():
    lam = CFG.t()
    tri = root_triple(CFG, -1, -3, lam)
    orb = orbit_triples(tri)
    assert len(orb) == 6
    for t in orb:
        assert check_related(t.t1, t.t2, t.t3)
    tri_l = root_triple(CFG, -1, -3, lam, lie=True)
    for t in orbit_triples(tri_l):
        assert check_related(t.t1, t.t2, t.t3, lie=True)
    # order-3 move applied three times returns the original triple
    def order3(t):
        return TrialityTriple(hat(t.t2), t.t3, hat(t.t1), t.lie)
    assert order3(order3(order3(tri))) == tri


def test_orbit_of_identity():
    for t in orbit_triples(TrialityTriple(IDENT, IDENT, IDENT)):
        assert t.t1 == IDENT and t.t2 == IDENT and t.t3 == IDENT


def test_orbit_requires_related():
    with pytest.raises(TripleError):
        TrialityTriple(IDENT, IDENT, -IDENT)


def test_solve_glw():
    tri = solve_glw(CFG, CFG.one(), [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                    CFG.one())
    assert tri.t1 == IDENT and tri.t2 == IDENT and tri.t3 == IDENT
    # u = 1, g = diag(a, a^{-1}, 1): in the GL(W+) stabilizer
    a = CFG.one() + CFG.t()
    g = [[a, CFG.zero(), CFG.zero()],
         [CFG.zero(), a.inv(), CFG.zero()],
         [CFG.zero(), CFG.zero(), CFG.one()]]
    tri2 = solve_glw(CFG, CFG.one(), g, CFG.one())
    assert is_isometry(tri2.t1)
    # two witnesses +-lam give two distinct solutions
    u = CFG.one() + CFG.t()
    g2 = [[4, 0, 0], [0, 1, 0], [0, 0, 1]]
    lam = sqrt_scalar(u * CFG.from_int(4))
    s1 = solve_glw(CFG, u, g2, lam)
    s2 = solve_glw(CFG, u, g2, -lam)
    assert s1.t2 != s2.t2


def test_solve_glw_rejects_bad_witness():
    with pytest.raises(WitnessError):
        solve_glw(CFG, CFG.t(), [[1, 0, 0], [0, 1, 0], [0, 0, 1]], CFG.one())


def test_glw_nonsquare_has_no_integer_witness():
    # u det g = 2 is not a square mod 5: any scalar witness must fail
    with pytest.raises(WitnessError):
        solve_glw(CFG, CFG.from_int(2), [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                  CFG.one())


def test_solve_dim4():
    d4 = standard_split_dim4(CFG)
    a = E[2] + E[-2]
    u1 = E[-4].scale(CFG.from_int(2)) + E[4].scale(CFG.from_int(3))
    tri = solve_dim4(d4, a, ONE, u1, ONE, u1, CFG.one())
    assert tri.t1 == tri.t2 == tri.t3
    assert is_g2_element(tri.t1)
    u2 = E[-4].scale(CFG.from_int(4)) + E[4].scale(CFG.from_int(4))
    tri2 = solve_dim4(d4, a, ONE, u2, ONE, ONE, CFG.one())
    tri3 = solve_dim4(d4, a, ONE, u2, ONE, ONE, -CFG.one())
    assert tri2.t2 != tri3.t2
    with pytest.raises(WitnessError):
        solve_dim4(d4, a, ONE, u2, ONE, ONE, CFG.from_int(2))


def norm_one_elements(d):
    c = d.traceless_generator()
    out = []
    for x in range(CFG.p):
        for y in range(CFG.p):
            el = (octonion_unit(CFG).scale(CFG.from_int(x))
                  + c.scale(CFG.from_int(y)))
            if el.norm() == CFG.one():
                out.append(el)
    return out


def test_solve_dim2():
    d = anisotropic_plane(CFG)
    wm, w0, wp = special_hermitian_basis(d)
    wbasis = [wm, w0, wp]
    z = Octonion(CFG, [CFG.zero()] * 8)
    ident3 = [[ONE if i == j else z for j in range(3)] for i in range(3)]
    tri = solve_dim2(d, wbasis, ONE, ident3, ONE)
    assert tri.t1 == tri.t2 == tri.t3
    mu = [el for el in norm_one_elements(d) if el != ONE and el != -ONE][0]
    tri2 = solve_dim2(d, wbasis, mu * mu, ident3, mu)
    # t2: v0 + w -> mu v0 + mu w
    c = d.traceless_generator()
    assert tri2.t2.apply(c) == mu * c
    assert tri2.t2.apply(wm) == mu * wm
    with pytest.raises(WitnessError):
        solve_dim2(d, wbasis, mu * mu, ident3, ONE)
    # the two witnesses +-xi give the two distinct solutions
    tri_p = solve_dim2(d, wbasis, mu * mu, ident3, mu)
    tri_m = solve_dim2(d, wbasis, mu * mu, ident3, -mu)
    assert tri_p.t2 != tri_m.t2


def test_barwedge_product_formula():
    d = anisotropic_plane(CFG)
    model = HermitianModel(d)
    rng = random.Random(42)
    one = octonion_unit(CFG)
    c = d.traceless_generator()

    def rand_w():
        out = Octonion(CFG, [CFG.zero()] * 8)
        for bb in model.basis3:
            lam = (one.scale(CFG.random(rng, width=1, vmin=0, vmax=0))
                   + c.scale(CFG.random(rng, width=1, vmin=0, vmax=0)))
            out = out + lam * bb
        return out

    def rand_v0():
        return (one.scale(CFG.random(rng, width=1, vmin=0, vmax=0))
                + c.scale(CFG.random(rng, width=1, vmin=0, vmax=0)))

    for _ in range(200):
        v1, v2, w1, w2 = rand_v0(), rand_v0(), rand_w(), rand_w()
        assert model.product_via_decomposition(v1, w1, v2, w2) \
            == (v1 + w1) * (v2 + w2)
    # right-module bilinearity of the wedge
    w1, w2, lam, lamp = rand_w(), rand_w(), rand_v0(), rand_v0()
    assert model.bar_wedge(w1 * lam, w2 * lamp) \
        == (lam * lamp) * model.bar_wedge(w1, w2)


def test_is_g2_element_families():
    # iota(1, g) with det g = 1
    a = CFG.one() + CFG.t()
    g = [[a, CFG.zero(), CFG.zero()],
         [CFG.zero(), a.inv(), CFG.zero()],
         [CFG.zero(), CFG.zero(), CFG.one()]]
    assert is_g2_element(iota(CFG, CFG.one(), g))
    assert is_g2_element(u_root(CFG, 1, -2, CFG.t()))
    # d_1(lam) d_2(lam^{-1}) is an automorphism; d_1(lam) alone is not
    lam = CFG.from_int(2)
    assert is_g2_element(d_torus(CFG, 1, lam) * d_torus(CFG, 2, lam.inv()))
    assert not is_g2_element(d_torus(CFG, 1, lam))


def test_lie_solver_fixed_point_consistency():
    rng = random.Random(43)
    for _ in range(100):
        x = random_so(CFG, rng, width=1, vmin=0, vmax=1)
        tri = solve_lie_triple(x)
        assert check_related(tri.t1, tri.t2, tri.t3, lie=True)
        assert (tri.t2 == x and tri.t3 == x) == is_g2_lie(x)
    for _ in range(100):
        y = random_g2_lie(CFG, rng, width=1, vmin=0, vmax=1)
        tri = solve_lie_triple(y)
        assert tri.t2 == y and tri.t3 == y


def test_gamma_group_relations_and_average():
    G = LieTrialityGroup()
    rng = random.Random(44)
    x = random_so(CFG, rng, width=1, vmin=0, vmax=1)
    assert G.apply("rho", G.apply("rho", G.apply("rho", x))) == x
    assert G.apply("sigma", G.apply("sigma", x)) == x
    avg = G.average(x)
    assert is_derivation(avg)
    assert G.average(avg) == avg


def test_g2_dimension_is_14():
    G = LieTrialityGroup()
    diag, roots = so_basis_labels()
    one = CFG.one()
    vecs = []
    for i in diag:
        m = G.average(d_torus_lie(CFG, i, one))
        vecs.append([x for row in m.rows for x in row])
    for (i, j) in roots:
        m = G.average(u_root_lie(CFG, i, j, one))
        vecs.append([x for row in m.rows for x in row])
    assert Subspace(CFG, 64, vecs).dim == 14


def test_group_triality_on_generators():
    GT = GroupTriality(CFG)
    gen = GroupGenerator.root(4, 2, CFG.t())
    tor = GroupGenerator.torus(CFG.one() + CFG.t(), CFG.one() + CFG.t(2),
                               CFG.one(), CFG.one())
    for g in (gen, tor):
        for w in ("sigma", "rho", "rho2", "sigma_rho", "sigma_rho2"):
            assert is_isometry(GT.apply(w, g))
        r3 = GT._apply_desc("rho", GT._apply_desc("rho",
                                                  GT._apply_desc("rho", g)))
        assert r3.matrix(CFG) == g.matrix(CFG)


def test_triple_json():
    tri = root_triple(CFG, -1, -3, CFG.t())
    data = tri.to_json()
    assert set(data) == {"t1", "t2", "t3", "lie"}
    assert data["lie"] is False
