"""Related triples t1(xy) = t2(x)t3(y) (and the Lie version
t1(xy) = t2(x)y + x t3(y)) for every family where the solution has a
closed form: root subgroups, the diagonal torus, the stabilizer of a
polarization (GLW), and the stabilizers of dim-4 and anisotropic dim-2
composition subalgebras.  Fixed points are the automorphism group and
its Lie algebra of derivations.
"""

from __future__ import annotations

from functools import lru_cache

from .endo import (EndV, d_torus_lie, is_algebra_automorphism,
                   is_derivation, so_decompose, u_root, u_root_lie)
from .errors import DomainError, KindError, TripleError, WitnessError
from .linalg import det, inv, mat_mul, mat_vec, solve, transpose
from .octonions import (CONJ_MAT, LABELS, CompositionSubalgebra, Octonion,
                        basis_octonion, octonion_unit)
from .scalars import FieldConfig, Scalar


class TrialityTriple:
    """A triple of isometries (or so(V) elements when lie=True) satisfying
    the triality identity on all basis pairs."""

    __slots__ = ("t1", "t2", "t3", "lie")

    def __init__(self, t1: EndV, t2: EndV, t3: EndV, lie: bool = False,
                 checked: bool = False):
        self.t1, self.t2, self.t3, self.lie = t1, t2, t3, lie
        if not checked and not check_related(t1, t2, t3, lie):
            raise TripleError("triple does not satisfy the triality identity")

    def __iter__(self):
        return iter((self.t1, self.t2, self.t3))

    def __eq__(self, other):
        if not isinstance(other, TrialityTriple):
            return NotImplemented
        return (self.lie == other.lie and self.t1 == other.t1
                and self.t2 == other.t2 and self.t3 == other.t3)

    def __repr__(self):
        return f"TrialityTriple(lie={self.lie})"

    def to_json(self):
        return {"t1": self.t1.to_json(), "t2": self.t2.to_json(),
                "t3": self.t3.to_json(), "lie": self.lie}


def hat(t: EndV) -> EndV:
    """x -> conj(t(conj(x))); involutive, preserves so(V) and SO(V)."""
    cfg = t.cfg
    c = [[cfg.from_int(CONJ_MAT[i][j]) for j in range(8)] for i in range(8)]
    return EndV(cfg, mat_mul(c, mat_mul(t.rows, c)))


def check_related(t1: EndV, t2: EndV, t3: EndV, lie: bool = False) -> bool:
    """Exact verification of the triality identity on all 64 basis pairs."""
    cfg = t1.cfg
    e = [basis_octonion(cfg, lbl) for lbl in LABELS]
    t2e = [t2.apply(v) for v in e]
    t3e = [t3.apply(v) for v in e]
    for i in range(8):
        for j in range(8):
            lhs = t1.apply(e[i] * e[j])
            if lie:
                rhs = t2e[i] * e[j] + e[i] * t3e[j]
            else:
                rhs = t2e[i] * t3e[j]
            if lhs != rhs:
                return False
    return True


def orbit_triples(triple: TrialityTriple):
    """The six related triples generated by the order-2 and order-3 moves."""
    t1, t2, t3 = triple
    lie = triple.lie
    h = hat
    combos = [
        (t1, t2, t3),
        (t2, t1, h(t3)),
        (t3, h(t2), t1),
        (h(t1), h(t3), h(t2)),
        (h(t2), t3, h(t1)),
        (h(t3), h(t1), t2),
    ]
    return [TrialityTriple(a, b, c, lie) for a, b, c in combos]


# -- root-group and diagonal families -----------------------------------------

_NEXT = {1: 2, 2: 3, 3: 1}
_PREV = {1: 3, 2: 1, 3: 2}


def _root_triple_descriptors(i: int, j: int):
    """Component descriptors [(i,j,sign), ...] of the related triple headed
    by u_{i,j}(lam); mixed-sign pairs inside +-{1,2,3} are triality-fixed."""
    if i == j or i == -j or i == 0 or j == 0:
        raise DomainError("bad root indices")
    small = {1, 2, 3}
    if abs(i) in small and abs(j) in small:
        if (i > 0) != (j > 0):
            return [(i, j, 1), (i, j, 1), (i, j, 1)]
        if i < 0:
            k = -i
            if -j == _PREV[k]:
                return [(i, j, 1), (4, _NEXT[k], 1), (_NEXT[k], -4, 1)]
            return [(a, b, -s)
                    for (a, b, s) in _root_triple_descriptors(j, i)]
        k = i
        if j == _PREV[k]:
            return [(i, j, 1), (-4, -_NEXT[k], 1), (-_NEXT[k], 4, 1)]
        return [(a, b, -s) for (a, b, s) in _root_triple_descriptors(j, i)]
    if i == 4 and j > 0:
        return [(4, j, 1), (-_PREV[j], -_NEXT[j], 1), (4, j, 1)]
    if j == -4 and i > 0:
        return [(i, -4, 1), (i, -4, 1), (-_PREV[i], -_NEXT[i], 1)]
    if i == -4 and j < 0:
        k = -j
        return [(-4, j, 1), (_PREV[k], _NEXT[k], 1), (-4, j, 1)]
    if j == 4 and i < 0:
        k = -i
        return [(i, 4, 1), (i, 4, 1), (_PREV[k], _NEXT[k], 1)]
    # swapped orientation: u_{i,j}(lam) = u_{j,i}(-lam)
    return [(a, b, -s) for (a, b, s) in _root_triple_descriptors(j, i)]


def root_triple(cfg: FieldConfig, i: int, j: int, lam: Scalar,
                lie: bool = False) -> TrialityTriple:
    """The related triple headed by u_{i,j}(lam) (or U_{i,j}(lam))."""
    mk = u_root_lie if lie else u_root
    parts = _root_triple_descriptors(i, j)
    t1, t2, t3 = (mk(cfg, a, b, lam if s > 0 else -lam) for (a, b, s) in parts)
    return TrialityTriple(t1, t2, t3, lie)


def root_family_triple(cfg: FieldConfig, i: int, negative: bool,
                       lam: Scalar, lie: bool = False) -> TrialityTriple:
    """The two listed root-group families, indexed by the cyclic triple
    (i, i+, i++): heads u_{-i,-i++} (negative) or u_{i,i++}."""
    if i not in (1, 2, 3):
        raise DomainError("family index must be 1..3")
    ipp = _PREV[i]
    if negative:
        return root_triple(cfg, -i, -ipp, lam, lie=lie)
    return root_triple(cfg, i, ipp, lam, lie=lie)


def diag_lie_triple(cfg: FieldConfig, i: int, s: Scalar) -> TrialityTriple:
    """The Lie-related triple headed by D_i(s), i in 1..4."""
    half = s * cfg.from_int(2).inv()
    if i in (1, 2, 3):
        t1 = d_torus_lie(cfg, i, s)
        t2 = d_torus_lie(cfg, i, half)
        for k in (1, 2, 3, 4):
            if k != i:
                t2 = t2 + d_torus_lie(cfg, k, -half)
        t3 = d_torus_lie(cfg, 4, half) + d_torus_lie(cfg, i, half)
        for k in (1, 2, 3):
            if k != i:
                t3 = t3 + d_torus_lie(cfg, k, -half)
    elif i == 4:
        t1 = d_torus_lie(cfg, 4, s)
        t2 = d_torus_lie(cfg, 4, half)
        for k in (1, 2, 3):
            t2 = t2 + d_torus_lie(cfg, k, -half)
        t3 = EndV.zero(cfg)
        for k in (1, 2, 3, 4):
            t3 = t3 + d_torus_lie(cfg, k, half)
    else:
        raise DomainError("diagonal index must be 1..4")
    return TrialityTriple(t1, t2, t3, lie=True)


# -- the polarization-stabilizer family (GLW) ----------------------------------

def iota(cfg: FieldConfig, u: Scalar, g) -> EndV:
    """The isometry scaling e_-4 by u^{-1}, e_4 by u, acting by g on
    (e_1, e_2, e_3) and by the inverse transpose on (e_-1, e_-2, e_-3)."""
    gi = inv([list(r) for r in g])
    images = {
        -4: basis_octonion(cfg, -4).scale(u.inv()),
        4: basis_octonion(cfg, 4).scale(u),
    }
    for col, j in enumerate((1, 2, 3)):
        img = [cfg.zero()] * 8
        for row, i in enumerate((1, 2, 3)):
            c = g[row][col]
            if not c.is_zero:
                for tdx in range(8):
                    img[tdx] = img[tdx] + c * basis_octonion(cfg, i).coords[tdx]
        images[j] = Octonion(cfg, img)
    for col, j in enumerate((1, 2, 3)):
        img = [cfg.zero()] * 8
        for row, i in enumerate((1, 2, 3)):
            c = gi[col][row]  # (g^T)^{-1}[row][col] = g^{-1}[col][row]
            if not c.is_zero:
                for tdx in range(8):
                    img[tdx] = img[tdx] + c * basis_octonion(cfg, -i).coords[tdx]
        images[-j] = Octonion(cfg, img)
    return EndV.from_action(cfg, images)


def solve_glw(cfg: FieldConfig, u: Scalar, g, lam: Scalar) -> TrialityTriple:
    """Related triple headed by iota(u, g), from a verified square-root
    witness lam^2 = u det(g); the two witnesses +-lam give the
    two solutions."""
    g = [[cfg.from_int(x) if isinstance(x, int) else x for x in row]
         for row in g]
    if lam * lam != u * det(g):
        raise WitnessError("witness does not satisfy lam^2 = u det g")
    li = lam.inv()
    t1 = iota(cfg, u, g)
    t2 = iota(cfg, li * u, [[li * x for x in row] for row in g])
    t3 = iota(cfg, lam, [[u * li * x for x in row] for row in g])
    return TrialityTriple(t1, t2, t3, lie=False)


# -- dim-4 stabilizer family ----------------------------------------------------

def dim4_stabilizer_map(d4: CompositionSubalgebra, a: Octonion,
                        fx, fy) -> EndV:
    """The map v + v'a -> fx(v) + fy(v') a, assembled on the basis."""
    cfg = d4.cfg
    basis_oct = list(d4.basis) + [b * a for b in d4.basis]
    cols = [list(fx(b).coords) for b in d4.basis]
    cols += [list((fy(b) * a).coords) for b in d4.basis]
    b = transpose([list(o.coords) for o in basis_oct])
    c = transpose(cols)
    return EndV(cfg, mat_mul(c, inv(b)))


def solve_dim4(d4: CompositionSubalgebra, a: Octonion, alpha1: Octonion,
               u1: Octonion, delta1: Octonion, v1: Octonion,
               xi: Scalar) -> TrialityTriple:
    """Related triple headed by x + ya -> alpha1 u1 x u1^{-1} + (delta1 v1 y v1^{-1}) a
    with the verified witness xi^2 = Q(u1 / v1)."""
    cfg = d4.cfg
    one = cfg.one()
    for nm, el in (("alpha1", alpha1), ("delta1", delta1)):
        if el.norm() != one or not d4.contains(el):
            raise WitnessError(f"{nm} must be a norm-1 element of D")
    for nm, el in (("u1", u1), ("v1", v1)):
        if el.norm().is_zero or not d4.contains(el):
            raise WitnessError(f"{nm} must be invertible in D")
    ratio = u1 * v1.inv()
    if xi * xi != ratio.norm():
        raise WitnessError("witness does not satisfy xi^2 = Q(u1/v1)")
    u1i, v1i, a1i = u1.inv(), v1.inv(), alpha1.inv()
    xii = xi.inv()

    t1 = dim4_stabilizer_map(
        d4, a,
        lambda x: alpha1 * ((u1 * x) * u1i),
        lambda y: delta1 * ((v1 * y) * v1i))
    t2 = dim4_stabilizer_map(
        d4, a,
        lambda x: (alpha1 * ((u1 * x) * v1i)).scale(xii),
        lambda y: (delta1 * ((v1 * y) * u1i)).scale(xi))
    t3 = dim4_stabilizer_map(
        d4, a,
        lambda x: ((v1 * x) * u1i).scale(xi),
        lambda y: (((delta1 * ((v1 * y) * u1i)) * a1i)).scale(xi))
    return TrialityTriple(t1, t2, t3, lie=False)


# -- anisotropic dim-2 stabilizer family ----------------------------------------

def hermitian_gram3(d, wbasis):
    from .endo import hermitian_form
    return [[hermitian_form(d, x, y) for y in wbasis] for x in wbasis]


def dim2_stabilizer_map(d: CompositionSubalgebra, wbasis, lam: Octonion,
                        g) -> EndV:
    """The map v0 + w -> lam v0 + g w for g a D-matrix on wbasis."""
    cfg = d.cfg
    c = d.traceless_generator()
    basis_oct = list(d.basis)
    cols = [list((lam * b).coords) for b in d.basis]
    for j, w in enumerate(wbasis):
        img = Octonion(cfg, [cfg.zero()] * 8)
        for i in range(3):
            if not g[i][j].is_zero:
                img = img + g[i][j] * wbasis[i]
        basis_oct.append(w)
        cols.append(list(img.coords))
        basis_oct.append(c * w)
        cols.append(list((c * img).coords))
    b = transpose([list(o.coords) for o in basis_oct])
    cm = transpose(cols)
    return EndV(cfg, mat_mul(cm, inv(b)))


def det_d(d: CompositionSubalgebra, g) -> Octonion:
    """3x3 determinant with entries in the commutative algebra D."""
    t1 = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
    t2 = g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
    t3 = g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])
    return t1 - t2 + t3


def solve_dim2(d: CompositionSubalgebra, wbasis, lam1: Octonion, g1,
               xi: Octonion) -> TrialityTriple:
    """Related triple headed by v0 + w -> lam1 v0 + g1 w over an
    anisotropic plane D, with the verified witness Q(xi) = 1,
    xi^2 = lam1 conj(det_D(g1))."""
    cfg = d.cfg
    if d.kind != "field-dim2":
        raise KindError("this family needs an anisotropic plane")
    one = cfg.one()
    if lam1.norm() != one or not d.contains(lam1):
        raise WitnessError("lam1 must be a norm-1 element of D")
    if xi.norm() != one or not d.contains(xi):
        raise WitnessError("xi must be a norm-1 element of D")
    h = hermitian_gram3(d, wbasis)
    for i in range(3):
        for j in range(3):
            acc = Octonion(cfg, [cfg.zero()] * 8)
            for k in range(3):
                for l in range(3):
                    acc = acc + g1[k][i] * (h[k][l] * g1[l][j].conj())
            if acc != h[i][j]:
                raise WitnessError("g1 does not preserve the hermitian form")
    if xi * xi != lam1 * det_d(d, g1).conj():
        raise WitnessError("witness does not satisfy xi^2 = lam1 conj(det g1)")
    xii = xi.inv()
    t1 = dim2_stabilizer_map(d, wbasis, lam1, g1)
    g_xi = [[xi * g1[i][j] for j in range(3)] for i in range(3)]
    g_xil = [[(xi * lam1.conj()) * g1[i][j] for j in range(3)] for i in range(3)]
    t2 = dim2_stabilizer_map(d, wbasis, xii * lam1, g_xi)
    t3 = dim2_stabilizer_map(d, wbasis, xi, g_xil)
    return TrialityTriple(t1, t2, t3, lie=False)


# -- the hermitian product decomposition (bar-wedge) ------------------------------

class HermitianModel:
    """The product decomposition of V over an anisotropic plane D:
    (v0 + w)(v0' + w') = [v0 v0' - Phi(w, w')] + [v0 w' + w v0' + w /\\ w']
    with the wedge normalized on an orthogonal D-basis {a, b, ab} of W
    by a ^ b ^ ab = Q(ab)."""

    def __init__(self, d: CompositionSubalgebra):
        if d.kind != "field-dim2":
            raise KindError("hermitian model needs an anisotropic plane")
        self.d = d
        self.cfg = d.cfg
        self.c = d.traceless_generator()
        self.unit = octonion_unit(self.cfg)
        woct = d.orthogonal_basis_octonions()
        a = self._first_anisotropic(woct)
        rest = self._perp_of(list(d.basis) + [a, self.c * a])
        b = self._first_anisotropic(rest)
        self.basis3 = [a, b, a * b]
        self.qab = (a * b).norm()
        self.fbasis = []
        for x in self.basis3:
            self.fbasis.append(x)
            self.fbasis.append(self.c * x)
        cols = []
        for bb in self.basis3:
            cols.append(list(bb.coords))
            cols.append(list((self.c * bb).coords))
        coord_mat = transpose(cols)  # 8 x 6, rank 6
        from .linalg import Subspace as _CSub
        kept, kept_idx = [], []
        for i, row in enumerate(coord_mat):
            cand = _CSub(self.cfg, 6, kept + [row])
            if cand.dim > len(kept):
                kept.append(row)
                kept_idx.append(i)
            if len(kept) == 6:
                break
        self._coord_rows = kept_idx
        self._coord_inv = inv(kept)
        from .endo import hermitian_form
        amat = []
        for z in self.fbasis:
            row1, rowc = [], []
            for bb in self.fbasis:
                co = self.d.coordinates(hermitian_form(self.d, z, bb))
                row1.append(co[0])
                rowc.append(co[1])
            amat.append(row1)
            amat.append(rowc)
        # the 12 x 6 pairing system has rank 6: keep 6 independent rows
        from .linalg import Subspace as _Sub
        rows_kept, idx_kept = [], []
        for i, row in enumerate(amat):
            cand = _Sub(self.cfg, 6, rows_kept + [row])
            if cand.dim > len(rows_kept):
                rows_kept.append(row)
                idx_kept.append(i)
            if len(rows_kept) == 6:
                break
        self._phi_rows = idx_kept
        self._phi_inv = inv(rows_kept)

    def _first_anisotropic(self, vs):
        for cand in vs + [x + y for x in vs for y in vs if x != y]:
            if not cand.is_zero and not cand.norm().is_zero:
                return cand
        raise DomainError("no anisotropic vector found")

    def _perp_of(self, vs):
        from .linalg import Subspace
        from .octonions import gram_scalar
        sp = Subspace(self.cfg, 8, [v.coords for v in vs])
        return [Octonion(self.cfg, r) for r in
                sp.perp(gram_scalar(self.cfg)).rows]

    def d_coordinates(self, w: Octonion):
        """Left-multiplication D-coordinates of w in the basis {a, b, ab}."""
        co = mat_vec(self._coord_inv, [w.coords[i] for i in self._coord_rows])
        return [self.unit.scale(co[2 * k]) + self.c.scale(co[2 * k + 1])
                for k in range(3)]

    def wedge3(self, w1, w2, w3) -> Octonion:
        m = [self.d_coordinates(w) for w in (w1, w2, w3)]
        return det_d(self.d, m).scale(self.qab)

    def bar_wedge(self, w1: Octonion, w2: Octonion) -> Octonion:
        """The unique z with Phi(zeta, z) = w1 ^ w2 ^ zeta for zeta in W."""
        rhs_all = []
        for z in self.fbasis:
            target = self.d.coordinates(self.wedge3(w1, w2, z))
            rhs_all.append(target[0])
            rhs_all.append(target[1])
        co = mat_vec(self._phi_inv, [rhs_all[i] for i in self._phi_rows])
        out = Octonion(self.cfg, [self.cfg.zero()] * 8)
        for cc, bb in zip(co, self.fbasis):
            out = out + bb.scale(cc)
        return out

    def product_via_decomposition(self, v1, w1, v2, w2) -> Octonion:
        """The displayed product formula, for testing against the table."""
        from .endo import hermitian_form
        scalar_part = v1 * v2 - hermitian_form(self.d, w1, w2)
        vector_part = v1 * w2 + w1 * v2 + self.bar_wedge(w1, w2)
        return scalar_part + vector_part


# -- fixed points ----------------------------------------------------------------

def is_g2_element(g: EndV) -> bool:
    """Algebra automorphisms = triality-fixed rotations."""
    return is_algebra_automorphism(g)


def is_g2_lie(x: EndV) -> bool:
    return is_derivation(x)


# -- the linear Lie solver -------------------------------------------------------

@lru_cache(maxsize=8)
def _lie_triple_tables(cfg: FieldConfig):
    """Per-basis-element (t2, t3) matrices at coefficient 1; the triples
    are linear in the coefficient, so these tables determine the solver."""
    one = cfg.one()
    diag = {}
    for i in (1, 2, 3, 4):
        tri = diag_lie_triple(cfg, i, one)
        diag[i] = (tri.t2, tri.t3)
    roots = {}
    from .endo import so_basis_labels
    for (i, j) in so_basis_labels()[1]:
        tri = root_triple(cfg, i, j, one, lie=True)
        roots[(i, j)] = (tri.t2, tri.t3)
    return diag, roots


def solve_lie_triple(x: EndV, checked: bool = False) -> TrialityTriple:
    """The unique Lie-related triple headed by x, for any x in so(V),
    assembled linearly from the generator families."""
    cfg = x.cfg
    diag_tab, root_tab = _lie_triple_tables(cfg)
    dco, rco = so_decompose(x)
    t2 = EndV.zero(cfg)
    t3 = EndV.zero(cfg)
    for i, c in dco.items():
        if c.is_zero:
            continue
        a, b = diag_tab[i]
        t2 = t2 + a * c
        t3 = t3 + b * c
    for (i, j), c in rco.items():
        if c.is_zero:
            continue
        a, b = root_tab[(i, j)]
        t2 = t2 + a * c
        t3 = t3 + b * c
    return TrialityTriple(x, t2, t3, lie=True, checked=checked)


def lie_t2(x: EndV) -> EndV:
    return solve_lie_triple(x, checked=True).t2


class LieTrialityGroup:
    """The six triality automorphisms of so(V): generated by
    sigma: x -> t2(x) (order 2) and rho: x -> hat(t2(x)) (order 3);
    fixed points are exactly the derivations."""

    WORDS = ("id", "rho", "rho2", "sigma", "sigma_rho", "sigma_rho2")

    def apply(self, word: str, x: EndV) -> EndV:
        if word == "id":
            return x
        if word == "rho":
            return hat(lie_t2(x))
        if word == "rho2":
            return self.apply("rho", self.apply("rho", x))
        if word == "sigma":
            return lie_t2(x)
        if word == "sigma_rho":
            return self.apply("sigma", self.apply("rho", x))
        if word == "sigma_rho2":
            return self.apply("sigma", self.apply("rho2", x))
        raise DomainError(f"unknown triality word {word!r}")

    def inverse_word(self, word: str) -> str:
        return {"id": "id", "rho": "rho2", "rho2": "rho", "sigma": "sigma",
                "sigma_rho": "sigma_rho", "sigma_rho2": "sigma_rho2"}[word]

    def average(self, x: EndV) -> EndV:
        """(1/6) sum of the orbit: the projection of so(V) onto the
        derivations."""
        cfg = x.cfg
        acc = EndV.zero(cfg)
        for w in self.WORDS:
            acc = acc + self.apply(w, x)
        return acc * cfg.from_int(6).inv()


def random_g2_lie(cfg: FieldConfig, rng, **kw) -> EndV:
    """Random derivation: the triality average of a random so(V) element."""
    from .endo import random_so
    return LieTrialityGroup().average(random_so(cfg, rng, **kw))


# -- group-level triality on generators ------------------------------------------

class GroupGenerator:
    """Descriptor of a pro-p generator: a root element u_{i,j}(lam) or a
    torus element iota(u, diag(m1, m2, m3))."""

    def __init__(self, kind, data):
        self.kind = kind  # "root" | "torus"
        self.data = data

    @classmethod
    def root(cls, i, j, lam):
        return cls("root", (i, j, lam))

    @classmethod
    def torus(cls, u, m1, m2, m3):
        return cls("torus", (u, m1, m2, m3))

    def matrix(self, cfg) -> EndV:
        if self.kind == "root":
            i, j, lam = self.data
            return u_root(cfg, i, j, lam)
        u, m1, m2, m3 = self.data
        z = cfg.zero()
        g = [[m1, z, z], [z, m2, z], [z, z, m3]]
        return iota(cfg, u, g)


class GroupTriality:
    """The triality action on the generator families of the pro-p
    filtration subgroups; the square-root witnesses are the canonical
    1-unit roots, matching the unique homomorphic section."""

    def __init__(self, cfg: FieldConfig):
        self.cfg = cfg

    def _t2(self, gen: GroupGenerator) -> GroupGenerator:
        cfg = self.cfg
        if gen.kind == "root":
            i, j, lam = gen.data
            (a, b, s) = _root_triple_descriptors(i, j)[1]
            return GroupGenerator.root(a, b, lam if s > 0 else -lam)
        u, m1, m2, m3 = gen.data
        prod = u * m1 * m2 * m3
        lam = prod.sqrt_one_unit()
        li = lam.inv()
        return GroupGenerator.torus(li * u, li * m1, li * m2, li * m3)

    def _hat(self, gen: GroupGenerator) -> GroupGenerator:
        cfg = self.cfg
        if gen.kind == "torus":
            # hat swaps the e_4 / e_-4 weights: iota(u, g) -> iota(u^{-1}, ...)
            m = hat(gen.matrix(cfg))
            return _torus_from_matrix(cfg, m)
        i, j, lam = gen.data
        m = hat(gen.matrix(cfg))
        return _root_from_matrix(cfg, m, i, j, lam)

    def apply(self, word: str, gen: GroupGenerator) -> EndV:
        return self._apply_desc(word, gen).matrix(self.cfg)

    def _apply_desc(self, word: str, gen: GroupGenerator) -> GroupGenerator:
        if word == "id":
            return gen
        if word == "sigma":
            return self._t2(gen)
        if word == "rho":
            return self._hat(self._t2(gen))
        if word == "rho2":
            return self._apply_desc("rho", self._apply_desc("rho", gen))
        if word == "sigma_rho":
            return self._t2(self._apply_desc("rho", gen))
        if word == "sigma_rho2":
            return self._t2(self._apply_desc("rho2", gen))
        raise DomainError(f"unknown triality word {word!r}")

    def inverse_word(self, word: str) -> str:
        return {"id": "id", "rho": "rho2", "rho2": "rho", "sigma": "sigma",
                "sigma_rho": "sigma_rho", "sigma_rho2": "sigma_rho2"}[word]


def _torus_from_matrix(cfg, m: EndV) -> GroupGenerator:
    u = m.entry(4, 4)
    return GroupGenerator.torus(u, m.entry(1, 1), m.entry(2, 2), m.entry(3, 3))


def _root_from_matrix(cfg, m: EndV, i0, j0, lam0) -> GroupGenerator:
    """Recognize a hat-image of a root generator as a root generator."""
    ident = EndV.identity(cfg)
    x = m - ident
    for a in LABELS:
        for b in LABELS:
            if a == b or a == -b:
                continue
            lam = x.entry(-b, a)
            if not lam.is_zero:
                cand = u_root(cfg, a, b, lam)
                if cand == m:
                    return GroupGenerator.root(a, b, lam)
    raise TripleError("hat image is not a single root generator")
