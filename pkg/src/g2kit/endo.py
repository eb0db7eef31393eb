"""Linear algebra on the octonion space: the form-adjoint, so(V) and
isometry tests, derivations (the Lie algebra of the automorphism group),
the sl3/su(2,1) lifts across a 2-dimensional subalgebra, and the analysis
of semisimple derivations by their kernel subalgebra.
"""

from __future__ import annotations

from .errors import DomainError, KindError, LiftError, WitnessError
from .linalg import (Subspace, identity, inv, kernel, mat_eq, mat_mul,
                     mat_neg, mat_sub, mat_vec, solve, transpose, zeros)
from .octonions import (IDX, LABELS, CompositionSubalgebra, Octonion,
                        basis_octonion, bilinear_f, gram_scalar,
                        octonion_unit, ordered_polarization,
                        plane_subalgebra, split_polarization, sqrt_scalar)
from .scalars import FieldConfig, Scalar


class EndV:
    """Endomorphism of V as an 8x8 scalar matrix in the fixed Witt basis."""

    __slots__ = ("cfg", "rows")

    def __init__(self, cfg: FieldConfig, rows):
        self.cfg = cfg
        self.rows = [list(r) for r in rows]
        if len(self.rows) != 8 or any(len(r) != 8 for r in self.rows):
            raise DomainError("EndV is an 8x8 matrix")

    @classmethod
    def zero(cls, cfg) -> "EndV":
        return cls(cfg, zeros(cfg, 8, 8))

    @classmethod
    def identity(cls, cfg) -> "EndV":
        return cls(cfg, identity(cfg, 8))

    @classmethod
    def from_action(cls, cfg, images) -> "EndV":
        """Build from the images {label: Octonion} of basis vectors;
        unspecified labels are fixed."""
        m = identity(cfg, 8)
        for lbl, img in images.items():
            j = IDX[lbl]
            for i in range(8):
                m[i][j] = img.coords[i]
        return cls(cfg, m)

    def entry(self, row_label: int, col_label: int) -> Scalar:
        return self.rows[IDX[row_label]][IDX[col_label]]

    def apply(self, x: Octonion) -> Octonion:
        return Octonion(self.cfg, mat_vec(self.rows, list(x.coords)))

    def __mul__(self, other):
        if isinstance(other, EndV):
            return EndV(self.cfg, mat_mul(self.rows, other.rows))
        if isinstance(other, Octonion):
            return self.apply(other)
        if isinstance(other, (Scalar, int)):
            c = self.cfg.from_int(other) if isinstance(other, int) else other
            return EndV(self.cfg, [[c * x for x in r] for r in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self * other
        return NotImplemented

    def __add__(self, other):
        return EndV(self.cfg, [[a + b for a, b in zip(ra, rb)]
                               for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return EndV(self.cfg, mat_sub(self.rows, other.rows))

    def __neg__(self):
        return EndV(self.cfg, mat_neg(self.rows))

    def scale(self, c) -> "EndV":
        return self * c

    def inverse(self) -> "EndV":
        return EndV(self.cfg, inv(self.rows))

    def trace(self) -> Scalar:
        acc = self.cfg.zero()
        for i in range(8):
            acc = acc + self.rows[i][i]
        return acc

    def commutator(self, other: "EndV") -> "EndV":
        return self * other - other * self

    def is_zero(self) -> bool:
        return all(x.is_zero for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, EndV):
            return NotImplemented
        return mat_eq(self.rows, other.rows)

    def __repr__(self):
        nz = sum(1 for r in self.rows for x in r if not x.is_zero)
        return f"EndV({nz} nonzero entries)"

    def to_json(self):
        return [str(x) for r in self.rows for x in r]

    @classmethod
    def from_json(cls, cfg, data) -> "EndV":
        from .scalars import parse_scalar
        if len(data) != 64:
            raise DomainError("EndV serialization needs 64 entries")
        vals = [parse_scalar(cfg, s) for s in data]
        return cls(cfg, [vals[8 * i:8 * i + 8] for i in range(8)])


# -- adjoint, so(V), isometries, derivations ----------------------------------

def endv_truncate(x: EndV, cutoff) -> EndV:
    """Entrywise window surgery: drop coefficients at v_F-index >= cutoff."""
    return EndV(x.cfg, [[c.truncate(cutoff) for c in row] for row in x.rows])


def endv_congruent(x: EndV, y: EndV, cutoff) -> bool:
    """Entrywise congruence modulo p_F^cutoff."""
    return endv_truncate(x - y, cutoff).is_zero()


def adjoint(x: EndV) -> EndV:
    """sigma(X) with f(X u, v) = f(u, sigma(X) v); G X^T G for the Gram G."""
    g = gram_scalar(x.cfg)
    return EndV(x.cfg, mat_mul(g, mat_mul(transpose(x.rows), g)))


def is_so(x: EndV) -> bool:
    return adjoint(x) == -x


def is_isometry(g: EndV) -> bool:
    gram = gram_scalar(g.cfg)
    return mat_eq(mat_mul(transpose(g.rows), mat_mul(gram, g.rows)), gram)


def is_derivation(x: EndV) -> bool:
    """Leibniz rule on all 64 basis pairs."""
    cfg = x.cfg
    e = [basis_octonion(cfg, lbl) for lbl in LABELS]
    xe = [x.apply(v) for v in e]
    for i in range(8):
        for j in range(8):
            if x.apply(e[i] * e[j]) != xe[i] * e[j] + e[i] * xe[j]:
                return False
    return True


def is_algebra_automorphism(g: EndV) -> bool:
    cfg = g.cfg
    e = [basis_octonion(cfg, lbl) for lbl in LABELS]
    ge = [g.apply(v) for v in e]
    for i in range(8):
        for j in range(8):
            if g.apply(e[i] * e[j]) != ge[i] * ge[j]:
                return False
    return True


# -- standard generators -------------------------------------------------------

def u_root(cfg: FieldConfig, i: int, j: int, lam: Scalar) -> EndV:
    """u_{i,j}(lam): e_i -> e_i + lam e_{-j}, e_j -> e_j - lam e_{-i}."""
    if i == j or i == -j:
        raise DomainError("root indices must satisfy i != +-j")
    return EndV.from_action(cfg, {
        i: basis_octonion(cfg, i) + basis_octonion(cfg, -j).scale(lam),
        j: basis_octonion(cfg, j) - basis_octonion(cfg, -i).scale(lam),
    })


def u_root_lie(cfg: FieldConfig, i: int, j: int, lam: Scalar) -> EndV:
    """U_{i,j}(lam) = u_{i,j}(lam) - 1."""
    return u_root(cfg, i, j, lam) - EndV.identity(cfg)


def d_torus(cfg: FieldConfig, i: int, lam: Scalar) -> EndV:
    """d_i(lam): e_i -> lam e_i, e_{-i} -> lam^{-1} e_{-i}."""
    if i not in (1, 2, 3, 4):
        raise DomainError("torus index must be 1..4")
    return EndV.from_action(cfg, {
        i: basis_octonion(cfg, i).scale(lam),
        -i: basis_octonion(cfg, -i).scale(lam.inv()),
    })


def d_torus_lie(cfg: FieldConfig, i: int, s: Scalar) -> EndV:
    """D_i(s): e_i -> s e_i, e_{-i} -> -s e_{-i}, zero elsewhere."""
    if i not in (1, 2, 3, 4):
        raise DomainError("torus index must be 1..4")
    m = zeros(cfg, 8, 8)
    m[IDX[i]][IDX[i]] = s
    m[IDX[-i]][IDX[-i]] = -s
    return EndV(cfg, m)


def so_basis_labels():
    """Index data for the 28 so(V) basis elements: 4 diagonal + 24 roots."""
    diag = [1, 2, 3, 4]
    roots = []
    seen = set()
    for i in LABELS:
        for j in LABELS:
            if i == j or i == -j:
                continue
            if (j, i) in seen:
                continue
            seen.add((i, j))
            roots.append((i, j))
    return diag, roots


def so_decompose(x: EndV):
    """Write x in the D_i / U_{i,j} basis; raises if x is not in so(V)."""
    if not is_so(x):
        raise DomainError("matrix is not in so(V)")
    diag, roots = so_basis_labels()
    dcoeffs = {i: x.entry(i, i) for i in diag}
    rcoeffs = {(i, j): x.entry(-j, i) for (i, j) in roots}
    return dcoeffs, rcoeffs


def random_so(cfg: FieldConfig, rng, **kw) -> EndV:
    """Random element of so(V) as S - sigma(S)."""
    s = EndV(cfg, [[cfg.random(rng, **kw) for _ in range(8)] for _ in range(8)])
    return s - adjoint(s)


# -- lifts across a 2-dimensional subalgebra ----------------------------------

def lift_sl3(phi, d: CompositionSubalgebra) -> EndV:
    """Derivation acting by the traceless 3x3 matrix phi on the ordered
    W+ basis, by the negated transpose on the dual W- basis, and by zero
    on D."""
    cfg = d.cfg
    phi = [[cfg.from_int(x) if isinstance(x, int) else x for x in row]
           for row in phi]
    tr = phi[0][0] + phi[1][1] + phi[2][2]
    if not tr.is_zero:
        raise LiftError("matrix must be traceless")
    wp, wm = ordered_polarization(d)
    cols = []
    basis_oct = list(d.basis) + wp + wm
    for b in d.basis:
        cols.append([cfg.zero()] * 8)  # derivation kills D
    for j in range(3):
        img = [cfg.zero()] * 8
        for i in range(3):
            if not phi[i][j].is_zero:
                for t in range(8):
                    img[t] = img[t] + phi[i][j] * wp[i].coords[t]
        cols.append(img)
    for j in range(3):
        img = [cfg.zero()] * 8
        for i in range(3):
            if not phi[j][i].is_zero:
                for t in range(8):
                    img[t] = img[t] - phi[j][i] * wm[i].coords[t]
        cols.append(img)
    return _assemble(cfg, basis_oct, cols)


def _assemble(cfg, basis_oct, image_cols) -> EndV:
    """Matrix in standard coordinates from images on an adapted basis."""
    b = transpose([list(o.coords) for o in basis_oct])
    c = transpose(image_cols)
    return EndV(cfg, mat_mul(c, inv(b)))


def hermitian_form(d: CompositionSubalgebra, x: Octonion, y: Octonion) -> Octonion:
    """Phi(x, y) in D for the left D-structure: (f(x,y) + c^{-1} f(cx,y) c)/2,
    c the traceless generator; f = tr_{D/F} o Phi."""
    cfg = d.cfg
    c = d.traceless_generator()
    gamma = -(c.norm())  # c^2 = gamma
    half = cfg.from_int(2).inv()
    unit = octonion_unit(cfg)
    fxy = bilinear_f(x, y)
    fcxy = bilinear_f(c * x, y)
    return unit.scale(half * fxy) + c.scale(half * fcxy * gamma.inv())


def hermitian_gram(d: CompositionSubalgebra, wbasis):
    return [[hermitian_form(d, x, y) for y in wbasis] for x in wbasis]


def lift_su21(phi, d: CompositionSubalgebra, wbasis) -> EndV:
    """Derivation acting D-linearly on W = D-perp by the anti-hermitian
    traceless matrix phi (entries in D, as octonions) in the D-basis
    wbasis, and by zero on D."""
    cfg = d.cfg
    if d.kind != "field-dim2":
        raise KindError("su(2,1) lift needs an anisotropic plane")
    tr = phi[0][0] + phi[1][1] + phi[2][2]
    if not tr.is_zero:
        raise LiftError("matrix must be traceless over D")
    h = hermitian_gram(d, wbasis)
    for i in range(3):
        for j in range(3):
            acc = Octonion(cfg, [cfg.zero()] * 8)
            for k in range(3):
                acc = acc + phi[k][i] * h[k][j] + h[i][k] * phi[k][j].conj()
            if not acc.is_zero:
                raise LiftError("matrix is not Phi-anti-hermitian")
    c = d.traceless_generator()
    basis_oct = list(d.basis)
    cols = [[cfg.zero()] * 8 for _ in d.basis]
    for j, w in enumerate(wbasis):
        img = Octonion(cfg, [cfg.zero()] * 8)
        for i in range(3):
            if not phi[i][j].is_zero:
                img = img + phi[i][j] * wbasis[i]
        basis_oct.append(w)
        cols.append(list(img.coords))
        basis_oct.append(c * w)
        cols.append(list((c * img).coords))
    return _assemble(cfg, basis_oct, cols)


def special_hermitian_basis(d: CompositionSubalgebra):
    """A Witt-style D-basis (w-, w0, w+) of W = D-perp with Q(w-+) = 0,
    Phi(w-, w+) = 1 and w0 = (w- + w+)(w- - w+)."""
    cfg = d.cfg
    w_oct = d.orthogonal_basis_octonions()
    iso = None
    for cand in w_oct + [x + y for x in w_oct for y in w_oct if x != y]:
        if not cand.is_zero and cand.norm().is_zero:
            iso = cand
            break
    if iso is None:
        raise DomainError("no isotropic vector found in D-perp")
    partner = None
    for cand in w_oct + [x + y for x in w_oct for y in w_oct if x != y]:
        mu = hermitian_form(d, cand, iso)
        if not mu.is_zero and not mu.norm().is_zero:
            partner = cand
            break
    if partner is None:
        raise DomainError("no dual partner found")
    # make partner isotropic: replace by partner - Phi(partner,partner)/(2 Phi(partner,iso)) iso
    ppp = hermitian_form(d, partner, partner)
    ppi = hermitian_form(d, partner, iso)
    half = cfg.from_int(2).inv()
    corr = (ppp * ppi.inv()).scale(half)
    partner = partner - corr * iso
    mu = hermitian_form(d, iso, partner)
    # scale partner on the left so that Phi(iso, partner) = 1
    partner = mu.conj().inv() * partner
    w0 = (iso + partner) * (iso - partner)
    assert hermitian_form(d, iso, partner) == octonion_unit(cfg)
    assert iso.norm().is_zero and partner.norm().is_zero
    return iso, w0, partner


# -- semisimple analysis -------------------------------------------------------

class SemisimpleAnalysis:
    """Kernel subalgebra, orthogonal complement and case tag of a
    semisimple derivation."""

    def __init__(self, case_tag, v0, w_space, extras):
        self.case_tag = case_tag
        self.v0 = v0            # CompositionSubalgebra
        self.w_space = w_space  # Subspace
        self.extras = extras    # dict, case dependent

    def __repr__(self):
        return f"SemisimpleAnalysis(case={self.case_tag}, dim_v0={self.v0.dim})"


def _poly_eval_matrix(coeffs, x: EndV) -> EndV:
    """Evaluate sum coeffs[k] X^k (coeffs[0] constant term)."""
    out = EndV.zero(x.cfg)
    ident = EndV.identity(x.cfg)
    power = ident
    for c in coeffs:
        if isinstance(c, int):
            c = x.cfg.from_int(c)
        if not c.is_zero:
            out = out + power * c
        power = power * x
    return out


def verify_witness(beta: EndV, witness) -> None:
    """Check a decomposition witness: kernels span V, blocks are
    annihilated by their factors, factors are pairwise coprime."""
    from .linalg import Subspace as Sub
    cfg = beta.cfg
    total = 0
    all_rows = []
    for blk in witness:
        coeffs, space = blk.factor, blk.space
        total += space.dim
        all_rows.extend([list(r) for r in space.rows])
        pb = _poly_eval_matrix(coeffs, beta)
        for row in space.rows:
            img = mat_vec(pb.rows, list(row))
            if any(not x.is_zero for x in img):
                raise WitnessError("factor does not annihilate its block")
        for row in space.rows:
            img = mat_vec(beta.rows, list(row))
            if not space.contains(img):
                raise WitnessError("block is not beta-stable")
    if total != 8 or Sub(cfg, 8, all_rows).dim != 8:
        raise WitnessError("witness blocks do not decompose V")
    for a in range(len(witness)):
        for b in range(a + 1, len(witness)):
            if not _poly_coprime(cfg, witness[a].factor, witness[b].factor):
                raise WitnessError("witness factors are not coprime")


def _poly_coprime(cfg, p, q) -> bool:
    """Exact gcd over the scalar field; True iff gcd is a unit."""
    def norm(c):
        return [cfg.from_int(x) if isinstance(x, int) else x for x in c]

    def deg(c):
        d = len(c) - 1
        while d >= 0 and c[d].is_zero:
            d -= 1
        return d

    a, b = norm(list(p)), norm(list(q))
    while True:
        da, db = deg(a), deg(b)
        if db < 0:
            return da == 0
        if da < 0:
            return db == 0
        if da < db:
            a, b = b, a
            continue
        lead = b[db].inv()
        shift = da - db
        factor = a[da] * lead
        new = list(a)
        for k in range(db + 1):
            new[k + shift] = new[k + shift] - factor * b[k]
        a = new


class WitnessBlock:
    """One block of a decomposition witness: a monic-ish factor (constant
    term first) and the subspace it annihilates."""

    def __init__(self, factor, space: Subspace):
        self.factor = list(factor)
        self.space = space

    @classmethod
    def from_vectors(cls, cfg, factor, vectors):
        return cls(factor, Subspace(cfg, 8, vectors))


def analyze_semisimple(beta: EndV, witness) -> SemisimpleAnalysis:
    """Classify a semisimple derivation by its kernel subalgebra.

    Cases: (i) hyperbolic-plane, (ii) quadratic-extension,
    (iii) dim4-split-eigen, (iv) dim4-hermitian.  Squareness decisions on
    the dim-4 scalar are made exactly and checked against the witness.
    """
    cfg = beta.cfg
    if not is_derivation(beta):
        raise DomainError("element is not a derivation")
    verify_witness(beta, witness)
    kernel_rows = []
    for blk in witness:
        if _is_x_factor(cfg, blk.factor):
            kernel_rows.extend([list(r) for r in blk.space.rows])
    v0_space = Subspace(cfg, 8, kernel_rows)
    dim0 = v0_space.dim
    if dim0 == 8:
        raise DomainError("zero derivation has no semisimple analysis")
    if dim0 not in (2, 4):
        raise WitnessError(f"kernel dimension {dim0} is not 2 or 4")
    v0 = _kernel_subalgebra(cfg, v0_space)
    gram = gram_scalar(cfg)
    w_space = v0_space.perp(gram)
    if dim0 == 2:
        if v0.kind == "split-dim2":
            wplus, wminus = split_polarization(v0)
            wp, wm = ordered_polarization(v0)
            bw = restrict_to_basis(beta, wp)
            tr = bw[0][0] + bw[1][1] + bw[2][2]
            if not tr.is_zero:
                raise WitnessError("restriction to W+ must be traceless")
            return SemisimpleAnalysis("(i) hyperbolic-plane", v0, w_space,
                                      {"wplus": wplus, "wminus": wminus,
                                       "wplus_basis": wp, "wminus_basis": wm,
                                       "beta_wplus": bw})
        bw6 = _restrict(beta, w_space)
        _check_d_linear(beta, v0, w_space)
        tr6 = bw6[0][0]
        for k in range(1, 6):
            tr6 = tr6 + bw6[k][k]
        if not tr6.is_zero:
            raise WitnessError("restriction to W must be traceless")
        return SemisimpleAnalysis("(ii) quadratic-extension", v0, w_space,
                                  {"beta_w": bw6})
    # dim 4: beta_W^2 must be a scalar u
    u = _square_scalar_on(beta, w_space)
    if u.is_zero:
        raise WitnessError("restriction squares to zero: not semisimple")
    if u.is_square():
        lam = sqrt_scalar(u)
        _expect_factor(cfg, witness, lam)
        wl = _eigenspace(beta, w_space, lam)
        wml = _eigenspace(beta, w_space, -lam)
        if wl.dim != 2 or wml.dim != 2:
            raise WitnessError("eigenspaces of the dim-4 case must be 2+2")
        _assert_v0_split(v0)
        return SemisimpleAnalysis("(iii) dim4-split-eigen", v0, w_space,
                                  {"lambda": lam, "w_lambda": wl,
                                   "w_minus_lambda": wml, "u": u})
    return SemisimpleAnalysis("(iv) dim4-hermitian", v0, w_space,
                              {"u": u, "min_poly": (-u, cfg.zero(), cfg.one())})


def _is_x_factor(cfg, coeffs) -> bool:
    c = [cfg.from_int(x) if isinstance(x, int) else x for x in coeffs]
    return (len(c) >= 2 and c[0].is_zero and not c[1].is_zero
            and all(x.is_zero for x in c[2:]))


def _kernel_subalgebra(cfg, space: Subspace) -> CompositionSubalgebra:
    octs = [Octonion(cfg, r) for r in space.rows]
    unit = octonion_unit(cfg)
    if not space.contains(unit.coords):
        raise WitnessError("kernel must contain the unit")
    if space.dim == 2:
        half = cfg.from_int(2).inv()
        for o in octs:
            c0 = o - unit.scale(o.trace() * half)
            if not c0.is_zero:
                return plane_subalgebra(cfg, c0)
        raise WitnessError("kernel has no traceless generator")
    d = CompositionSubalgebra(cfg, octs, _dim4_kind(cfg, octs), )
    if not d.is_composition():
        raise WitnessError("kernel is not a composition subalgebra")
    return d


def _dim4_kind(cfg, octs) -> str:
    for o in octs:
        if o.norm().is_zero and not o.is_zero:
            return "split-dim4"
    for a in octs:
        for b in octs:
            s = a + b
            if not s.is_zero and s.norm().is_zero:
                return "split-dim4"
    # no isotropic vector found among simple combinations; treat as division
    return "division-dim4"


def _restrict(beta: EndV, space: Subspace):
    """Matrix of beta on a beta-stable subspace in its canonical basis."""
    cfg = beta.cfg
    return restrict_to_basis(beta, [Octonion(cfg, r) for r in space.rows])


def restrict_to_basis(beta: EndV, basis_oct):
    """Matrix of beta on the span of basis_oct in that ordered basis;
    entry [i][j] is the b_i coefficient of beta(b_j)."""
    rows = [list(o.coords) for o in basis_oct]
    imgs = [mat_vec(beta.rows, r) for r in rows]
    cols = transpose(rows)
    out = [solve(cols, img) for img in imgs]
    return transpose(out)


def _check_d_linear(beta, v0, w_space):
    cfg = beta.cfg
    c = v0.traceless_generator()
    for row in w_space.rows:
        w = Octonion(cfg, row)
        lhs = beta.apply(c * w)
        rhs = c * beta.apply(w)
        if lhs != rhs:
            raise WitnessError("restriction is not D-linear")


def _square_scalar_on(beta, w_space):
    cfg = beta.cfg
    sq = beta * beta
    u = None
    for row in w_space.rows:
        img = mat_vec(sq.rows, list(row))
        w = Octonion(cfg, row)
        # img must equal u * row
        pivot = next(i for i, x in enumerate(row) if not x.is_zero)
        cand = img[pivot] * row[pivot].inv()
        for a, b in zip(img, row):
            if (a - cand * b).is_zero:
                continue
            raise WitnessError("square of restriction is not scalar")
        if u is None:
            u = cand
        elif u != cand:
            raise WitnessError("square of restriction is not a single scalar")
    return u


def _eigenspace(beta, w_space, lam):
    cfg = beta.cfg
    shifted = beta - EndV.identity(cfg) * lam
    rows = [list(r) for r in w_space.rows]
    # solve within W: kernel of shifted restricted to W
    mat = []
    for r in rows:
        img = mat_vec(shifted.rows, r)
        mat.append(img)
    ker_coeffs = kernel(transpose(mat))
    vecs = []
    for co in ker_coeffs:
        v = [cfg.zero()] * 8
        for c, r in zip(co, rows):
            for t in range(8):
                v[t] = v[t] + c * r[t]
        vecs.append(v)
    return Subspace(cfg, 8, vecs)


def _assert_v0_split(v0):
    if v0.kind != "split-dim4":
        raise WitnessError("split eigenvalues force a split kernel algebra")


def _expect_factor(cfg, witness, lam):
    """The witness must contain X - lam and X + lam factors (degree-1 blocks)
    or a matching quadratic; we accept any witness whose factors vanish at
    +-lam on some block."""
    found_plus = found_minus = False
    for blk in witness:
        val_p = _poly_value(cfg, blk.factor, lam)
        val_m = _poly_value(cfg, blk.factor, -lam)
        if val_p.is_zero:
            found_plus = True
        if val_m.is_zero:
            found_minus = True
    if not (found_plus and found_minus):
        raise WitnessError("witness does not certify the split eigenvalues")


def _poly_value(cfg, coeffs, x: Scalar) -> Scalar:
    acc = cfg.zero()
    power = cfg.one()
    for c in coeffs:
        if isinstance(c, int):
            c = cfg.from_int(c)
        acc = acc + c * power
        power = power * x
    return acc


def dim4_kernel_derivation(d4: CompositionSubalgebra, a: Octonion,
                           c: Octonion) -> EndV:
    """The derivation vanishing on a dim-4 subalgebra D and acting by
    v'a -> (c v')a on W = Da, for c traceless in D."""
    cfg = d4.cfg
    if d4.dim != 4:
        raise KindError("kernel subalgebra must have dimension 4")
    if not c.trace().is_zero or not d4.contains(c):
        raise DomainError("c must be a traceless element of D")
    qa = a.norm()
    if qa.is_zero:
        raise DomainError("a must be non-isotropic")
    for b in d4.basis:
        if not bilinear_f(b, a).is_zero:
            raise DomainError("a must be orthogonal to D")
    basis_oct = list(d4.basis) + [b * a for b in d4.basis]
    cols = [[cfg.zero()] * 8 for _ in range(4)]
    for b in d4.basis:
        cols.append(list(((c * b) * a).coords))
    return _assemble(cfg, basis_oct, cols)


# -- centralizer containment predicates (case-by-case lemmas) ------------------

def stabilizes(g: EndV, space: Subspace) -> bool:
    return all(space.contains(mat_vec(g.rows, list(r))) for r in space.rows)


def centralizer_shape_dim2_field(g: EndV, v0: CompositionSubalgebra,
                                 w_space: Subspace) -> bool:
    """g preserves the V0 + W splitting and is V0-linear on W (the
    containment O(V0) x U(W) of the anisotropic-plane case)."""
    if not (stabilizes(g, v0.space) and stabilizes(g, w_space)):
        return False
    cfg = g.cfg
    c = v0.traceless_generator()
    for row in w_space.rows:
        w = Octonion(cfg, row)
        if g.apply(c * w) != c * g.apply(w):
            return False
    return True


def centralizer_shape_dim2_split(g: EndV, v0: CompositionSubalgebra) -> bool:
    """g preserves V0, W+ and W- (the SO(V0) x GL(W+) containment)."""
    if not stabilizes(g, v0.space):
        return False
    wplus, wminus = split_polarization(v0)
    return stabilizes(g, wplus) and stabilizes(g, wminus)
