"""Rational-valued norms on the octonion space and its subspaces: duality,
volume in the special-basis normalization, self-dual algebra norms, the
three canonical extension procedures across a composition subalgebra, and
the conversion to lattice sequences and filtration lattices.

Norms are always given by a splitting basis and the value at each basis
vector (exact Fractions); evaluation is min(v(coefficient) + value).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .endo import EndV, hermitian_form
from .errors import (DomainError, DualityError, KindError, SingularError,
                     VolumeError)
from .linalg import Subspace, det, inv, mat_vec, solve, transpose
from .octonions import (CompositionSubalgebra, Octonion, basis_octonion,
                        bilinear_f, gram_scalar, idempotents_from_isotropic_pair,
                        octonion_unit, ordered_polarization,
                        standard_idempotents)
from .scalars import FieldConfig, Scalar


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class NormFn:
    """A norm on the span of a splitting basis of octonions."""

    def __init__(self, cfg: FieldConfig, basis, values):
        self.cfg = cfg
        self.basis = list(basis)
        self.values = [_frac(v) for v in values]
        if len(self.basis) != len(self.values):
            raise DomainError("one value per basis vector")
        self._cols = transpose([list(b.coords) for b in self.basis])
        self.space = Subspace(cfg, 8, [b.coords for b in self.basis])
        if self.space.dim != len(self.basis):
            raise DomainError("norm basis is linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, x: Octonion):
        return solve(self._cols, list(x.coords))

    def __call__(self, x: Octonion):
        return self.eval(x)

    def eval(self, x: Octonion):
        """min over nonzero coordinates of v(xi_i) + a_i; inf at 0."""
        if x.is_zero:
            return math.inf
        if not self.space.contains(x.coords):
            raise DomainError("vector outside the span of the norm basis")
        co = self.coordinates(x)
        best = math.inf
        for c, a in zip(co, self.values):
            if not c.is_zero:
                v = c.valuation + a
                if v < best:
                    best = v
        return best

    def scaled_values(self, shift: Fraction) -> "NormFn":
        return NormFn(self.cfg, self.basis, [v + shift for v in self.values])

    def __eq__(self, other):
        """Norm equality via two-way evaluation on the splitting bases."""
        if not isinstance(other, NormFn):
            return NotImplemented
        if self.space != other.space:
            return False
        return (all(self.eval(b) == v for b, v in zip(other.basis, other.values))
                and all(other.eval(b) == v
                        for b, v in zip(self.basis, self.values)))

    def __repr__(self):
        return f"NormFn(dim={self.dim}, values={self.values})"

    def to_json(self):
        return {"basis": [b.to_json() for b in self.basis],
                "values": [str(v) for v in self.values]}

    def restrict(self, indices) -> "NormFn":
        """Restriction to the span of a subset of the splitting basis."""
        return NormFn(self.cfg, [self.basis[i] for i in indices],
                      [self.values[i] for i in indices])


def dual_basis_in(cfg, basis, space_rows):
    """Vectors in the row-space pairing to delta_ij with the given basis."""
    gram = gram_scalar(cfg)
    rows = [list(r) for r in space_rows]
    out = []
    for k in range(len(basis)):
        amat, rhs = [], []
        for i, b in enumerate(basis):
            gv = mat_vec(gram, list(b.coords))
            amat.append([sum((r * s for r, s in zip(row, gv)), cfg.zero())
                         for row in rows])
            rhs.append(cfg.one() if i == k else cfg.zero())
        try:
            co = solve(amat, rhs)
        except SingularError as exc:
            raise DualityError("form degenerate on this subspace") from exc
        vec = [cfg.zero()] * 8
        for c, row in zip(co, rows):
            for t in range(8):
                vec[t] = vec[t] + c * row[t]
        out.append(Octonion(cfg, vec))
    return out


def dual_norm(alpha: NormFn) -> NormFn:
    """alpha*(v) = inf_x (v(f(v,x)) - alpha(x)), computed on the dual basis:
    alpha* is split by it with values -alpha(b_i)."""
    dual = dual_basis_in(alpha.cfg, alpha.basis, alpha.space.rows)
    return NormFn(alpha.cfg, dual, [-v for v in alpha.values])


def sharp_dual(alpha_plus: NormFn, wminus: Subspace) -> NormFn:
    """The dual of a norm on W+ taken inside the dual isotropic space W-."""
    dual = dual_basis_in(alpha_plus.cfg, alpha_plus.basis, wminus.rows)
    return NormFn(alpha_plus.cfg, dual, [-v for v in alpha_plus.values])


def is_self_dual(alpha: NormFn) -> bool:
    return dual_norm(alpha) == alpha


def is_algebra_norm(alpha: NormFn) -> bool:
    """alpha(xy) >= alpha(x) + alpha(y), checked on the splitting basis
    (sufficient by bilinearity), plus alpha(1) = 0 and conj-invariance."""
    if alpha.dim != 8:
        raise DomainError("algebra norms live on all of V")
    unit = octonion_unit(alpha.cfg)
    if alpha.eval(unit) != 0:
        return False
    for b, v in zip(alpha.basis, alpha.values):
        if alpha.eval(b.conj()) != v:
            return False
    for b1, v1 in zip(alpha.basis, alpha.values):
        for b2, v2 in zip(alpha.basis, alpha.values):
            if alpha.eval(b1 * b2) < v1 + v2:
                return False
    return True


def reorder_to_standard(alpha: NormFn) -> NormFn:
    """Permute the splitting basis into the fixed label order when it
    consists exactly of the standard basis vectors."""
    cfg = alpha.cfg
    order = []
    for lbl in (-4, -1, -2, -3, 3, 2, 1, 4):
        target = basis_octonion(cfg, lbl)
        hit = next((i for i, b in enumerate(alpha.basis) if b == target), None)
        if hit is None:
            return alpha
        order.append(hit)
    return NormFn(cfg, [alpha.basis[i] for i in order],
                  [alpha.values[i] for i in order])


def standard_norm(cfg: FieldConfig) -> NormFn:
    """The algebra norm vanishing on the standard Witt basis."""
    basis = [basis_octonion(cfg, lbl) for lbl in
             (-4, -1, -2, -3, 3, 2, 1, 4)]
    return NormFn(cfg, basis, [0] * 8)


# -- volume ---------------------------------------------------------------------

def special_basis(d: CompositionSubalgebra):
    """The canonical special basis (f1+, f2+, f1- f2-) of W+ for a split
    plane D; its lattice is the volume normalization."""
    wp, wm = ordered_polarization(d)
    return [wp[0], wp[1], wm[0] * wm[1]]


def volume(alpha_plus: NormFn, d: CompositionSubalgebra) -> Fraction:
    """vol(alpha) = v(det g) - sum alpha(b_i), with g mapping the canonical
    special-basis lattice of W+ onto the lattice of alpha's basis."""
    ref = special_basis(d)
    cols = transpose([list(b.coords) for b in ref])
    g = []
    for b in alpha_plus.basis:
        g.append(solve(cols, list(b.coords)))
    dt = det(transpose(g))
    if dt.is_zero:
        raise DomainError("norm basis does not span W+")
    return dt.valuation - sum(alpha_plus.values)


# -- extensions -----------------------------------------------------------------

def extend_sl3(alpha_plus: NormFn, d: CompositionSubalgebra) -> NormFn:
    """The unique self-dual algebra norm splitting V = D + (W+ + W-) and
    restricting to a volume-zero alpha on W+."""
    if volume(alpha_plus, d) != 0:
        raise VolumeError("extension needs a volume-zero norm on W+")
    eplus, eminus = standard_idempotents(d)
    wplus_rows = [b.coords for b in alpha_plus.basis]
    _, wminus = _polarization_spaces(d)
    sharp = sharp_dual(alpha_plus, wminus)
    basis = [eplus, eminus] + list(alpha_plus.basis) + list(sharp.basis)
    values = [Fraction(0), Fraction(0)] + list(alpha_plus.values) \
        + list(sharp.values)
    out = NormFn(alpha_plus.cfg, basis, values)
    _check_extension(out, alpha_plus)
    return reorder_to_standard(out)


def _polarization_spaces(d):
    from .octonions import split_polarization
    return split_polarization(d)


def _check_extension(out: NormFn, restriction: NormFn):
    if not is_algebra_norm(out):
        raise DomainError("extension is not an algebra norm")
    if not is_self_dual(out):
        raise DualityError("extension is not self-dual")
    for b, v in zip(restriction.basis, restriction.values):
        if out.eval(b) != v:
            raise DomainError("extension does not restrict correctly")


class HermitianNorm:
    """An F'-norm on W = D-perp for an anisotropic plane D = F[c]:
    a D-basis of W with values in units of the normalized valuation of F'
    (so v_{F'} has image Z)."""

    def __init__(self, d: CompositionSubalgebra, basis, values):
        if d.kind != "field-dim2":
            raise KindError("hermitian norms need an anisotropic plane")
        self.d = d
        self.cfg = d.cfg
        self.basis = list(basis)
        self.values = [_frac(v) for v in values]
        self.c = d.traceless_generator()
        self.gamma = -(self.c.norm())  # c^2 = gamma
        vg = self.gamma.valuation
        self.e = 2 if (vg * 1) % 2 == 1 else 1
        self.vc = Fraction(self.e * vg, 2)  # v_{F'}(c), normalized
        cols = []
        for b in self.basis:
            cols.append(list(b.coords))
            cols.append(list((self.c * b).coords))
        self._cols = transpose(cols)

    def v_fprime(self, x: Scalar, y: Scalar) -> Fraction:
        """v_{F'}(x + y c) via the valuation-orthogonal basis (1, c)."""
        cands = []
        if not x.is_zero:
            cands.append(Fraction(self.e) * x.valuation)
        if not y.is_zero:
            cands.append(Fraction(self.e) * y.valuation + self.vc)
        return min(cands) if cands else math.inf

    def eval(self, w: Octonion) -> Fraction:
        if w.is_zero:
            return math.inf
        co = solve(self._cols, list(w.coords))
        best = math.inf
        for k, a in enumerate(self.values):
            v = self.v_fprime(co[2 * k], co[2 * k + 1]) + a
            if v < best:
                best = v
        return best

    def dual(self) -> "HermitianNorm":
        """Dual with respect to the hermitian form, on the dual basis."""
        cfg = self.cfg
        unit = octonion_unit(cfg)
        dualb = []
        for k in range(len(self.basis)):
            amat, rhs = [], []
            for i, b in enumerate(self.basis):
                row1, rowc = [], []
                for x in self._fbasis():
                    co = self.d.coordinates(hermitian_form(self.d, x, b))
                    row1.append(co[0])
                    rowc.append(co[1])
                amat.append(row1)
                rhs.append(cfg.one() if i == k else cfg.zero())
                amat.append(rowc)
                rhs.append(cfg.zero())
            co = _solve_rect(amat, rhs, cfg)
            vec = [cfg.zero()] * 8
            for c, x in zip(co, self._fbasis()):
                for t in range(8):
                    vec[t] = vec[t] + c * x.coords[t]
            dualb.append(Octonion(cfg, vec))
        return HermitianNorm(self.d, dualb, [-v for v in self.values])

    def _fbasis(self):
        out = []
        for b in self.basis:
            out.append(b)
            out.append(self.c * b)
        return out

    def is_self_dual(self) -> bool:
        dual = self.dual()
        return (all(self.eval(b) == v for b, v in zip(dual.basis, dual.values))
                and all(dual.eval(b) == v
                        for b, v in zip(self.basis, self.values)))


def _solve_rect(amat, rhs, cfg):
    """Solve a consistent, possibly overdetermined system exactly."""
    n = len(amat[0])
    aug = [list(r) + [b] for r, b in zip(amat, rhs)]
    from .linalg import rref
    red, pivots = rref(aug)
    if n in pivots:
        raise SingularError("inconsistent linear system")
    x = [cfg.zero()] * n
    for r, c in enumerate(pivots):
        x[c] = red[r][n]
    return x


def extend_su21(alpha_h: HermitianNorm, d: CompositionSubalgebra) -> NormFn:
    """The unique self-dual algebra norm splitting V = D + W and restricting
    to (1/e) alpha' on W for a self-dual F'-norm alpha'."""
    if d is not alpha_h.d:
        raise DomainError("norm and plane do not match")
    if not alpha_h.is_self_dual():
        raise DualityError("the F'-norm must be self-dual")
    cfg = d.cfg
    c = alpha_h.c
    e = Fraction(alpha_h.e)
    unit = octonion_unit(cfg)
    basis = [unit, c]
    values = [Fraction(0), Fraction(c.norm().valuation, 2)]
    for b, a in zip(alpha_h.basis, alpha_h.values):
        basis.append(b)
        values.append(a / e)
        basis.append(c * b)
        values.append((a + alpha_h.vc) / e)
    out = NormFn(cfg, basis, values)
    if not is_algebra_norm(out):
        raise DomainError("extension is not an algebra norm")
    if not is_self_dual(out):
        raise DualityError("extension is not self-dual")
    for b, a in zip(alpha_h.basis, alpha_h.values):
        if out.eval(b) != a / e:
            raise DomainError("extension does not restrict correctly")
    return out


def extend_dim4(alpha_w: NormFn, d4: CompositionSubalgebra) -> NormFn:
    """The unique self-dual algebra norm on V extending a self-dual norm
    on W = D4-perp.

    Split case: alpha_w must be split by a Witt basis (h, h', k, k');
    the norm on D4 is forced by alpha0(e+ b) = -alpha(h) - alpha(k).
    Anisotropic case: both sides carry (1/2) v(Q)."""
    cfg = d4.cfg
    if d4.dim != 4:
        raise KindError("extension needs a 4-dimensional subalgebra")
    for b in alpha_w.basis:
        for x in d4.basis:
            if not bilinear_f(b, x).is_zero:
                raise DomainError("norm basis must span the orthogonal of D")
    if d4.kind == "division-dim4":
        return _extend_dim4_anisotropic(alpha_w, d4)
    h, hp, k, kp = alpha_w.basis
    ah, ahp, ak, akp = alpha_w.values
    one = cfg.one()
    if (bilinear_f(h, hp) != one or bilinear_f(k, kp) != one
            or not h.norm().is_zero or not hp.norm().is_zero
            or not k.norm().is_zero or not kp.norm().is_zero
            or not bilinear_f(h, k).is_zero or not bilinear_f(h, kp).is_zero
            or not bilinear_f(hp, k).is_zero or not bilinear_f(hp, kp).is_zero):
        raise DomainError("split extension needs a Witt basis (h, h', k, k')")
    if ahp != -ah or akp != -ak:
        raise DualityError("norm on W is not self-dual")
    eplus, eminus, _ = idempotents_from_isotropic_pair(h, hp)
    b = (k + kp) * (h - hp)
    for x, nm in ((eplus, "e+"), (eminus, "e-"), (b, "b")):
        if not d4.contains(x):
            raise DomainError(f"{nm} does not lie in D")
    basis = [eplus, eminus, eplus * b, eminus * b, h, hp, k, kp]
    values = [Fraction(0), Fraction(0), -ah - ak, ah + ak, ah, ahp, ak, akp]
    out = NormFn(cfg, basis, values)
    _check_extension(out, alpha_w)
    return reorder_to_standard(out)


def _extend_dim4_anisotropic(alpha_w: NormFn, d4) -> NormFn:
    cfg = d4.cfg
    half = Fraction(1, 2)
    for b, v in zip(alpha_w.basis, alpha_w.values):
        if v != half * b.norm().valuation:
            raise DualityError(
                "anisotropic W carries only the norm (1/2) v(Q)")
    dbasis = _orthogonalize(d4)
    basis = dbasis + list(alpha_w.basis)
    values = [half * x.norm().valuation for x in dbasis] + list(alpha_w.values)
    out = NormFn(cfg, basis, values)
    _check_extension(out, alpha_w)
    return out


def _orthogonalize(d4: CompositionSubalgebra):
    """Gram-Schmidt a basis of D4 (p odd)."""
    cfg = d4.cfg
    out = []
    todo = list(d4.basis)
    # prefer the unit first: its norm is a unit scalar
    todo.sort(key=lambda o: 0 if o == octonion_unit(cfg) else 1)
    for x in todo:
        for y in out:
            x = x - y.scale(bilinear_f(x, y) * (2 * y.norm()).inv())
        if x.is_zero:
            continue
        if x.norm().is_zero:
            raise DomainError("isotropic vector during orthogonalization")
        out.append(x)
    if len(out) != 4:
        raise DomainError("orthogonalization failed")
    return out


# -- lattice sequences and filtration lattices ------------------------------------

class LatticeSeq:
    """Period-m lattice sequence of a rational norm: Lambda(i) is the
    lattice of vectors with norm >= i/m, described by exponent tuples
    over the splitting basis."""

    def __init__(self, norm: NormFn):
        self.norm = norm
        self.cfg = norm.cfg
        denoms = [v.denominator for v in norm.values]
        self.m = 1
        for q in denoms:
            self.m = self.m * q // math.gcd(self.m, q)

    def exponents(self, i: int):
        """Valuation exponents of Lambda(i) over the splitting basis."""
        return tuple(math.ceil(Fraction(i, self.m) - a)
                     for a in self.norm.values)

    def contains(self, i: int, x: Octonion) -> bool:
        co = self.norm.coordinates(x)
        return all(c.is_zero or c.valuation >= e
                   for c, e in zip(co, self.exponents(i)))

    def jump_table(self) -> str:
        lines = []
        for i in range(self.m):
            exps = ", ".join(str(e) for e in self.exponents(i))
            lines.append(f"{i} -> ({exps})")
        return "\n".join(lines)

    def is_self_dual(self) -> bool:
        """Lambda(i)* = Lambda(1-i) holds iff the norm is self-dual."""
        return is_self_dual(self.norm)

    @property
    def dual_invariant(self) -> int:
        if not self.is_self_dual():
            raise DualityError("sequence is not self-dual")
        return 1

    def __repr__(self):
        return f"LatticeSeq(m={self.m})"


def lattice_seq_from_norm(alpha: NormFn) -> LatticeSeq:
    return LatticeSeq(alpha)


class FiltrationLattice:
    """The endomorphism lattice A_k(Lambda): entrywise valuation bounds
    ceil(k/m + a_j - a_l) over the splitting basis."""

    def __init__(self, seq: LatticeSeq, k: int):
        self.seq = seq
        self.k = k
        self.cfg = seq.cfg
        n = seq.norm.dim
        if n != 8:
            raise DomainError("filtration lattices live on all of V")
        a = seq.norm.values
        m = seq.m
        self.bounds = [[Fraction(k, m) + a[j] - a[l] for j in range(n)]
                       for l in range(n)]
        self._std = all(
            b == basis_octonion(self.cfg, lbl) for b, lbl in
            zip(seq.norm.basis, (-4, -1, -2, -3, 3, 2, 1, 4)))
        if self._std:
            self._b = self._binv = None
        else:
            self._b = transpose([list(b.coords) for b in seq.norm.basis])
            self._binv = inv(self._b)

    def entry_bound(self, l: int, j: int) -> int:
        return math.ceil(self.bounds[l][j])

    def in_basis(self, x: EndV):
        if self._std:
            return x.rows
        from .linalg import mat_mul
        return mat_mul(self._binv, mat_mul(x.rows, self._b))

    def contains(self, x: EndV) -> bool:
        y = self.in_basis(x)
        for l in range(8):
            for j in range(8):
                c = y[l][j]
                if not c.is_zero and c.valuation < self.entry_bound(l, j):
                    return False
        return True

    def contains_group(self, g: EndV) -> bool:
        """Membership of g in P^k: (g - 1) in the k-th lattice (k >= 1)."""
        return self.contains(g - EndV.identity(self.cfg))


def seq_valuation(seq: LatticeSeq, x: EndV):
    """v_Lambda(x): the largest k with x in A_k, or +inf for zero."""
    fl = FiltrationLattice(seq, 0)
    y = fl.in_basis(x)
    a = seq.norm.values
    best = math.inf
    for l in range(8):
        for j in range(8):
            c = y[l][j]
            if c.is_zero:
                continue
            cand = math.floor((c.valuation + a[l] - a[j]) * seq.m)
            if cand < best:
                best = cand
    return best


def filtration_lattice(seq: LatticeSeq, k: int) -> FiltrationLattice:
    return FiltrationLattice(seq, k)
