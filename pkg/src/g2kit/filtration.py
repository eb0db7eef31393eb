"""Finite filtration quotients: the Cayley transform between lattice and
congruence-subgroup filtrations, its compatibility with triality on
generators, the character pairing psi_b of the quotients, the
counterexample showing the Cayley transform misses the automorphism
group, and the symplectic fixed-point identity over F_p.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .endo import (EndV, d_torus_lie, is_derivation, lift_sl3,
                   so_basis_labels, u_root_lie)
from .errors import DomainError, MembershipError, SingularError
from .norms import LatticeSeq, filtration_lattice
from .octonions import IDX, hyperbolic_plane
from .scalars import Scalar
from .triality import (GroupGenerator, GroupTriality, LieTrialityGroup,
                       is_g2_element, is_g2_lie)


def cayley(x: EndV) -> EndV:
    """C(X) = (1 + X/2)(1 - X/2)^{-1}."""
    cfg = x.cfg
    half = cfg.from_int(2).inv()
    ident = EndV.identity(cfg)
    plus = ident + x * half
    minus = ident - x * half
    try:
        return plus * minus.inverse()
    except SingularError as exc:
        raise SingularError("1 - X/2 is not invertible") from exc


def cayley_inv(g: EndV) -> EndV:
    """C^{-1}(g) = 2 (g - 1)(g + 1)^{-1}."""
    cfg = g.cfg
    ident = EndV.identity(cfg)
    try:
        return (g - ident) * (g + ident).inverse() * cfg.from_int(2)
    except SingularError as exc:
        raise SingularError("g + 1 is not invertible") from exc


def cayley_scalar(lam: Scalar) -> Scalar:
    cfg = lam.cfg
    half = cfg.from_int(2).inv()
    return (cfg.one() + lam * half) * (cfg.one() - lam * half).inv()


def moy_counterexample(u: Scalar) -> bool:
    """X with eigenvalues (u, u, -2u) on W+ lies in the Lie algebra of the
    automorphism group, but its Cayley transform is not an automorphism:
    C(u)^2 C(-2u) != 1."""
    cfg = u.cfg
    if u.is_zero or u.valuation < 1:
        raise DomainError("need a nonzero u with v(u) >= 1")
    d = hyperbolic_plane(cfg)
    z = cfg.zero()
    phi = [[u, z, z], [z, u, z], [z, z, -(u + u)]]
    x = lift_sl3(phi, d)
    if not is_g2_lie(x):
        raise DomainError("diagonal lift is not a derivation")
    g = cayley(x)
    det_wplus = cayley_scalar(u) * cayley_scalar(u) * cayley_scalar(-(u + u))
    broken = det_wplus != cfg.one()
    if broken and is_g2_element(g):
        raise DomainError("determinant detects a failure the basis test missed")
    if not broken and not is_g2_element(g):
        raise DomainError("basis test detects a failure the determinant missed")
    return broken


# -- generators of the filtration pieces -----------------------------------------

class GeneratorRecord:
    """A threshold generator of A_r with its exact Cayley image in P^r."""

    def __init__(self, name, lie, group):
        self.name = name
        self.lie = lie      # EndV in A_r
        self.group = group  # GroupGenerator with matrix() == cayley(lie)


def lie_generators(seq: LatticeSeq, r: int):
    """Threshold generators of A_r(Lambda) paired with their Cayley
    images d_i(C(lam)) and u_{i,j}(lam)."""
    cfg = seq.cfg
    fl = filtration_lattice(seq, r)
    out = []
    for i in (1, 2, 3, 4):
        b = fl.entry_bound(IDX[i], IDX[i])
        lam = cfg.t(b)
        mu = cayley_scalar(lam)
        ms = [mu if i == k else cfg.one() for k in (1, 2, 3)]
        u = mu if i == 4 else cfg.one()
        out.append(GeneratorRecord(
            f"D_{i}(t^{b})", d_torus_lie(cfg, i, lam),
            GroupGenerator.torus(u, *ms)))
    for (i, j) in so_basis_labels()[1]:
        b = fl.entry_bound(IDX[-j], IDX[i])
        lam = cfg.t(b)
        out.append(GeneratorRecord(
            f"U_{i},{j}(t^{b})", u_root_lie(cfg, i, j, lam),
            GroupGenerator.root(i, j, lam)))
    return out


class FiltrationQuotient:
    """The abelian quotient A_r / A_s (1 <= r <= s <= 2r) with canonical
    entrywise-truncated coset representatives, and the matching group
    quotient P^r / P^s under the Cayley bijection."""

    def __init__(self, seq: LatticeSeq, r: int, s: int):
        if not 1 <= r <= s <= 2 * r:
            raise DomainError("need 1 <= r <= s <= 2r")
        self.seq = seq
        self.r = r
        self.s = s
        self.cfg = seq.cfg
        self.lat_r = filtration_lattice(seq, r)
        self.lat_s = filtration_lattice(seq, s)

    def reduce(self, x: EndV) -> EndV:
        """Canonical representative of x + A_s: entrywise truncation at the
        A_s bounds (in the splitting basis)."""
        y = self.lat_s.in_basis(x)
        out = [[y[l][j].truncate(self.bound_fraction(l, j)) for j in range(8)]
               for l in range(8)]
        if self.lat_s._std:
            return EndV(self.cfg, out)
        from .linalg import mat_mul
        return EndV(self.cfg, mat_mul(self.lat_s._b,
                                      mat_mul(out, self.lat_s._binv)))

    def bound_fraction(self, l, j) -> Fraction:
        return Fraction(math.ceil(self.lat_s.bounds[l][j]))

    def congruent_lie(self, x: EndV, y: EndV) -> bool:
        return self.lat_s.contains(x - y)

    def congruent_group(self, g: EndV, h: EndV) -> bool:
        # for h in P(Lambda), A_s h = A_s, so g h^{-1} in P^s iff g - h in A_s
        return self.lat_s.contains(g - h)

    def generators(self):
        return lie_generators(self.seq, self.r)


def quotient_iso_check(seq: LatticeSeq, r: int, s: int) -> dict:
    """Generator-level verification that the Cayley bijection induces a
    triality-equivariant isomorphism A_r/A_s -> P^r/P^s, and that fixed
    points of the quotient lift to fixed points of A_r.

    Returns a report dict with a (expected empty) list of violations.
    """
    q = FiltrationQuotient(seq, r, s)
    cfg = seq.cfg
    gens = q.generators()
    violations = []
    cayley_of = {g.name: cayley(g.lie) for g in gens}
    # (a) Cayley is a homomorphism modulo P^s
    for ga in gens:
        for gb in gens:
            lhs = cayley_of[ga.name] * cayley_of[gb.name]
            rhs = cayley(ga.lie + gb.lie)
            if not q.congruent_group(lhs, rhs):
                violations.append(
                    f"homomorphism failure at {ga.name}, {gb.name}")
    # (b) Cayley commutes with triality modulo P^s; the group images are
    # exactly d_i(C(lam)) and u_{i,j}(lam)
    lie_gamma = LieTrialityGroup()
    grp_gamma = GroupTriality(cfg)
    for g in gens:
        cx = cayley(g.lie)
        if cx != g.group.matrix(cfg):
            violations.append(f"Cayley image mismatch at {g.name}")
            continue
        for word in LieTrialityGroup.WORDS:
            lhs = cayley(lie_gamma.apply(word, g.lie))
            rhs = grp_gamma.apply(word, g.group)
            if not q.congruent_group(lhs, rhs):
                violations.append(
                    f"triality congruence failure at {g.name}, {word}")
    # (c) quotient fixed points lift to honest fixed points
    for x in _quotient_fixed_samples(seq, r, s):
        for word in LieTrialityGroup.WORDS:
            if not q.congruent_lie(lie_gamma.apply(word, x), x):
                violations.append("sample is not quotient-fixed")
        lifted = lie_gamma.average(x)
        if not q.lat_r.contains(lifted):
            violations.append("lift leaves A_r")
        if not is_derivation(lifted):
            violations.append("lift is not a derivation")
        if not q.congruent_lie(lifted, x):
            violations.append("lift changes the coset")
    return {
        "check": "quotient_iso",
        "parameters": {"r": r, "s": s, "m": seq.m, "p": cfg.p},
        "generators_tested": len(gens),
        "violations": violations,
    }


def _quotient_fixed_samples(seq: LatticeSeq, r: int, s: int):
    """Elements of A_r fixed by triality modulo A_s: exact orbit sums of
    root generators, traceless diagonal derivations, and s-level
    perturbations of both."""
    cfg = seq.cfg
    fl_r = filtration_lattice(seq, r)
    fl_s = filtration_lattice(seq, s)
    out = []
    # short-root orbit sum and its perturbation
    for (i, j) in ((-1, -3), (2, 1)):
        parts = _orbit_partners(i, j)
        b = max(fl_r.entry_bound(IDX[-bb], IDX[aa]) for (aa, bb) in parts)
        x = EndV.zero(cfg)
        for (aa, bb) in parts:
            x = x + u_root_lie(cfg, aa, bb, cfg.t(b))
        out.append(x)
        (aa, bb) = parts[0]
        bump = fl_s.entry_bound(IDX[-bb], IDX[aa])
        out.append(x + u_root_lie(cfg, aa, bb, cfg.t(bump)))
    # diagonal derivation D_1(la) + D_2(la) + D_3(-2 la) and perturbation
    b = fl_r.entry_bound(IDX[1], IDX[1])
    la = cfg.t(b)
    diag = (d_torus_lie(cfg, 1, la) + d_torus_lie(cfg, 2, la)
            + d_torus_lie(cfg, 3, -(la + la)))
    out.append(diag)
    bs = fl_s.entry_bound(IDX[1], IDX[1])
    out.append(diag + d_torus_lie(cfg, 1, cfg.t(bs)))
    return out


def _orbit_partners(i, j):
    from .triality import _root_triple_descriptors
    d = _root_triple_descriptors(i, j)
    seen = []
    for (a, b, _) in d:
        if (a, b) not in seen:
            seen.append((a, b))
    if len(seen) in (1, 3):
        return seen
    # complete the triality orbit of size three
    extra = _root_triple_descriptors(*seen[1][:2])
    for (a, b, _) in extra:
        if (a, b) not in seen:
            seen.append((a, b))
    return seen[:3]


# -- the character pairing --------------------------------------------------------

def psi_b(seq: LatticeSeq, s: int, b: EndV, x: EndV, r: int) -> int:
    """psi_b(x) = psi(tr(b (x - 1))) for b in A_{1-s} and x in P^r,
    with psi the additive character of conductor p_F; a character of
    the quotient P^r / P^s."""
    if not filtration_lattice(seq, 1 - s).contains(b):
        raise MembershipError("b must lie in A_{1-s}")
    if not filtration_lattice(seq, r).contains_group(x):
        raise MembershipError("x must lie in P^r")
    ident = EndV.identity(seq.cfg)
    return ((b * (x - ident)).trace()).conductor_character()


def character_counts(seq: LatticeSeq, r: int, s: int):
    """F_p-dimensions of A_{1-s}/A_{1-r} and of A_r/A_s from the entry
    bounds; equal dimensions are the counting half of the duality."""
    def dim(k1, k2):
        f1 = filtration_lattice(seq, k1)
        f2 = filtration_lattice(seq, k2)
        total = 0
        for i in (1, 2, 3, 4):
            total += f2.entry_bound(IDX[i], IDX[i]) \
                - f1.entry_bound(IDX[i], IDX[i])
        for (i, j) in so_basis_labels()[1]:
            total += f2.entry_bound(IDX[-j], IDX[i]) \
                - f1.entry_bound(IDX[-j], IDX[i])
        return total
    return dim(1 - s, 1 - r), dim(r, s)


def trace_triality_invariance(x: EndV, y: EndV) -> bool:
    """tr(XY) = tr(dnu(X) dnu(Y)) for every triality automorphism."""
    gamma = LieTrialityGroup()
    target = (x * y).trace()
    for word in LieTrialityGroup.WORDS:
        if (gamma.apply(word, x) * gamma.apply(word, y)).trace() != target:
            return False
    return True


# -- symplectic fixed points over F_p ----------------------------------------------

def _modp_rref(rows, p):
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    m = len(rows[0])
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [rows[i] for i in range(r)], pivots


def _modp_kernel(rows, p, m):
    red, pivots = _modp_rref(rows, p)
    free = [c for c in range(m) if c not in pivots]
    out = []
    for fc in free:
        v = [0] * m
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-red[r][fc]) % p
        out.append(v)
    return out


class ModpSubspace:
    """Subspace of F_p^n in canonical reduced echelon form."""

    def __init__(self, p, n, vectors):
        self.p = p
        self.n = n
        rows, pivots = _modp_rref([v for v in vectors if any(x % p for x in v)], p)
        self.rows = [tuple(r) for r in rows]
        self.pivots = pivots

    @property
    def dim(self):
        return len(self.rows)

    def contains(self, v):
        v = [x % self.p for x in v]
        for row, c in zip(self.rows, self.pivots):
            if v[c]:
                f = v[c]
                v = [(a - f * b) % self.p for a, b in zip(v, row)]
        return not any(v)

    def __eq__(self, other):
        return self.rows == other.rows

    def vectors(self):
        """All vectors of the subspace (desk scale only)."""
        out = []
        for coeffs in itertools.product(range(self.p), repeat=self.dim):
            v = [0] * self.n
            for c, row in zip(coeffs, self.rows):
                for t in range(self.n):
                    v[t] = (v[t] + c * row[t]) % self.p
            out.append(tuple(v))
        return out


class SymplecticSpace:
    """A symplectic F_p-space with a form-preserving action of a group of
    order 2 or 3."""

    def __init__(self, p: int, form, gamma):
        self.p = p
        self.n = len(form)
        self.form = [[x % p for x in row] for row in form]
        self.gamma = [[x % p for x in row] for row in gamma]
        for i in range(self.n):
            if self.form[i][i] % p:
                raise DomainError("form must be alternating")
            for j in range(self.n):
                if (self.form[i][j] + self.form[j][i]) % p:
                    raise DomainError("form must be alternating")
        red, piv = _modp_rref(self.form, p)
        if len(piv) != self.n:
            raise DomainError("form must be non-degenerate")
        order = self._order()
        if order not in (1, 2, 3):
            raise DomainError("gamma must have order 2 or 3")
        self.order = order
        gt = _modp_mul(_modp_transpose(self.gamma),
                       _modp_mul(self.form, self.gamma, p), p)
        if gt != self.form:
            raise DomainError("gamma must preserve the form")

    def _order(self):
        ident = [[1 if i == j else 0 for j in range(self.n)]
                 for i in range(self.n)]
        acc = self.gamma
        for k in (1, 2, 3):
            if acc == ident:
                return k
            acc = _modp_mul(acc, self.gamma, self.p)
        return 0  # rejected by the constructor

    def pair(self, u, v):
        return sum(u[i] * self.form[i][j] * v[j]
                   for i in range(self.n) for j in range(self.n)) % self.p

    def apply_gamma(self, v):
        return tuple(sum(self.gamma[i][j] * v[j] for j in range(self.n))
                     % self.p for i in range(self.n))

    def fixed_subspace(self) -> ModpSubspace:
        rows = [[(self.gamma[i][j] - (1 if i == j else 0)) % self.p
                 for j in range(self.n)] for i in range(self.n)]
        return ModpSubspace(self.p, self.n, _modp_kernel(rows, self.p, self.n))

    def stable(self, x: ModpSubspace) -> bool:
        return all(x.contains(self.apply_gamma(r)) for r in x.rows)

    def perp(self, x: ModpSubspace) -> ModpSubspace:
        rows = [[sum(r[i] * self.form[i][j] for i in range(self.n)) % self.p
                 for j in range(self.n)] for r in x.rows]
        if not rows:
            ident = [[1 if i == j else 0 for j in range(self.n)]
                     for i in range(self.n)]
            return ModpSubspace(self.p, self.n, ident)
        return ModpSubspace(self.p, self.n,
                            _modp_kernel(rows, self.p, self.n))


def _modp_mul(a, b, p):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum(a[i][l] * b[l][j] for l in range(k)) % p for j in range(m)]
            for i in range(n)]


def _modp_transpose(a):
    return [list(r) for r in zip(*a)]


def gamma_perp(space: SymplecticSpace, x: ModpSubspace) -> bool:
    """The orthogonal of X^Gamma inside V^Gamma equals (X^perp)^Gamma,
    and V decomposes as V_1 perp V_s."""
    if not space.stable(x):
        raise DomainError("subspace must be gamma-stable")
    p, n = space.p, space.n
    fixed = space.fixed_subspace()
    x_fixed = ModpSubspace(p, n, [r for r in x.vectors()
                                  if fixed.contains(r)])
    # orthogonal of X^Gamma inside V^Gamma, by direct scan of V^Gamma
    lhs_vecs = [v for v in fixed.vectors()
                if all(space.pair(v, r) == 0 for r in x_fixed.rows)]
    lhs = ModpSubspace(p, n, lhs_vecs)
    xperp = space.perp(x)
    rhs = ModpSubspace(p, n, [r for r in xperp.vectors()
                              if fixed.contains(r)])
    if lhs != rhs:
        return False
    # V = V_1 perp V_s for the complementary eigenpiece
    gam = space.gamma
    if space.order == 1:
        return lhs == rhs
    if space.order == 2:
        rows = [[(gam[i][j] + (1 if i == j else 0)) % p for j in range(n)]
                for i in range(n)]
    else:
        g2 = _modp_mul(gam, gam, p)
        rows = [[(g2[i][j] + gam[i][j] + (1 if i == j else 0)) % p
                 for j in range(n)] for i in range(n)]
    vs = ModpSubspace(p, n, _modp_kernel(rows, p, n))
    if fixed.dim + vs.dim != n:
        return False
    for u in fixed.rows:
        for w in vs.rows:
            if space.pair(u, w):
                return False
    return True


def enumerate_subspaces(p: int, n: int):
    """All subspaces of F_p^n as ModpSubspace (desk scale only)."""
    out = [ModpSubspace(p, n, [])]
    for k in range(1, n + 1):
        for pivots in itertools.combinations(range(n), k):
            free_pos = []
            for r, pc in enumerate(pivots):
                for c in range(pc + 1, n):
                    if c not in pivots:
                        free_pos.append((r, c))
            for assign in itertools.product(range(p), repeat=len(free_pos)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (rr, cc), val in zip(free_pos, assign):
                    rows[rr][cc] = val
                sub = ModpSubspace(p, n, rows)
                if sub.dim == k and sub.pivots == list(pivots):
                    out.append(sub)
    return out


def standard_symplectic_swap(p: int) -> SymplecticSpace:
    """Two hyperbolic planes over F_p with the order-2 swap action."""
    j2 = [[0, 1], [-1, 0]]
    form = [[0] * 4 for _ in range(4)]
    for bi in range(2):
        for a in range(2):
            for b in range(2):
                form[2 * bi + a][2 * bi + b] = j2[a][b] % p
    gamma = [[0] * 4 for _ in range(4)]
    for a in range(2):
        gamma[a][2 + a] = 1
        gamma[2 + a][a] = 1
    return SymplecticSpace(p, form, gamma)


def standard_symplectic_cycle(p: int) -> SymplecticSpace:
    """Three hyperbolic planes over F_p with the order-3 cyclic action."""
    j2 = [[0, 1], [-1, 0]]
    form = [[0] * 6 for _ in range(6)]
    for bi in range(3):
        for a in range(2):
            for b in range(2):
                form[2 * bi + a][2 * bi + b] = j2[a][b] % p
    gamma = [[0] * 6 for _ in range(6)]
    for bi in range(3):
        for a in range(2):
            gamma[2 * ((bi + 1) % 3) + a][2 * bi + a] = 1
    return SymplecticSpace(p, form, gamma)


def random_stable_subspace(space: SymplecticSpace, rng) -> ModpSubspace:
    """Span of complete gamma-orbits of random vectors: always stable."""
    n, p = space.n, space.p
    vecs = []
    for _ in range(rng.randrange(1, 3)):
        v = tuple(rng.randrange(p) for _ in range(n))
        vecs.append(v)
        w = v
        for _ in range(space.order - 1):
            w = space.apply_gamma(w)
            vecs.append(w)
    return ModpSubspace(p, n, vecs)
