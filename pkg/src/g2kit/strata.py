"""Semisimple strata [Lambda, n, r, beta] of the derivation Lie algebra:
validity checks, the four-case classification by the kernel subalgebra,
and the type-D lifting from sl3 / su(2,1) data across a 2-dimensional
composition subalgebra.
"""

from __future__ import annotations

import math
from .endo import (EndV, WitnessBlock, analyze_semisimple,
                   is_derivation, lift_sl3, lift_su21, verify_witness,
                   _poly_coprime, _poly_eval_matrix)
from .errors import LiftError, VolumeError, WitnessError
from .linalg import Subspace, mat_vec
from .norms import (HermitianNorm, LatticeSeq, NormFn, extend_sl3,
                    extend_su21, lattice_seq_from_norm, seq_valuation,
                    volume)
from .octonions import (CompositionSubalgebra, Octonion,
                        ordered_polarization)
from .scalars import FieldConfig, Scalar


class Stratum:
    """[Lambda, n, r, beta] with a block-decomposition witness."""

    def __init__(self, seq: LatticeSeq, n: int, r: int, beta: EndV, witness):
        self.seq = seq
        self.n = n
        self.r = r
        self.beta = beta
        self.witness = list(witness)
        self.cfg = beta.cfg

    @property
    def is_null(self) -> bool:
        return self.beta.is_zero()

    def __repr__(self):
        return f"Stratum(n={self.n}, r={self.r}, null={self.is_null})"

    def to_json(self):
        return {
            "lattice": self.seq.norm.to_json(),
            "n": self.n,
            "r": self.r,
            "beta": self.beta.to_json(),
            "witness": {
                "factors": [[str(c) if isinstance(c, Scalar) else str(c)
                             for c in blk.factor] for blk in self.witness],
                "kernels": [[list(map(str, row)) for row in blk.space.rows]
                            for blk in self.witness],
            },
        }


def validate(stratum: Stratum) -> dict:
    """Report on the testable clauses of semisimplicity.

    Checks: beta is a derivation; beta lies in A_{-n}; each block's factor
    annihilates it; blocks decompose V and are beta-stable; the factors are
    pairwise coprime (exact gcd); the lattice sequence is split by the
    decomposition; per-block valuations match (n_i = -v of the block, or
    r for a null block, with n the maximum).  The negative clause (no
    coalescing into a simple stratum) is recorded as assumed-by-witness.
    """
    checks = []
    violations = []

    def record(name, ok, detail=""):
        checks.append({"name": name, "status": "pass" if ok else "fail"})
        if not ok:
            violations.append(f"{name}: {detail}" if detail else name)

    s = stratum
    record("range", 0 <= s.r <= s.n and s.n >= 1,
           f"need 0 <= r <= n with n >= 1, got r={s.r} n={s.n}")
    record("derivation", is_derivation(s.beta))
    if s.is_null:
        record("null-valuation", s.r == s.n, "null stratum needs r = n")
    else:
        v = seq_valuation(s.seq, s.beta)
        record("lattice-valuation", v >= -s.n,
               f"v_Lambda(beta) = {v} < -n = {-s.n}")
    try:
        verify_witness(s.beta, s.witness)
        record("witness", True)
    except WitnessError as exc:
        record("witness", False, str(exc))
    # pairwise coprimality (verify_witness checks it; surface separately)
    coprime = True
    for a in range(len(s.witness)):
        for b in range(a + 1, len(s.witness)):
            if not _poly_coprime(s.cfg, s.witness[a].factor,
                                 s.witness[b].factor):
                coprime = False
    record("coprimality", coprime, "witness factors share a root")
    record("lattice-splitting", _lattice_split_by(s.seq, s.witness),
           "sequence is not split by the decomposition")
    ok_vals = True
    depths = []
    for blk in s.witness:
        nb = _block_valuation(s, blk)
        if nb is None:
            depths.append(s.r)  # null block convention n_i = r
            continue
        depths.append(nb)
        if nb > s.n:
            ok_vals = False
    if not s.is_null and depths and max(depths) != s.n:
        ok_vals = False
    record("block-valuations", ok_vals,
           f"block depths {depths} inconsistent with n = {s.n}")
    checks.append({"name": "not-equivalent-to-simple",
                   "status": "assumed-by-witness"})
    return {"check": "validate", "violations": violations, "checks": checks}


def _block_valuation(s: Stratum, blk):
    """n_i = -v of beta on the block w.r.t. the restricted sequence, or
    None for a null block; needs the block to be spanned by norm-basis
    vectors (all fixtures are), else falls back to the global valuation."""
    rows = [list(r) for r in blk.space.rows]
    imgs = [mat_vec(s.beta.rows, r) for r in rows]
    if all(all(x.is_zero for x in img) for img in imgs):
        return None
    idx = [i for i, b in enumerate(s.seq.norm.basis)
           if blk.space.contains(b.coords)]
    if len(idx) != blk.space.dim:
        return -seq_valuation(s.seq, s.beta)
    m = s.seq.m
    a = s.seq.norm.values
    best = None
    for j in idx:
        co = s.seq.norm.coordinates(
            Octonion(s.cfg, mat_vec(s.beta.rows,
                                    list(s.seq.norm.basis[j].coords))))
        for l in idx:
            c = co[l]
            if c.is_zero:
                continue
            cand = math.floor((c.valuation + a[l] - a[j]) * m)
            best = cand if best is None else min(best, cand)
    return None if best is None else -best


def _lattice_split_by(seq: LatticeSeq, witness) -> bool:
    """Norm is split by the block decomposition: every splitting-basis
    vector's block projections do not drop below its value."""
    cfg = seq.cfg
    spaces = [blk.space for blk in witness]
    cols = []
    for sp in spaces:
        cols.extend([list(r) for r in sp.rows])
    from .linalg import solve, transpose
    colmat = transpose(cols)
    for b, val in zip(seq.norm.basis, seq.norm.values):
        co = solve(colmat, list(b.coords))
        idx = 0
        for sp in spaces:
            part = [cfg.zero()] * 8
            for k in range(sp.dim):
                c = co[idx + k]
                if not c.is_zero:
                    for t in range(8):
                        part[t] = part[t] + c * sp.rows[k][t]
            idx += sp.dim
            proj = Octonion(cfg, part)
            if not proj.is_zero and seq.norm.eval(proj) < val:
                return False
    return True


class ClassifiedStratum:
    """A stratum with its classification tag and restricted stratum data."""

    def __init__(self, stratum: Stratum, case_tag: str, analysis,
                 restricted: dict):
        self.stratum = stratum
        self.case_tag = case_tag
        self.analysis = analysis
        self.restricted = restricted

    def __repr__(self):
        return f"ClassifiedStratum({self.case_tag})"


def classify(stratum: Stratum) -> ClassifiedStratum:
    """The four-case classification of a nonzero semisimple stratum by the
    kernel subalgebra of beta; a zero beta gets the null tag."""
    rep = validate(stratum)
    if rep["violations"]:
        raise WitnessError("; ".join(rep["violations"]))
    if stratum.is_null:
        return ClassifiedStratum(stratum, "null", None, {})
    analysis = analyze_semisimple(stratum.beta, stratum.witness)
    s = stratum
    if analysis.case_tag == "(i) hyperbolic-plane":
        wp = analysis.extras["wplus_basis"]
        bw = analysis.extras["beta_wplus"]
        from .linalg import det
        if det(bw).is_zero:
            raise WitnessError(
                "case (i) needs beta injective on W+; enlarge the kernel")
        restricted = {
            "basis": wp,
            "beta_matrix": bw,
            "norm": _restrict_norm(s.seq.norm, wp),
            "n": s.n, "r": s.r,
        }
    elif analysis.case_tag == "(ii) quadratic-extension":
        restricted = {
            "fprime": analysis.v0,
            "beta_w": analysis.extras["beta_w"],
            "n": s.n, "r": s.r,
        }
    elif analysis.case_tag == "(iii) dim4-split-eigen":
        restricted = {
            "lambda": analysis.extras["lambda"],
            "w_lambda": analysis.extras["w_lambda"],
            "n": s.n, "r": s.r,
        }
    else:
        restricted = {
            "u": analysis.extras["u"],
            "min_poly": analysis.extras["min_poly"],
            "n": s.n, "r": s.r,
        }
    return ClassifiedStratum(stratum, analysis.case_tag, analysis, restricted)


def _restrict_norm(norm: NormFn, basis_subset):
    idx = []
    for b in basis_subset:
        hit = next((i for i, x in enumerate(norm.basis) if x == b), None)
        if hit is None:
            return None  # basis not adapted; restriction via eval only
    for b in basis_subset:
        idx.append(next(i for i, x in enumerate(norm.basis) if x == b))
    return norm.restrict(idx)


def trace_adjust(cfg: FieldConfig, gamma):
    """gamma - (1/3) tr(gamma) id: the traceless representative used when
    approximating strata inside the split-case Lie algebra (p != 3)."""
    third = cfg.from_int(3).inv()
    tr = gamma[0][0] + gamma[1][1] + gamma[2][2]
    shift = tr * third
    out = [[x for x in row] for row in gamma]
    for i in range(3):
        out[i][i] = out[i][i] - shift
    return out


# -- type-D lifting ----------------------------------------------------------------

class SL3StratumData:
    """A stratum of the traceless 3x3 algebra on W+: a volume-zero norm
    (values on the ordered W+ basis), depths n >= r, the matrix, and
    witness blocks (factor, kernel vectors inside W+)."""

    def __init__(self, alpha_plus: NormFn, n: int, r: int, phi, blocks):
        self.alpha_plus = alpha_plus
        self.n = n
        self.r = r
        self.phi = phi
        self.blocks = blocks  # list of (factor_coeffs, [w+ octonions])


class SU21StratumData:
    """A stratum of the anti-hermitian algebra on W = D-perp: a self-dual
    F'-norm, depths, the D-matrix phi on the norm basis, and witness
    blocks (factor, kernel octonions in W)."""

    def __init__(self, alpha_h: HermitianNorm, n: int, r: int, phi, blocks):
        self.alpha_h = alpha_h
        self.n = n
        self.r = r
        self.phi = phi
        self.blocks = blocks


def lift_type_d_sl3(data: SL3StratumData, d: CompositionSubalgebra) -> Stratum:
    """[check-Lambda, n, r, check-beta]: extend the volume-zero norm and
    the traceless matrix across the split plane D; the lattice valuation
    of the lift is preserved."""
    cfg = d.cfg
    tr = data.phi[0][0] + data.phi[1][1] + data.phi[2][2]
    if not tr.is_zero:
        raise LiftError("matrix must be traceless")
    if volume(data.alpha_plus, d) != 0:
        raise VolumeError("norm on W+ must have volume zero")
    ext = extend_sl3(data.alpha_plus, d)
    seq = lattice_seq_from_norm(ext)
    beta = lift_sl3(data.phi, d)
    witness = _lift_witness_sl3(cfg, d, beta, data.blocks)
    stratum = Stratum(seq, data.n, data.r, beta, witness)
    if beta.is_zero():
        return stratum
    v = seq_valuation(seq, beta)
    if v != -data.n:
        raise LiftError(f"lift changed the depth: v = {v}, expected {-data.n}")
    return stratum


def _lift_witness_sl3(cfg, d, beta, blocks):
    """Witness of the lifted element: the kernel block on D (merged with
    any zero block of the input) plus each input block and its mirror in
    W-, whose factor is the sign-normalized reflection."""
    wp, wm = ordered_polarization(d)
    kernel_rows = [b.coords for b in d.basis]
    staged = []
    for coeffs, vectors in blocks:
        coeffs = [cfg.from_int(c) if isinstance(c, int) else c for c in coeffs]
        if _is_x_poly(cfg, coeffs):
            kernel_rows.extend([v.coords for v in vectors])
            kernel_rows.extend(
                [w.coords for w in _mirror_kernel(cfg, d, beta, coeffs,
                                                  vectors, wm)])
            continue
        staged.append((coeffs, [list(v.coords) for v in vectors]))
        mirror_factor = _reflect_poly(cfg, coeffs)
        mirror_vectors = _mirror_kernel(cfg, d, beta, mirror_factor,
                                        vectors, wm)
        staged.append((mirror_factor,
                       [list(w.coords) for w in mirror_vectors]))
    # a zero eigenvalue makes a mirror factor collide with a direct one;
    # blocks with equal factors merge
    merged = []
    for coeffs, rows in staged:
        hit = next((m for m in merged if _poly_equal(cfg, m[0], coeffs)),
                   None)
        if hit is None:
            merged.append([coeffs, rows])
        else:
            hit[1].extend(rows)
    out_blocks = [WitnessBlock(coeffs, Subspace(cfg, 8, rows))
                  for coeffs, rows in merged]
    return ([WitnessBlock([0, 1], Subspace(cfg, 8, kernel_rows))]
            + out_blocks)


def _poly_equal(cfg, p, q) -> bool:
    def canon(c):
        out = [cfg.from_int(x) if isinstance(x, int) else x for x in c]
        while out and out[-1].is_zero:
            out.pop()
        return out
    return canon(p) == canon(q)


def _mirror_kernel(cfg, d, beta, factor, vectors, wm):
    """Kernel of factor(beta) inside W-, found by exact linear algebra."""
    pb = _poly_eval_matrix(factor, beta)
    from .linalg import kernel as lin_kernel, transpose
    rows = [list(w.coords) for w in wm]
    mat = [mat_vec(pb.rows, r) for r in rows]
    co = lin_kernel(transpose(mat))
    out = []
    for c in co:
        v = [cfg.zero()] * 8
        for cc, r in zip(c, rows):
            for t in range(8):
                v[t] = v[t] + cc * r[t]
        out.append(Octonion(cfg, v))
    return out


def _reflect_poly(cfg, coeffs):
    """+-P(-X), normalized monic."""
    out = []
    for k, c in enumerate(coeffs):
        c = cfg.from_int(c) if isinstance(c, int) else c
        out.append(c if k % 2 == 0 else -c)
    lead = out[-1]
    return [c * lead.inv() for c in out]


def _is_x_poly(cfg, coeffs) -> bool:
    c = [cfg.from_int(x) if isinstance(x, int) else x for x in coeffs]
    return (len(c) >= 2 and c[0].is_zero and not c[1].is_zero
            and all(x.is_zero for x in c[2:]))


def lift_type_d_su21(data: SU21StratumData,
                     d: CompositionSubalgebra) -> Stratum:
    """[vec-Lambda, n, r, vec-beta]: extend a self-dual F'-norm and an
    anti-hermitian traceless matrix across an anisotropic plane D."""
    cfg = d.cfg
    ext = extend_su21(data.alpha_h, d)
    seq = lattice_seq_from_norm(ext)
    beta = lift_su21(data.phi, d, data.alpha_h.basis)
    kernel_rows = [b.coords for b in d.basis]
    out_blocks = []
    for coeffs, vectors in data.blocks:
        coeffs = [cfg.from_int(c) if isinstance(c, int) else c for c in coeffs]
        if _is_x_poly(cfg, coeffs):
            kernel_rows.extend([v.coords for v in vectors])
            continue
        out_blocks.append(WitnessBlock(
            coeffs, Subspace(cfg, 8, [v.coords for v in vectors])))
    witness = [WitnessBlock([0, 1], Subspace(cfg, 8, kernel_rows))] + out_blocks
    stratum = Stratum(seq, data.n, data.r, beta, witness)
    if beta.is_zero():
        return stratum
    v = seq_valuation(seq, beta)
    if v != -data.n:
        raise LiftError(f"lift changed the depth: v = {v}, expected {-data.n}")
    return stratum
