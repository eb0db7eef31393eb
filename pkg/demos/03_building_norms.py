"""Walkthrough: self-dual algebra norms (points of the exceptional-group
building), the three canonical extension procedures, and the lattice
sequences with their filtration bounds."""

from fractions import Fraction

from g2kit.endo import special_hermitian_basis
from g2kit.norms import (HermitianNorm, NormFn, extend_dim4, extend_sl3,
                         extend_su21, filtration_lattice, is_algebra_norm,
                         is_self_dual, lattice_seq_from_norm, volume)
from g2kit.octonions import (anisotropic_plane, basis_octonion,
                             hyperbolic_plane, standard_split_dim4)
from g2kit.scalars import FieldConfig

cfg = FieldConfig(p=5, precision=8)
e = {lbl: basis_octonion(cfg, lbl) for lbl in (-4, -1, -2, -3, 3, 2, 1, 4)}
d = hyperbolic_plane(cfg)

alpha_plus = NormFn(cfg, [e[1], e[2], e[3]],
                    [Fraction(1, 3), Fraction(1, 3), Fraction(-2, 3)])
print("volume of the thirds norm on W+:", volume(alpha_plus, d))
ext = extend_sl3(alpha_plus, d)
print("extension is a self-dual algebra norm:",
      is_algebra_norm(ext), is_self_dual(ext))

seq = lattice_seq_from_norm(ext)
print("period of the lattice sequence:", seq.m)
print("jump table:")
print(seq.jump_table())
a1 = filtration_lattice(seq, 1)
print("A_1 diagonal bound:", a1.entry_bound(0, 0))

plane = anisotropic_plane(cfg)
wm, w0, wp = special_hermitian_basis(plane)
ah = HermitianNorm(plane, [wm, w0, wp], [-1, 0, 1])
ext2 = extend_su21(ah, plane)
print("\nhermitian extension (e = %d) self-dual algebra norm:" % ah.e,
      is_algebra_norm(ext2) and is_self_dual(ext2))

d4 = standard_split_dim4(cfg)
alpha_w = NormFn(cfg, [e[2], e[-2], e[3], e[-3]],
                 [Fraction(1, 2), Fraction(-1, 2), 0, 0])
ext3 = extend_dim4(alpha_w, d4)
print("dim-4 extension self-dual algebra norm:",
      is_algebra_norm(ext3) and is_self_dual(ext3))
print("its forced value on the e+b line:", ext3.values[2])
