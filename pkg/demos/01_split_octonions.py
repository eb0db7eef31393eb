"""Walkthrough: the split octonion algebra over F_5((t)).

Builds the Witt-basis algebra, shows the derived form constants, walks a
Cayley-Dickson doubling chain back up to the full algebra, and
constructs the idempotent pair of an isotropic dual pair.
"""

import random

from g2kit.octonions import (basis_octonion, bilinear_f, center_subalgebra,
                             double, idempotents_from_isotropic_pair,
                             octonion_unit, random_isotropic_pair,
                             random_octonion)
from g2kit.scalars import FieldConfig

cfg = FieldConfig(p=5, precision=8)
e = {lbl: basis_octonion(cfg, lbl) for lbl in (-4, -1, -2, -3, 3, 2, 1, 4)}
one = octonion_unit(cfg)

print("unit element:", one)
print("e_1 * e_2 =", e[1] * e[2])
print("e_1 * e_-1 =", e[1] * e[-1])
print("Q(e_1) =", e[1].norm(), "   f(e_1, e_-1) =", bilinear_f(e[1], e[-1]))

rng = random.Random(0)
x, y = random_octonion(cfg, rng), random_octonion(cfg, rng)
print("\nQ is multiplicative:", (x * y).norm() == x.norm() * y.norm())
print("conjugation is anti-multiplicative:",
      (x * y).conj() == y.conj() * x.conj())

print("\ndoubling chain from the center:")
d = center_subalgebra(cfg)
for a in (e[1] + e[-1], e[2] + e[-2], e[3] - e[-3]):
    d = double(d, a)
    print(f"  doubled by {a!r}: dim {d.dim}, kind {d.kind}")

h, hp = random_isotropic_pair(cfg, rng)
ep, em, c = idempotents_from_isotropic_pair(h, hp)
print("\nidempotents from a random isotropic pair:")
print("  e+ idempotent:", ep * ep == ep)
print("  e+ + e- = 1:", ep + em == one)
print("  c h = h and c h' = -h':", c * h == h and c * hp == -hp)
