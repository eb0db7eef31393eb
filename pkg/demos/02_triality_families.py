"""Walkthrough: related triples t1(xy) = t2(x) t3(y) on all the closed-form
families, the six-element orbit, and the fixed points (the automorphism
group and its derivations)."""

import random

from g2kit.endo import is_derivation, random_so
from g2kit.octonions import sqrt_scalar
from g2kit.scalars import FieldConfig
from g2kit.triality import (LieTrialityGroup, diag_lie_triple, is_g2_element,
                            orbit_triples, root_triple, solve_glw,
                            solve_lie_triple)

cfg = FieldConfig(p=5, precision=8)
lam = cfg.t()

tri = root_triple(cfg, -1, -3, lam)
print("root triple (u_{-1,-3}, u_{4,2}, u_{2,-4}) is related:", tri is not None)
print("its orbit has", len(orbit_triples(tri)), "related triples")

tri_fixed = root_triple(cfg, 1, -2, lam)
print("mixed-sign root is triality-fixed and an automorphism:",
      tri_fixed.t1 == tri_fixed.t2 == tri_fixed.t3,
      is_g2_element(tri_fixed.t1))

print("\ndiagonal Lie triple for D_4(t):")
d4 = diag_lie_triple(cfg, 4, lam)
print("  related:", d4 is not None)

u = cfg.one() + cfg.t()
g = [[cfg.from_int(4), cfg.zero(), cfg.zero()],
     [cfg.zero(), cfg.one(), cfg.zero()],
     [cfg.zero(), cfg.zero(), cfg.one()]]
w = sqrt_scalar(u * cfg.from_int(4))
s1, s2 = solve_glw(cfg, u, g, w), solve_glw(cfg, u, g, -w)
print("\npolarization-stabilizer family: two witnesses give two solutions:",
      s1.t2 != s2.t2)

rng = random.Random(0)
gamma = LieTrialityGroup()
x = random_so(cfg, rng, width=1, vmin=0, vmax=1)
tri = solve_lie_triple(x)
print("\nrandom so(V) element:")
print("  derivation?", is_derivation(x))
print("  solver returns the diagonal triple?", tri.t2 == x and tri.t3 == x)
avg = gamma.average(x)
print("  triality average is a derivation:", is_derivation(avg))
