"""Walkthrough: semisimple strata, their four-case classification by the
kernel subalgebra, the type-D lift from traceless 3x3 data, and the
validator catching corrupted fixtures."""

from g2kit.fixtures import (corrupted_strata, sl3_regular_data,
                            stratum_corpus)
from g2kit.octonions import hyperbolic_plane
from g2kit.scalars import FieldConfig
from g2kit.strata import classify, lift_type_d_sl3, validate

cfg = FieldConfig(p=5, precision=8)

print("lifting a regular traceless diagonal across the canonical plane:")
data = sl3_regular_data(cfg)
s = lift_type_d_sl3(data, hyperbolic_plane(cfg))
print("  stratum:", s)
print("  validation violations:", validate(s)["violations"])
cl = classify(s)
print("  classified as:", cl.case_tag)
print("  restricted matrix equals the input:",
      all(cl.restricted["beta_matrix"][i][j] == data.phi[i][j]
          for i in range(3) for j in range(3)))

print("\nthe corpus, case by case:")
for tag, stratum in stratum_corpus(cfg):
    got = classify(stratum).case_tag
    print(f"  n={stratum.n} m={stratum.seq.m}: {got}"
          + ("" if got == tag else f"  (expected {tag}!)"))

print("\ncorrupted fixtures and the checks that catch them:")
for name, bad in corrupted_strata(cfg):
    rep = validate(bad)
    hit = next((v for v in rep["violations"] if name in v), "MISSED")
    print(f"  {name}: {hit.split(':')[0]}")
