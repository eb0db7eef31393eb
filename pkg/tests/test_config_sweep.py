"""Smoke checks at other primes and precisions: nothing in the core
machinery may depend on p = 5 beyond the residue arithmetic itself."""

import random
from fractions import Fraction

import pytest

from g2kit.fixtures import stratum_corpus, wplus_norm
from g2kit.norms import extend_sl3, is_algebra_norm, is_self_dual
from g2kit.octonions import (anisotropic_plane, division_quaternion,
                             hyperbolic_plane, random_octonion)
from g2kit.scalars import FieldConfig
from g2kit.strata import classify
from g2kit.triality import check_related, diag_lie_triple, root_triple

CONFIGS = [FieldConfig(7, 10), FieldConfig(11, 8), FieldConfig(13, 6)]


@pytest.mark.parametrize("cfg", CONFIGS, ids=lambda c: f"p{c.p}N{c.precision}")
def test_octonion_axioms(cfg):
    rng = random.Random(cfg.p)
    for _ in range(50):
        x = random_octonion(cfg, rng)
        y = random_octonion(cfg, rng)
        assert (x * y).norm() == x.norm() * y.norm()
        assert x * (x * y) == (x * x) * y


@pytest.mark.parametrize("cfg", CONFIGS, ids=lambda c: f"p{c.p}N{c.precision}")
def test_triality_families(cfg):
    lam = cfg.t()
    for (i, j) in ((-1, -3), (2, 1), (4, 2), (-2, 4), (1, -2)):
        for lie in (False, True):
            tri = root_triple(cfg, i, j, lam, lie=lie)
            assert check_related(tri.t1, tri.t2, tri.t3, lie)
    for i in (1, 2, 3, 4):
        diag_lie_triple(cfg, i, lam)


@pytest.mark.parametrize("cfg", CONFIGS, ids=lambda c: f"p{c.p}N{c.precision}")
def test_planes_and_quaternions(cfg):
    assert anisotropic_plane(cfg).kind == "field-dim2"
    assert division_quaternion(cfg).kind == "division-dim4"


@pytest.mark.parametrize("cfg", CONFIGS, ids=lambda c: f"p{c.p}N{c.precision}")
def test_norm_extension(cfg):
    ext = extend_sl3(wplus_norm(cfg, [Fraction(1, 3), Fraction(1, 3),
                                      Fraction(-2, 3)]),
                     hyperbolic_plane(cfg))
    assert is_algebra_norm(ext) and is_self_dual(ext)


@pytest.mark.parametrize("cfg", CONFIGS[:2], ids=lambda c: f"p{c.p}")
def test_stratum_corpus_classifies(cfg):
    for tag, s in stratum_corpus(cfg):
        assert classify(s).case_tag == tag
