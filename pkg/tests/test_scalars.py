"""Tests for the truncated Laurent-series field model."""

import math
import random
from fractions import Fraction

import pytest

from g2kit.errors import ConfigMismatchError, DomainError, PrecisionError
from g2kit.scalars import FieldConfig, congruent, parse_scalar

CFG = FieldConfig(5, 8)


def test_config_validation():
    with pytest.raises(DomainError):
        FieldConfig(4, 8)
    with pytest.raises(DomainError):
        FieldConfig(3, 8)
    with pytest.raises(DomainError):
        FieldConfig(5, 3)
    with pytest.raises(DomainError):
        FieldConfig(5, 8, "weird")


def test_config_json_roundtrip():
    cfg = FieldConfig(7, 10, "ramified")
    assert FieldConfig.from_json(cfg.to_json()) == cfg


def test_additive_inverse():
    t = CFG.t()
    assert (t + (-t)).is_zero


def test_residue_reduction():
    x = CFG.one() + CFG.t()
    y = CFG.from_int(CFG.p - 1)
    assert x + y == CFG.t()


def test_leading_valuation():
    x = CFG.t(2) + CFG.t(3)
    assert x.valuation == 2
    assert CFG.zero().valuation == math.inf


def test_geometric_series_inverse():
    x = CFG.one() - CFG.t()
    inv = x.inv()
    expected = CFG.zero()
    for k in range(CFG.precision):
        expected = expected + CFG.t(k)
    assert inv == expected
    assert x * inv == CFG.one()


def test_inverse_valuation():
    assert CFG.t(3).inv().valuation == -3


def test_ramified_uniformizer():
    cfg = FieldConfig(5, 8, "ramified")
    s = cfg.uniformizer()
    assert (s * s).valuation == 1
    assert s.valuation == Fraction(1, 2)


def test_mixed_config_rejected():
    other = FieldConfig(7, 8)
    with pytest.raises(ConfigMismatchError):
        CFG.one() + other.one()


def test_valuation_laws_random():
    rng = random.Random(11)
    for _ in range(500):
        x = CFG.random(rng, nonzero=True)
        y = CFG.random(rng, nonzero=True)
        assert (x * y).valuation == x.valuation + y.valuation
        s = x + y
        assert s.valuation >= min(x.valuation, y.valuation)
        if x.valuation != y.valuation:
            assert s.valuation == min(x.valuation, y.valuation)


def test_inverse_random():
    rng = random.Random(12)
    for _ in range(500):
        x = CFG.random(rng, nonzero=True)
        assert x * x.inv() == CFG.one()
        assert x.inv() * x == CFG.one()


def test_extension_valuation_ranges():
    ram = FieldConfig(5, 8, "ramified")
    unram = FieldConfig(5, 8, "unramified")
    rng = random.Random(13)
    for _ in range(100):
        x = ram.random(rng, nonzero=True)
        assert (x.valuation * 2).denominator == 1
        y = unram.random(rng, nonzero=True)
        assert y.valuation.denominator == 1


def test_window_truncation_on_add():
    # 1 + t^(N+2): the tail is outside the common window and is dropped.
    x = CFG.one()
    y = CFG.t(CFG.precision + 2)
    assert x + y == x


def test_precision_error_on_wide_support():
    with pytest.raises(PrecisionError):
        CFG.from_coeffs(0, [1] * (CFG.precision + 1))


def test_inverse_is_window_exact():
    a = (CFG.one() - CFG.t()).inv()  # 1 + t + ... + t^(N-1)
    b = CFG.zero()
    for k in range(CFG.precision):
        b = b + CFG.t(k)
    assert a == b


def test_residue_character():
    a = CFG.monomial(3, -1)
    assert a.residue_character() == 3
    assert CFG.one().residue_character() == 0
    assert CFG.t(2).residue_character() == 0
    with pytest.raises(DomainError):
        CFG.t(-2).residue_character()
    rng = random.Random(14)
    for _ in range(100):
        x = CFG.random(rng, vmin=-1)
        y = CFG.random(rng, vmin=-1)
        assert ((x + y).residue_character()
                == (x.residue_character() + y.residue_character()) % CFG.p)


def test_is_square():
    assert CFG.t(2).is_square()
    assert not CFG.t().is_square()
    assert CFG.from_int(4).is_square()
    assert not CFG.from_int(2).is_square()  # 2 is not a QR mod 5
    assert (CFG.from_int(4) + CFG.t()).is_square()


def test_sqrt_one_unit():
    x = CFG.one() + CFG.t() + CFG.monomial(3, 2)
    r = x.sqrt_one_unit()
    assert r * r == x
    assert r.coeff_at(0) == 1
    with pytest.raises(DomainError):
        CFG.from_int(4).sqrt_one_unit()


def test_truncate_and_congruent():
    x = CFG.one() + CFG.t(2) + CFG.t(5)
    assert x.truncate(3) == CFG.one() + CFG.t(2)
    assert congruent(x, CFG.one() + CFG.t(2), 3)
    assert congruent(x, CFG.one(), 2)
    assert not congruent(x, CFG.one() + CFG.t(), 2)


def test_str_parse_roundtrip():
    rng = random.Random(15)
    for _ in range(50):
        x = CFG.random(rng)
        assert parse_scalar(CFG, str(x)) == x
    ram = FieldConfig(5, 8, "ramified")
    y = ram.monomial(2, -3) + ram.one()
    assert parse_scalar(ram, str(y)) == y


def test_pow():
    x = CFG.one() + CFG.t()
    assert x ** 3 == x * x * x
    assert x ** -2 == (x * x).inv()
    assert x ** 0 == CFG.one()
