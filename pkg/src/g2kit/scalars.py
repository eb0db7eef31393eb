"""Exact arithmetic in the local field model F = F_p((t)) and its
quadratic extensions, with a hard truncation window of N coefficients.

A nonzero scalar stores its leading valuation (an integer count of
uniformizer powers, so 1/e-units over an extension) and at most N residue
coefficients; it denotes the series sum c_j * pi^(val+j) known modulo
pi^(val+N).  Sums are truncated to the common representable window, as are
products; a sum whose known coefficients cancel entirely while an unknown
tail remains raises PrecisionError so that failures stay attributable.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConfigMismatchError, DomainError, PrecisionError
from .residue import PrimeField, QuadField, is_prime

EXTENSIONS = ("none", "unramified", "ramified")


@dataclass(frozen=True)
class FieldConfig:
    """Prime, truncation precision and extension descriptor."""

    p: int
    precision: int
    extension: str = "none"

    def __post_init__(self):
        if not is_prime(self.p) or self.p < 5:
            raise DomainError(f"p must be a prime >= 5, got {self.p}")
        if self.precision < 4:
            raise DomainError("precision must be at least 4")
        if self.extension not in EXTENSIONS:
            raise DomainError(f"unknown extension {self.extension!r}")
        object.__setattr__(self, "_residue", QuadField(self.p)
                           if self.extension == "unramified" else PrimeField(self.p))

    @property
    def e(self) -> int:
        """Ramification index over the base field."""
        return 2 if self.extension == "ramified" else 1

    @property
    def residue(self):
        return self._residue

    @property
    def uniformizer_name(self) -> str:
        return "s" if self.extension == "ramified" else "t"

    # -- scalar constructors ------------------------------------------------

    def zero(self) -> "Scalar":
        return Scalar(self, 0, ())

    def one(self) -> "Scalar":
        return self.from_int(1)

    def from_int(self, a: int) -> "Scalar":
        c = self.residue.coerce(a)
        if self.residue.is_zero(c):
            return self.zero()
        return Scalar(self, 0, (c,))

    def monomial(self, coeff, k: int) -> "Scalar":
        """coeff * u^k with u the uniformizer (k in 1/e units)."""
        c = self.residue.coerce(coeff)
        if self.residue.is_zero(c):
            return self.zero()
        return Scalar(self, k, (c,))

    def uniformizer(self, k: int = 1) -> "Scalar":
        return self.monomial(1, k)

    def t(self, k: int = 1) -> "Scalar":
        """t^k as a scalar of this field (t = s^2 when ramified)."""
        return self.monomial(1, k * self.e)

    def from_coeffs(self, val: int, coeffs) -> "Scalar":
        return _build(self, val, [self.residue.coerce(c) for c in coeffs])

    def random(self, rng, width: int | None = None, vmin: int = -2,
               vmax: int = 2, nonzero: bool = False) -> "Scalar":
        """Small-support random scalar; widths stay well inside the window
        so that identity sweeps never truncate."""
        if width is None:
            width = max(1, self.precision // 4)
        while True:
            val = rng.randrange(vmin, vmax + 1)
            coeffs = [self.residue.random(rng) for _ in range(width)]
            s = self.from_coeffs(val, coeffs)
            if not (nonzero and s.is_zero):
                return s

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "precision": self.precision, "extension": self.extension}

    @classmethod
    def from_json(cls, data) -> "FieldConfig":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["p"]), int(data["precision"]), data["extension"])


def _build(cfg: FieldConfig, val: int, coeffs: list) -> "Scalar":
    """Canonicalize: strip leading and trailing zero coefficients."""
    r = cfg.residue
    lo = 0
    while lo < len(coeffs) and r.is_zero(coeffs[lo]):
        lo += 1
    if lo == len(coeffs):
        return Scalar(cfg, 0, ())
    hi = len(coeffs)
    while r.is_zero(coeffs[hi - 1]):
        hi -= 1
    if hi - lo > cfg.precision:
        raise PrecisionError(
            f"support width {hi - lo} exceeds the {cfg.precision}-coefficient window")
    return Scalar(cfg, val + lo, tuple(coeffs[lo:hi]))


class Scalar:
    """Immutable truncated Laurent series over the residue field."""

    __slots__ = ("cfg", "val", "coeffs")

    def __init__(self, cfg: FieldConfig, val: int, coeffs: tuple):
        self.cfg = cfg
        self.val = val
        self.coeffs = coeffs

    # -- basics -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self):
        """v_F(x) as a Fraction (inf for 0); half-integers when ramified."""
        if self.is_zero:
            return math.inf
        return Fraction(self.val, self.cfg.e)

    def coeff_at(self, k: int):
        """Residue coefficient of u^k (k in 1/e units)."""
        if self.is_zero or k < self.val or k >= self.val + len(self.coeffs):
            return self.cfg.residue.zero()
        return self.coeffs[k - self.val]

    def leading(self):
        if self.is_zero:
            raise DomainError("zero scalar has no leading coefficient")
        return self.coeffs[0]

    def _check(self, other: "Scalar"):
        if self.cfg is not other.cfg and self.cfg != other.cfg:
            raise ConfigMismatchError("operands from different field configs")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        r = self.cfg.residue
        m = min(self.val, other.val)
        end = m + self.cfg.precision
        hi = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        out = []
        nonzero_tail = False
        for k in range(m, hi):
            c = r.add(self.coeff_at(k), other.coeff_at(k))
            if k < end:
                out.append(c)
            elif not r.is_zero(c):
                nonzero_tail = True
        s = _build(self.cfg, m, out)
        if s.is_zero and nonzero_tail:
            raise PrecisionError(
                "sum cancels through the whole representable window")
        return s

    def __neg__(self):
        r = self.cfg.residue
        return Scalar(self.cfg, self.val, tuple(r.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        if self.is_zero or other.is_zero:
            return self.cfg.zero()
        r = self.cfg.residue
        n = self.cfg.precision
        width = min(len(self.coeffs) + len(other.coeffs) - 1, n)
        out = [r.zero()] * width
        for i, a in enumerate(self.coeffs):
            if r.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= width:
                    break
                out[i + j] = r.add(out[i + j], r.mul(a, b))
        return _build(self.cfg, self.val + other.val, out)

    def __rmul__(self, other):
        return self * other

    def __radd__(self, other):
        return self + other

    def __rsub__(self, other):
        return (-self) + other

    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, int):
            return self.cfg.from_int(other)
        return NotImplemented

    def inv(self) -> "Scalar":
        """Inverse, exact through the N-coefficient window."""
        if self.is_zero:
            raise ZeroDivisionError("inversion of zero scalar")
        r = self.cfg.residue
        n = self.cfg.precision
        c0inv = r.inv(self.coeffs[0])
        out = [c0inv] + [r.zero()] * (n - 1)
        for j in range(1, n):
            acc = r.zero()
            for k in range(1, min(j, len(self.coeffs) - 1) + 1):
                acc = r.add(acc, r.mul(self.coeffs[k], out[j - k]))
            out[j] = r.neg(r.mul(c0inv, acc))
        return _build(self.cfg, -self.val, out)

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inv()

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        out = self.cfg.one()
        acc = self
        while k:
            if k & 1:
                out = out * acc
            acc = acc * acc
            k >>= 1
        return out

    # -- window surgery and predicates ---------------------------------------

    def truncate(self, cutoff: Fraction | int) -> "Scalar":
        """Drop all coefficients with v_F-index >= cutoff (exact surgery)."""
        if self.is_zero:
            return self
        bound = Fraction(cutoff) * self.cfg.e  # fine units
        zero = self.cfg.residue.zero()
        kept = [c if (self.val + i) < bound else zero
                for i, c in enumerate(self.coeffs)]
        return _build(self.cfg, self.val, kept)

    def _items(self):
        return [(self.val + i, c) for i, c in enumerate(self.coeffs)]

    def is_square(self) -> bool:
        """Exact squareness test: even valuation and square leading residue
        (Hensel lifts the rest since p is odd)."""
        if self.is_zero:
            return True
        return self.val % 2 == 0 and self.cfg.residue.is_square(self.coeffs[0])

    def sqrt_one_unit(self) -> "Scalar":
        """Square root of a 1-unit (x = 1 mod p_F), normalized to = 1 mod p_F."""
        r = self.cfg.residue
        if self.is_zero or self.val != 0 or self.coeffs[0] != r.one():
            raise DomainError("sqrt_one_unit needs a scalar congruent to 1")
        n = self.cfg.precision
        half = r.inv(r.coerce(2))
        out = [r.one()] + [r.zero()] * (n - 1)
        for j in range(1, n):
            acc = self.coeff_at(j)
            for a in range(1, j):
                acc = r.sub(acc, r.mul(out[a], out[j - a]))
            out[j] = r.mul(half, acc)
        return _build(self.cfg, 0, out)

    def residue_character(self) -> int:
        """The residue pairing: the coefficient of t^{-1} in Z/p; additive
        and vanishing on the integer ring."""
        if self.cfg.extension != "none":
            raise DomainError("residue character is defined over the base field")
        if self.is_zero:
            return 0
        if self.valuation < -1:
            raise DomainError("valuation below -1: outside the character domain")
        return self.coeff_at(-1) % self.cfg.p

    def conductor_character(self) -> int:
        """The additive character of conductor p_F: trivial on p_F and
        faithful on o_F / p_F, read off the constant coefficient."""
        if self.cfg.extension != "none":
            raise DomainError("the character is defined over the base field")
        if self.is_zero:
            return 0
        return self.coeff_at(0) % self.cfg.p

    # -- comparison / hashing / display --------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.cfg.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (self.cfg == other.cfg and self.val == other.val
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.val, self.coeffs))

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if self.is_zero:
            return "0"
        r = self.cfg.residue
        u = self.cfg.uniformizer_name
        terms = []
        for k, c in self._items():
            if r.is_zero(c):
                continue
            cs = r.fmt(c)
            if k == 0:
                terms.append(cs)
            elif cs == "1":
                terms.append(f"{u}^{k}")
            else:
                terms.append(f"{cs}*{u}^{k}")
        return " + ".join(terms)


_TERM = re.compile(r"^(?:(\d+)|(?:(\d+)\*)?([ts])\^(-?\d+))$")


def parse_scalar(cfg: FieldConfig, text: str) -> Scalar:
    """Parse the sparse-monomial format produced by str(scalar)."""
    text = text.strip()
    if text == "0":
        return cfg.zero()
    out = cfg.zero()
    for term in text.split("+"):
        m = _TERM.match(term.strip())
        if not m:
            raise DomainError(f"cannot parse scalar term {term!r}")
        if m.group(1) is not None:
            out = out + cfg.from_int(int(m.group(1)))
        else:
            coeff = int(m.group(2)) if m.group(2) else 1
            if m.group(3) != cfg.uniformizer_name:
                raise DomainError(f"wrong uniformizer in {term!r}")
            out = out + cfg.monomial(coeff, int(m.group(4)))
    return out


def congruent(x: Scalar, y: Scalar, cutoff) -> bool:
    """x = y mod p_F^cutoff (cutoff in v_F units, rationals allowed)."""
    return (x - y).truncate(cutoff).is_zero
