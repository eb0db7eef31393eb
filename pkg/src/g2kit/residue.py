"""Residue-field arithmetic: F_p and its quadratic extension F_{p^2}.

Elements of F_p are ints in [0, p); elements of F_{p^2} are pairs
(a, b) meaning a + b*w with w^2 = delta, delta a fixed non-square.
"""

from .errors import DomainError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """Arithmetic in Z/p for a prime p."""

    def __init__(self, p: int):
        self.p = p

    def coerce(self, a):
        return int(a) % self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def is_square(self, a) -> bool:
        a %= self.p
        if a == 0:
            return True
        return pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a):
        """Square root by direct search; p stays desk-sized here."""
        a %= self.p
        for r in range(self.p):
            if (r * r) % self.p == a:
                return r
        raise DomainError(f"{a} is not a square mod {self.p}")

    def non_square(self) -> int:
        for r in range(2, self.p):
            if not self.is_square(r):
                return r
        raise DomainError("no non-square found")  # unreachable for p >= 3

    def random(self, rng, nonzero=False):
        lo = 1 if nonzero else 0
        return rng.randrange(lo, self.p)

    def fmt(self, a) -> str:
        return str(a % self.p)


class QuadField:
    """Arithmetic in F_{p^2} = F_p(w), w^2 = delta (delta a non-square)."""

    def __init__(self, p: int):
        self.p = p
        self.base = PrimeField(p)
        self.delta = self.base.non_square()

    def coerce(self, a):
        if isinstance(a, tuple):
            return (a[0] % self.p, a[1] % self.p)
        return (int(a) % self.p, 0)

    def zero(self):
        return (0, 0)

    def one(self):
        return (1, 0)

    def is_zero(self, a) -> bool:
        return a[0] % self.p == 0 and a[1] % self.p == 0

    def add(self, a, b):
        return ((a[0] + b[0]) % self.p, (a[1] + b[1]) % self.p)

    def sub(self, a, b):
        return ((a[0] - b[0]) % self.p, (a[1] - b[1]) % self.p)

    def neg(self, a):
        return ((-a[0]) % self.p, (-a[1]) % self.p)

    def mul(self, a, b):
        return ((a[0] * b[0] + self.delta * a[1] * b[1]) % self.p,
                (a[0] * b[1] + a[1] * b[0]) % self.p)

    def inv(self, a):
        n = (a[0] * a[0] - self.delta * a[1] * a[1]) % self.p
        if n == 0:
            raise ZeroDivisionError("inverse of 0 in F_{p^2}")
        ninv = self.base.inv(n)
        return ((a[0] * ninv) % self.p, (-a[1] * ninv) % self.p)

    def pow(self, a, k: int):
        out, acc = self.one(), a
        while k:
            if k & 1:
                out = self.mul(out, acc)
            acc = self.mul(acc, acc)
            k >>= 1
        return out

    def is_square(self, a) -> bool:
        if self.is_zero(a):
            return True
        return self.pow(a, (self.p * self.p - 1) // 2) == self.one()

    def random(self, rng, nonzero=False):
        while True:
            a = (rng.randrange(self.p), rng.randrange(self.p))
            if not nonzero or not self.is_zero(a):
                return a

    def fmt(self, a) -> str:
        x, y = a[0] % self.p, a[1] % self.p
        if y == 0:
            return str(x)
        if x == 0:
            return f"{y}w"
        return f"({x}+{y}w)"
