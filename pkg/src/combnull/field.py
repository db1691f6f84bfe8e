"""Exact scalar arithmetic over Z_p (p prime) and over the rationals.

Scalars are plain Python values: canonical residues in ``[0, p)`` for a prime
field and ``fractions.Fraction`` (lowest terms, positive denominator) for the
rational field.  The field objects supply the arithmetic, which keeps the hot
grid-enumeration loops free of per-element wrapper objects.  All operations
are exact; nothing here is suitable for cryptographic use.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import BadInput, NotPrime

Scalar = Union[int, Fraction]

# Residues of admissible primes fit in a machine word even after one product.
MAX_PRIME_EXCLUSIVE = 1 << 31


def is_prime(n: int) -> bool:
    """Deterministic trial division, adequate for moduli below 2**31."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class PrimeField:
    """The field Z_p.  Elements are canonical residues in ``[0, p)``."""

    __slots__ = ("p",)

    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
            raise NotPrime(f"modulus must be a prime >= 2, got {p!r}")
        if p >= MAX_PRIME_EXCLUSIVE:
            raise BadInput(f"prime modulus must be < 2**31, got {p}")
        self.p = p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def element(self, x: Scalar) -> int:
        """Coerce an integer (or an invertible fraction) to its residue."""
        if isinstance(x, bool):
            raise BadInput(f"not a scalar: {x!r}")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        raise BadInput(f"cannot coerce {x!r} into Z_{self.p}")

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def mul(self, x: int, y: int) -> int:
        return (x * y) % self.p

    def neg(self, x: int) -> int:
        return -x % self.p

    def inv(self, x: int) -> int:
        # pow(x, -1, p) is the stdlib extended-Euclid inverse, not Fermat.
        if x % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in Z_{self.p}")
        return pow(x, -1, self.p)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def power(self, x: int, k: int) -> int:
        """x**k mod p with the 0**0 = 1 convention (pow already obeys it)."""
        if k < 0:
            return self.inv(pow(x, -k, self.p))
        return pow(x, k, self.p)

    def is_zero(self, x: int) -> bool:
        return x % self.p == 0

    def elements(self) -> range:
        return range(self.p)

    def format(self, x: int) -> str:
        return str(x)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


class RationalField:
    """Exact rational numbers, the stand-in here for a characteristic-0 field."""

    __slots__ = ()

    kind = "rational"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def element(self, x: Scalar) -> Fraction:
        if isinstance(x, bool):
            raise BadInput(f"not a scalar: {x!r}")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise BadInput(f"cannot coerce {x!r} into the rationals")

    def add(self, x: Fraction, y: Fraction) -> Fraction:
        return x + y

    def sub(self, x: Fraction, y: Fraction) -> Fraction:
        return x - y

    def mul(self, x: Fraction, y: Fraction) -> Fraction:
        return x * y

    def neg(self, x: Fraction) -> Fraction:
        return -x

    def inv(self, x: Fraction) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 / Fraction(x)

    def div(self, x: Fraction, y: Fraction) -> Fraction:
        if y == 0:
            raise ZeroDivisionError("division by 0")
        return Fraction(x) / y

    def power(self, x: Fraction, k: int) -> Fraction:
        return Fraction(x) ** k

    def is_zero(self, x: Fraction) -> bool:
        return x == 0

    def format(self, x: Fraction) -> str:
        return str(x)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("RationalField")

    def __repr__(self) -> str:
        return "RationalField()"


FieldSpec = Union[PrimeField, RationalField]

_PRIME_KINDS = {"prime", "zp", "z_p", "finite"}
_RATIONAL_KINDS = {"rational", "q", "exact", "fraction"}


def make_field(kind: str, p: int | None = None) -> FieldSpec:
    """Build a field from a textual kind, e.g. ``make_field("prime", 7)``."""
    key = str(kind).strip().lower()
    if key in _PRIME_KINDS:
        if p is None:
            raise BadInput("a prime field needs a modulus p")
        return PrimeField(p)
    if key in _RATIONAL_KINDS:
        if p is not None:
            raise BadInput("the rational field takes no modulus")
        return RationalField()
    raise BadInput(f"unknown field kind {kind!r}")


def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group of Z_p.

    Existence for prime p is classical, so the scan always terminates.
    """
    if not is_prime(p):
        raise NotPrime(f"primitive root needs a prime modulus, got {p!r}")
    if p == 2:
        return 1
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise AssertionError("unreachable: Z_p* is cyclic for prime p")


def power_sum(p: int, k: int) -> int:
    """Sum of a**k over all a in Z_p, with 0**0 = 1.

    The sum vanishes unless k is a positive multiple of p - 1, in which case
    it is p - 1: pick a generator g, then the sum is a geometric series in
    g**k.  For k = 0 every one of the p terms is 1, so the sum is p = 0.
    """
    if not is_prime(p):
        raise NotPrime(f"power sum is over Z_p for prime p, got {p!r}")
    if k < 0:
        raise BadInput(f"exponent must be >= 0, got {k}")
    if k == 0:
        return 0
    if k % (p - 1) == 0:
        return p - 1
    return 0
