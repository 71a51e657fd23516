"""Exact integer and modular arithmetic: factorization, totients, unit-group
generators and reduced rational phases.

Everything in this module is exact; floating point only enters through
:func:`e_rational`, which turns a reduced rational phase into exp(2*pi*i*x)
at the last possible moment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotInvertible

__all__ = [
    "Factorization",
    "RationalPhase",
    "mod_inverse",
    "factorize",
    "euler_phi",
    "divisor_count",
    "unit_group_generators",
    "e_rational",
]


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as sorted (prime, exponent) pairs."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        primes = [p for p, _ in self.factors]
        if primes != sorted(primes) or len(set(primes)) != len(primes):
            raise ValueError("factors must be sorted by strictly increasing prime")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be >= 1")

    def value(self) -> int:
        n = 1
        for p, e in self.factors:
            n *= p**e
        return n

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


@dataclass(frozen=True)
class RationalPhase:
    """A reduced rational a/c with c >= 1, used as the argument of e(x).

    Stored eagerly reduced so that congruent phases compare equal and
    e_rational can reduce mod 1 exactly.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        num, den = self.numerator, self.denominator
        if den == 0:
            raise ZeroDivisionError("phase denominator must be nonzero")
        if den < 0:
            num, den = -num, -den
        g = math.gcd(abs(num), den)
        if g > 1:
            num //= g
            den //= g
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "RationalPhase":
        return cls(fr.numerator, fr.denominator)

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def fractional_part(self) -> Fraction:
        """The representative in [0, 1) of this phase mod 1."""
        return Fraction(self.numerator % self.denominator, self.denominator)

    def is_integer(self) -> bool:
        return self.denominator == 1

    def __neg__(self) -> "RationalPhase":
        return RationalPhase(-self.numerator, self.denominator)

    def __add__(self, other: "RationalPhase") -> "RationalPhase":
        return RationalPhase.from_fraction(self.as_fraction() + other.as_fraction())

    def scaled(self, k: int) -> "RationalPhase":
        return RationalPhase(self.numerator * k, self.denominator)

    def __float__(self) -> float:
        return self.numerator / self.denominator


def mod_inverse(a: int, c: int) -> int:
    """Inverse of a mod c, in [0, c).  Raises NotInvertible when gcd(a, c) > 1."""
    if c < 1:
        raise ValueError("modulus must be positive")
    if c == 1:
        return 0
    a %= c
    if math.gcd(a, c) != 1:
        raise NotInvertible(f"{a} is not invertible mod {c}")
    return pow(a, -1, c)


def factorize(n: int) -> Factorization:
    """Trial-division factorization; intended for n up to ~10^12."""
    if n < 1:
        raise ValueError("can only factorize positive integers")
    factors = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    # remaining prime factors are coprime to 6; step through 6k +/- 1
    p = 5
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 2 if p % 6 == 5 else 4
    if n > 1:
        factors.append((n, 1))
    return Factorization(tuple(factors))


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def divisor_count(n: int) -> int:
    d = 1
    for _, e in factorize(n):
        d *= e + 1
    return d


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = factorize(p)
    return len(f) == 1 and f.factors[0] == (p, 1)


def _primitive_root_mod_p(p: int) -> int:
    """Smallest primitive root of an odd prime p (p is small here)."""
    order_factors = [r for r, _ in factorize(p - 1)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in order_factors):
            return g
    raise RuntimeError(f"no primitive root found mod {p}")  # unreachable for prime p


def unit_group_generators(p: int, e: int) -> list[tuple[int, int]]:
    """Generators (with orders) of the unit group of Z/p^e.

    Odd p and p^e in {2, 4} give a single primitive root; 2^e with e >= 3
    gives the pair (-1 mod 2^e, 5 mod 2^e) with orders (2, 2^(e-2)).
    """
    if e < 1:
        raise ValueError("exponent must be >= 1")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    pk = p**e
    if p == 2:
        if e == 1:
            return [(1, 1)]
        if e == 2:
            return [(3, 2)]
        return [(pk - 1, 2), (5, 2 ** (e - 2))]
    g = _primitive_root_mod_p(p)
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return [(g % pk, euler_phi(pk))]


def e_rational(phase) -> complex:
    """e(x) = exp(2*pi*i*x) for a rational phase, reduced mod 1 exactly first.

    Accepts RationalPhase or Fraction.
    """
    num, den = phase.numerator % phase.denominator, phase.denominator
    if num == 0:
        return complex(1.0, 0.0)
    angle = 2.0 * math.pi * (num / den)
    return complex(math.cos(angle), math.sin(angle))
