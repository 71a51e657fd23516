"""Dirichlet characters mod q via exponent vectors against fixed unit-group
generators.

A character is stored as one integer exponent per generator of each
prime-power factor of q: exponent k against a generator of order d means the
character sends that generator to e(k/d).  Evaluation goes through a
precomputed discrete-log table per prime power, so every character value is
e(<exact rational>) and conductors/primitivity are decided exactly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import e_rational, euler_phi, factorize, mod_inverse
from .errors import ModulusMismatch

__all__ = [
    "Character",
    "CharacterGroup",
    "GaussSumValue",
    "character_group",
    "character_from_exponents",
    "enumerate_characters",
    "gauss_sum",
    "twisted_exponential_sum",
]


class _Factor:
    """Unit-group data for one prime power p^e dividing q."""

    __slots__ = ("prime", "exponent", "modulus", "generators", "orders", "dlog")

    def __init__(self, prime: int, exponent: int):
        from .arith import unit_group_generators

        self.prime = prime
        self.exponent = exponent
        self.modulus = prime**exponent
        gens = unit_group_generators(prime, exponent)
        self.generators = [g for g, _ in gens]
        self.orders = [d for _, d in gens]
        # dlog[u] = exponent tuple of u against the generators, None for non-units
        self.dlog: list[tuple[int, ...] | None] = [None] * self.modulus
        ranges = [range(d) for d in self.orders]
        for exps in itertools.product(*ranges):
            u = 1
            for g, k in zip(self.generators, exps):
                u = (u * pow(g, k, self.modulus)) % self.modulus
            self.dlog[u] = exps


class CharacterGroup:
    """Shared tables for all characters of a fixed modulus q."""

    def __init__(self, q: int):
        if q < 1:
            raise ValueError("modulus must be positive")
        self.q = q
        self.factors = [_Factor(p, e) for p, e in factorize(q)]
        self.orders: tuple[int, ...] = tuple(
            d for f in self.factors for d in f.orders
        )

    def dlog(self, n: int) -> tuple[int, ...] | None:
        """Concatenated discrete log of n across all prime-power factors."""
        out: list[int] = []
        for f in self.factors:
            exps = f.dlog[n % f.modulus]
            if exps is None:
                return None
            out.extend(exps)
        return tuple(out)


@lru_cache(maxsize=None)
def character_group(q: int) -> CharacterGroup:
    return CharacterGroup(q)


class Character:
    """A Dirichlet character mod q, addressed by its exponent vector."""

    __slots__ = ("group", "exponents", "_conductor")

    def __init__(self, group: CharacterGroup, exponents: tuple[int, ...]):
        if len(exponents) != len(group.orders):
            raise ValueError("exponent vector length does not match group")
        self.group = group
        self.exponents = tuple(k % d for k, d in zip(exponents, group.orders))
        self._conductor: int | None = None

    @property
    def q(self) -> int:
        return self.group.q

    def phase(self, n: int) -> Fraction | None:
        """Exact rational x with chi(n) = e(x), or None when chi(n) = 0."""
        dl = self.group.dlog(n % self.q) if self.q > 1 else ()
        if dl is None:
            return None
        x = Fraction(0)
        for k, j, d in zip(self.exponents, dl, self.group.orders):
            x += Fraction(k * j, d)
        return x

    def __call__(self, n: int) -> complex:
        x = self.phase(n)
        if x is None:
            return 0j
        return e_rational(x)

    def bar(self) -> "Character":
        """Complex conjugate character (negated exponent vector)."""
        return Character(self.group, tuple(-k for k in self.exponents))

    @property
    def is_even(self) -> bool:
        x = self.phase(self.q - 1) if self.q > 1 else Fraction(0)
        return x == 0

    @property
    def parity(self) -> int:
        """chi(-1) as an exact integer, +1 or -1."""
        return 1 if self.is_even else -1

    def conductor(self) -> int:
        """Smallest f | q such that chi is induced by a character mod f.

        Multiplicative over prime powers; each local conductor is found by
        testing triviality on the kernel subgroups {u = 1 mod p^j}.
        """
        if self._conductor is not None:
            return self._conductor
        cond = 1
        pos = 0
        for f in self.group.factors:
            ngen = len(f.orders)
            local = self.exponents[pos : pos + ngen]
            pos += ngen
            cond *= self._local_conductor(f, local)
        self._conductor = cond
        return cond

    @staticmethod
    def _local_conductor(f: _Factor, exps: tuple[int, ...]) -> int:
        for j in range(f.exponent + 1):
            pj = f.prime**j
            trivial = True
            for u in range(1, f.modulus):
                if u % f.prime == 0 or u % pj != 1 % pj:
                    continue
                dl = f.dlog[u]
                x = sum(Fraction(k * i, d) for k, i, d in zip(exps, dl, f.orders))
                if x.denominator != 1:
                    trivial = False
                    break
            if trivial:
                return pj
        return f.modulus  # unreachable: j = e always works

    @property
    def is_primitive(self) -> bool:
        return self.conductor() == self.q

    @property
    def is_trivial(self) -> bool:
        return all(k == 0 for k in self.exponents)

    def label(self) -> str:
        return f"{self.q}." + "_".join(str(k) for k in self.exponents)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.q == other.q
            and self.exponents == other.exponents
        )

    def __hash__(self) -> int:
        return hash((self.q, self.exponents))

    def __repr__(self) -> str:
        return f"Character(q={self.q}, exponents={self.exponents})"


def character_from_exponents(q: int, exponents) -> Character:
    return Character(character_group(q), tuple(exponents))


def enumerate_characters(q: int) -> list[Character]:
    """All euler_phi(q) characters mod q, in lexicographic exponent order."""
    group = character_group(q)
    ranges = [range(d) for d in group.orders]
    return [Character(group, exps) for exps in itertools.product(*ranges)]


@dataclass(frozen=True)
class GaussSumValue:
    """tau(chi) together with the character it belongs to."""

    value: complex
    character: Character


@lru_cache(maxsize=4096)
def _gauss_sum_cached(q: int, exponents: tuple[int, ...]) -> complex:
    chi = character_from_exponents(q, exponents)
    re_parts, im_parts = [], []
    for ell in range(1, q + 1):
        x = chi.phase(ell)
        if x is None:
            continue
        z = e_rational(x + Fraction(ell, q))
        re_parts.append(z.real)
        im_parts.append(z.imag)
    return complex(math.fsum(re_parts), math.fsum(im_parts))


def gauss_sum(chi: Character) -> GaussSumValue:
    """tau(chi) = sum_{l=1}^{q} chi(l) e(l/q), phases exact, compensated sum."""
    return GaussSumValue(_gauss_sum_cached(chi.q, chi.exponents), chi)


def twisted_exponential_sum(chi: Character, a: int, c: int) -> complex:
    """sum_{l=1}^{q} chi(l) e(l*a/c) for c | q.

    For primitive chi this equals conj(chi)(a*q/c) * tau(chi); in particular
    it vanishes for proper divisors c < q.
    """
    if c < 1:
        raise ValueError("denominator must be positive")
    if math.gcd(a, c) != 1:
        raise ValueError("phase must be reduced: gcd(a, c) = 1 required")
    q = chi.q
    if q % c != 0:
        raise ModulusMismatch(f"c = {c} does not divide q = {q}")
    re_parts, im_parts = [], []
    for ell in range(1, q + 1):
        x = chi.phase(ell)
        if x is None:
            continue
        z = e_rational(x + Fraction(ell * a, c))
        re_parts.append(z.real)
        im_parts.append(z.imag)
    return complex(math.fsum(re_parts), math.fsum(im_parts))
