"""Divisor arithmetic over the prime basis of a group order."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .errors import DomainError


@dataclass(frozen=True)
class PrimeBasis:
    """Prime factorization ``n = p_1^a_1 ... p_r^a_r`` with ascending primes."""

    primes: tuple[int, ...]
    exponents: tuple[int, ...]
    n: int

    def __post_init__(self):
        if len(self.primes) != len(self.exponents):
            raise DomainError("primes and exponents differ in length")
        if any(a < 1 for a in self.exponents):
            raise DomainError("exponents must be positive")
        if any(p >= q for p, q in zip(self.primes, self.primes[1:])):
            raise DomainError("primes must be strictly ascending")
        if prod(p**a for p, a in zip(self.primes, self.exponents)) != self.n:
            raise DomainError("factorization does not multiply out to n")

    @property
    def r(self) -> int:
        return len(self.primes)

    def divisors(self) -> list[int]:
        divs = [1]
        for p, a in zip(self.primes, self.exponents):
            divs = [d * p**e for d in divs for e in range(a + 1)]
        return sorted(divs)


@dataclass(frozen=True)
class OrderVector:
    """Exponent vector of a divisor, aligned to a :class:`PrimeBasis`.

    Zero entries are allowed: a divisor need not involve every prime of n.
    """

    exponents: tuple[int, ...]
    basis: PrimeBasis

    def __post_init__(self):
        if len(self.exponents) != self.basis.r:
            raise DomainError("vector length does not match the basis")
        for b, a in zip(self.exponents, self.basis.exponents):
            if not 0 <= b <= a:
                raise DomainError(f"exponent {b} outside [0, {a}]")

    @property
    def value(self) -> int:
        return prod(p**b for p, b in zip(self.basis.primes, self.exponents))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> PrimeBasis:
    if n < 2:
        raise DomainError(f"cannot factorize {n}; need n >= 2")
    primes, exps = [], []
    m, f = n, 2
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            primes.append(f)
            exps.append(e)
        f += 1 if f == 2 else 2
    if m > 1:
        primes.append(m)
        exps.append(1)
    return PrimeBasis(tuple(primes), tuple(exps), n)


def partial_vector(d: int, basis: PrimeBasis) -> OrderVector:
    """Exponent vector of the divisor ``d`` of ``basis.n``."""
    if d < 2:
        raise DomainError(f"exponent vectors are defined for orders >= 2, got {d}")
    if basis.n % d:
        raise DomainError(f"{d} does not divide {basis.n}")
    exps = []
    for p in basis.primes:
        e = 0
        while d % p == 0:
            d //= p
            e += 1
        exps.append(e)
    return OrderVector(tuple(exps), basis)


def length(v: OrderVector) -> int:
    return sum(v.exponents)


def leq(v1: OrderVector, v2: OrderVector) -> bool:
    """Componentwise order; equivalent to divisibility of the underlying divisors."""
    if len(v1.exponents) != len(v2.exponents):
        raise DomainError("vectors are over bases of different length")
    return all(a <= b for a, b in zip(v1.exponents, v2.exponents))


def order_length(d: int, basis: PrimeBasis) -> int:
    return length(partial_vector(d, basis))


def euler_phi(d: int) -> int:
    if d < 1:
        raise DomainError(f"phi is defined for d >= 1, got {d}")
    if d == 1:
        return 1
    result = d
    for p in factorize(d).primes:
        result -= result // p
    return result


def coprime_residues(d: int) -> list[int]:
    """Exponents ``1 <= i <= d`` with ``gcd(i, d) == 1``; these index the generators of a cyclic group."""
    return [i for i in range(1, d + 1) if gcd(i, d) == 1]
