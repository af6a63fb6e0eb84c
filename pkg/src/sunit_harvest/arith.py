"""Exact integer arithmetic: primes, restricted factorization, multiplicative functions.

Everything here is pure and exact (Python integers), so products like c*w or
a*u that exceed 64 bits are handled without any special casing.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .errors import DomainError, FactorizationLimit, NotInvertible

# Witnesses making Miller-Rabin deterministic for all n < 3.3 * 10^24,
# far beyond anything the pipelines produce.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for the supported integer width."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeSet:
    """A finite, strictly increasing tuple of primes."""

    primes: tuple[int, ...]

    def __post_init__(self):
        prev = 1
        for p in self.primes:
            if p <= prev:
                raise DomainError(f"primes not strictly increasing at {p}")
            if not is_prime(p):
                raise DomainError(f"{p} is not prime")
            prev = p

    def __len__(self) -> int:
        return len(self.primes)

    def __iter__(self):
        return iter(self.primes)

    def __contains__(self, p: int) -> bool:
        return p in set(self.primes)

    def union(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(tuple(sorted(set(self.primes) | set(other.primes))))

    def is_disjoint(self, other: "PrimeSet") -> bool:
        return not (set(self.primes) & set(other.primes))


@dataclass(frozen=True)
class FactoredInt:
    """A positive integer together with its full prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent >= 1), primes increasing

    def __post_init__(self):
        if self.value < 1:
            raise DomainError("FactoredInt value must be positive")
        prod, prev = 1, 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise DomainError("factors must have increasing primes, exponents >= 1")
            prod *= p**e
            prev = p
        if prod != self.value:
            raise DomainError(f"factorization product {prod} != value {self.value}")

    @property
    def squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def prime_support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def primes_in_range(lo: int, hi: int) -> PrimeSet:
    """All primes p with lo <= p <= hi (sieve of the interval)."""
    lo = max(lo, 2)
    if hi < lo:
        return PrimeSet(())
    width = hi - lo + 1
    flags = bytearray([1]) * width
    for p in _small_primes(isqrt(hi)):
        start = max(p * p, ((lo + p - 1) // p) * p)
        for m in range(start, hi + 1, p):
            flags[m - lo] = 0
    return PrimeSet(tuple(lo + i for i in range(width) if flags[i]))


def _small_primes(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i in range(2, limit + 1) if sieve[i]]


def factor_over(n: int, T: PrimeSet) -> FactoredInt | None:
    """Factor n over the prime set T, or None if some prime factor lies outside.

    n = 1 yields the empty factorization: 1 is a smooth unit for every T.
    """
    if n < 1:
        raise DomainError("factor_over requires n >= 1")
    rem = n
    factors = []
    for p in T.primes:
        if rem == 1:
            break
        e = 0
        while rem % p == 0:
            rem //= p
            e += 1
        if e:
            factors.append((p, e))
    if rem != 1:
        return None
    return FactoredInt(n, tuple(factors))


def mod_inverse(c: int, a: int) -> int:
    """Multiplicative inverse of c modulo a, in [1, a-1]."""
    if a < 2:
        raise DomainError("modulus must be >= 2")
    if gcd(c, a) != 1:
        raise NotInvertible(f"gcd({c}, {a}) > 1")
    return pow(c, -1, a)


def trial_factor(n: int, effort: int = 10**6) -> tuple[tuple[int, int], ...]:
    """Full factorization by trial division up to `effort`, then a primality check.

    Raises FactorizationLimit when the unfactored remainder is composite with
    no factor below the effort bound.
    """
    if n < 1:
        raise DomainError("trial_factor requires n >= 1")
    factors = []
    rem = n
    d = 2
    while d * d <= rem and d <= effort:
        if rem % d == 0:
            e = 0
            while rem % d == 0:
                rem //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rem > 1:
        if not is_prime(rem):
            raise FactorizationLimit(f"{n}: remainder {rem} composite beyond effort {effort}")
        factors.append((rem, 1))
    return tuple(sorted(factors))


def prime_support(n: int, effort: int = 10**6) -> tuple[int, ...]:
    """Distinct prime factors of |n|; empty for n in {-1, 1}."""
    n = abs(n)
    if n == 1:
        return ()
    return tuple(p for p, _ in trial_factor(n, effort))


def multiplicative_functions(n: int, effort: int = 10**6) -> tuple[int, int, int]:
    """(Euler phi, Moebius mu, divisor count) of n."""
    if n < 1:
        raise DomainError("n must be >= 1")
    phi, mu, d = 1, 1, 1
    for p, e in trial_factor(n, effort):
        phi *= (p - 1) * p ** (e - 1)
        mu = 0 if e > 1 else -mu
        d *= e + 1
    return phi, mu, d
