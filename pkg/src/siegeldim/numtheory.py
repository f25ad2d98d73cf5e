"""Integer primitives used by the dimension formula.

Everything here works on plain Python ints and :class:`fractions.Fraction`;
inputs are discriminants of quaternion algebras, so trial division is
always fast enough.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import isqrt, prod
from numbers import Rational
from typing import Iterable, Iterator, Sequence


class DomainError(ValueError):
    """An argument lies outside the domain of a number-theoretic function."""


class NotSquarefreeError(DomainError):
    def __init__(self, n: int, prime: int):
        super().__init__(f"{n} is not squarefree (divisible by {prime}^2)")
        self.n = n
        self.prime = prime


class QuadraticField(enum.IntEnum):
    """Imaginary quadratic fields, valued by their fundamental discriminant."""

    GAUSSIAN = -4  # Q(sqrt(-1))
    EISENSTEIN = -3  # Q(sqrt(-3))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise DomainError(f"legendre symbol needs an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def chi(field: QuadraticField, p: int) -> int:
    """Splitting symbol of the prime p in ``field``.

    +1 if p splits, -1 if it is inert, 0 if it ramifies.  This is the
    Kronecker symbol of the field discriminant, so e.g. ``chi(GAUSSIAN, 2)``
    is 0 and ``chi(EISENSTEIN, 2)`` is -1.
    """
    if not is_prime(p):
        raise DomainError(f"chi needs a prime, got {p}")
    disc = int(field)
    if p == 2:
        if disc % 2 == 0:
            return 0
        return 1 if disc % 8 in (1, 7) else -1
    return legendre(disc, p)


@dataclass(frozen=True)
class Bracket:
    """The m-periodic function n -> values[n mod m].

    Values are kept as given (ints or Fractions) so evaluation is cheap.
    """

    values: tuple[Rational, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        if not vals:
            raise DomainError("bracket needs period >= 1")
        if not all(isinstance(v, Rational) for v in vals):
            raise DomainError(f"bracket values must be exact rationals: {vals}")
        object.__setattr__(self, "values", vals)

    @property
    def period(self) -> int:
        return len(self.values)

    def __call__(self, n: int) -> Rational:
        return self.values[n % len(self.values)]


def bracket_eval(b: Bracket, n: int) -> Fraction:
    return Fraction(b(n))


@dataclass(frozen=True)
class PrimeFactorization:
    """Strictly increasing tuple of distinct primes (a squarefree integer)."""

    primes: tuple[int, ...] = ()

    def __post_init__(self):
        ps = self.primes
        if any(a >= b for a, b in zip(ps, ps[1:])):
            raise DomainError(f"primes must be strictly increasing: {ps}")

    @property
    def value(self) -> int:
        return prod(self.primes)

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)


def factor_squarefree(n: int) -> PrimeFactorization:
    """Distinct prime factors of a squarefree ``n >= 1``.

    Raises :class:`NotSquarefreeError` naming the first prime whose square
    divides ``n``.
    """
    if n < 1:
        raise DomainError(f"expected a positive integer, got {n}")
    m = n
    primes = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                raise NotSquarefreeError(n, d)
            primes.append(d)
        d += 1 if d == 2 else 2
    if m > 1:
        primes.append(m)
    return PrimeFactorization(tuple(primes))


def residue_class(primes: Iterable[int], m: int, n: int) -> frozenset[int]:
    """The primes congruent to m modulo n (the set T(m; n))."""
    if n < 1:
        raise DomainError(f"modulus must be positive, got {n}")
    return frozenset(p for p in primes if (p - m) % n == 0)


def squarefree_divisors(primes: Sequence[int]) -> list[tuple[int, ...]]:
    """All subsets of ``primes``, i.e. the divisors of their product."""
    ps = sorted(primes)
    return [c for r in range(len(ps) + 1) for c in combinations(ps, r)]


def squarefree_divisors_with_prime(
    base: PrimeFactorization, q: int
) -> list[PrimeFactorization]:
    """All divisors of rad(q * base), as factorizations."""
    if not is_prime(q):
        raise DomainError(f"{q} is not prime")
    return [
        PrimeFactorization(c) for c in squarefree_divisors(set(base) | {q})
    ]
