"""The arithmetic group Gamma(D1, D2) as a validated value object."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import prod
from typing import Iterator

from .numtheory import (
    NotSquarefreeError,
    PrimeFactorization,
    factor_squarefree,
    residue_class,
)


class InvalidLevelError(ValueError):
    """(D1, D2) does not describe a maximal lattice in a division algebra."""


class Part(enum.Enum):
    D = "D"
    D1 = "D1"
    D2 = "D2"


@dataclass(frozen=True)
class Level:
    """Gamma(D1, D2): B has discriminant D = D1*D2, split into D1 and D2.

    Build instances with :func:`make_level`; the constructor does not
    validate.
    """

    D1: int
    D2: int
    d1: PrimeFactorization
    d2: PrimeFactorization

    @property
    def D(self) -> int:
        return self.D1 * self.D2

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted(self.d1.primes + self.d2.primes))

    def part(self, which: Part | str) -> tuple[int, ...]:
        which = Part(which)
        if which is Part.D:
            return self.primes
        return (self.d1 if which is Part.D1 else self.d2).primes

    def __str__(self) -> str:
        return f"Gamma({self.D1},{self.D2})"


def make_level(D1: int, D2: int) -> Level:
    if D1 < 1 or D2 < 1:
        raise InvalidLevelError(f"D1, D2 must be positive, got ({D1}, {D2})")
    try:
        factor_squarefree(D1 * D2)
        d1 = factor_squarefree(D1)
        d2 = factor_squarefree(D2)
    except NotSquarefreeError as e:
        raise InvalidLevelError(
            f"D not squarefree: D = {D1 * D2} is divisible by {e.prime}^2"
        ) from None
    s = len(d1) + len(d2)
    if s == 0:
        raise InvalidLevelError(
            "trivial discriminant D = 1 (split case, not a division algebra)"
        )
    if s % 2:
        raise InvalidLevelError(
            f"odd ramification count: D = {D1 * D2} has {s} prime factors, "
            "an indefinite division algebra needs an even number"
        )
    return Level(D1, D2, d1, d2)


def class_set(level: Level, which: Part | str, m: int, n: int) -> frozenset[int]:
    """T(m; n) for T in {D, D1, D2}."""
    return residue_class(level.part(which), m, n)


def iter_levels(max_D: int) -> Iterator[Level]:
    """Every valid level with D <= max_D, all 2^s splits of each D."""
    for D in range(2, max_D + 1):
        try:
            ps = factor_squarefree(D).primes
        except NotSquarefreeError:
            continue
        if len(ps) % 2:
            continue
        for r in range(len(ps) + 1):
            for c in combinations(ps, r):
                D1 = prod(c)
                yield make_level(D1, D // D1)
