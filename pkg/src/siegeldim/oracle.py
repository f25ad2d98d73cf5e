"""Closed form for dim S_{k,0}(Gamma(1, 2p)), p an odd prime.

This is written independently of :mod:`siegeldim.contributions` and is
only used to cross-check it.
"""

from __future__ import annotations

from fractions import Fraction

from .numtheory import Bracket, DomainError, is_prime, legendre


def intro_dim(k: int, p: int) -> Fraction:
    """Scalar-valued cusp form dimension of weight k on Gamma(1, 2p).

    At p = 3 the factor (p - (-3/p)) is replaced by 1.  This matches the
    tabulated values for Gamma(1, 6).
    """
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    if p == 2 or not is_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    e1 = legendre(-1, p)
    e3 = legendre(-3, p)  # 0 at p = 3
    e5 = legendre(p, 5) if p != 5 else 0
    sgn = -1 if k % 2 else 1
    f3 = 1 if p == 3 else p - e3

    total = Fraction((k - 2) * (k - 1) * (2 * k - 3) * (p * p - 1), 2**7 * 3**2 * 5)
    total += Fraction(p - 1, 2**3 * 3)
    total += Fraction(
        (sgn * (8 + e1) + (2 * k - 3) * (8 - e1)) * (p - e1), 2**7 * 3
    )
    total += (
        Fraction(Bracket((0, -1, 1))(k), 2**2 * 3**2)
        * (4 + Fraction(e3 * (1 - 5 * e3), 2))
        * f3
    )
    total += (
        Fraction(2 * k - 3, 2**2 * 3**2)
        * (5 - Fraction(e3 * (1 + 7 * e3), 2))
        * f3
    )
    total -= Fraction(1 - e1, 2**3) + Fraction(1 - e3, 3)
    total += Fraction(2 * Bracket((1, 0, 0, -1, 0))(k) * (1 - e5), 5)
    if p % 8 in (3, 5):
        total += Fraction(Bracket((1, 0, 0, -1))(k), 4)
    if p == 3:
        last = Fraction(sgn, 2)
    elif p % 12 in (1, 11):
        last = Fraction(0)
    elif p % 12 == 5:
        last = Fraction(Bracket((0, 1, -1))(k))
    else:  # p = 7 mod 12
        last = Fraction(sgn)
    return total + last / 6
