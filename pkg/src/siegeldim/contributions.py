"""The fifteen contributions H1..H12, I1..I3 to dim S_{k,j}(Gamma(D1,D2)).

Each ``hN``/``iN`` takes a :class:`Weight` with even j and a
:class:`~siegeldim.level.Level` and returns an exact ``Fraction``.  Case
data lives in :mod:`siegeldim._tables`.

Every term is a level-only constant times a short expression in k and j.
The constants are computed once per level by :func:`level_constants`
(cached), so filling a table costs a few integer operations per cell.

Two readings matter for correctness and are pinned by the golden tables:

* symbols at 2 and 3 are splitting symbols (``chi``), so (-1/2) = 0,
  (-3/3) = 0 and (-3/2) = -1;
* in H6 (resp. H7), n runs over squarefree divisors of 2*D (resp. 3*D).
  Primes of D that split in Q(sqrt(-1)) (resp. Q(sqrt(-3))) are always in n.
  The remaining primes of n divide 2*D1 (resp. 3*D1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from . import _tables as T
from .level import Level, Part, class_set
from .numtheory import (
    Bracket,
    DomainError,
    QuadraticField,
    chi,
    squarefree_divisors,
)

GAUSSIAN = QuadraticField.GAUSSIAN
EISENSTEIN = QuadraticField.EISENSTEIN

TERM_NAMES = tuple(f"H{i}" for i in range(1, 13)) + ("I1", "I2", "I3")

_B3_ONE = Bracket((1, -1, 0))
_B3_ZERO_ONE = Bracket((0, 1, -1))
_B3_ZERO_NEG = Bracket((0, -1, 1))
_C1 = {r: Bracket(v) for r, v in T.C1.items()}
_C2 = {r: Bracket(v) for r, v in T.C2.items()}
_C3 = {r: Bracket(v) for r, v in T.C3.items()}
_C4 = {r: Bracket(v) for r, v in T.C4.items()}


@dataclass(frozen=True)
class Weight:
    """The weight det^k (x) Sym_j."""

    k: int
    j: int

    def __post_init__(self):
        if self.k < 0 or self.j < 0:
            raise DomainError(f"weight must be nonnegative, got {self}")


@dataclass(frozen=True)
class ContributionBreakdown:
    h: tuple[Fraction, ...]
    i: tuple[Fraction, ...]

    @property
    def total(self) -> Fraction:
        return sum(self.h, Fraction(0)) + sum(self.i, Fraction(0))

    @property
    def terms(self) -> dict[str, Fraction]:
        return dict(zip(TERM_NAMES, self.h + self.i))

    @classmethod
    def zero(cls) -> "ContributionBreakdown":
        return cls((Fraction(0),) * 12, (Fraction(0),) * 3)


@dataclass(frozen=True)
class LevelConstants:
    """Level-dependent factors, one field per term.

    Case factors and gates are already multiplied in.  The divisor-sum terms
    keep their (odd, even) split.  ``h12`` holds 8*A and 8*B times the
    power-of-two multiplier, which makes them integers.
    """

    h1: int
    h2: int
    h3: int
    h4: int
    h5: int
    h6: tuple[int, int]
    h7: tuple[int, int]
    h8: int
    h9: int
    h10: int
    h11: int
    h12: tuple[int, int]
    i1: int
    i2: int
    i3: int


def _check(w: Weight) -> None:
    if w.j % 2:
        raise DomainError("contributions defined for even j only")


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _where(level: Level, p: int) -> str:
    if p in level.d1:
        return "D1"
    if p in level.d2:
        return "D2"
    return "none"


def _one_minus_chi(primes, *fields) -> int:
    return prod(prod(1 - chi(f, p) for f in fields) for p in primes)


def _elliptic_divisors(L: Level, q: int, field: QuadraticField):
    forced = tuple(p for p in L.primes if chi(field, p) == 1)
    free = (set(L.d1) | {q}) - set(forced)
    return [tuple(sorted(c + forced)) for c in squarefree_divisors(free)]


def h6_divisors(L: Level) -> list[tuple[int, ...]]:
    """The n of the H6 sum, each as a tuple of its primes."""
    return _elliptic_divisors(L, 2, GAUSSIAN)


def h7_divisors(L: Level) -> list[tuple[int, ...]]:
    """The n of the H7 sum, each as a tuple of its primes."""
    return _elliptic_divisors(L, 3, EISENSTEIN)


def _divisor_weights(L: Level, q: int, divisors, btable) -> tuple[int, int]:
    """Sum over n of the A-free factors, split by parity of the prime count.

    Returns (odd, even).
    """
    sums = [0, 0]
    where_q = _where(L, q)
    for n in divisors:
        ns = set(n)
        wt = prod(p - 1 for p in ns)
        wt *= prod(p + 1 for p in L.d2 if p not in ns and p != q)
        wt *= 2 ** sum(1 for p in L.d1 if p not in ns and p != q)
        wt *= btable[(where_q, q in ns)]
        sums[len(n) % 2 == 0] += wt
    return sums[0], sums[1]


def _h2_case(L: Level) -> str:
    if L.D2 == 1:
        return "2|D1,D2=1" if 2 in L.d1 else "2!|D1,D2=1"
    return "D2=2" if L.D2 == 2 else "otherwise"


def _h9_case(L: Level) -> str:
    if L.D2 == 1:
        return "2|D1,D2=1" if 2 in L.d1 else "2!|D1,D2=1"
    if L.D2 == 2 and 2 not in L.d1:
        return "2!|D1,D2=2"
    return "otherwise"


def _h10_gate(L: Level) -> int:
    blocked = any(class_set(L, Part.D1, r, 5) for r in T.H10_D1_BLOCKING) or any(
        class_set(L, Part.D2, r, 5) for r in T.H10_D2_BLOCKING
    )
    if blocked:
        return 0
    return 1 if 5 in L.primes else 2


def _h11_gate(L: Level) -> int:
    return 0 if class_set(L, Part.D, 1, 8) or class_set(L, Part.D2, 7, 8) else 1


def h12_columns(L: Level) -> tuple[int, int]:
    """Columns of the A/B table used for A and for B, in that order.

    Case (II) applies to both when D1 has a prime = 11 mod 12.  Otherwise A
    reads case (I) when #D(5;12) is even and case (III) when it is odd.
    B reads the opposite column.
    """
    if class_set(L, Part.D1, 11, 12):
        return T.CASE_II, T.CASE_II
    if len(class_set(L, Part.D, 5, 12)) % 2 == 0:
        return T.CASE_I, T.CASE_III
    return T.CASE_III, T.CASE_I


def _h12_values(L: Level) -> tuple[Fraction, Fraction]:
    if class_set(L, Part.D, 1, 12) or class_set(L, Part.D2, 11, 12):
        return Fraction(0), Fraction(0)
    row = T.H12_TABLE[(_where(L, 2), _where(L, 3))]
    col_a, col_b = h12_columns(L)
    return row[col_a], row[col_b]


@lru_cache(maxsize=8192)
def level_constants(L: Level) -> LevelConstants:
    ps, d1, d2 = L.primes, L.d1, L.d2
    h12_mult = 2 ** len(ps) * 2 ** len(class_set(L, Part.D1, 11, 12))
    a, b = _h12_values(L)
    return LevelConstants(
        h1=prod((p - 1) * (p * p + 1) for p in d1) * prod(p * p - 1 for p in d2),
        h2=prod((p - 1) ** 2 for p in ps) * T.H2_FACTOR[_h2_case(L)],
        h3=T.H3_FACTOR.get(L.D2, 0)
        * prod((p - 1) * (1 - chi(GAUSSIAN, p)) for p in d1),
        h4=T.H4_FACTOR.get(L.D2, 0)
        * prod((p - 1) * (1 - chi(EISENSTEIN, p)) for p in d1),
        h5=T.H5_FACTOR.get(L.D2, 0)
        * prod((p - 1) * (1 - chi(EISENSTEIN, p)) for p in d1),
        h6=_divisor_weights(L, 2, h6_divisors(L), T.H6_B),
        h7=_divisor_weights(L, 3, h7_divisors(L), T.H7_B),
        h8=(L.D2 == 1) * _one_minus_chi(ps, GAUSSIAN, EISENSTEIN),
        h9=T.H9_FACTOR[_h9_case(L)]
        * prod((1 - chi(EISENSTEIN, p)) ** 2 for p in d1 if p != 2),
        h10=_h10_gate(L) * 2 ** len(ps) * 2 ** len(class_set(L, Part.D, 4, 5)),
        h11=_h11_gate(L)
        * 2 ** sum(1 for p in ps if p != 2)
        * 2 ** len(class_set(L, Part.D1, 7, 8)),
        h12=(int(8 * h12_mult * a), int(8 * h12_mult * b)),
        i1=prod(p - 1 for p in ps),
        i2=_one_minus_chi(ps, GAUSSIAN),
        i3=_one_minus_chi(ps, EISENSTEIN),
    )


def clear_cache() -> None:
    """Drop cached level constants (needed after patching helpers)."""
    level_constants.cache_clear()


# Numerators of the terms as functions of (k, j, level constants); the
# matching denominators are in _TERMS.  Every denominator divides _DEN.


def _h1(k: int, j: int, c: LevelConstants) -> int:
    return (j + 1) * (k - 2) * (j + k - 1) * (j + 2 * k - 3) * c.h1


def _h2(k: int, j: int, c: LevelConstants) -> int:
    return _sign(k) * (j + k - 1) * (k - 2) * c.h2


def _h3(k: int, j: int, c: LevelConstants) -> int:
    s = _sign(j // 2)
    return (s * (k - 2), -(j + k - 1), -s * (k - 2), j + k - 1)[k % 4] * c.h3


def _h4(k: int, j: int, c: LevelConstants) -> int:
    a, m = j + k - 1, k - 2
    return ((a, -a, 0)[k % 3] + (m, 0, -m)[(j + k) % 3]) * c.h4


def _h5(k: int, j: int, c: LevelConstants) -> int:
    a, m = j + k - 1, k - 2
    b = (-a, -a, 0, a, a, 0)[k % 6] + (m, 0, -m, -m, 0, m)[(j + k) % 6]
    return b * c.h5


def _h6(k: int, j: int, c: LevelConstants) -> int:
    odd, even = c.h6
    s = _sign(j // 2)
    return s * _sign(k) * (j + 1) * odd + s * (j + 2 * k - 3) * even


def _h7(k: int, j: int, c: LevelConstants) -> int:
    odd, even = c.h7
    a_odd = (j + 1) * _B3_ZERO_ONE(j + 2 * k)
    a_even = (j + 2 * k - 3) * _B3_ONE(j)
    return a_odd * odd + a_even * even


def _h8(k: int, j: int, c: LevelConstants) -> int:
    return _C1[j % 12](k) * c.h8


def _h9(k: int, j: int, c: LevelConstants) -> int:
    return _C2[j % 6](k) * c.h9


def _h10(k: int, j: int, c: LevelConstants) -> int:
    return _C3[j % 10](k) * c.h10


def _h11(k: int, j: int, c: LevelConstants) -> int:
    return _C4[j % 8](k) * c.h11


def _h12(k: int, j: int, c: LevelConstants) -> int:
    a8, b8 = c.h12
    s = _sign(j // 2)
    return s * _sign(k) * _B3_ONE(j) * a8 + s * _B3_ZERO_NEG(j + 2 * k) * b8


def _i1(k: int, j: int, c: LevelConstants) -> int:
    return (j + 1) * c.i1


def _i2(k: int, j: int, c: LevelConstants) -> int:
    return -_sign(j // 2) * c.i2


def _i3(k: int, j: int, c: LevelConstants) -> int:
    return -_B3_ONE(j) * c.i3


_TERMS = (
    (_h1, 2**7 * 3**3 * 5),
    (_h2, 2**7 * 3**2),
    (_h3, 2**5 * 3),
    (_h4, 2**3 * 3**3),
    (_h5, 2**3 * 3**2),
    (_h6, 2**7 * 3),
    (_h7, 2**3 * 3**3),
    (_h8, 2**2 * 3),
    (_h9, 2 * 3**2),
    (_h10, 2 * 5),
    (_h11, 2**3),
    (_h12, 8 * 2**2 * 3),  # A and B were scaled by 8
    (_i1, 2**3 * 3),
    (_i2, 2**3),
    (_i3, 2 * 3),
)
_DEN = 2**7 * 3**3 * 5
_SCALED = tuple((f, _DEN // den) for f, den in _TERMS)
assert all(_DEN % den == 0 for _, den in _TERMS)


def _term(index: int, w: Weight, L: Level) -> Fraction:
    _check(w)
    f, den = _TERMS[index]
    return Fraction(f(w.k, w.j, level_constants(L)), den)


def h1(w: Weight, L: Level) -> Fraction:
    return _term(0, w, L)


def h2(w: Weight, L: Level) -> Fraction:
    return _term(1, w, L)


def h3(w: Weight, L: Level) -> Fraction:
    return _term(2, w, L)


def h4(w: Weight, L: Level) -> Fraction:
    return _term(3, w, L)


def h5(w: Weight, L: Level) -> Fraction:
    return _term(4, w, L)


def h6(w: Weight, L: Level) -> Fraction:
    return _term(5, w, L)


def h7(w: Weight, L: Level) -> Fraction:
    return _term(6, w, L)


def h8(w: Weight, L: Level) -> Fraction:
    return _term(7, w, L)


def h9(w: Weight, L: Level) -> Fraction:
    return _term(8, w, L)


def h10(w: Weight, L: Level) -> Fraction:
    return _term(9, w, L)


def h11(w: Weight, L: Level) -> Fraction:
    return _term(10, w, L)


def h12(w: Weight, L: Level) -> Fraction:
    return _term(11, w, L)


def i1(w: Weight, L: Level) -> Fraction:
    return _term(12, w, L)


def i2(w: Weight, L: Level) -> Fraction:
    return _term(13, w, L)


def i3(w: Weight, L: Level) -> Fraction:
    return _term(14, w, L)


def breakdown(w: Weight, L: Level) -> ContributionBreakdown:
    _check(w)
    c = level_constants(L)
    vals = tuple(Fraction(f(w.k, w.j, c), den) for f, den in _TERMS)
    return ContributionBreakdown(vals[:12], vals[12:])


def scaled_total(k: int, j: int, L: Level) -> tuple[int, int]:
    """The sum of all fifteen terms as (numerator, denominator), unreduced.

    Integer arithmetic only; this is the fast path for filling tables.
    """
    if j % 2:
        raise DomainError("contributions defined for even j only")
    c = level_constants(L)
    return sum(f(k, j, c) * scale for f, scale in _SCALED), _DEN


def case_labels(L: Level) -> dict[str, str]:
    """Which branch of each case selector the level falls into.

    Used to document which branches the golden tables reach.
    """
    labels = {
        "H2": _h2_case(L),
        "H3": f"D2={L.D2}" if L.D2 in T.H3_FACTOR else "otherwise",
        "H4": f"D2={L.D2}" if L.D2 in T.H4_FACTOR else "otherwise",
        "H5": "D2=1" if L.D2 == 1 else "otherwise",
        "H8": "D2=1" if L.D2 == 1 else "otherwise",
        "H9": _h9_case(L),
        "H10": f"gate={_h10_gate(L)}",
        "H11": f"gate={_h11_gate(L)}",
    }
    for name, q, divs in (("H6", 2, h6_divisors(L)), ("H7", 3, h7_divisors(L))):
        where = _where(L, q)
        labels[name] = ",".join(
            sorted({f"{q}in{where}/{q}{'|' if q in n else '!|'}n" for n in divs})
        )
    if class_set(L, Part.D, 1, 12) or class_set(L, Part.D2, 11, 12):
        labels["H12"] = "A=B=0"
    else:
        col_a, col_b = h12_columns(L)
        names = ("I", "II", "III")
        labels["H12"] = (
            f"row=2in{_where(L, 2)},3in{_where(L, 3)}"
            f";A:{names[col_a]};B:{names[col_b]}"
        )
    return labels
