"""Checks against the published tables and the closed form for Gamma(1, 2p)."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable

from .contributions import ContributionBreakdown, Weight, breakdown
from .level import Level, make_level
from .numtheory import is_prime
from .oracle import intro_dim

GOLDEN_J = (0, 2, 4, 6, 8)
GOLDEN_K = tuple(range(16))


@dataclass(frozen=True)
class GoldenTable:
    D1: int
    D2: int
    rows: dict[int, tuple[int, ...]]  # j -> values for k = 0..15


@dataclass(frozen=True)
class Mismatch:
    D1: int
    D2: int
    k: int
    j: int
    expected: Fraction
    got: Fraction
    breakdown: ContributionBreakdown

    def describe(self) -> str:
        terms = " ".join(f"{n}={v}" for n, v in self.breakdown.terms.items())
        return (
            f"D1={self.D1} D2={self.D2} k={self.k} j={self.j}: "
            f"expected {self.expected}, got {self.got}\n  {terms}"
        )


@dataclass
class Report:
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def load_golden() -> list[GoldenTable]:
    """The twelve published tables, in the order they were printed."""
    src = resources.files("siegeldim").joinpath("data/golden_tables.csv")
    cells: dict[tuple[int, int], dict[int, dict[int, int]]] = {}
    with src.open(encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            key = (int(row["d1"]), int(row["d2"]))
            cols = cells.setdefault(key, {}).setdefault(int(row["j"]), {})
            cols[int(row["k"])] = int(row["value"])
    return [
        GoldenTable(d1, d2, {j: tuple(c[k] for k in GOLDEN_K) for j, c in rows.items()})
        for (d1, d2), rows in cells.items()
    ]


def verify_golden(
    evaluate: Callable[[Weight, Level], ContributionBreakdown] = breakdown,
) -> Report:
    """Recompute every golden cell with ``evaluate`` and collect mismatches.

    The raw total is compared, not the checked integer dimension, so a
    broken formula is reported as a mismatch instead of an exception.
    """
    report = Report()
    for table in load_golden():
        level = make_level(table.D1, table.D2)
        for j, values in table.rows.items():
            for k, expected in zip(GOLDEN_K, values):
                bd = evaluate(Weight(k, j), level)
                report.checked += 1
                if bd.total != expected:
                    report.mismatches.append(
                        Mismatch(table.D1, table.D2, k, j, Fraction(expected), bd.total, bd)
                    )
    return report


def odd_primes_upto(n: int) -> list[int]:
    return [p for p in range(3, n + 1) if is_prime(p)]


def crosscheck(pmax: int, kmax: int) -> tuple[Report, dict[int, list[Fraction]]]:
    """Compare the closed form with the general formula on Gamma(1, 2p), j = 0.

    Returns the report and, per prime, the general-formula values for
    k = 0..kmax.
    """
    report = Report()
    values: dict[int, list[Fraction]] = {}
    for p in odd_primes_upto(pmax):
        level = make_level(1, 2 * p)
        row = values.setdefault(p, [])
        for k in range(kmax + 1):
            bd = breakdown(Weight(k, 0), level)
            want = intro_dim(k, p)
            report.checked += 1
            if bd.total != want:
                report.mismatches.append(Mismatch(1, 2 * p, k, 0, want, bd.total, bd))
            row.append(bd.total)
    return report, values
