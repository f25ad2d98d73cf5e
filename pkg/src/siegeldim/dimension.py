"""dim S_{k,j}(Gamma(D1, D2)) as the sum of the fifteen contributions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from .contributions import ContributionBreakdown, Weight, breakdown, scaled_total
from .level import Level


class Validity(enum.Enum):
    PROVEN = "proven"  # k >= 5, the formula is a theorem
    FORMAL = "formal"  # k <= 4, formal substitution only

    @property
    def label(self) -> str:
        return "proven, k>=5" if self is Validity.PROVEN else "formal, k<=4"


class NonIntegralTotalError(ArithmeticError):
    """The contributions did not sum to an integer (a transcription bug)."""

    def __init__(self, w: Weight, level: Level, bd: ContributionBreakdown):
        lines = [f"non-integral total {bd.total} for {level}, k={w.k}, j={w.j}:"]
        lines += [f"  {name} = {v}" for name, v in bd.terms.items()]
        super().__init__("\n".join(lines))
        self.breakdown = bd


@dataclass(frozen=True)
class DimensionResult:
    dimension: int
    validity: Validity
    weight: Weight
    level: Level

    @cached_property
    def breakdown(self) -> ContributionBreakdown:
        """Per-term values, computed on first access."""
        if self.weight.j % 2:
            return ContributionBreakdown.zero()
        return breakdown(self.weight, self.level)


def dim_cusp_forms(w: Weight, level: Level) -> DimensionResult:
    """Evaluate the dimension formula at weight ``w``.

    Odd j gives 0 without touching the contributions, because
    Gamma(D1, D2) contains -1.  For k <= 4 the formula is substituted
    formally and the result may be negative.
    """
    if w.j % 2:
        return DimensionResult(0, Validity.PROVEN, w, level)
    num, den = scaled_total(w.k, w.j, level)
    if num % den:
        raise NonIntegralTotalError(w, level, breakdown(w, level))
    validity = Validity.PROVEN if w.k >= 5 else Validity.FORMAL
    return DimensionResult(num // den, validity, w, level)


def dimension(k: int, j: int, level: Level) -> int:
    """Shorthand for ``dim_cusp_forms(Weight(k, j), level).dimension``."""
    return dim_cusp_forms(Weight(k, j), level).dimension
