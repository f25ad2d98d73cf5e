"""Dimensions of vector-valued Siegel cusp forms of degree two for the
arithmetic groups Gamma(D1, D2) of non-split Q-forms of Sp(2, R)."""

from .contributions import ContributionBreakdown, Weight, breakdown
from .dimension import DimensionResult, Validity, dim_cusp_forms, dimension
from .level import InvalidLevelError, Level, make_level
from .oracle import intro_dim

__all__ = [
    "ContributionBreakdown",
    "DimensionResult",
    "InvalidLevelError",
    "Level",
    "Validity",
    "Weight",
    "breakdown",
    "dim_cusp_forms",
    "dimension",
    "intro_dim",
    "make_level",
]
__version__ = "0.1.0"
