"""Exact truncated theta series, partition statistics and the combinatorial
maps that explain their sign patterns."""
from .errors import (
    ContradictoryConstraint,
    DomainViolation,
    NonUnitConstantTerm,
    NotSubMultiset,
    ParameterDomain,
    ThetaForgeError,
    UnknownCheck,
    UnknownSeriesName,
    UnknownStatistic,
)

__version__ = "0.1.0"
