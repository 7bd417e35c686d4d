"""Exception hierarchy shared by every theta_forge module."""


class ThetaForgeError(Exception):
    """Base class for all library errors."""


class ParameterDomain(ThetaForgeError, ValueError):
    """A parameter lies outside the domain where the object is defined."""


class NonUnitConstantTerm(ThetaForgeError, ZeroDivisionError):
    """Series inversion over the integers needs constant term +1 or -1."""


class UnknownSeriesName(ThetaForgeError, KeyError):
    pass


class UnknownStatistic(ThetaForgeError, KeyError):
    pass


class UnknownCheck(ThetaForgeError, KeyError):
    pass


class NotSubMultiset(ThetaForgeError, ValueError):
    """Multiset difference was asked for a part that is not there."""


class DomainViolation(ThetaForgeError, ValueError):
    """A combinatorial map was applied outside its domain."""


class ContradictoryConstraint(ThetaForgeError, ValueError):
    """A partition constraint whose clauses cannot describe a valid family."""
