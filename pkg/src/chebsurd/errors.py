"""Exception hierarchy shared by all modules."""


class ChebsurdError(Exception):
    pass


class DomainError(ChebsurdError, ValueError):
    """A parameter lies outside the domain where an operation is defined."""


class NegativeIndex(DomainError):
    pass


class ZeroDenominator(ChebsurdError, ZeroDivisionError):
    pass


class PoleError(ChebsurdError, ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""


class DegreeOverflow(ChebsurdError):
    """Symbolic construction refused because the result degree is too large."""


class MalformedCF(DomainError):
    pass


class UnknownSequence(ChebsurdError, KeyError):
    pass
