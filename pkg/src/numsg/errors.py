"""Exception hierarchy shared by all modules."""


class NumsgError(Exception):
    """Base class; the CLI maps these to exit code 2."""


class EmptyInput(NumsgError, ValueError):
    pass


class NonCoprime(NumsgError, ValueError):
    pass


class NonPositive(NumsgError, ValueError):
    pass


class NotInSemigroup(NumsgError, ValueError):
    pass


class IsGenerator(NumsgError, ValueError):
    pass


class NotCoprime(NumsgError, ValueError):
    pass


class ZeroPolynomial(NumsgError, ValueError):
    pass


class NonHomogeneousInput(NumsgError, ValueError):
    pass


class EmbdimTooLarge(NumsgError, ValueError):
    pass


class BandTooSmall(NumsgError, ValueError):
    pass


class HypothesisFailed(NumsgError):
    pass


class IllegalParameters(NumsgError, ValueError):
    pass


class NotPairwiseCoprime(IllegalParameters):
    pass


class WrongEmbdim(NumsgError, ValueError):
    pass


class NotSymmetric(NumsgError, ValueError):
    pass


class NotPseudoSymmetric(NumsgError, ValueError):
    pass


class IsCI(NumsgError, ValueError):
    pass


class OracleMismatch(AssertionError):
    """Internal consistency failure; never caught silently (CLI exit code 3)."""
