"""Exception types raised by powbands.

Every error derives from :class:`PowBandsError`, which is itself a
``ValueError`` so callers that only care about bad input can catch that.
"""


class PowBandsError(ValueError):
    pass


class ModulusTooLarge(PowBandsError):
    pass


class ModulusTooSmall(PowBandsError):
    pass


class NotInvertible(PowBandsError):
    pass


class NotCoprime(PowBandsError):
    pass


class NotPrime(PowBandsError):
    pass


class InvalidDecomposition(PowBandsError):
    pass


class NotAUnit(PowBandsError):
    pass


class QDividesB(PowBandsError):
    pass


class QTooSmall(PowBandsError):
    pass


class AlphaInNSet(PowBandsError):
    pass


class InvalidProgression(PowBandsError):
    pass


class RangeExceeded(PowBandsError):
    pass


class SearchBudgetExhausted(RuntimeError):
    """The progression search hit its candidate cap.

    This means the search was misconfigured (bound too high, cap too low);
    it says nothing about whether the progression contains primes.
    """


class DegenerateInterval(PowBandsError):
    pass
