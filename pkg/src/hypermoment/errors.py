"""Exception hierarchy.

Every error raised by the library derives from :class:`HypermomentError` so
callers (the CLI in particular) can map families of failures to exit codes.
"""

from __future__ import annotations


class HypermomentError(Exception):
    """Base class for all library errors."""


class NotPrime(HypermomentError, ValueError):
    pass


class EvenPrime(HypermomentError, ValueError):
    pass


class SmallPrime(HypermomentError, ValueError):
    pass


class SingularLambda(HypermomentError, ValueError):
    pass


class DenominatorTooLarge(HypermomentError, ValueError):
    pass


class MethodInapplicable(HypermomentError):
    """No evaluator applies to the requested (datum, prime) pair."""


class NonSplitPrime(MethodInapplicable):
    """The datum's common denominator does not divide p - 1."""


class NotAlgebraicDatum(MethodInapplicable):
    pass


class PrecisionLoss(HypermomentError, ArithmeticError):
    """A floating-point result could not be rounded to an integer safely."""


class IdentityViolation(HypermomentError, AssertionError):
    """An identity that must hold exactly (or within tolerance) failed.

    ``witness`` carries whatever identifies the failing instance, e.g. the
    ``(k, m)`` pair for a Gauss-sum identity.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NonRealDelta(IdentityViolation):
    pass


class UnresolvedIndexSet(IdentityViolation):
    pass


class TraceNotZero(IdentityViolation):
    pass


class InsufficientTerms(HypermomentError, ValueError):
    pass


class OddWeight(HypermomentError, ValueError):
    pass
