"""Exception hierarchy. Every domain error is a ``ValueError``."""

from fractions import Fraction


class LefkappaError(ValueError):
    """Base class for all domain errors raised by lefkappa."""


class NotIntegral(LefkappaError):
    """An operation that must return an integer met a fractional exact value."""

    def __init__(self, what: str, value: Fraction):
        self.value = value
        super().__init__(f"{what} is not an integer: {value}")


class NonIntegerSignature(NotIntegral):
    def __init__(self, value: Fraction):
        super().__init__("signature", value)


class WrongBase(LefkappaError):
    pass


class BaseIsSphere(LefkappaError):
    pass


class KSquaredNotPositive(LefkappaError):
    pass


class ImpossibleCanonicalData(LefkappaError):
    pass


class NonAlmostComplex(LefkappaError):
    pass


class ParityViolation(LefkappaError):
    pass


class NegativeGenus(LefkappaError):
    pass


class NegativeCount(LefkappaError):
    def __init__(self, value: int, mode: str):
        self.value = value
        self.mode = mode
        super().__init__(f"singular fiber count is negative: B={value} (mode={mode})")


class InconsistentPairing(LefkappaError):
    pass


class DivisibilityViolation(NotIntegral):
    pass


class ResourceLimitExceeded(LefkappaError):
    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(f"grid has {count} raw candidates, limit is {limit}")
