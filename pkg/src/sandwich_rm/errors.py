"""Exception hierarchy shared by every module."""


class SandwichRMError(Exception):
    """Base class for all errors raised by this package."""


# field
class NonPrime(SandwichRMError, ValueError):
    pass


class OddExtension(SandwichRMError, ValueError):
    pass


class ReducibleModulus(SandwichRMError, ValueError):
    pass


class NonPrimitiveModulus(SandwichRMError, ValueError):
    pass


class FieldTooLarge(SandwichRMError, ValueError):
    pass


class DivisionByZero(SandwichRMError, ZeroDivisionError):
    pass


# exponents
class OutOfRange(SandwichRMError, ValueError):
    pass


class RangeError(SandwichRMError, ValueError):
    pass


class InvalidI(SandwichRMError, ValueError):
    pass


# codes
class LengthMismatch(SandwichRMError, ValueError):
    pass


class ZeroScale(SandwichRMError, ValueError):
    pass


class Unsupported(SandwichRMError, ValueError):
    pass


# analysis
class ZeroCodeword(SandwichRMError, ValueError):
    pass


class DegreeMismatch(SandwichRMError, ValueError):
    pass


class BadShape(SandwichRMError, ValueError):
    pass


class TooMany(SandwichRMError, ValueError):
    pass


class IneligibleCode(SandwichRMError, ValueError):
    pass


class BudgetExceeded(SandwichRMError, RuntimeError):
    """Raised when a search exhausts its node budget.

    ``report`` carries whatever sound bounds were established before the
    budget ran out.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
