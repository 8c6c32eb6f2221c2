"""Exception types raised across the package."""


class GRMError(Exception):
    """Base class for all errors raised by grmrad."""


class NonPrimeP(GRMError, ValueError):
    pass


class NotPrimePower(GRMError, ValueError):
    pass


class SizeExceeded(GRMError, ValueError):
    pass


class DivisionByZero(GRMError, ZeroDivisionError):
    pass


class IndexOutOfRange(GRMError, IndexError):
    pass


class FieldMismatch(GRMError, ValueError):
    pass


class ArityMismatch(GRMError, ValueError):
    pass


class TooManyVariables(SizeExceeded):
    pass


class LengthMismatch(GRMError, ValueError):
    pass


class ShapeMismatch(GRMError, ValueError):
    pass


class NotNonPrime(GRMError, ValueError):
    """Raised when a non-prime-field routine is handed a prime order."""


class NoSeparator(GRMError, RuntimeError):
    """No separating basis vector was found for a non-prime field."""


NonPrime = NonPrimeP
