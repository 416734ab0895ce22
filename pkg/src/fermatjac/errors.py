"""Exception types shared across the package."""


class FermatjacError(Exception):
    """Base class for all package errors."""


class DivisionByZero(FermatjacError, ZeroDivisionError):
    pass


class NotCoprime(FermatjacError, ValueError):
    pass


class ZeroInput(FermatjacError, ValueError):
    pass


class BadIndex(FermatjacError, ValueError):
    pass


class BadDivisor(FermatjacError, ValueError):
    pass


class ZeroArgument(FermatjacError, ValueError):
    pass


class NotConstantWeight(FermatjacError, ValueError):
    pass


class NoIntegralSolution(FermatjacError, RuntimeError):
    """Signals an implementation bug: constant-weight doubles must decompose."""


class BadModulus(FermatjacError, ValueError):
    pass


class BadPartition(FermatjacError, ValueError):
    pass


class NotInKernel(FermatjacError, RuntimeError):
    """Signals an implementation bug: prime-power equations must be in the kernel."""


class TranscendentalResidue(FermatjacError, RuntimeError):
    """2*pi or i exponent failed to cancel in an exact reduction (bug)."""


class NonHalfIntegerExponent(FermatjacError, RuntimeError):
    """A radical exponent was not a half-integer in an exact reduction (bug)."""


class NumericMismatch(FermatjacError, RuntimeError):
    """Exact and numeric evaluations disagree beyond tolerance (bug)."""


class DescentFailure(FermatjacError, RuntimeError):
    """A value that must lie in a subfield failed to descend (bug)."""


class BudgetExhausted(FermatjacError, RuntimeError):
    pass


class BudgetExceeded(FermatjacError, ValueError):
    pass


class EvenModulus(FermatjacError, ValueError):
    pass


class EvenPrime(FermatjacError, ValueError):
    pass


class ConductorClash(FermatjacError, ValueError):
    """p divides the conductor housing the exact value; the check is undefined."""


class NotAnEquation(FermatjacError, ValueError):
    pass


class ShapeMismatch(FermatjacError, ValueError):
    pass


class WitnessNotFound(FermatjacError, RuntimeError):
    pass
