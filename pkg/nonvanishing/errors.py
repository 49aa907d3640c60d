"""
Exception hierarchy for nonvanishing.

Two families matter to callers: parameter errors (bad input, exit code 1)
and invariant violations (a formula regression inside the package, exit
code 2). The CLI maps exceptions to exit codes with `exit_code_for`.
"""


class NonvanishingError(Exception):
    """Base class for every error raised by the package."""


# Parameter errors

class ParameterError(NonvanishingError):
    """Input rejected by a precondition."""


class NotPrime(ParameterError):
    pass


class GenusTooSmall(ParameterError):
    pass


class CharNotDividingCanonicalDegree(ParameterError):
    pass


class CoverDegreeInvalid(ParameterError):
    pass


class NonPositiveCoefficient(ParameterError):
    pass


class NonPositiveMultiple(ParameterError):
    pass


class NoContradiction(ParameterError):
    """The corrected and erroneous formulas agree (k = 1)."""


class OutOfProvenRange(ParameterError):
    """Arguments lie outside the range a theorem covers."""


class UnsupportedCharacteristic(ParameterError):
    pass


class InvalidArgument(ParameterError):
    pass


# Invariant violations

class InvariantViolation(NonvanishingError):
    """An internal identity failed. Never expected to fire."""


class NonIntegralResult(InvariantViolation):
    pass


class RankMismatch(InvariantViolation):
    pass


class LerayObstruction(InvariantViolation):
    pass


class IdentityFailure(InvariantViolation):
    pass


class DegenerateSummand(NonvanishingError):
    """
    The summand a theorem designates as witness is the zero bundle.

    Raised for the corner (a, b) = (1, l - 1) when m = 1, where the witness
    would sit in R^1 pi_* O_P(-1) = 0.
    """


def exit_code_for(exc: BaseException) -> int:
    """
    Map an exception to the CLI exit status.

    Args:
        exc: Exception raised by a command

    Returns:
        int: 1 for parameter errors and degenerate summands, 2 for invariant
        violations and anything else
    """
    if isinstance(exc, (ParameterError, DegenerateSummand)):
        return 1
    return 2
