"""Exception hierarchy.

Every error raised by the library derives from :class:`CodeZetaError`.
Input and validation problems derive from :class:`ValidationError`; a
:class:`ConsistencyError` means an internal invariant failed, which is
always a bug (the CLI maps it to exit code 3).
"""

from __future__ import annotations


class CodeZetaError(Exception):
    """Base class for all library errors."""


class ValidationError(CodeZetaError, ValueError):
    """Bad input: wrong parameters, malformed data, violated preconditions."""


class ConsistencyError(CodeZetaError, ArithmeticError):
    """An identity that must hold on valid input did not hold."""


# -- field
class NonPrime(ValidationError):
    pass


class ReducibleModulus(ValidationError):
    pass


class UnsupportedSize(ValidationError):
    pass


class MixedFields(ValidationError):
    pass


class ZeroInverse(ValidationError, ZeroDivisionError):
    pass


# -- code
class ZeroColumn(ValidationError):
    pass


class EmptyMatrix(ValidationError):
    pass


class BudgetExceeded(ValidationError):
    pass


class TrivialDual(ValidationError):
    pass


class NonIntegerResult(ValidationError):
    pass


class DivisibilityViolation(ValidationError):
    pass


# -- poly
class InexactDivision(ValidationError):
    pass


class DegreeOverflow(ValidationError):
    pass


class ZeroPolynomial(ValidationError):
    pass


class NonUnitDenominator(ValidationError):
    pass


# -- zeta
class RangeError(ValidationError):
    pass


class InconsistentProfile(ValidationError):
    pass


class NonIntegerWeight(ValidationError):
    pass


class NegativeWeight(ValidationError):
    pass


class NormalizationFailure(ConsistencyError):
    pass


class SingularSystem(ConsistencyError):
    pass


# -- duality
class LengthMismatch(ValidationError):
    pass


class PreconditionViolation(ValidationError):
    pass


# -- rha
class HypothesisViolation(ValidationError):
    pass


class GenusZero(ValidationError):
    pass


class ZeroConstantTerm(ValidationError):
    pass


# -- funcfield
class FunctionalEquationViolation(ValidationError):
    pass


class OddDegree(ValidationError):
    pass


class BadConstantTerm(ValidationError):
    pass


class InconsistentCounts(ValidationError):
    pass


class ConstructionFailure(ValidationError):
    pass


class ConsistencyFailure(ConsistencyError):
    pass
