"""
Jerarquía de excepciones de la librería.

Cada error expone ``to_dict()`` para que la CLI emita un objeto de error
estructurado.
"""

from typing import Any, Dict, Optional


class MotivicError(Exception):
    """Error base de todos los errores de dominio."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "type": type(self).__name__,
            "message": self.message,
            "details": self.details,
        }


class InvalidInput(MotivicError, ValueError):
    """Entrada mal formada o invariante de tipo violado."""


class IdentityViolation(MotivicError):
    """Una identidad interna (o un oráculo de comprobación) no se cumple."""


# gring
class DivisionByZero(MotivicError, ZeroDivisionError):
    pass


class PoleAtOne(MotivicError, ZeroDivisionError):
    pass


class PoleAtQ(MotivicError, ZeroDivisionError):
    pass


class DivergentSeries(MotivicError):
    pass


# series
class VariableMismatch(MotivicError, ValueError):
    pass


class NonUnitConstantTerm(MotivicError):
    pass


class PositiveOrderRequired(MotivicError):
    pass


class NotOrderOne(MotivicError):
    pass


class NoRootInField(MotivicError):
    pass


# powstruct
class NotLaurentPolynomial(MotivicError):
    pass


class NonUnitLeadingTerm(MotivicError):
    pass


class NonPositiveOrderValue(MotivicError):
    pass


# curves / lifting
class PrecisionExhausted(MotivicError):
    pass


class CoincidentBranches(MotivicError):
    pass


class DegenerateBranch(MotivicError):
    pass


class EquationDoesNotVanish(MotivicError):
    pass


class HypothesisViolated(MotivicError):
    pass


class StalledIteration(MotivicError):
    pass


class NoSuitableRotation(MotivicError):
    pass


# strata
class IndexOutOfRange(MotivicError, IndexError):
    pass


class TooLarge(MotivicError):
    pass


class NotEnumerable(MotivicError):
    pass


class NotCoprime(MotivicError, ValueError):
    pass


# genfun
class SingularMatrix(MotivicError):
    pass


class NonPositiveDegree(MotivicError):
    pass


class NonIntegralExponent(MotivicError):
    pass
