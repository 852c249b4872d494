"""
Exception hierarchy for the germ engine.

Library code raises these; only the command line turns them into exit codes
(see consts.EXIT_CODE_HELP).
"""

from typing import Optional, Tuple


class GermError(Exception):
    """Base class of every error raised by the engine."""

    def record(self) -> dict:
        """Machine-readable failure record."""
        return {'error': type(self).__name__, 'message': str(self)}


# Series arithmetic

class SeriesError(GermError, ArithmeticError):
    """Arithmetic on truncated series failed."""


class NonUnit(SeriesError):
    """Inversion of a series whose constant term is not invertible."""


class NotDivisible(SeriesError):
    """Synthetic division left a nonzero remainder."""

    def __init__(self, bidegree: Tuple[int, int], message: Optional[str] = None):
        self.bidegree = bidegree
        super().__init__(message or f"nonzero remainder at x^{bidegree[0]}*y^{bidegree[1]}")

    def record(self) -> dict:
        record = super().record()
        record['bidegree'] = list(self.bidegree)
        return record


class NotReversible(SeriesError):
    """Reversion of a series whose valuation is not 1."""


class IllFormedComposition(SeriesError):
    """Substitution of series with nonzero constant terms."""


# Diffeomorphisms and vector fields

class DiffeoError(GermError):
    """Invalid input to the exp/log calculus."""


class NotUnipotent(DiffeoError):
    """The linear part of the diffeomorphism is not the identity."""


class NotNilpotent(DiffeoError):
    """The vector field does not vanish to order 2 at the origin."""


# Inputs and configuration

class InvalidSpec(GermError, ValueError):
    """Family data violating Delta(0,0) = 0 != w(0,0)."""


class OutOfRange(GermError, ValueError):
    """Order, index or size outside the admissible range."""


class ConfigError(GermError, ValueError):
    """Unusable configuration value (environment or flags)."""


class ParseError(GermError, ValueError):
    """Malformed spec JSON or series literal."""

    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None):
        self.line = line
        self.field = field
        location = []
        if line is not None:
            location.append(f"line {line}")
        if field is not None:
            location.append(f"field {field}")
        suffix = f" ({', '.join(location)})" if location else ""
        super().__init__(f"{message}{suffix}")

    def record(self) -> dict:
        record = super().record()
        record['line'] = self.line
        record['field'] = self.field
        return record


# Fatal internal inconsistencies

class InvariantBreach(GermError, AssertionError):
    """A proven identity failed: this is an arithmetic bug, never bad input."""


class DegreeBoundViolated(InvariantBreach):
    """A first-integral coefficient exceeded deg f_{j,k} <= j+k."""

    def __init__(self, bidegree: Tuple[int, int], degree: int):
        self.bidegree = bidegree
        self.degree = degree
        j, k = bidegree
        super().__init__(f"deg f_{{{j},{k}}} = {degree} > {j + k}")


class SingularMatrix(InvariantBreach):
    """Exact elimination met a zero pivot on a matrix known to be invertible."""
