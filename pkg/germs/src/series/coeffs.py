"""
Exact coefficient rings: rationals (fractions.Fraction) and dense
univariate polynomials in lambda over the rationals.
"""

from fractions import Fraction
from typing import Iterable, Sequence, Union

from ..consts import LAMBDA_SYMBOL
from ..errors import NonUnit, ParseError


def to_fraction(value) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not an exact rational: {value!r}") from exc
    raise ParseError(f"not an exact rational: {value!r}")


class LambdaPoly:
    """Dense polynomial in lambda with Fraction coefficients, index = power."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def variable(cls) -> 'LambdaPoly':
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coefficient=1) -> 'LambdaPoly':
        return cls([0] * power + [coefficient])

    @property
    def degree(self) -> int:
        """Degree in lambda; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)

    def evaluate(self, lam) -> Fraction:
        lam = to_fraction(lam)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * lam + c
        return acc

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == LambdaPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self.degree <= 0:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __neg__(self) -> 'LambdaPoly':
        return LambdaPoly(-c for c in self.coeffs)

    def __add__(self, other) -> 'LambdaPoly':
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            cs = list(self.coeffs) or [Fraction(0)]
            cs[0] += other
            return LambdaPoly(cs)
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        longer, shorter = (self.coeffs, other.coeffs) if len(self.coeffs) >= len(other.coeffs) \
            else (other.coeffs, self.coeffs)
        cs = list(longer)
        for i, c in enumerate(shorter):
            cs[i] += c
        return LambdaPoly(cs)

    __radd__ = __add__

    def __sub__(self, other) -> 'LambdaPoly':
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> 'LambdaPoly':
        return (-self) + other

    def __mul__(self, other) -> Union['LambdaPoly', Fraction]:
        if isinstance(other, (int, Fraction)):
            if not other:
                return LambdaPoly()
            return LambdaPoly(c * other for c in self.coeffs)
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LambdaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return LambdaPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'LambdaPoly':
        return self * coeff_inverse(other)

    def render(self, symbol: str = LAMBDA_SYMBOL) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for power, c in enumerate(self.coeffs):
            if not c:
                continue
            if power == 0:
                body = str(abs(c))
            else:
                mono = symbol if power == 1 else f"{symbol}^{power}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            parts.append(('-' if c < 0 else '+', body))
        sign, body = parts[0]
        text = ('-' if sign == '-' else '') + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LambdaPoly({self.render()})"


Coeff = Union[Fraction, LambdaPoly]

ZERO = Fraction(0)
ONE = Fraction(1)
LAMBDA = LambdaPoly.variable()


def normalize(value) -> Coeff:
    """Canonical stored form of a coefficient."""
    if isinstance(value, (Fraction, LambdaPoly)):
        return value
    return to_fraction(value)


def coeff_inverse(value) -> Fraction:
    """Inverse of a unit coefficient (nonzero rational or nonzero constant polynomial)."""
    if isinstance(value, LambdaPoly):
        if value.degree != 0:
            raise NonUnit(f"{value!r} is not a unit of Q[lambda]")
        value = value.coeffs[0]
    value = to_fraction(value)
    if not value:
        raise NonUnit("zero coefficient is not invertible")
    return 1 / value


def evaluate(value, lam) -> Fraction:
    """Specialize lambda to a rational value."""
    if isinstance(value, LambdaPoly):
        return value.evaluate(lam)
    return to_fraction(value)


def lambda_coefficient(value, power: int) -> Fraction:
    """Coefficient of lambda^power (a rational is a constant polynomial)."""
    if isinstance(value, LambdaPoly):
        return value.coefficient(power)
    return to_fraction(value) if power == 0 else ZERO


def lambda_degree(value) -> int:
    if isinstance(value, LambdaPoly):
        return value.degree
    return 0 if value else -1


def from_literal(raw) -> Coeff:
    """Parse a JSON coefficient: "p/q" or a list of "p/q" indexed by lambda power."""
    if isinstance(raw, (list, tuple)):
        return LambdaPoly(to_fraction(c) for c in raw)
    return to_fraction(raw)


def to_literal(value) -> Union[str, Sequence[str]]:
    if isinstance(value, LambdaPoly):
        return [str(c) for c in value.coeffs]
    return str(to_fraction(value))
