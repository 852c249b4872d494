"""
Truncated power series in one variable.

Coefficient i multiplies x^i; a Series1 of order N is significant for
i <= N only.
"""

import math
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Sequence, Tuple

from ..errors import IllFormedComposition, NotReversible, OutOfRange
from .coeffs import ZERO, Coeff, LambdaPoly, coeff_inverse, evaluate, lambda_coefficient, lambda_degree, normalize

INF = math.inf


class Series1:
    """Immutable truncated series in one variable."""

    __slots__ = ('order', 'coeffs')
    __hash__ = None

    def __init__(self, order: int, coeffs: Sequence = ()):
        if order < 0:
            raise OutOfRange(f"negative truncation order {order}")
        cs = [normalize(c) for c in list(coeffs)[:order + 1]]
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def _wrap(cls, order: int, coeffs) -> 'Series1':
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = tuple(coeffs)
        return obj

    # Constructors

    @classmethod
    def zero(cls, order: int) -> 'Series1':
        return cls._wrap(order, (ZERO,) * (order + 1))

    @classmethod
    def constant(cls, value, order: int) -> 'Series1':
        return cls(order, [value])

    @classmethod
    def variable(cls, order: int) -> 'Series1':
        return cls(order, [0, 1])

    @classmethod
    def from_terms(cls, terms: Mapping[int, Coeff], order: int) -> 'Series1':
        cs = [ZERO] * (order + 1)
        for i, c in terms.items():
            if 0 <= i <= order:
                cs[i] = normalize(c)
        return cls._wrap(order, cs)

    # Access

    def __getitem__(self, index: int) -> Coeff:
        if 0 <= index <= self.order:
            return self.coeffs[index]
        return ZERO

    def terms(self) -> Iterator[Tuple[int, Coeff]]:
        """Nonzero (power, coefficient) pairs in ascending order."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield i, c

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def at_order(self, order: int) -> 'Series1':
        """Truncate, or zero-pad when the data is known to be polynomial."""
        if order <= self.order:
            return Series1._wrap(order, self.coeffs[:order + 1])
        return Series1._wrap(order, self.coeffs + (ZERO,) * (order - self.order))

    def map_coefficients(self, fn: Callable[[Coeff], Coeff]) -> 'Series1':
        return Series1(self.order, [fn(c) for c in self.coeffs])

    def evaluate_lambda(self, lam) -> 'Series1':
        return self.map_coefficients(lambda c: evaluate(c, lam))

    def lambda_coefficient(self, power: int) -> 'Series1':
        return self.map_coefficients(lambda c: lambda_coefficient(c, power))

    def lambda_degree(self) -> int:
        return max((lambda_degree(c) for c in self.coeffs), default=-1)

    # Arithmetic

    def __eq__(self, other) -> bool:
        if isinstance(other, Series1):
            n = min(self.order, other.order)
            return self.coeffs[:n + 1] == other.coeffs[:n + 1]
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return self == Series1.constant(other, self.order)
        return NotImplemented

    def __neg__(self) -> 'Series1':
        return Series1._wrap(self.order, (-c for c in self.coeffs))

    def __add__(self, other) -> 'Series1':
        if not isinstance(other, Series1):
            other = Series1.constant(other, self.order)
        n = min(self.order, other.order)
        return Series1._wrap(n, (a + b for a, b in zip(self.coeffs[:n + 1], other.coeffs[:n + 1])))

    __radd__ = __add__

    def __sub__(self, other) -> 'Series1':
        return self + (-other)

    def __rsub__(self, other) -> 'Series1':
        return (-self) + other

    def __mul__(self, other) -> 'Series1':
        if not isinstance(other, Series1):
            scalar = normalize(other)
            return Series1._wrap(self.order, (c * scalar for c in self.coeffs))
        n = min(self.order, other.order)
        out = [ZERO] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series1._wrap(n, out)

    __rmul__ = __mul__

    def derivative(self) -> 'Series1':
        """d/dx, known to order N-1."""
        if self.order == 0:
            return Series1.zero(0)
        return Series1._wrap(self.order - 1, (i * self.coeffs[i] for i in range(1, self.order + 1)))

    def compose(self, inner: 'Series1') -> 'Series1':
        return compose1(self, inner)

    def __repr__(self) -> str:
        from .io import render_series1
        return f"Series1({render_series1(self)}; N={self.order})"


def x_valuation(a: Series1):
    """Index of the first nonzero coefficient, math.inf if none up to N."""
    for i, c in enumerate(a.coeffs):
        if c:
            return i
    return INF


def compose1(f: Series1, g: Series1) -> Series1:
    """f(g(x)) by Horner evaluation; g must vanish at 0."""
    if g.coeffs[0]:
        raise IllFormedComposition("inner series has a nonzero constant term")
    n = min(f.order, g.order)
    g = g.at_order(n)
    result = Series1.constant(f[n], n)
    for i in range(n - 1, -1, -1):
        result = result * g + f[i]
    return result


def revert1(f: Series1) -> Series1:
    """Compositional inverse of a series with valuation exactly 1."""
    if x_valuation(f) != 1:
        raise NotReversible(f"reversion needs valuation 1, got {x_valuation(f)}")
    n = f.order
    inv = coeff_inverse(f.coeffs[1])
    x = Series1.variable(n)
    g = x * inv
    # each pass fixes at least one more order
    for _ in range(n):
        err = compose1(f, g) - x
        if err.is_zero():
            break
        g = g - err * inv
    return g

