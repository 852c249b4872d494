"""
Truncated power series in (x, y), truncated by total degree.

Storage is a dense triangle of homogeneous layers: layer d holds the d+1
coefficients of x^(d-k) y^k for k = 0..d.
"""

import math
from fractions import Fraction
from typing import Callable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..enums import Variable
from ..errors import IllFormedComposition, NotDivisible, OutOfRange
from .coeffs import (
    ONE,
    ZERO,
    Coeff,
    LambdaPoly,
    coeff_inverse,
    evaluate,
    lambda_coefficient,
    lambda_degree,
    normalize,
)
from .series1 import Series1

INF = math.inf

Layer = Tuple[Coeff, ...]


def layer_mul(p: Sequence[Coeff], q: Sequence[Coeff]) -> List[Coeff]:
    """Product of two homogeneous layers."""
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return out


def convolve(a_layers: Sequence[Layer], b_layers: Sequence[Layer], top: int) -> List[List[Coeff]]:
    """Layers 0..top of the product, using only the layers supplied."""
    a_live = [i for i, layer in enumerate(a_layers) if any(layer)]
    b_live = [i for i, layer in enumerate(b_layers) if any(layer)]
    out = [[ZERO] * (d + 1) for d in range(top + 1)]
    for i in a_live:
        for j in b_live:
            d = i + j
            if d > top:
                break
            row = out[d]
            for k, c in enumerate(layer_mul(a_layers[i], b_layers[j])):
                if c:
                    row[k] += c
    return out


class Series2:
    """Immutable truncated series in x and y."""

    __slots__ = ('order', 'layers')
    __hash__ = None

    def __init__(self, order: int, layers: Sequence[Sequence] = ()):
        if order < 0:
            raise OutOfRange(f"negative truncation order {order}")
        built = []
        for d in range(order + 1):
            src = list(layers[d])[:d + 1] if d < len(layers) else []
            row = [normalize(c) for c in src]
            row.extend([ZERO] * (d + 1 - len(row)))
            built.append(tuple(row))
        self.order = order
        self.layers = tuple(built)

    @classmethod
    def _wrap(cls, order: int, layers) -> 'Series2':
        obj = cls.__new__(cls)
        obj.order = order
        obj.layers = tuple(tuple(layer) for layer in layers)
        return obj

    # Constructors

    @classmethod
    def zero(cls, order: int) -> 'Series2':
        return cls._wrap(order, [(ZERO,) * (d + 1) for d in range(order + 1)])

    @classmethod
    def constant(cls, value, order: int) -> 'Series2':
        return cls(order, [[value]])

    @classmethod
    def one(cls, order: int) -> 'Series2':
        return cls.constant(ONE, order)

    @classmethod
    def monomial(cls, xk: int, yk: int, order: int, coefficient=1) -> 'Series2':
        return cls.from_terms({(xk, yk): coefficient}, order)

    @classmethod
    def x(cls, order: int) -> 'Series2':
        return cls.monomial(1, 0, order)

    @classmethod
    def y(cls, order: int) -> 'Series2':
        return cls.monomial(0, 1, order)

    @classmethod
    def from_terms(cls, terms: Mapping[Tuple[int, int], Coeff], order: int) -> 'Series2':
        """Build from {(xk, yk): coefficient}; terms above the order are dropped."""
        layers = [[ZERO] * (d + 1) for d in range(order + 1)]
        for (xk, yk), c in terms.items():
            if xk < 0 or yk < 0:
                raise OutOfRange(f"negative exponent in x^{xk}*y^{yk}")
            d = xk + yk
            if d <= order:
                layers[d][yk] = layers[d][yk] + normalize(c)
        return cls._wrap(order, layers)

    @classmethod
    def from_series1(cls, s: Series1, var) -> 'Series2':
        """Embed a one-variable series as a series in x or in y."""
        var = Variable.parse(var)
        terms = {((i, 0) if var is Variable.X else (0, i)): c for i, c in s.terms()}
        return cls.from_terms(terms, s.order)

    # Access

    def __getitem__(self, bidegree: Tuple[int, int]) -> Coeff:
        xk, yk = bidegree
        d = xk + yk
        if xk < 0 or yk < 0 or d > self.order:
            return ZERO
        return self.layers[d][yk]

    def terms(self) -> Iterator[Tuple[int, int, Coeff]]:
        """Nonzero (xk, yk, c) by total degree, then xk descending."""
        for d, layer in enumerate(self.layers):
            for k, c in enumerate(layer):
                if c:
                    yield d - k, k, c

    @property
    def constant_term(self) -> Coeff:
        return self.layers[0][0]

    def is_zero(self) -> bool:
        return not any(any(layer) for layer in self.layers)

    def at_order(self, order: int) -> 'Series2':
        """Truncate, or zero-pad when the data is known to be polynomial."""
        if order <= self.order:
            return Series2._wrap(order, self.layers[:order + 1])
        pad = [(ZERO,) * (d + 1) for d in range(self.order + 1, order + 1)]
        return Series2._wrap(order, list(self.layers) + pad)

    def map_coefficients(self, fn: Callable[[Coeff], Coeff]) -> 'Series2':
        return Series2(self.order, [[fn(c) for c in layer] for layer in self.layers])

    def evaluate_lambda(self, lam) -> 'Series2':
        """Specialize lambda to a rational value."""
        return self.map_coefficients(lambda c: evaluate(c, lam))

    def lambda_coefficient(self, power: int) -> 'Series2':
        return self.map_coefficients(lambda c: lambda_coefficient(c, power))

    def lambda_degree(self) -> int:
        return max((lambda_degree(c) for layer in self.layers for c in layer), default=-1)

    def dilate(self, mu) -> 'Series2':
        """s(mu*x, mu*y)."""
        mu = normalize(mu)
        layers, scale = [], ONE
        for layer in self.layers:
            layers.append([c * scale for c in layer])
            scale = scale * mu
        return Series2._wrap(self.order, layers)

    # Restrictions

    def restrict_x0(self) -> Series1:
        """s(0, y) as a series in y."""
        return Series1._wrap(self.order, (layer[-1] for layer in self.layers))

    def restrict_y0(self) -> Series1:
        """s(x, 0) as a series in x."""
        return Series1._wrap(self.order, (layer[0] for layer in self.layers))

    def diagonal(self) -> Series1:
        """s(x, x) as a series in x."""
        out = []
        for layer in self.layers:
            acc = ZERO
            for c in layer:
                if c:
                    acc = acc + c
            out.append(acc)
        return Series1._wrap(self.order, out)

    def diagonal_minus_axis(self) -> Series1:
        """s(x, x) - s(x, 0)."""
        return self.diagonal() - self.restrict_y0()

    # Arithmetic

    def __eq__(self, other) -> bool:
        if isinstance(other, Series2):
            n = min(self.order, other.order)
            return self.layers[:n + 1] == other.layers[:n + 1]
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return self == Series2.constant(other, self.order)
        return NotImplemented

    def __neg__(self) -> 'Series2':
        return Series2._wrap(self.order, [[-c for c in layer] for layer in self.layers])

    def __add__(self, other) -> 'Series2':
        if not isinstance(other, Series2):
            other = Series2.constant(other, self.order)
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> 'Series2':
        return self + (-other)

    def __rsub__(self, other) -> 'Series2':
        return (-self) + other

    def __mul__(self, other) -> 'Series2':
        if isinstance(other, Series2):
            return mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, value) -> 'Series2':
        value = normalize(value)
        if not value:
            return Series2.zero(self.order)
        return Series2._wrap(self.order, [[c * value for c in layer] for layer in self.layers])

    def compose(self, sx: 'Series2', sy: 'Series2') -> 'Series2':
        return compose2(self, sx, sy)

    def __repr__(self) -> str:
        from .io import render_series2
        return f"Series2({render_series2(self)}; N={self.order})"


def add(a: Series2, b: Series2) -> Series2:
    n = min(a.order, b.order)
    return Series2._wrap(n, [
        [p + q for p, q in zip(a.layers[d], b.layers[d])] for d in range(n + 1)
    ])


def mul(a: Series2, b: Series2) -> Series2:
    """Cauchy product truncated at min(Na, Nb)."""
    n = min(a.order, b.order)
    return Series2._wrap(n, convolve(a.layers[:n + 1], b.layers[:n + 1], n))


def mul_tracked(a: Series2, b: Series2, cap: Optional[int] = None) -> Series2:
    """
    a*b to the order its factors determine.

    The product is known up to min(Na + v(b), Nb + v(a)); cap bounds that
    (default max(Na, Nb)).
    """
    if cap is None:
        cap = max(a.order, b.order)
    top = int(min(a.order + krull_valuation(b), b.order + krull_valuation(a), cap))
    return Series2._wrap(top, convolve(a.layers, b.layers, top))


def krull_valuation(a: Series2):
    """Least total degree with a nonzero coefficient; math.inf if a is 0 up to N."""
    for d, layer in enumerate(a.layers):
        if any(layer):
            return d
    return INF


def invert_unit(u: Series2) -> Series2:
    """v with u*v = 1 up to N, solved one homogeneous layer at a time."""
    inv0 = coeff_inverse(u.constant_term)
    n = u.order
    live = [e for e in range(1, n + 1) if any(u.layers[e])]
    v = [[inv0]]
    for d in range(1, n + 1):
        acc = [ZERO] * (d + 1)
        for e in live:
            if e > d:
                break
            for k, c in enumerate(layer_mul(u.layers[e], v[d - e])):
                if c:
                    acc[k] += c
        v.append([-c * inv0 for c in acc])
    return Series2._wrap(n, v)


def power_table(s: Series2, top: int) -> List[Series2]:
    """[1, s, s^2, ..., s^top] at the order of s."""
    powers = [Series2.one(s.order)]
    for _ in range(top):
        powers.append(mul(powers[-1], s))
    return powers


def compose2(g: Series2, sx: Series2, sy: Series2) -> Series2:
    """
    g(sx, sy) truncated at the common order.

    The inner pair must vanish at the origin. The result is Horner's scheme
    in sy over the x-polynomials A_k = sum_j g[j,k] * sx^j.
    """
    if sx.constant_term or sy.constant_term:
        raise IllFormedComposition("substituted series must vanish at the origin")
    n = min(g.order, sx.order, sy.order)
    sx_powers = power_table(sx.at_order(n), n)
    sy = sy.at_order(n)

    def x_part(k: int) -> Series2:
        acc = Series2.zero(n)
        for j in range(n - k + 1):
            c = g[j, k]
            if c:
                acc = acc + sx_powers[j].scale(c)
        return acc

    result = x_part(n)
    for k in range(n - 1, -1, -1):
        result = mul(result, sy) + x_part(k)
    return result


def substitute(g: Series2, images: Sequence[Sequence[Series2]]) -> Series2:
    """
    g(sx, sy) from a table images[j][k] = sx^j * sy^k.

    The table's order bounds the result. Only the nonzero terms of g are
    visited, so repeated pull-backs through one germ cost no products.
    """
    n = min(g.order, images[0][0].order)
    out = [[ZERO] * (d + 1) for d in range(n + 1)]
    for j, k, c in g.terms():
        if j + k > n:
            break
        image = images[j][k]
        # sx^j * sy^k has valuation >= j + k
        for d in range(j + k, n + 1):
            row = out[d]
            for i, v in enumerate(image.layers[d]):
                if v:
                    row[i] += c * v
    return Series2._wrap(n, out)


def partial(a: Series2, var) -> Series2:
    """Formal partial derivative, known to order N-1."""
    var = Variable.parse(var)
    if a.order == 0:
        return Series2.zero(0)
    layers = []
    for d in range(1, a.order + 1):
        src = a.layers[d]
        if var is Variable.X:
            layers.append([(d - k) * src[k] for k in range(d)])
        else:
            layers.append([(k + 1) * src[k + 1] for k in range(d)])
    return Series2._wrap(a.order - 1, layers)


def antiderivative_y(a: Series2) -> Series2:
    """The y-antiderivative vanishing on y = 0, known to order N+1."""
    layers = [[ZERO]]
    for layer in a.layers:
        layers.append([ZERO] + [c / (k + 1) if c else ZERO for k, c in enumerate(layer)])
    return Series2._wrap(a.order + 1, layers)


def divide_layer(r: Sequence[Coeff], lead: Sequence[Coeff]):
    """
    Exact quotient of homogeneous r by homogeneous lead.

    Returns (quotient, k) where k is the y-index of the first nonzero
    remainder coefficient, or None when the division is exact.
    """
    m = next(i for i, c in enumerate(lead) if c)
    inv = coeff_inverse(lead[m])
    qdeg = len(r) - len(lead)
    quotient = []
    for t in range(qdeg + 1):
        acc = r[t + m]
        for i in range(m + 1, min(len(lead), t + m + 1)):
            if lead[i]:
                acc = acc - lead[i] * quotient[t + m - i]
        quotient.append(acc * inv if acc else ZERO)
    product = layer_mul(lead, quotient)
    for k, c in enumerate(r):
        if c != product[k]:
            return quotient, k
    return quotient, None


def divide_ideal(a: Series2, q: Series2) -> Series2:
    """
    b with a = q*b up to the order of a; b has order N - krull_valuation(q).

    Raises NotDivisible with the bidegree of the first nonzero remainder
    (total degree, then y-exponent ascending).
    """
    m0 = krull_valuation(q)
    if m0 == INF:
        raise NotDivisible((0, 0), "division by the zero series")
    n = min(a.order, q.order)
    if m0 > n:
        raise OutOfRange(f"divisor valuation {m0} exceeds order {n}")
    for d in range(m0):
        for k, c in enumerate(a.layers[d]):
            if c:
                raise NotDivisible((d - k, k))
    lead = q.layers[m0]
    tail = [(e, q.layers[m0 + e]) for e in range(1, n - m0 + 1) if any(q.layers[m0 + e])]
    b: List[List[Coeff]] = []
    for d in range(n - m0 + 1):
        r = list(a.layers[d + m0])
        for e, layer in tail:
            if e > d:
                break
            for k, c in enumerate(layer_mul(layer, b[d - e])):
                if c:
                    r[k] = r[k] - c
        quotient, bad = divide_layer(r, lead)
        if bad is not None:
            raise NotDivisible((d + m0 - bad, bad))
        b.append(quotient)
    return Series2._wrap(n - m0, b)
