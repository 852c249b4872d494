"""
Exponential and logarithm of unipotent germs and nilpotent fields.

Every infinite sum here terminates at the truncation order: the operator
Theta = phi - Id and a nilpotent field both raise the Krull valuation by at
least one, so iterates are dropped once their valuation exceeds N.
"""

from fractions import Fraction

from ..errors import NotNilpotent, NotUnipotent
from ..series import (
    LambdaPoly,
    Series1,
    Series2,
    add,
    compose1,
    krull_valuation,
    mul_tracked,
    partial,
    x_valuation,
)
from .core import Diffeo2, VectorField2


def apply_field(X: VectorField2, g: Series2) -> Series2:
    """The Lie derivative ax*dg/dx + ay*dg/dy."""
    cap = max(X.order, g.order)
    return add(
        mul_tracked(X.ax, partial(g, 'x'), cap),
        mul_tracked(X.ay, partial(g, 'y'), cap),
    )


def theta_apply(phi: Diffeo2, g: Series2) -> Series2:
    """g o phi - g."""
    return phi.pull_back(g) - g


def log_diffeo(phi: Diffeo2) -> VectorField2:
    """
    Infinitesimal generator of a germ tangent to the identity.

    Args:
        phi: Germ with j1(phi) = Id

    Returns:
        VectorField2: X with exp(X) = phi up to the order of phi

    Raises:
        NotUnipotent: the linear part of phi is not the identity
    """
    if not phi.is_tangent_to_identity():
        raise NotUnipotent("log needs a germ whose linear part is the identity")
    n = phi.order
    components = []
    for start in (Series2.x(n), Series2.y(n)):
        total = Series2.zero(n)
        term = start
        j = 1
        while True:
            term = theta_apply(phi, term)
            if krull_valuation(term) > n:
                break
            weight = Fraction(1 if j % 2 else -1, j)
            total = total + term.scale(weight)
            j += 1
        components.append(total)
    return VectorField2(*components)


def _exp_terms(X: VectorField2, g: Series2):
    """Yield X^j(g)/j! for j = 0, 1, ... while they are significant."""
    if not X.is_nilpotent():
        raise NotNilpotent(f"field has valuation {X.valuation()}, needs >= 2")
    n = min(X.order, g.order)
    term = g.at_order(n)
    yield term
    j = 1
    while True:
        term = apply_field(X, term).at_order(n).scale(Fraction(1, j))
        if krull_valuation(term) > n:
            return
        yield term
        j += 1


def exp_apply(X: VectorField2, g: Series2) -> Series2:
    """exp(X)(g) = sum X^j(g)/j!."""
    terms = _exp_terms(X, g)
    total = next(terms)
    for term in terms:
        total = total + term
    return total


def exp_diffeo(X: VectorField2) -> Diffeo2:
    """The germ (exp(X)(x), exp(X)(y))."""
    n = X.order
    return Diffeo2(exp_apply(X, Series2.x(n)), exp_apply(X, Series2.y(n)))


def flow_poly_t(X: VectorField2, g: Series2) -> Series2:
    """
    exp(tX)(g) with t carried by the lambda slot of the coefficients.

    X must have rational coefficients; each coefficient of the result is a
    polynomial in t.
    """
    total = None
    for j, term in enumerate(_exp_terms(X, g)):
        term = term.scale(LambdaPoly.monomial(j))
        total = term if total is None else total + term
    return total


# One-variable fast path

def _tracked_product1(a: Series1, b: Series1, cap: int) -> Series1:
    top = int(min(a.order + x_valuation(b), b.order + x_valuation(a), cap))
    out = [0] * (top + 1)
    for i, p in enumerate(a.coeffs[:top + 1]):
        if not p:
            continue
        for j, q in enumerate(b.coeffs[:top + 1 - i]):
            if q:
                out[i + j] += p * q
    return Series1(top, out)


def log_series1(f: Series1) -> Series1:
    """Generator a with exp(a d/dy)(y) = f, for f = y + O(y^2)."""
    if f[0] or f[1] != 1:
        raise NotUnipotent("log needs a series tangent to the identity")
    n = f.order
    total = Series1.zero(n)
    term = Series1.variable(n)
    j = 1
    while True:
        term = compose1(term, f) - term
        if x_valuation(term) > n:
            break
        total = total + term * Fraction(1 if j % 2 else -1, j)
        j += 1
    return total


def exp_series1(a: Series1, g: Series1) -> Series1:
    """exp(a d/dy)(g) for a vanishing to order 2."""
    if x_valuation(a) < 2:
        raise NotNilpotent(f"field has valuation {x_valuation(a)}, needs >= 2")
    n = min(a.order, g.order)
    total = g.at_order(n)
    term = total
    j = 1
    while True:
        term = _tracked_product1(a, term.derivative(), n).at_order(n) * Fraction(1, j)
        if x_valuation(term) > n:
            break
        total = total + term
        j += 1
    return total
