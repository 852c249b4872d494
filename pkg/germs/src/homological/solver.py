"""
The homological equation eps - eps o phi_{0,w} = y(y-x) Delta and the
functional S_w(Delta) = eps(x, x) - eps(x, 0).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..diffeo import VectorField2, apply_field
from ..errors import InvalidSpec, InvariantBreach, NotDivisible, OutOfRange
from ..invariants import GermSpec, build_phi, fixed_curve
from ..series import (
    INF,
    Series1,
    Series2,
    antiderivative_y,
    divide_ideal,
    invert_unit,
    krull_valuation,
    mul_tracked,
    partial,
)
from .cache import GENERATOR_CACHE, GeneratorCache


@dataclass(frozen=True)
class HomologicalSolution:
    """A solution eps of the homological equation, exact up to residual_order."""
    epsilon: Series2
    residual_order: int
    iterations: int = 0

    def s_w(self) -> Series1:
        return self.epsilon.diagonal_minus_axis()


def _check_w(w: Series2):
    if not w.constant_term:
        raise InvalidSpec("w(0,0) must be nonzero")


def _resolve_order(delta: Series2, order: Optional[int]) -> int:
    n = delta.order if order is None else order
    if n < 2:
        raise OutOfRange(f"order {n} too small for the homological equation")
    if delta.order < n - 1:
        raise OutOfRange(f"Delta is known to order {delta.order}, need {n - 1}")
    return n


def _divide_by_curve(a: Series2) -> Series2:
    try:
        return divide_ideal(a, fixed_curve(a.order))
    except NotDivisible as exc:
        raise InvariantBreach(f"tail left the ideal (y(y-x)): {exc}") from exc


def linear_step(w_hat_inverse: Series2, delta: Series2) -> Series2:
    """The solution of L_{0,w}(eps) = -Delta vanishing on y = 0."""
    return antiderivative_y(-(delta * w_hat_inverse))


def residual(epsilon: Series2, w: Series2, delta: Series2, order: int) -> Series2:
    """eps - eps o phi_{0,w} - y(y-x) Delta at the given order."""
    phi = build_phi(GermSpec(Series2.zero(order), w, order))
    source = mul_tracked(fixed_curve(order), delta, order)
    return epsilon.at_order(order) - phi.pull_back(epsilon.at_order(order)) - source


def solve_difference(spec_w: Series2, delta: Series2, order: Optional[int] = None,
                     cache: Optional[GeneratorCache] = None) -> HomologicalSolution:
    """
    eps = sum_j eps_j solving eps - eps o phi_{0,w} = y(y-x) Delta up to N.

    Each eps_j solves the linearized equation L_{0,w}(eps_j) = -Delta_j;
    the correction Delta_{j+1} collects the tail
    sum_{k>=2} X^(k-1)(-y(y-x) Delta_j)/k! / (y(y-x)) with X = log(phi_{0,w}).
    Delta need not vanish at the origin. N defaults to delta.order.
    """
    _check_w(spec_w)
    n = _resolve_order(delta, order)
    cache = cache or GENERATOR_CACHE
    w_hat_inverse = invert_unit(cache.get(spec_w, n - 1))
    X = VectorField2(Series2.zero(n + 1), mul_tracked(fixed_curve(n + 1), cache.get(spec_w, n - 1), n + 1))
    q = fixed_curve(n + 1)

    epsilon = Series2.zero(n)
    current = delta.at_order(n - 1)
    iterations = 0
    while krull_valuation(current) != INF:
        if iterations > n:
            raise InvariantBreach(f"no convergence after {iterations} corrections")
        epsilon = epsilon + linear_step(w_hat_inverse, current)
        term = -mul_tracked(q, current, n + 1)
        tail = Series2.zero(n + 1)
        k = 2
        weight = Fraction(1, 2)
        while True:
            term = apply_field(X, term).at_order(n + 1)
            if krull_valuation(term) > n + 1:
                break
            tail = tail + term.scale(weight)
            k += 1
            weight = weight / k
        current = _divide_by_curve(tail)
        iterations += 1
    return HomologicalSolution(epsilon=epsilon, residual_order=n, iterations=iterations)


def s_w(spec_w: Series2, delta: Series2, order: Optional[int] = None,
        cache: Optional[GeneratorCache] = None) -> Series1:
    """S_w(Delta) via the difference route."""
    return solve_difference(spec_w, delta, order, cache).s_w()


def solve_differential(spec_w: Series2, delta: Series2, order: Optional[int] = None,
                       cache: Optional[GeneratorCache] = None) -> Series1:
    """
    S_w(Delta) via the differential route: Gamma with dGamma/dy = -Delta/w_hat
    and Gamma(x, 0) = 0, returned as Gamma(x, x).
    """
    _check_w(spec_w)
    n = _resolve_order(delta, order)
    cache = cache or GENERATOR_CACHE
    gamma = linear_step(invert_unit(cache.get(spec_w, n - 1)), delta.at_order(n - 1))
    return gamma.diagonal()


def check_izs(spec_w: Series2, delta: Series2, order: Optional[int] = None,
              cache: Optional[GeneratorCache] = None) -> Series1:
    """
    S_w(Delta') for Delta' = log(phi_{0,w})(y(y-x) Delta) / (y(y-x)); identically 0.

    With log(phi_{0,w}) = y(y-x) w_hat d/dy the quotient is
    Delta' = w_hat * d(y(y-x) Delta)/dy, so no division is needed.

    Args:
        spec_w: w with w(0,0) != 0.
        delta: Delta, known to order N.
        order: N; defaults to delta.order.
        cache: generator cache for w_hat.

    Returns:
        S_w(Delta') to order N; zero whenever the engine is consistent.
    """
    _check_w(spec_w)
    n = delta.order if order is None else order
    if delta.order < n:
        raise OutOfRange(f"Delta is known to order {delta.order}, need {n}")
    cache = cache or GENERATOR_CACHE
    g = mul_tracked(fixed_curve(n + 2), delta.at_order(n), n + 2)
    delta_prime = cache.get(spec_w, n) * partial(g, 'y')
    return s_w(spec_w, delta_prime.at_order(n - 1), n, cache)
