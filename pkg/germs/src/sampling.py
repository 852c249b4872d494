"""
Seeded random inputs for the verify suites.

All draws go through one numpy Generator so a seed fixes every sample.
"""

from fractions import Fraction
from typing import Dict, Tuple

import numpy as np

from .diffeo import VectorField2
from .invariants import GermSpec
from .series import Series1, Series2


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_rational(rng: np.random.Generator, bound: int = 3, nonzero: bool = False) -> Fraction:
    """p/q with |p| <= bound and 1 <= q <= bound."""
    while True:
        value = Fraction(int(rng.integers(-bound, bound + 1)), int(rng.integers(1, bound + 1)))
        if value or not nonzero:
            return value


def random_polynomial(rng: np.random.Generator, degree: int, order: int,
                      min_degree: int = 0, density: float = 0.6) -> Series2:
    """Polynomial with total degree in [min_degree, degree], stored at `order`."""
    terms: Dict[Tuple[int, int], Fraction] = {}
    for d in range(min_degree, degree + 1):
        for yk in range(d + 1):
            if rng.random() < density:
                terms[(d - yk, yk)] = random_rational(rng)
    return Series2.from_terms(terms, order)


def random_spec(rng: np.random.Generator, order: int, degree: int = 3) -> GermSpec:
    """Delta with Delta(0,0) = 0 and w with w(0,0) != 0, both of degree <= degree."""
    delta = random_polynomial(rng, degree, order, min_degree=1)
    w = random_polynomial(rng, degree, order, min_degree=1)
    w = w + random_rational(rng, nonzero=True)
    return GermSpec(delta, w, order)


def random_unit(rng: np.random.Generator, degree: int, order: int) -> Series2:
    return random_polynomial(rng, degree, order, min_degree=1) + random_rational(rng, nonzero=True)


def random_nilpotent_field(rng: np.random.Generator, order: int, degree: int = 4) -> VectorField2:
    """Both components of valuation >= 2."""
    return VectorField2(
        random_polynomial(rng, degree, order, min_degree=2),
        random_polynomial(rng, degree, order, min_degree=2),
    )


def random_series_in_x(rng: np.random.Generator, order: int, degree: int = 4) -> Series1:
    return Series1(order, [random_rational(rng) for _ in range(min(degree, order) + 1)])
