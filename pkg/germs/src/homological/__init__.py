"""
Homological equation of the family at w.

Components:
- cache: the generator coefficient w_hat of log(phi_{0,w}), memoized per w
- solver: iterative difference solver, S_w by the difference and the
  differential routes, and the annihilation check on the image of L_{0,w}
"""

from .cache import GENERATOR_CACHE, GeneratorCache, generator_coefficient
from .solver import (
    HomologicalSolution,
    check_izs,
    linear_step,
    residual,
    s_w,
    solve_difference,
    solve_differential,
)

__all__ = [
    'GENERATOR_CACHE',
    'GeneratorCache',
    'generator_coefficient',
    'HomologicalSolution',
    'check_izs',
    'linear_step',
    'residual',
    's_w',
    'solve_difference',
    'solve_differential',
]
