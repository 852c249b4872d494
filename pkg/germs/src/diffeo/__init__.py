"""
Exp/log calculus of plane germs.

Components:
- core: Diffeo2 (germ fixing the origin) and VectorField2 (formal field)
- calculus: Theta, log of a germ tangent to the identity, exponential and
  t-flow of a nilpotent field, Lie derivative, one-variable fast path
"""

from .core import Diffeo2, VectorField2
from .calculus import (
    apply_field,
    exp_apply,
    exp_diffeo,
    exp_series1,
    flow_poly_t,
    log_diffeo,
    log_series1,
    theta_apply,
)

__all__ = [
    'Diffeo2',
    'VectorField2',
    'apply_field',
    'exp_apply',
    'exp_diffeo',
    'exp_series1',
    'flow_poly_t',
    'log_diffeo',
    'log_series1',
    'theta_apply',
]
