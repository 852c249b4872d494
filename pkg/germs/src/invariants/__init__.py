"""
Invariants of the germs phi_{Delta,w}.

Components:
- germ: GermSpec, construction of phi (optionally with symbolic lambda),
  dilations, normalization and lines through a family member
- structure: the field L = log(phi)/(y(y-x)), fixed-set check, Jacobian
  restrictions
- first_integral: first integral, transport mapping, lambda-parametric
  first integral with its degree bound, epsilon from the family
"""

from ..series import LAMBDA
from .germ import (
    GermSpec,
    build_phi,
    dilate_spec,
    fixed_curve,
    line_spec,
    normalize_spec,
    scaled_spec,
)
from .structure import FixSetResult, fix_set_check, jacobian, jacobian_restrictions, l_field
from .first_integral import (
    ParamFirstIntegral,
    TransportMap,
    epsilon_from_family,
    first_integral,
    parametric_first_integral,
    rescaled_family_first_integral,
    transport,
    transport_from_first_integral,
)

__all__ = [
    # Family data
    'LAMBDA',
    'GermSpec',
    'build_phi',
    'dilate_spec',
    'fixed_curve',
    'line_spec',
    'normalize_spec',
    'scaled_spec',

    # Structure
    'FixSetResult',
    'fix_set_check',
    'jacobian',
    'jacobian_restrictions',
    'l_field',

    # First integrals
    'ParamFirstIntegral',
    'TransportMap',
    'epsilon_from_family',
    'first_integral',
    'parametric_first_integral',
    'rescaled_family_first_integral',
    'transport',
    'transport_from_first_integral',
]
