"""
Exact truncated power series.

Components:
- coeffs: rational and lambda-polynomial coefficients (Fraction, LambdaPoly)
- series1: one-variable series with composition and reversion
- series2: two-variable series truncated by total degree, with products,
  unit inversion, substitution, ideal division and derivatives
- io: canonical text and JSON term literals
"""

from .coeffs import LAMBDA, LambdaPoly, coeff_inverse, to_fraction
from .series1 import Series1, compose1, revert1, x_valuation
from .series2 import (
    INF,
    Series2,
    add,
    antiderivative_y,
    compose2,
    divide_ideal,
    invert_unit,
    krull_valuation,
    mul,
    mul_tracked,
    partial,
    power_table,
    substitute,
)
from .io import (
    dump_json,
    parse_json_document,
    parse_series1,
    parse_series2,
    render_series1,
    render_series2,
    series1_to_terms,
    series2_from_terms,
    series2_to_terms,
)

__all__ = [
    # Coefficients
    'LAMBDA',
    'LambdaPoly',
    'coeff_inverse',
    'to_fraction',

    # Series types
    'INF',
    'Series1',
    'Series2',

    # Operations
    'add',
    'mul',
    'mul_tracked',
    'krull_valuation',
    'x_valuation',
    'invert_unit',
    'compose1',
    'compose2',
    'power_table',
    'substitute',
    'divide_ideal',
    'revert1',
    'partial',
    'antiderivative_y',

    # Literals
    'dump_json',
    'parse_json_document',
    'parse_series1',
    'parse_series2',
    'render_series1',
    'render_series2',
    'series1_to_terms',
    'series2_from_terms',
    'series2_to_terms',
]
