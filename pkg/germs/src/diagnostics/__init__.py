"""
Diagnostics of the homological operator and of coefficient growth.

Components:
- dv: the operator D_v, its coefficient functionals and the antidiagonal
  reconstruction through the Hilbert matrix
- hilbert: exact Hilbert matrices, exact elimination, inverse spectral norm
  against its asymptotic
- growth: per-degree growth reports and the one-variable generator fast path
"""

from .hilbert import (
    HilbertReport,
    asymptotic_prediction,
    exact_inverse,
    hilbert_inverse_norm,
    hilbert_matrix,
    matmul_exact,
    power_iteration,
    solve_exact,
)
from .dv import antidiagonal_samples, d_v, d_v_coeff, reconstruct_antidiagonal
from .growth import GrowthReport, classify_trend, generator_on_axis, growth_report

__all__ = [
    # Hilbert matrices
    'HilbertReport',
    'asymptotic_prediction',
    'exact_inverse',
    'hilbert_inverse_norm',
    'hilbert_matrix',
    'matmul_exact',
    'power_iteration',
    'solve_exact',

    # D_v
    'antidiagonal_samples',
    'd_v',
    'd_v_coeff',
    'reconstruct_antidiagonal',

    # Growth
    'GrowthReport',
    'classify_trend',
    'generator_on_axis',
    'growth_report',
]
