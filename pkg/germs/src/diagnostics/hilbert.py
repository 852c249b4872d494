"""
Exact Hilbert matrices, exact inversion and the spectral norm of the
inverse against its asymptotic rho^(4k) / (K sqrt(k)).
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..config import EngineLimits
from ..consts import HILBERT_K, RHO
from ..errors import InvariantBreach, OutOfRange, SingularMatrix

Matrix = List[List[Fraction]]


def hilbert_matrix(k: int) -> Matrix:
    """(k+1) x (k+1) matrix with entries 1/(a+b-1), a, b = 1..k+1."""
    if k < 0:
        raise OutOfRange(f"k must be >= 0, got {k}")
    return [[Fraction(1, a + b - 1) for b in range(1, k + 2)] for a in range(1, k + 2)]


def _eliminate(matrix: Sequence[Sequence[Fraction]], rhs: Matrix) -> Matrix:
    """Gauss-Jordan on [matrix | rhs]; returns the solved right-hand block."""
    size = len(matrix)
    rows = [[Fraction(c) for c in matrix[i]] + list(rhs[i]) for i in range(size)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col]), None)
        if pivot is None:
            raise SingularMatrix(f"zero pivot in column {col}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [c * inv for c in rows[col]]
        for r in range(size):
            factor = rows[r][col]
            if r != col and factor:
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[col])]
    return [row[size:] for row in rows]


def exact_inverse(matrix: Sequence[Sequence[Fraction]]) -> Matrix:
    size = len(matrix)
    identity = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    return _eliminate(matrix, identity)


def solve_exact(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> List[Fraction]:
    return [row[0] for row in _eliminate(matrix, [[Fraction(c)] for c in rhs])]


def matmul_exact(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    return [[sum((a[i][t] * b[t][j] for t in range(len(b))), Fraction(0))
             for j in range(len(b[0]))] for i in range(len(a))]


def power_iteration(matrix: np.ndarray, tol: float, max_steps: int) -> float:
    """Largest eigenvalue of a symmetric positive definite matrix."""
    vector = np.ones(matrix.shape[0])
    vector /= np.linalg.norm(vector)
    value = 0.0
    for _ in range(max_steps):
        image = matrix @ vector
        new_value = float(vector @ image)
        vector = image / np.linalg.norm(image)
        if abs(new_value - value) <= tol * abs(new_value):
            return new_value
        value = new_value
    return value


def asymptotic_prediction(k: int) -> float:
    return RHO ** (4 * k) / (HILBERT_K * math.sqrt(k))


@dataclass(frozen=True)
class HilbertReport:
    """Spectral norm of (Hilb^k)^-1; prediction and ratio are None for k = 0."""
    k: int
    inverse: Matrix
    inverse_spectral_norm: float
    asymptotic_prediction: Optional[float]
    ratio: Optional[float]

    def to_record(self) -> Dict[str, Any]:
        return {
            'k': self.k,
            'inverse': [[str(c) for c in row] for row in self.inverse],
            'inverse_spectral_norm': self.inverse_spectral_norm,
            'asymptotic_prediction': self.asymptotic_prediction,
            'ratio': self.ratio,
        }


def hilbert_inverse_norm(k: int, limits: Optional[EngineLimits] = None) -> HilbertReport:
    """
    Spectral norm of the inverse Hilbert matrix of size k+1.

    The inverse is computed exactly; only the power iteration for its largest
    eigenvalue runs in floats.

    Args:
        k: Matrix index, 0 <= k <= limits.hilbert_max_k
        limits: Engine limits (k cap, power iteration tolerance and steps)

    Returns:
        HilbertReport: exact inverse, norm, asymptotic prediction and ratio
    """
    limits = limits or EngineLimits()
    limits.check_hilbert_k(k)
    matrix = hilbert_matrix(k)
    inverse = exact_inverse(matrix)
    norm = power_iteration(
        np.array([[float(c) for c in row] for row in inverse]),
        limits.power_iteration_tol,
        limits.power_iteration_max_steps,
    )
    if not math.isfinite(norm) or norm <= 0:
        raise InvariantBreach(f"non-positive spectral norm {norm} for k={k}")
    if k == 0:
        return HilbertReport(k, inverse, norm, None, None)
    prediction = asymptotic_prediction(k)
    return HilbertReport(k, inverse, norm, prediction, norm / prediction)
