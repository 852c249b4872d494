"""
The operator D_v(H) = eps(x, x) - eps(x, 0) with d eps/dy = v*H,
and its coefficient functionals D_v^j.
"""

from fractions import Fraction
from typing import List, Sequence

from ..errors import OutOfRange
from ..series import Series1, Series2, antiderivative_y
from ..series.coeffs import ZERO, Coeff
from .hilbert import hilbert_matrix, solve_exact


def d_v(v: Series2, h: Series2) -> Series1:
    """y-antiderivative of v*H restricted to the diagonal minus the axis."""
    return antiderivative_y(v * h).diagonal_minus_axis()


def d_v_coeff(v: Series2, j: int, h: Series2) -> Coeff:
    """
    D_v^j(H): coefficient of x^j in D_v(H), from
    sum over a+b+k+l+1 = j of v[a,b] * H[k,l] / (b+l+1).
    """
    top = min(v.order, h.order) + 1
    if not 1 <= j <= top:
        raise OutOfRange(f"j={j} outside [1, {top}]")
    total = ZERO
    for v_deg in range(j):
        for b in range(v_deg + 1):
            vc = v[v_deg - b, b]
            if not vc:
                continue
            h_deg = j - 1 - v_deg
            for l in range(h_deg + 1):
                hc = h[h_deg - l, l]
                if hc:
                    total = total + vc * hc / (b + l + 1)
    return total


def antidiagonal_samples(v: Series2, k: int) -> List[Coeff]:
    """(D_v^{k+1}(1), D_v^{k+2}(y), ..., D_v^{2k+1}(y^k)); they see only the k-th antidiagonal of v."""
    if k < 0 or v.order < k:
        raise OutOfRange(f"antidiagonal {k} not available at order {v.order}")
    order = 2 * k + 1
    padded = v.at_order(order)
    return [d_v_coeff(padded, k + r, Series2.monomial(0, r - 1, order)) for r in range(1, k + 2)]


def reconstruct_antidiagonal(v_samples: Sequence, k: int) -> List[Fraction]:
    """(v[k,0], v[k-1,1], ..., v[0,k]) from Hilb^k applied to them."""
    if len(v_samples) != k + 1:
        raise OutOfRange(f"need {k + 1} samples for antidiagonal {k}, got {len(v_samples)}")
    return solve_exact(hilbert_matrix(k), [Fraction(s) for s in v_samples])
