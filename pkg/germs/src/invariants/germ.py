"""
The family phi_{Delta,w}(x, y) = (x + y(y-x)Delta, y + y(y-x)w).
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional

from ..consts import DEFAULT_ORDER
from ..diffeo import Diffeo2
from ..errors import InvalidSpec, ParseError
from ..series import Series2, mul, parse_json_document, series2_from_terms, series2_to_terms
from ..series.coeffs import coeff_inverse, normalize


def fixed_curve(order: int) -> Series2:
    """q = y(y-x) = y^2 - xy."""
    return Series2.from_terms({(0, 2): 1, (1, 1): -1}, order)


@dataclass(frozen=True, eq=False)
class GermSpec:
    """Family data: Delta(0,0) = 0 != w(0,0), worked at truncation order `order`."""
    delta: Series2
    w: Series2
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        if self.delta.constant_term:
            raise InvalidSpec(f"Delta(0,0) must be 0, got {self.delta.constant_term}")
        if not self.w.constant_term:
            raise InvalidSpec("w(0,0) must be nonzero")

    def at_order(self, order: int) -> 'GermSpec':
        return GermSpec(self.delta, self.w, order)

    def delta_at(self, order: Optional[int] = None) -> Series2:
        """Delta as data at the given order (zero-padded polynomial data)."""
        return self.delta.at_order(self.order if order is None else order)

    def w_at(self, order: Optional[int] = None) -> Series2:
        return self.w.at_order(self.order if order is None else order)

    @classmethod
    def from_dict(cls, payload: Any, order: Optional[int] = None) -> 'GermSpec':
        """{"delta": [terms], "w": [terms], "order": N}; `order` overrides N."""
        if not isinstance(payload, dict):
            raise ParseError("spec must be a JSON object")
        for key in ('delta', 'w'):
            if key not in payload:
                raise ParseError("missing key", field=key)
        n = payload.get('order', DEFAULT_ORDER) if order is None else order
        if not isinstance(n, int) or isinstance(n, bool):
            raise ParseError("order must be an integer", field='order')
        return cls(
            delta=series2_from_terms(payload['delta'], n, field='delta'),
            w=series2_from_terms(payload['w'], n, field='w'),
            order=n,
        )

    @classmethod
    def from_json(cls, text: str, order: Optional[int] = None) -> 'GermSpec':
        return cls.from_dict(parse_json_document(text), order)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'delta': series2_to_terms(self.delta),
            'w': series2_to_terms(self.w),
            'order': self.order,
        }


def build_phi(spec: GermSpec, lambda_scale=None) -> Diffeo2:
    """
    phi_{Delta,w} at the spec's order.

    With lambda_scale, Delta is replaced by lambda_scale*Delta; pass the
    symbolic LAMBDA to get lambda-polynomial coefficients.
    """
    n = spec.order
    q = fixed_curve(n)
    delta = spec.delta_at()
    if lambda_scale is not None:
        delta = delta.scale(lambda_scale)
    return Diffeo2(
        Series2.x(n) + mul(q, delta),
        Series2.y(n) + mul(q, spec.w_at()),
    )


def dilate_spec(spec: GermSpec, mu) -> GermSpec:
    """
    Family data of the conjugate of phi by (x, y) -> (mu*x, mu*y):
    Delta' = mu*Delta(mu*x, mu*y) and w' = mu*w(mu*x, mu*y).
    """
    mu = normalize(mu)
    if not mu:
        raise InvalidSpec("dilation factor must be nonzero")
    return GermSpec(spec.delta.dilate(mu).scale(mu), spec.w.dilate(mu).scale(mu), spec.order)


def normalize_spec(spec: GermSpec) -> GermSpec:
    """Dilate so that w(0,0) = 1."""
    return dilate_spec(spec, coeff_inverse(spec.w.constant_term))


def line_spec(spec: GermSpec, delta_direction: Series2, w_direction: Series2, lam) -> GermSpec:
    """phi_{Delta + lam*A, w + lam*B} on the line through spec with direction (A, B)."""
    lam = normalize(lam)
    return GermSpec(
        spec.delta + delta_direction.at_order(spec.delta.order).scale(lam),
        spec.w + w_direction.at_order(spec.w.order).scale(lam),
        spec.order,
    )


def scaled_spec(spec: GermSpec, lam) -> GermSpec:
    """The member phi_{lam*Delta, w} of the scaled family."""
    return GermSpec(spec.delta.scale(lam), spec.w, spec.order)
