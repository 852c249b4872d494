"""
Diffeomorphism germs and formal vector fields in the plane.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Tuple

from ..errors import DiffeoError, IllFormedComposition
from ..series import Series2, krull_valuation, mul, power_table, substitute
from ..series.coeffs import ONE, ZERO, Coeff


@dataclass(frozen=True, eq=False)
class Diffeo2:
    """A germ (x, y) -> (sx, sy) fixing the origin."""
    sx: Series2
    sy: Series2

    def __post_init__(self):
        if self.sx.constant_term or self.sy.constant_term:
            raise IllFormedComposition("a diffeomorphism germ must fix the origin")
        if self.order >= 1 and not self.jacobian_determinant_at_origin():
            raise DiffeoError("linear part is not invertible")

    @classmethod
    def identity(cls, order: int) -> 'Diffeo2':
        return cls(Series2.x(order), Series2.y(order))

    @property
    def order(self) -> int:
        return min(self.sx.order, self.sy.order)

    @cached_property
    def monomial_images(self) -> List[List[Series2]]:
        """images[j][k] = sx^j * sy^k for j + k <= N, shared by every pull-back."""
        n = self.order
        x_powers = power_table(self.sx.at_order(n), n)
        y_powers = power_table(self.sy.at_order(n), n)
        images = [y_powers]
        for j in range(1, n + 1):
            row = [x_powers[j]]
            row.extend(mul(x_powers[j], y_powers[k]) for k in range(1, n - j + 1))
            images.append(row)
        return images

    def linear_part(self) -> Tuple[Tuple[Coeff, Coeff], Tuple[Coeff, Coeff]]:
        """Rows (d sx/dx, d sx/dy), (d sy/dx, d sy/dy) at the origin."""
        if self.order < 1:
            return (ONE, ZERO), (ZERO, ONE)
        return tuple(self.sx.layers[1]), tuple(self.sy.layers[1])

    def jacobian_determinant_at_origin(self) -> Coeff:
        (a, b), (c, d) = self.linear_part()
        return a * d - b * c

    def is_tangent_to_identity(self) -> bool:
        """j1 = Id."""
        return self.linear_part() == ((ONE, ZERO), (ZERO, ONE))

    def pull_back(self, g: Series2) -> Series2:
        """g o phi."""
        return substitute(g, self.monomial_images)

    def compose(self, inner: 'Diffeo2') -> 'Diffeo2':
        """self o inner."""
        return Diffeo2(inner.pull_back(self.sx), inner.pull_back(self.sy))

    def at_order(self, order: int) -> 'Diffeo2':
        return Diffeo2(self.sx.at_order(order), self.sy.at_order(order))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Diffeo2):
            return NotImplemented
        return self.sx == other.sx and self.sy == other.sy

    __hash__ = None


@dataclass(frozen=True, eq=False)
class VectorField2:
    """ax d/dx + ay d/dy."""
    ax: Series2
    ay: Series2

    @classmethod
    def zero(cls, order: int) -> 'VectorField2':
        return cls(Series2.zero(order), Series2.zero(order))

    @property
    def order(self) -> int:
        return min(self.ax.order, self.ay.order)

    def valuation(self):
        return min(krull_valuation(self.ax), krull_valuation(self.ay))

    def is_nilpotent(self) -> bool:
        """Both components vanish to order 2, so the linear part is 0."""
        return self.valuation() >= 2

    def is_zero(self) -> bool:
        return self.ax.is_zero() and self.ay.is_zero()

    def __add__(self, other: 'VectorField2') -> 'VectorField2':
        return VectorField2(self.ax + other.ax, self.ay + other.ay)

    def __sub__(self, other: 'VectorField2') -> 'VectorField2':
        return VectorField2(self.ax - other.ax, self.ay - other.ay)

    def scale(self, value) -> 'VectorField2':
        return VectorField2(self.ax.scale(value), self.ay.scale(value))

    def __call__(self, g: Series2) -> Series2:
        from .calculus import apply_field
        return apply_field(self, g)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorField2):
            return NotImplemented
        return self.ax == other.ax and self.ay == other.ay

    __hash__ = None
