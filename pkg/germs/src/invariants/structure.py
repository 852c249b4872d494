"""
Structure of the generator of phi_{Delta,w} and the formal invariants
read off the germ directly.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from ..diffeo import Diffeo2, VectorField2, log_diffeo
from ..errors import InvariantBreach, NotDivisible
from ..series import Series1, Series2, divide_ideal, partial
from .germ import GermSpec, build_phi, fixed_curve


def l_field(spec: GermSpec, lambda_scale=None) -> VectorField2:
    """
    L = log(phi_{Delta,w}) / (y(y-x)), known to order N-2.

    Both components of the generator lie in the ideal (y(y-x)) and
    L(x)(0,0) = Delta(0,0) = 0, L(y)(0,0) = w(0,0); a failure of either is
    an arithmetic bug and raises InvariantBreach.
    """
    phi = build_phi(spec, lambda_scale)
    X = log_diffeo(phi)
    q = fixed_curve(spec.order)
    try:
        L = VectorField2(divide_ideal(X.ax, q), divide_ideal(X.ay, q))
    except NotDivisible as exc:
        raise InvariantBreach(f"generator not in the ideal (y(y-x)): {exc}") from exc
    if L.ax.constant_term:
        raise InvariantBreach(f"L(x)(0,0) = {L.ax.constant_term}, expected 0")
    if L.ay.constant_term != spec.w.constant_term:
        raise InvariantBreach(f"L(y)(0,0) = {L.ay.constant_term}, expected {spec.w.constant_term}")
    return L


@dataclass(frozen=True)
class FixSetResult:
    """Whether Fix(phi) contains {y(y-x) = 0}; witness is the first failing bidegree."""
    contains: bool
    witness: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.contains


def fix_set_check(phi: Diffeo2) -> FixSetResult:
    """Ideal membership of both components of phi - Id in (y(y-x))."""
    n = phi.order
    q = fixed_curve(n)
    for component, coordinate in ((phi.sx, Series2.x(n)), (phi.sy, Series2.y(n))):
        try:
            divide_ideal(component - coordinate, q)
        except NotDivisible as exc:
            return FixSetResult(False, exc.bidegree)
    return FixSetResult(True)


def jacobian(phi: Diffeo2) -> Series2:
    """det D(phi), known to order N-1."""
    return (partial(phi.sx, 'x') * partial(phi.sy, 'y')
            - partial(phi.sx, 'y') * partial(phi.sy, 'x'))


def jacobian_restrictions(phi: Diffeo2) -> Tuple[Series1, Series1]:
    """The Jacobian on y = 0 and on y = x, both as series in x."""
    j = jacobian(phi)
    return j.restrict_y0(), j.diagonal()
