"""
Formal first integrals of L_{Delta,w}, the transport mapping and the
lambda-parametric family f_lambda of first integrals of phi_{lambda*Delta,w}.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from ..errors import DegreeBoundViolated, InvariantBreach, NotReversible
from ..series import LAMBDA, Series1, Series2, compose1, invert_unit, revert1, x_valuation
from ..series.coeffs import ZERO, Coeff, coeff_inverse, lambda_degree, normalize
from .germ import GermSpec, dilate_spec
from .structure import l_field


def _solve_first_integral(spec: GermSpec, lambda_scale=None) -> Series2:
    """
    f with L(f) = 0 and f(x, 0) = x, exact to the spec's order N.

    With f = sum_k f_k(x) y^k and df/dy = c * df/dx, c = -L(x)/L(y), the
    y-power recursion is (k+1) f_{k+1} = sum_{j<=k} c_j * f_{k-j}'.
    L is computed one order higher so that c is known to order N-1.
    """
    n = spec.order
    L = l_field(spec.at_order(n + 1), lambda_scale)
    c = -(L.ax * invert_unit(L.ay))
    # c_j[i] = coefficient of x^i y^j
    c_rows: List[List[Coeff]] = [[c[i, j] for i in range(n - j)] for j in range(n)]

    f_rows: List[List[Coeff]] = [[ZERO] * (n + 1)]
    if n >= 1:
        f_rows[0][1] = 1
    df_rows = [[(i + 1) * f_rows[0][i + 1] for i in range(n)]]
    for k in range(n):
        width = n - k  # x-degrees 0..n-k-1 of f_{k+1}
        acc = [ZERO] * width
        for j in range(k + 1):
            cj, dfk = c_rows[j], df_rows[k - j]
            for a, ca in enumerate(cj[:width]):
                if not ca:
                    continue
                for b in range(width - a):
                    if dfk[b]:
                        acc[a + b] = acc[a + b] + ca * dfk[b]
        row = [value / (k + 1) if value else ZERO for value in acc]
        f_rows.append(row)
        df_rows.append([(i + 1) * row[i + 1] for i in range(width - 1)])
    terms = {(i, k): coeff for k, row in enumerate(f_rows) for i, coeff in enumerate(row) if coeff}
    return Series2.from_terms(terms, n)


def first_integral(spec: GermSpec) -> Series2:
    """The unique first integral of phi_{Delta,w} with f(x, 0) = x."""
    return _solve_first_integral(spec)


@dataclass(frozen=True)
class TransportMap:
    """Tr(x, 0) = (a(x), a(x)); a is tangent to the identity."""
    a: Series1

    def __post_init__(self):
        if x_valuation(self.a) != 1 or self.a[1] != 1:
            raise InvariantBreach("transport map must be tangent to the identity")

    @property
    def order(self) -> int:
        return self.a.order


def transport_from_first_integral(f: Series2) -> TransportMap:
    """a = (f(x,x))^(-1) o f(x,0)."""
    try:
        inverse_diagonal = revert1(f.diagonal())
    except NotReversible as exc:
        raise InvariantBreach(f"f(x,x) is not reversible: {exc}") from exc
    return TransportMap(compose1(inverse_diagonal, f.restrict_y0()))


def transport(spec: GermSpec) -> TransportMap:
    return transport_from_first_integral(first_integral(spec))


@dataclass(frozen=True)
class ParamFirstIntegral:
    """
    f_lambda = x + y * sum f_{j,k}(lambda) x^j y^k for 1 <= j+k <= N-1.

    table[(j, k)] is the coefficient of x^j y^(k+1), a polynomial in lambda
    of degree at most j+k.
    """
    order: int
    table: Dict[Tuple[int, int], Coeff] = field(default_factory=dict)

    def series(self) -> Series2:
        terms = {(1, 0): 1}
        for (j, k), c in self.table.items():
            terms[(j, k + 1)] = c
        return Series2.from_terms(terms, self.order)

    def specialize(self, lam) -> Series2:
        """f_lambda at a rational lambda."""
        return self.series().evaluate_lambda(lam)

    def diagonal(self) -> Series1:
        """f_lambda(x, x) with lambda-polynomial coefficients."""
        return self.series().diagonal()

    def transport_at(self, lam) -> TransportMap:
        return transport_from_first_integral(self.specialize(lam))

    def entries(self) -> List[Tuple[int, int, Coeff]]:
        """(j, k, f_{j,k}) by total degree, then j descending."""
        return sorted(((j, k, c) for (j, k), c in self.table.items()),
                      key=lambda item: (item[0] + item[1], -item[0]))


def parametric_first_integral(spec: GermSpec) -> ParamFirstIntegral:
    """
    First integral of phi_{lambda*Delta,w} with symbolic lambda.

    Every entry is checked against deg f_{j,k} <= j+k; a violation raises
    DegreeBoundViolated.
    """
    f = _solve_first_integral(spec, LAMBDA)
    n = spec.order
    table: Dict[Tuple[int, int], Coeff] = {}
    for total in range(1, n):
        for k in range(total + 1):
            j = total - k
            c = f[j, k + 1]
            degree = lambda_degree(c)
            if degree > j + k:
                raise DegreeBoundViolated((j, k), degree)
            table[(j, k)] = c
    return ParamFirstIntegral(order=n, table=table)


def epsilon_from_family(pfi: ParamFirstIntegral) -> Series2:
    """d f_lambda / d lambda at lambda = 0; vanishes on y = 0."""
    return pfi.series().lambda_coefficient(1)


def rescaled_family_first_integral(spec: GermSpec, lam) -> Series2:
    """
    First integral g_lam of the dilation by lam of phi_{Delta/lam, w}.

    It satisfies f_{1/lam}(lam*x, lam*y) = lam * g_lam(x, y).
    """
    lam = normalize(lam)
    scaled = GermSpec(spec.delta.scale(coeff_inverse(lam)), spec.w, spec.order)
    return first_integral(dilate_spec(scaled, lam))
