from fractions import Fraction

import pytest
from hypothesis import given, settings

from src.errors import IllFormedComposition, NonUnit, NotDivisible, NotReversible
from src.series import (
    INF,
    LAMBDA,
    LambdaPoly,
    Series1,
    Series2,
    antiderivative_y,
    compose1,
    compose2,
    divide_ideal,
    invert_unit,
    krull_valuation,
    mul,
    mul_tracked,
    partial,
    revert1,
    x_valuation,
)
from src.series.coeffs import coeff_inverse, to_fraction
from src.invariants import fixed_curve

from .strategies import polynomials2, reversible1, units2


def s2(terms, order=6):
    return Series2.from_terms(terms, order)


class TestCoefficients:
    def test_to_fraction_accepts_strings(self):
        assert to_fraction("-3/4") == Fraction(-3, 4)

    def test_to_fraction_rejects_garbage(self):
        with pytest.raises(ValueError):
            to_fraction("1/0")

    def test_lambda_poly_arithmetic(self):
        p = LAMBDA + 1
        assert (p * p).coeffs == (1, 2, 1)
        assert (p * p).evaluate(Fraction(1, 2)) == Fraction(9, 4)
        assert p - LAMBDA == 1

    def test_zero_polynomial_has_degree_minus_one(self):
        assert LambdaPoly().degree == -1
        assert not LambdaPoly([0, 0])

    def test_render(self):
        assert LambdaPoly([Fraction(1, 2), 0, -1]).render() == "1/2 - lam^2"

    def test_inverse_of_non_unit(self):
        with pytest.raises(NonUnit):
            coeff_inverse(LAMBDA)
        with pytest.raises(NonUnit):
            coeff_inverse(0)


class TestArithmetic:
    def test_sum_of_variables(self):
        assert Series2.x(4) + Series2.y(4) == s2({(1, 0): 1, (0, 1): 1}, 4)

    def test_exact_rational_sum(self):
        total = s2({(2, 0): Fraction(1, 2)}) + s2({(2, 0): Fraction(1, 3)})
        assert total[2, 0] == Fraction(5, 6)

    def test_mixed_orders_truncate_to_the_smaller(self):
        assert (Series2.x(3) + Series2.y(7)).order == 3

    def test_product_with_curve(self):
        y = Series2.y(6)
        assert y * (y - Series2.x(6)) == fixed_curve(6)

    def test_geometric_series_times_its_inverse(self):
        alternating = Series2.from_terms({(i, 0): (-1) ** i for i in range(7)}, 6)
        assert mul(Series2.one(6) + Series2.x(6), alternating) == Series2.one(6)

    def test_mul_tracked_keeps_precision_from_valuations(self):
        q = fixed_curve(6)
        product = mul_tracked(q, Series2.one(4) + Series2.x(4), cap=8)
        assert product.order == 6
        assert product[1, 2] == 1 and product[2, 1] == -1

    @settings(max_examples=25, deadline=None)
    @given(polynomials2(), polynomials2(), polynomials2())
    def test_product_is_associative_and_distributive(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


class TestValuations:
    def test_krull_valuation(self):
        assert krull_valuation(s2({(2, 1): 1})) == 3
        assert krull_valuation(fixed_curve(6)) == 2
        assert krull_valuation(Series2.zero(8)) == INF

    @settings(max_examples=30, deadline=None)
    @given(polynomials2(), polynomials2())
    def test_valuation_of_a_product_adds(self, a, b):
        if a.is_zero() or b.is_zero():
            return
        total = krull_valuation(a) + krull_valuation(b)
        if total <= a.order:
            assert krull_valuation(a * b) == total

    def test_x_valuation(self):
        assert x_valuation(Series1(5, [0, 1, 0, 1])) == 1
        assert x_valuation(Series1.constant(7, 5)) == 0
        assert x_valuation(Series1.zero(5)) == INF


class TestInversion:
    def test_inverse_of_one_minus_y(self):
        inverse = invert_unit(Series2.one(6) - Series2.y(6))
        assert inverse == Series2.from_terms({(0, k): 1 for k in range(7)}, 6)

    def test_inverse_of_non_unit_raises(self):
        with pytest.raises(NonUnit):
            invert_unit(Series2.x(4))

    @settings(max_examples=25, deadline=None)
    @given(units2())
    def test_unit_times_inverse_is_one(self, u):
        assert u * invert_unit(u) == Series2.one(u.order)


class TestComposition:
    def test_projection(self):
        sx = s2({(1, 0): 1, (1, 1): 2})
        sy = s2({(0, 1): 1, (2, 0): 3})
        assert compose2(Series2.x(6), sx, sy) == sx

    def test_direct_expansion(self):
        g = s2({(1, 1): 1})
        result = compose2(g, Series2.x(6), Series2.y(6) + s2({(2, 0): 1}))
        assert result == s2({(1, 1): 1, (3, 0): 1})

    def test_square_of_family_component(self):
        sy = Series2.y(6) + fixed_curve(6)
        assert compose2(s2({(0, 2): 1}), Series2.x(6), sy) == sy * sy

    def test_inner_series_must_vanish(self):
        with pytest.raises(IllFormedComposition):
            compose2(Series2.x(4), Series2.one(4), Series2.y(4))

    def test_compose1_needs_vanishing_inner(self):
        with pytest.raises(IllFormedComposition):
            compose1(Series1.variable(4), Series1.constant(1, 4))


class TestDivision:
    def test_curve_by_itself(self):
        assert divide_ideal(fixed_curve(6), fixed_curve(6)) == Series2.one(4)

    def test_zero_by_curve(self):
        assert divide_ideal(Series2.zero(6), fixed_curve(6)).is_zero()

    def test_constructed_multiple(self):
        b = Series2.one(6) + Series2.x(6) + Series2.y(6)
        quotient = divide_ideal(fixed_curve(6) * b, fixed_curve(6))
        assert quotient.order == 4
        assert quotient == b

    def test_witness_is_first_remainder(self):
        with pytest.raises(NotDivisible) as info:
            divide_ideal(s2({(0, 2): 1}), fixed_curve(6))
        assert info.value.bidegree == (0, 2)

    def test_low_degree_remainder(self):
        with pytest.raises(NotDivisible) as info:
            divide_ideal(Series2.x(6), fixed_curve(6))
        assert info.value.bidegree == (1, 0)

    @settings(max_examples=25, deadline=None)
    @given(polynomials2(order=7))
    def test_division_undoes_multiplication(self, b):
        q = fixed_curve(7)
        assert divide_ideal(q * b, q) == b


class TestReversion:
    def test_identity(self):
        assert revert1(Series1.variable(5)) == Series1.variable(5)

    def test_catalan_signed_coefficients(self):
        assert revert1(Series1(4, [0, 1, 1])).coeffs == (0, 1, -1, 2, -5)

    def test_linear(self):
        assert revert1(Series1(4, [0, 2])) == Series1(4, [0, Fraction(1, 2)])

    def test_valuation_two_is_not_reversible(self):
        with pytest.raises(NotReversible):
            revert1(Series1(4, [0, 0, 1]))

    @settings(max_examples=25, deadline=None)
    @given(reversible1())
    def test_reversion_recomposes_to_identity(self, f):
        assert compose1(f, revert1(f)) == Series1.variable(f.order)

    @settings(max_examples=25, deadline=None)
    @given(reversible1())
    def test_reversion_is_a_left_inverse(self, f):
        assert compose1(revert1(f), f) == Series1.variable(f.order)


class TestDerivatives:
    def test_partials(self):
        assert partial(s2({(0, 2): 1}), 'y') == s2({(0, 1): 2})
        assert partial(s2({(0, 3): 1}), 'x').is_zero()
        assert partial(s2({(1, 1): 1, (0, 2): Fraction(1, 2)}), 'y') == Series2.x(5) + Series2.y(5)

    def test_partial_loses_one_order(self):
        assert partial(Series2.x(6), 'x').order == 5

    def test_antiderivative_vanishes_on_axis(self):
        a = s2({(0, 0): 1, (1, 1): 3})
        b = antiderivative_y(a)
        assert b.order == 7
        assert b.restrict_y0().is_zero()
        assert partial(b, 'y') == a


class TestRestrictions:
    def test_diagonal_minus_axis(self):
        s = s2({(1, 0): 2, (0, 1): 1, (1, 1): 1})
        assert s.diagonal_minus_axis() == Series1(6, [0, 1, 1])

    def test_lambda_specialization(self):
        s = s2({(1, 0): LAMBDA, (0, 1): LAMBDA * LAMBDA})
        assert s.evaluate_lambda(2) == s2({(1, 0): 2, (0, 1): 4})
        assert s.lambda_degree() == 2
