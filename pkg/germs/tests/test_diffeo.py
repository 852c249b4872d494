from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.diffeo import (
    Diffeo2,
    VectorField2,
    apply_field,
    exp_apply,
    exp_diffeo,
    exp_series1,
    flow_poly_t,
    log_diffeo,
    log_series1,
    theta_apply,
)
from src.errors import DiffeoError, IllFormedComposition, NotNilpotent, NotUnipotent
from src.invariants import GermSpec, build_phi, fixed_curve
from src.series import LAMBDA, Series1, Series2, compose2, krull_valuation, parse_series2

from .strategies import polynomials2


def y_squared_field(order):
    return VectorField2(Series2.zero(order), Series2.monomial(0, 2, order))


def tangent_germ(p, q):
    return Diffeo2(Series2.x(p.order) + p, Series2.y(q.order) + q)


def log_operator(phi, g):
    """sum_j (-1)^(j+1) Theta^j(g) / j, the logarithm of g -> g o phi as an operator."""
    n = g.order
    total = Series2.zero(n)
    term = g
    j = 1
    while True:
        term = theta_apply(phi, term)
        if krull_valuation(term) > n:
            return total
        total = total + term.scale(Fraction(1 if j % 2 else -1, j))
        j += 1


class TestDiffeo2:
    def test_must_fix_origin(self):
        with pytest.raises(IllFormedComposition):
            Diffeo2(Series2.x(4) + 1, Series2.y(4))

    def test_linear_part_must_be_invertible(self):
        with pytest.raises(DiffeoError):
            Diffeo2(Series2.x(4), Series2.x(4))

    def test_compose_is_outer_after_inner(self, flat_spec):
        phi = build_phi(flat_spec)
        shear = Diffeo2(Series2.x(8), Series2.y(8) + Series2.monomial(2, 0, 8))
        composed = phi.compose(shear)
        assert composed.sx == Series2.x(8)
        assert composed.sy == shear.pull_back(phi.sy)

    def test_identity_is_tangent(self):
        assert Diffeo2.identity(5).is_tangent_to_identity()

    @settings(max_examples=20, deadline=None)
    @given(polynomials2(), polynomials2(min_degree=2), polynomials2(min_degree=2))
    def test_pull_back_matches_composition(self, g, p, q):
        phi = tangent_germ(p, q)
        assert phi.pull_back(g) == compose2(g, phi.sx, phi.sy)

    @settings(max_examples=10, deadline=None)
    @given(*[polynomials2(order=5, min_degree=2)] * 6)
    def test_composition_is_associative(self, p1, q1, p2, q2, p3, q3):
        a, b, c = tangent_germ(p1, q1), tangent_germ(p2, q2), tangent_germ(p3, q3)
        assert a.compose(b).compose(c) == a.compose(b.compose(c))


class TestTheta:
    def test_x_is_fixed_by_flat_family(self, flat_spec):
        assert theta_apply(build_phi(flat_spec), Series2.x(8)).is_zero()

    def test_identity(self):
        assert theta_apply(Diffeo2.identity(6), Series2.monomial(1, 2, 6)).is_zero()

    def test_y_moves_by_the_curve(self, flat_spec):
        assert theta_apply(build_phi(flat_spec), Series2.y(8)) == fixed_curve(8)


class TestLog:
    def test_log_of_identity(self):
        assert log_diffeo(Diffeo2.identity(6)).is_zero()

    def test_log_needs_unipotent(self):
        with pytest.raises(NotUnipotent):
            log_diffeo(Diffeo2(Series2.x(4).scale(2), Series2.y(4)))

    def test_flat_generator_has_no_x_part(self):
        spec = GermSpec(Series2.zero(7), Series2.one(7) + Series2.x(7), 7)
        assert log_diffeo(build_phi(spec)).ax.is_zero()

    def test_exp_of_log_recovers_the_germ(self, sample_spec):
        phi = build_phi(sample_spec)
        X = log_diffeo(phi)
        assert exp_diffeo(X) == phi

    def test_log_is_the_operator_logarithm(self, sample_spec):
        phi = build_phi(sample_spec)
        g = parse_series2("x*y - y + 2*x^2", 6)
        assert log_operator(phi, g) == apply_field(log_diffeo(phi), g)

    def test_operator_logarithm_obeys_leibniz(self, sample_spec):
        phi = build_phi(sample_spec)
        f = parse_series2("x + y^2", 6)
        g = parse_series2("x*y - y", 6)
        assert log_operator(phi, f * g) == f * log_operator(phi, g) + g * log_operator(phi, f)

    def test_moved_series_have_nonzero_derivative(self, seeded_specs):
        for spec in seeded_specs:
            phi = build_phi(spec)
            X = log_diffeo(phi)
            for g in (Series2.y(spec.order), Series2.x(spec.order) + Series2.y(spec.order)):
                assert not theta_apply(phi, g).is_zero()
                assert not apply_field(X, g).is_zero()

    @settings(max_examples=10, deadline=None)
    @given(polynomials2(order=5, max_degree=4, min_degree=2), polynomials2(order=5, max_degree=4, min_degree=2))
    def test_log_of_exp_recovers_the_field(self, ax, ay):
        X = VectorField2(ax, ay)
        assert log_diffeo(exp_diffeo(X)) == X


class TestExp:
    def test_exp_of_zero(self):
        g = Series2.monomial(1, 1, 5) + Series2.x(5)
        assert exp_apply(VectorField2.zero(5), g) == g

    def test_flow_of_y_squared(self):
        image = exp_apply(y_squared_field(8), Series2.y(8))
        assert image.restrict_x0().coeffs == (0,) + (1,) * 8

    def test_linear_field_is_not_nilpotent(self):
        with pytest.raises(NotNilpotent):
            exp_apply(VectorField2(Series2.x(4), Series2.zero(4)), Series2.y(4))

    def test_flow_of_zero_has_no_t(self):
        g = Series2.x(5) + Series2.y(5)
        assert flow_poly_t(VectorField2.zero(5), g).lambda_degree() == 0

    def test_flow_is_polynomial_in_t(self):
        flow = flow_poly_t(y_squared_field(4), Series2.y(4))
        assert flow[0, 2] == LAMBDA
        assert flow[0, 3] == LAMBDA * LAMBDA
        assert flow.evaluate_lambda(1) == exp_apply(y_squared_field(4), Series2.y(4))

    def test_flow_times_add(self):
        X = VectorField2(parse_series2("x*y", 6), parse_series2("y^2 + x^2*y", 6))
        g = parse_series2("x + y + x*y", 6)
        flow = flow_poly_t(X, g)
        s1, s2 = Fraction(1, 2), Fraction(-1, 3)
        assert flow.evaluate_lambda(s1 + s2) == exp_apply(X.scale(s1), exp_apply(X.scale(s2), g))
        assert flow.evaluate_lambda(2) == exp_apply(X, exp_apply(X, g))

    def test_time_two_germ_is_the_square(self):
        X = VectorField2(parse_series2("x*y", 6), parse_series2("y^2 + x^2*y", 6))
        once = exp_diffeo(X)
        assert exp_diffeo(X.scale(2)) == once.compose(once)


class TestLieDerivative:
    def test_constant_is_annihilated(self):
        assert apply_field(y_squared_field(6), Series2.one(6).scale(3)).is_zero()

    def test_y_squared_on_y(self):
        assert y_squared_field(6)(Series2.y(6)) == Series2.monomial(0, 2, 6)

    def test_flat_generator_fixes_x(self, flat_spec):
        X = log_diffeo(build_phi(flat_spec))
        assert apply_field(X, Series2.x(8)).is_zero()


class TestOneVariable:
    def test_generator_of_y_plus_y_squared(self):
        a = log_series1(Series1(6, [0, 1, 1]))
        assert a.coeffs[:5] == (0, 0, 1, -1, Fraction(3, 2))

    def test_exp_undoes_log(self):
        f = Series1(7, [0, 1, 1, Fraction(1, 2)])
        assert exp_series1(log_series1(f), Series1.variable(7)) == f

    @settings(max_examples=15, deadline=None)
    @given(st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=3), min_size=1, max_size=3))
    def test_log_matches_the_plane_generator(self, tail):
        order = 6
        w = Series2.from_terms({(0, k): c for k, c in enumerate(tail)}, order)
        if not w.constant_term:
            w = w + 1
        spec = GermSpec(Series2.zero(order), w, order)
        plane = log_diffeo(build_phi(spec)).ay.restrict_x0()
        axis = log_series1(Series1(order, [0, 1] + list(w.restrict_x0().coeffs)))
        assert plane == axis
