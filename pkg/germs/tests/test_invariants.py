import json
from fractions import Fraction

import pytest

from src.errors import InvalidSpec, InvariantBreach, ParseError
from src.invariants import (
    LAMBDA,
    GermSpec,
    TransportMap,
    build_phi,
    dilate_spec,
    epsilon_from_family,
    first_integral,
    fix_set_check,
    jacobian_restrictions,
    l_field,
    line_spec,
    normalize_spec,
    parametric_first_integral,
    rescaled_family_first_integral,
    scaled_spec,
    transport,
)
from src.diffeo import Diffeo2, apply_field
from src.series import Series1, Series2, compose2, parse_series2
from src.series.coeffs import lambda_degree

from .specs import spec_from_text


class TestGermSpec:
    def test_delta_must_vanish_at_origin(self):
        with pytest.raises(InvalidSpec):
            spec_from_text("1 + x", "1", 5)

    def test_w_must_not_vanish_at_origin(self):
        with pytest.raises(InvalidSpec):
            spec_from_text("x", "y", 5)

    def test_from_json(self):
        spec = GermSpec.from_json(json.dumps({
            'delta': [{'xk': 1, 'yk': 0, 'c': "1/2"}],
            'w': [{'xk': 0, 'yk': 0, 'c': "2"}],
            'order': 7,
        }))
        assert spec.order == 7
        assert spec.delta[1, 0] == Fraction(1, 2)

    def test_order_override(self):
        text = json.dumps({'delta': [], 'w': [{'xk': 0, 'yk': 0, 'c': "1"}], 'order': 7})
        assert GermSpec.from_json(text, order=4).order == 4

    def test_missing_key_names_the_field(self):
        with pytest.raises(ParseError) as info:
            GermSpec.from_dict({'delta': []})
        assert info.value.field == 'w'

    def test_to_dict_round_trips(self, sample_spec):
        again = GermSpec.from_dict(sample_spec.to_dict())
        assert again.delta == sample_spec.delta and again.w == sample_spec.w
        assert again.order == sample_spec.order


class TestBuildPhi:
    def test_flat_member(self, flat_spec):
        phi = build_phi(flat_spec)
        assert phi.sx == Series2.x(8)
        assert phi.sy == parse_series2("y + y^2 - x*y", 8)

    def test_zero_lambda_kills_delta(self, flat_spec):
        spec = spec_from_text("x", "1", 8)
        assert build_phi(spec, lambda_scale=0) == build_phi(flat_spec)

    def test_symbolic_lambda(self):
        phi = build_phi(spec_from_text("x", "1", 6), lambda_scale=LAMBDA)
        assert phi.sx[1, 2] == LAMBDA
        assert phi.sx[2, 1] == -LAMBDA
        assert phi.sy == parse_series2("y + y^2 - x*y", 6)


class TestStructure:
    def test_family_members_fix_the_curve(self, seeded_specs):
        for spec in seeded_specs:
            assert fix_set_check(build_phi(spec))

    def test_counterexample_witness(self):
        result = fix_set_check(Diffeo2(Series2.x(6), Series2.y(6) + Series2.monomial(0, 2, 6)))
        assert not result
        assert result.witness == (0, 2)

    def test_identity_fixes_everything(self):
        assert fix_set_check(Diffeo2.identity(5)).contains

    def test_jacobian_restrictions_of_identity(self):
        on_axis, on_diagonal = jacobian_restrictions(Diffeo2.identity(5))
        assert on_axis == Series1.constant(1, 4)
        assert on_diagonal == Series1.constant(1, 4)

    def test_jacobian_restrictions_of_flat_member(self, flat_spec):
        on_axis, on_diagonal = jacobian_restrictions(build_phi(flat_spec))
        assert on_axis == Series1(7, [1, -1])
        assert on_diagonal == Series1(7, [1, 1])

    def test_jacobian_restrictions_start_with_w(self, seeded_specs):
        for spec in seeded_specs:
            w0 = spec.w.constant_term
            on_axis, on_diagonal = jacobian_restrictions(build_phi(spec))
            assert (on_axis[0], on_axis[1]) == (1, -w0)
            assert (on_diagonal[0], on_diagonal[1]) == (1, w0)

    def test_l_field_constants(self, sample_spec):
        L = l_field(sample_spec)
        assert L.order == sample_spec.order - 2
        assert L.ax.constant_term == 0
        assert L.ay.constant_term == 1

    def test_l_field_of_unit_w_on_axis(self, flat_spec):
        L = l_field(flat_spec)
        assert L.ay.restrict_x0().coeffs[:3] == (1, -1, Fraction(3, 2))


class TestFirstIntegral:
    def test_flat_first_integral_is_x(self, flat_spec):
        assert first_integral(flat_spec) == Series2.x(8)

    def test_first_integral_normalization_and_invariance(self, sample_spec):
        f = first_integral(sample_spec)
        n = sample_spec.order
        assert f.restrict_y0() == Series1.variable(n)
        assert build_phi(sample_spec).pull_back(f) == f
        L = l_field(sample_spec.at_order(n + 1))
        assert apply_field(L, f).at_order(n - 1).is_zero()

    def test_flat_transport_is_identity(self, flat_spec):
        assert transport(flat_spec).a == Series1.variable(8)

    def test_transport_relates_the_axes(self, sample_spec):
        f = first_integral(sample_spec)
        a = transport(sample_spec).a
        assert f.diagonal().compose(a) == f.restrict_y0()

    def test_transport_must_be_tangent(self):
        with pytest.raises(InvariantBreach):
            TransportMap(Series1(4, [0, 2]))


class TestParametricFamily:
    def test_flat_family_is_trivial(self, flat_spec):
        pfi = parametric_first_integral(flat_spec)
        assert all(not c for c in pfi.table.values())
        assert epsilon_from_family(pfi).is_zero()

    def test_degree_bound(self, sample_spec):
        pfi = parametric_first_integral(sample_spec)
        for j, k, c in pfi.entries():
            degree = c.degree if hasattr(c, 'degree') else (0 if c else -1)
            assert degree <= j + k

    def test_specialization_matches_the_scaled_member(self, sample_spec):
        pfi = parametric_first_integral(sample_spec)
        lam = Fraction(1, 2)
        assert pfi.specialize(lam) == first_integral(scaled_spec(sample_spec, lam))

    def test_family_vanishes_at_zero_lambda(self, sample_spec):
        pfi = parametric_first_integral(sample_spec)
        assert pfi.specialize(0) == Series2.x(sample_spec.order)

    def test_diagonal_keeps_the_degree_bound(self, sample_spec):
        diagonal = parametric_first_integral(sample_spec).diagonal()
        assert diagonal[1] == 1
        for m in range(2, diagonal.order + 1):
            assert lambda_degree(diagonal[m]) <= m - 1

    def test_transport_at_matches_the_scaled_member(self, sample_spec):
        lam = Fraction(1, 2)
        a = parametric_first_integral(sample_spec).transport_at(lam).a
        assert a == transport(scaled_spec(sample_spec, lam)).a

    def test_rescaled_family(self, sample_spec):
        lam = Fraction(2)
        pfi = parametric_first_integral(sample_spec)
        g = rescaled_family_first_integral(sample_spec, lam)
        n = sample_spec.order
        lhs = compose2(pfi.specialize(1 / lam), Series2.x(n).scale(lam), Series2.y(n).scale(lam))
        assert lhs == g.scale(lam)


class TestDilations:
    def test_normalize_sets_w_to_one(self):
        spec = normalize_spec(spec_from_text("x", "2 + y", 5))
        assert spec.w.constant_term == 1
        assert spec.delta == parse_series2("1/4*x", 5)

    def test_dilation_by_zero_is_rejected(self, sample_spec):
        with pytest.raises(InvalidSpec):
            dilate_spec(sample_spec, 0)

    def test_line_through_spec(self, sample_spec):
        direction = parse_series2("y", sample_spec.order)
        member = line_spec(sample_spec, direction, Series2.zero(sample_spec.order), 3)
        assert member.delta == sample_spec.delta + direction.scale(3)
        assert member.w == sample_spec.w
