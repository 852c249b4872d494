import json
from fractions import Fraction

import pytest
from hypothesis import given, settings

from src.errors import ParseError
from src.series import (
    LAMBDA,
    Series1,
    Series2,
    dump_json,
    parse_json_document,
    parse_series1,
    parse_series2,
    render_series1,
    render_series2,
    series2_from_terms,
    series2_to_terms,
)

from .strategies import polynomials2


class TestRendering:
    def test_canonical_order(self):
        s = Series2.from_terms({(0, 2): 1, (1, 1): Fraction(-1, 2), (0, 0): 1}, 4)
        assert render_series2(s) == "1 - 1/2*x*y + y^2"

    def test_zero(self):
        assert render_series2(Series2.zero(3)) == "0"

    def test_leading_minus(self):
        assert render_series1(Series1(3, [0, -1, 0, 2])) == "-x + 2*x^3"

    def test_lambda_coefficients_are_parenthesized(self):
        s = Series2.from_terms({(1, 0): LAMBDA, (1, 1): Fraction(1, 2) - LAMBDA * LAMBDA}, 3)
        assert render_series2(s) == "(lam)*x + (1/2 - lam^2)*x*y"


class TestParsing:
    def test_sum_of_monomials(self):
        s = parse_series2("x + 3/2*x^2*y - y^2", 5)
        assert s == Series2.from_terms({(1, 0): 1, (2, 1): Fraction(3, 2), (0, 2): -1}, 5)

    def test_repeated_terms_accumulate(self):
        assert parse_series2("x + x", 3) == Series2.from_terms({(1, 0): 2}, 3)

    def test_lambda_coefficient(self):
        s = parse_series2("(1 + lam)*x*y", 3)
        assert s[1, 1] == LAMBDA + 1

    def test_one_variable(self):
        assert parse_series1("1 - x^2", 4) == Series1(4, [1, 0, -1])

    def test_unbalanced_parenthesis(self):
        with pytest.raises(ParseError):
            parse_series2("(1 + lam*x", 3)

    def test_bad_coefficient(self):
        with pytest.raises(ParseError):
            parse_series2("x + z", 3)

    @settings(max_examples=30, deadline=None)
    @given(polynomials2(order=5))
    def test_rendered_text_parses_back(self, s):
        assert parse_series2(render_series2(s), 5) == s


class TestJsonTerms:
    def test_terms_are_exact_strings(self):
        s = Series2.from_terms({(2, 0): Fraction(1, 3)}, 3)
        assert series2_to_terms(s) == [{'xk': 2, 'yk': 0, 'c': "1/3"}]

    def test_lambda_terms(self):
        s = series2_from_terms([{'xk': 1, 'yk': 0, 'c': ["0", "1"]}], 3)
        assert s[1, 0] == LAMBDA

    def test_bad_term_names_the_field(self):
        with pytest.raises(ParseError) as info:
            series2_from_terms([{'xk': 0, 'yk': 0, 'c': "1"}, {'xk': -1, 'yk': 0, 'c': "1"}], 3, field='w')
        assert info.value.field == 'w[1]'

    def test_not_a_list(self):
        with pytest.raises(ParseError):
            series2_from_terms({'xk': 0}, 3, field='delta')

    def test_json_syntax_error_carries_line(self):
        with pytest.raises(ParseError) as info:
            parse_json_document('{\n  "delta": [,]\n}')
        assert info.value.line == 2

    def test_dump_is_deterministic(self):
        assert dump_json({'b': 1, 'a': [1, 2]}) == json.dumps({'a': [1, 2], 'b': 1}, indent=2)

    def test_floats_carry_seventeen_digits(self):
        text = dump_json({"ratio": 0.1, "norms": [2.5, float("inf")]})
        assert '0.10000000000000001' in text
        assert "Infinity" in text
        assert json.loads(text) == {"ratio": 0.1, "norms": [2.5, float("inf")]}
