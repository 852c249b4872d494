"""Hypothesis strategies for exact series."""

from fractions import Fraction

from hypothesis import strategies as st

from src.series import Series1, Series2

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
nonzero_rationals = rationals.filter(bool)


@st.composite
def polynomials2(draw, order: int = 6, max_degree: int = 3, min_degree: int = 0) -> Series2:
    """Sparse polynomials in x, y with total degree in [min_degree, max_degree]."""
    bidegrees = st.tuples(st.integers(0, max_degree), st.integers(0, max_degree)).filter(
        lambda b: min_degree <= b[0] + b[1] <= max_degree
    )
    terms = draw(st.dictionaries(bidegrees, rationals, max_size=5))
    return Series2.from_terms(terms, order)


@st.composite
def units2(draw, order: int = 6) -> Series2:
    return draw(polynomials2(order, min_degree=1)) + draw(nonzero_rationals)


@st.composite
def reversible1(draw, order: int = 6) -> Series1:
    """a_1 x + a_2 x^2 + ... with a_1 != 0."""
    tail = draw(st.lists(rationals, min_size=0, max_size=3))
    return Series1(order, [Fraction(0), draw(nonzero_rationals)] + tail)
