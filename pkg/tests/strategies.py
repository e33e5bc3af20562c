"""
Hypothesis strategies shared by the test modules.
"""
from fractions import Fraction

from hypothesis import strategies as st

regular_denominators = st.builds(
    lambda a, b, c: 2**a * 3**b * 5**c,
    st.integers(0, 6),
    st.integers(0, 6),
    st.integers(0, 4),
)

regular_integers = regular_denominators

finite_sexagesimals = st.builds(
    Fraction, st.integers(-(60**4), 60**4), regular_denominators
)

rationals = st.fractions(max_denominator=10_000).filter(lambda q: abs(q) < 60**5)

positive_rationals = st.fractions(min_value=Fraction(1, 3600), max_value=3600, max_denominator=3600)


@st.composite
def frustum_sides(draw):
    """Base side, top side and height of a square frustum, base strictly larger."""
    b = draw(positive_rationals)
    a = b + draw(positive_rationals)
    h = draw(positive_rationals)
    return a, b, h
