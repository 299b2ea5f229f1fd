import hypothesis
import hypothesis.strategies as st
from fractions import Fraction

from tensorcomplex.fields import TypedField
from tensorcomplex.poly import Poly3

hypothesis.settings.register_profile("default", max_examples=25, deadline=None)
hypothesis.settings.load_profile("default")


@st.composite
def fractions(draw, max_num=30, max_den=12):
    n = draw(st.integers(-max_num, max_num))
    d = draw(st.integers(1, max_den))
    return Fraction(n, d)


@st.composite
def monomials(draw, max_degree=3):
    a = draw(st.integers(0, max_degree))
    b = draw(st.integers(0, max_degree - a))
    c = draw(st.integers(0, max_degree - a - b))
    return (a, b, c)


@st.composite
def polys(draw, max_degree=3, max_terms=5):
    terms = draw(
        st.dictionaries(monomials(max_degree), fractions(), min_size=0, max_size=max_terms)
    )
    return Poly3(terms)


@st.composite
def vector_fields(draw, max_degree=3):
    return TypedField.vector([draw(polys(max_degree)) for _ in range(3)])


@st.composite
def matrix_fields(draw, max_degree=3):
    return TypedField.matrix([[draw(polys(max_degree)) for _ in range(3)] for _ in range(3)])


@st.composite
def scalar_fields(draw, max_degree=3):
    return TypedField.scalar(draw(polys(max_degree)))
