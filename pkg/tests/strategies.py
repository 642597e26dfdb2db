from fractions import Fraction

from hypothesis import strategies as st

from ehrhart.quasipoly import QuasiPolynomial

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6))


@st.composite
def quasi_polynomials(draw, max_period=6, max_degree=4):
    p = draw(st.integers(1, max_period))
    d = draw(st.integers(0, max_degree))
    rows = [draw(st.lists(small_rationals, min_size=d + 1, max_size=d + 1)) for _ in range(p)]
    return QuasiPolynomial(rows)
