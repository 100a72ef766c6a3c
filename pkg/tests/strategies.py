from fractions import Fraction

from hypothesis import strategies as st

from bellkit.polynomial import Polynomial


def rationals(bound=12, max_denominator=6):
    return st.builds(
        Fraction,
        st.integers(-bound, bound),
        st.integers(1, max_denominator),
    )


def integer_drivers(limit, bound=5):
    """Driver values g(1..limit) as small integers."""
    return st.lists(st.integers(-bound, bound), min_size=limit, max_size=limit)


def rational_drivers(limit):
    return st.lists(rationals(), min_size=limit, max_size=limit)


def polynomials(max_degree=3):
    return st.lists(rationals(bound=4, max_denominator=3), max_size=max_degree + 1).map(
        Polynomial
    )


def nonzero_polynomials(max_degree=3):
    return polynomials(max_degree).filter(lambda p: not p.is_zero())


def polynomial_drivers(limit):
    return st.lists(polynomials(max_degree=1), min_size=limit, max_size=limit)


def unit_series(order):
    """Coefficients c_0..c_order with c_0 = 1."""
    return st.lists(rationals(), min_size=order, max_size=order).map(
        lambda tail: [Fraction(1)] + tail
    )


def polynomial_series(order):
    """Coefficients 1, p_1, ..., p_order with random degree-2 entries."""
    return st.lists(polynomials(max_degree=2), min_size=order, max_size=order).map(
        lambda tail: [Polynomial.constant(1)] + tail
    )
