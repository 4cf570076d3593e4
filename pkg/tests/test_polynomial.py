from fractions import Fraction

import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st
from pytest import mark, raises

from pb_resolvent.exceptions import DegreeTooLow, DivisionByZeroPolynomial
from pb_resolvent.math.polynomial import (
    Polynomial,
    as_rational,
    depress,
    is_palindromic,
    poly_arith,
    poly_divmod,
    poly_eval,
    rational_to_str,
    residual,
    scale,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polynomials = st.lists(rationals, min_size=0, max_size=7).map(Polynomial)


@given(polynomials, polynomials)
@settings(max_examples=60, deadline=None)
def test_divmod_reconstructs(p, d):
    assume(not d.is_zero)
    quotient, remainder = poly_divmod(p, d)
    assert quotient * d + remainder == p
    assert remainder.is_zero or remainder.degree < d.degree


@given(polynomials, polynomials, polynomials)
@settings(max_examples=40, deadline=None)
def test_ring_laws(p, q, r):
    assert poly_arith(p, q, 'add') == poly_arith(q, p, 'add')
    assert poly_arith(p, q, 'mul') == poly_arith(q, p, 'mul')
    assert p * (q + r) == p * q + p * r
    assert poly_arith(p, p, 'sub').is_zero


@given(st.lists(rationals, min_size=3, max_size=6).map(Polynomial))
@settings(max_examples=60, deadline=None)
def test_depress_removes_subleading_term(p):
    assume(p.degree is not None and p.degree >= 2)
    q, shift = depress(p)
    assert q.is_monic
    assert q.coeff(q.degree - 1) == 0
    assert q == p.compose(Polynomial([shift, 1])).scale_by(1 / p.lead)


def test_depress_shifts_roots():
    p = Polynomial.from_roots([1, 2, 6])
    q, shift = depress(p)
    assert shift == 3
    assert q == Polynomial.from_roots([-2, -1, 3])


@mark.parametrize('coeffs', [[], [5], [3, 4]])
def test_depress_needs_degree_two(coeffs):
    with raises(DegreeTooLow):
        depress(Polynomial(coeffs))


def test_division_by_zero_polynomial():
    with raises(DivisionByZeroPolynomial):
        divmod(Polynomial([1, 2]), Polynomial())
    with raises(ZeroDivisionError):
        poly_divmod(Polynomial([1, 2]), Polynomial([0]))


def test_normalization_and_degree():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).degree is None
    assert Polynomial([0, 0]) == Polynomial()
    assert Polynomial([7]).degree == 0
    assert Polynomial.monomial(3).to_text() == 'x^3'


@mark.parametrize('value, expected', [
    (3, Fraction(3)),
    ('-6/4', Fraction(-3, 2)),
    (Fraction(1, 7), Fraction(1, 7)),
    (np.int64(4), Fraction(4)),
])
def test_as_rational(value, expected):
    assert as_rational(value) == expected


def test_floats_are_rejected():
    with raises(TypeError):
        as_rational(0.1)
    with raises(TypeError):
        Polynomial([1, 0.5])


def test_rational_to_str():
    assert rational_to_str(Fraction(8, 2)) == '4'
    assert rational_to_str(Fraction(-3, 4)) == '-3/4'


def test_evaluation_matches_numpy():
    rng = np.random.RandomState(0)
    p = Polynomial([3, -2, 0, 5, 1])
    z = rng.randn(10) + 1j * rng.randn(10)
    expected = np.polynomial.polynomial.polyval(z, [3, -2, 0, 5, 1])
    np.testing.assert_allclose(poly_eval(p, z), expected, rtol=1e-13)
    np.testing.assert_allclose(p(z[0]), expected[0], rtol=1e-13)
    np.testing.assert_allclose(residual(p, z), np.abs(expected), rtol=1e-13)


def test_scale_is_coefficient_magnitude():
    p = Polynomial([-9, -6, 0, 1])
    assert scale(p, 0.1j) == 16
    assert scale(p, 2) == 9 + 12 + 8
    np.testing.assert_allclose(scale(p, np.array([0.5, 2])), [16, 29])


@mark.parametrize('coeffs, expected', [
    ([1, 3, 4, 3, 1], True),
    ([1, 0, 0, 1], True),
    ([2, 1, 1], False),
    ([], True),
])
def test_is_palindromic(coeffs, expected):
    assert is_palindromic(Polynomial(coeffs)) is expected


def test_reversed_and_compose():
    p = Polynomial([1, 2, 3])
    assert p.reversed() == Polynomial([3, 2, 1])
    assert p.compose(Polynomial([0, 1])) == p
    assert Polynomial([0, 0, 1]).compose(p) == p * p


def test_canonical_text():
    assert Polynomial([-9, -6, 0, 1]).to_text() == 'x^3 - 6x - 9'
    assert Polynomial(['1/2', 0, '-3/4']).to_text('t') == '-3/4t^2 + 1/2'
    assert Polynomial([0, -1, 1]).to_text('u') == 'u^2 - u'
