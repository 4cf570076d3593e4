from fractions import Fraction

import numpy as np
from pytest import mark, raises

from pb_resolvent import keys
from pb_resolvent.core import (
    certify,
    quadratic_resolvent,
    resolvent_of_cubic,
    resolvent_of_quartic,
    solve_closed_form,
    solve_cubic,
    solve_linear,
    solve_numeric,
    solve_quadratic,
    solve_quartic,
    solve_quartic_squared,
    squared_resolvent,
)
from pb_resolvent.exceptions import (
    CertificationError,
    DegreeMismatch,
    DegreeTooLow,
    DegreeUnsupported,
)
from pb_resolvent.math.oracle import find_roots_numeric, multiset_match
from pb_resolvent.math.polynomial import Polynomial, residual, scale
from pb_resolvent.math.radical import eval_radical

Z = Polynomial([0, 1])


def random_rationals(rng, size, height=100):
    return [
        Fraction(int(rng.randint(-height, height + 1)), int(rng.randint(1, height + 1)))
        for _ in range(size)
    ]


def assert_certified(report, tol=1e-9):
    p = report.source
    for root in report.roots:
        assert root.residual <= tol * scale(p, root.numeric)
        if root.closed_form is not None:
            # the tree evaluates to the reported value up to roundoff
            value = eval_radical(root.closed_form)
            assert residual(p, value) <= 1e-6 * scale(p, value)


def assert_matches_oracle(report, tol=1e-8):
    expected = find_roots_numeric(report.source)
    size = 1 + np.max(np.abs(expected))
    assert multiset_match(report.values, expected, tol * size) is not None, (
        report.source, report.values, expected
    )


def test_cubic_resolvent_printed_form():
    assert resolvent_of_cubic(6, 9) == Z ** 2 - 9 * Z + 8
    assert resolvent_of_cubic(3, 0) == Z ** 2 + 1
    assert resolvent_of_cubic(0, 5) == Z ** 2 - 5 * Z


def test_cubic_resolvent_random_rationals():
    rng = np.random.RandomState(0)
    for _ in range(100):
        a, b = random_rationals(rng, 2)
        assert resolvent_of_cubic(a, b) == Z ** 2 - b * Z + Polynomial([a ** 3 / 27])


def test_quartic_resolvents_printed_forms():
    rng = np.random.RandomState(1)
    for _ in range(50):
        a, b, c = random_rationals(rng, 3)
        # z^3 = (a/2) z^2 - ((4c + a^2)/16) z + b^2/64
        expected = Z ** 3 - (a / 2) * Z ** 2 + ((4 * c + a ** 2) / 16) * Z - Polynomial([b ** 2 / 64])
        assert resolvent_of_quartic(a, b, c) == expected
        # t^3 = (a^2/8 - c/2) t^2 - (a^4/256 + a^2 c/32 + c^2/16 - a b^2/64) t + b^4/4096
        expected = (
            Z ** 3
            - (a ** 2 / 8 - c / 2) * Z ** 2
            + (a ** 4 / 256 + a ** 2 * c / 32 + c ** 2 / 16 - a * b ** 2 / 64) * Z
            - Polynomial([b ** 4 / 4096])
        )
        assert squared_resolvent(a, b, c) == expected


def test_squared_resolvent_roots_are_squares():
    rng = np.random.RandomState(2)
    checked = 0
    while checked < 100:
        a, b, c = [Fraction(int(v)) for v in rng.randint(-10, 11, 3)]
        z = find_roots_numeric(resolvent_of_quartic(a, b, c))
        distance = np.abs(z[:, None] - z[None, :]) + np.eye(3)
        if np.min(distance) < 1e-3:
            # clustered roots, the oracle is not accurate to 1e-9 there
            continue
        t = find_roots_numeric(squared_resolvent(a, b, c))
        tol = 1e-9 * (1 + np.max(np.abs(t)))
        assert multiset_match(t, z ** 2, tol) is not None, (a, b, c)
        checked += 1


def test_quadratic_resolvent():
    assert quadratic_resolvent(Fraction(4, 9)) == Z - Polynomial([Fraction(4, 9)])


@mark.parametrize('seed', range(4))
def test_random_depressed_cubics(seed):
    rng = np.random.RandomState(seed)
    for _ in range(50):
        a, b = random_rationals(rng, 2)
        report = solve_cubic(a, b)
        assert report.method == keys.METHOD_CUBIC
        assert len(report.roots) == 3
        assert_certified(report)
        assert_matches_oracle(report)


@mark.parametrize('seed', range(4))
def test_random_depressed_quartics(seed):
    rng = np.random.RandomState(100 + seed)
    for _ in range(50):
        a, b, c = random_rationals(rng, 3)
        report = solve_quartic(a, b, c)
        assert report.method == keys.METHOD_QUARTIC
        assert_certified(report)
        assert_matches_oracle(report)


def test_cubic_pairing_and_unity_multipliers():
    report = solve_cubic(6, 9)
    assert report.diagnostics['pairing'] == 2
    for u, v in report.diagnostics['cube_roots']:
        np.testing.assert_allclose(u * v, 2, atol=1e-12)
    np.testing.assert_allclose(sorted(report.resolvent_roots, key=abs), [1, 8])
    assert len(report.diagnostics['unity_multipliers']) == 3


def test_cubic_with_vanishing_linear_term():
    report = solve_cubic(0, 8)
    np.testing.assert_allclose(
        sorted(report.values, key=np.angle),
        sorted(2 * np.exp(2j * np.pi * np.arange(3) / 3), key=np.angle),
        atol=1e-12,
    )
    report = solve_cubic(0, 0)
    np.testing.assert_allclose(report.values, 0)


def test_biquadratic_fallback():
    report = solve_quartic(5, 0, -4)
    assert report.diagnostics['fallback'] == 'biquadratic'
    np.testing.assert_allclose(np.sort(report.values.real), [-2, -1, 1, 2], atol=1e-12)


@mark.parametrize('a, b, c', [(28, 48, 0), (2, 8, 1), (-3, 5, 7), ('1/2', '-7/3', 4)])
def test_squared_resolvent_method_agrees(a, b, c):
    direct = solve_quartic(a, b, c)
    squared = solve_quartic_squared(a, b, c)
    assert squared.method == keys.METHOD_QUARTIC_SQUARED
    assert_certified(squared)
    assert multiset_match(direct.values, squared.values, 1e-8) is not None
    np.testing.assert_allclose(
        sorted(squared.resolvent_roots, key=lambda v: (v.real, v.imag)),
        sorted(np.array(direct.resolvent_roots) ** 2, key=lambda v: (v.real, v.imag)),
        atol=1e-9,
    )


@mark.parametrize('roots', [
    [1, 2, 3],
    [-2, -2, 1],
    [0, 5],
    [Fraction(1, 3), 4, -7, 2],
    [1, 1, 1, 1],
])
def test_closed_form_of_shifted_polynomials(roots):
    p = Polynomial.from_roots(roots).scale_by(3)
    report = solve_closed_form(p)
    assert report.source == p
    assert_certified(report)
    expected = [float(r) for r in roots]
    assert multiset_match(report.values, expected, 1e-4) is not None


def test_linear_and_quadratic():
    report = solve_linear(Polynomial([3, 4]))
    assert report.roots[0].numeric == -0.75
    assert report.resolvent == Polynomial([1])
    report = solve_quadratic(Polynomial([1, 0, 1]))
    np.testing.assert_allclose(sorted(report.values, key=lambda v: v.imag), [-1j, 1j])
    assert report.resolvent == Z + 1
    # large and small root without cancellation
    report = solve_quadratic(Polynomial([1, -10 ** 8, 1]))
    np.testing.assert_allclose(sorted(abs(report.values)), [1e-8, 1e8], rtol=1e-12)


def test_method_preconditions():
    with raises(DegreeTooLow):
        solve_closed_form(Polynomial([5]))
    with raises(DegreeUnsupported):
        solve_closed_form(Polynomial([1, 0, 0, 0, 0, 1]))
    with raises(DegreeMismatch):
        solve_closed_form(Polynomial([1, 0, 0, 1]), method=keys.METHOD_QUARTIC)
    with raises(DegreeMismatch):
        solve_closed_form(Polynomial([1, 0, 1]), method=keys.METHOD_CUBIC)
    with raises(DegreeMismatch):
        solve_closed_form(Polynomial([1, 1]), method=keys.METHOD_QUARTIC_SQUARED)
    with raises(DegreeMismatch):
        solve_closed_form(Polynomial([1, 0, 0, 1]), method=keys.METHOD_QUADRATIC)
    with raises(DegreeMismatch):
        solve_quadratic(Polynomial([1, 1]))


def test_certify_rejects_wrong_roots():
    p = Polynomial([-2, 0, 1])
    certify(p, None, np.sqrt(2))
    with raises(CertificationError) as info:
        certify(p, None, 1.5)
    assert info.value.exit_code == 4


def test_numeric_report():
    p = Polynomial([1, 1, 0, 0, 0, 1])
    report = solve_numeric(p)
    assert report.method == keys.METHOD_NUMERIC
    assert report.resolvent is None
    assert all(r.closed_form is None for r in report.roots)
    assert report.tolerance >= 1e-8
    assert_matches_oracle(report)


def test_report_invariants():
    report = solve_quartic(28, 48, 0)
    assert report.resolvent.degree == 3
    assert report.max_residual == max(r.residual for r in report.roots)
    assert len(report.values) == 4
