import logging
from fractions import Fraction

import numpy as np
from pytest import mark, raises

from pb_resolvent import sumcheck
from pb_resolvent.core import solve_quartic, squared_resolvent
from pb_resolvent.exceptions import DegreeTooLow, DegreeUnsupported
from pb_resolvent.math.polynomial import Polynomial
from pb_resolvent.moivre import MoivreForm, build_moivre_poly
from pb_resolvent.sumcheck import (
    QuadSumState,
    QuinticExplorer,
    TripleSumState,
    direct_triple_sums,
    elimination_quartic,
    get_explorer,
    multiplication_identities,
    paired_radicals,
    quad_sums,
    quartic_elimination,
    quintic_explorer,
    triple_sums,
    two_term_sum,
)


def random_states(seed, count):
    rng = np.random.RandomState(seed)
    for _ in range(count):
        A, B, C = rng.uniform(-2, 2, 3) + 1j * rng.uniform(-2, 2, 3)
        n = int(rng.randint(2, 6))
        branches = tuple(int(b) for b in rng.randint(0, n, 3))
        yield TripleSumState.from_radicands(A, B, C, n, branches)


def test_two_term_sum():
    rng = np.random.RandomState(0)
    for _ in range(20):
        a, b = rng.randn(2) + 1j * rng.randn(2)
        for m in range(8):
            np.testing.assert_allclose(
                two_term_sum(a + b, a * b, m), a ** m + b ** m, rtol=1e-10, atol=1e-12
            )


def test_two_term_sum_gives_the_moivre_polynomial():
    X = Polynomial([0, 1])
    for n in range(2, 10):
        form = MoivreForm(n, 0, Fraction(3, 2))
        assert two_term_sum(X, Fraction(3, 2), n) == build_moivre_poly(form)


@mark.parametrize('m', range(16))
def test_triple_sums_match_direct_sums(m):
    for state in random_states(m, 10):
        R, S = triple_sums(state, m)
        R_direct, S_direct = direct_triple_sums(state, m)
        scale = max(1, abs(R_direct), abs(S_direct))
        assert abs(R - R_direct) <= 1e-9 * scale, (state, m)
        assert abs(S - S_direct) <= 1e-9 * scale, (state, m)


@mark.parametrize('m', range(1, 6))
def test_multiplication_identities(m):
    for state in random_states(100 + m, 10):
        report = multiplication_identities(state, m)
        assert report.all_passed, report.deviations
        assert set(report.passed) == {'R_2m', 'S_2m', 'R_3m', 'S_3m'}


def test_failing_identity_is_reported(caplog):
    state = TripleSumState.from_radicands(1, 2, 3, 2)
    report = multiplication_identities(state, 1, tol=-1)
    assert not report.all_passed
    assert report.max_deviation >= 0
    assert 'Multiplication identities failed' in caplog.text


def test_state_from_radicands():
    state = TripleSumState.from_radicands(8, 27, 64, 3)
    np.testing.assert_allclose([state.x, state.p, state.g], [9, 26, 24])


def test_quad_sums():
    state = QuadSumState.from_radicands(1, 16, 81, 256, n=4)
    np.testing.assert_allclose([state.x, state.p, state.q, state.h], [10, 35, 50, 24])
    R, S, T = quad_sums(state, 2)
    np.testing.assert_allclose(R, 1 + 4 + 9 + 16)
    np.testing.assert_allclose(S, 2 ** 2 + 3 ** 2 + 4 ** 2 + 6 ** 2 + 8 ** 2 + 12 ** 2)
    np.testing.assert_allclose(T, 6 ** 2 + 8 ** 2 + 12 ** 2 + 24 ** 2)


def random_quartic_coefficients(seed, count):
    rng = np.random.RandomState(seed)
    for _ in range(count):
        yield tuple(
            Fraction(int(rng.randint(-40, 41)), int(rng.randint(1, 5)))
            for _ in range(3)
        )


def test_quartic_elimination():
    for a, b, c in random_quartic_coefficients(0, 100):
        report = quartic_elimination(a, b, c)
        assert report.matches
        assert report.resolvent == squared_resolvent(a, b, c)
        assert report.gamma == b ** 4 / 4096


def test_quartic_elimination_reports_a_mismatch(monkeypatch, caplog):
    monkeypatch.setattr(
        sumcheck, 'squared_resolvent', lambda a, b, c: Polynomial([1, 0, 0, 1])
    )
    report = quartic_elimination(28, 48, 0)
    assert not report.matches
    assert report.resolvent == Polynomial([-1296, 1393, -98, 1])
    assert 'Elimination of x^4' in caplog.text


def test_elimination_quartic_gives_the_source_back():
    for a, b, c in random_quartic_coefficients(1, 50):
        p = elimination_quartic(a / 2, (4 * c + a ** 2) / 16, b / 8)
        assert p == Polynomial([-c, -b, -a, 0, 1])
        alpha, beta, gamma_root = a / 2, (4 * c + a ** 2) / 16, b / 8
        report = solve_quartic(a, b, c)
        assert len(report.roots) == 4
        for root in report.roots:
            x = root.numeric
            lhs = x ** 4 - 2 * float(alpha) * x ** 2 - 8 * x * float(gamma_root)
            rhs = 4 * float(beta) - float(alpha) ** 2
            bound = 1e-8 * max(1, abs(x)) ** 4 * max(1, abs(a), abs(b), abs(c))
            assert abs(lhs - rhs) <= bound, (a, b, c, x)


def test_paired_radicals():
    rng = np.random.RandomState(3)
    for _ in range(20):
        A, B, C, D = rng.randn(4) + 1j * rng.randn(4)
        n = int(rng.randint(2, 8))
        rA, rB, rC, rD = paired_radicals(A, B, C, D, n)
        np.testing.assert_allclose([rA ** n, rB ** n, rC ** n, rD ** n], [A, B, C, D], rtol=1e-10)
        np.testing.assert_allclose(rA * rB, (A * B) ** (1 / n), rtol=1e-10)
        np.testing.assert_allclose(rC * rD, (C * D) ** (1 / n), rtol=1e-10)
    np.testing.assert_allclose(paired_radicals(0, 8, 0, 0, 3), [0, 2, 0, 0], atol=1e-12)


@mark.parametrize('alpha, t', [(2, 1), (3, 1), (-5, 2), ('7/2', '1/2')])
def test_explorer_recovers_moivre_forms(alpha, t):
    form = MoivreForm(5, Fraction(alpha), Fraction(t))
    center = float(form.alpha) / 2
    root = np.sqrt(np.complex128(center ** 2 - float(form.beta)))
    report = quintic_explorer(center + root, center - root, 0, 0, n=5)
    assert len(report.candidates) == 5
    source = build_moivre_poly(form)
    best = report.best
    scale = max(1, float(abs(form.alpha)), float(form.t) ** 5)
    assert best.max_imag <= 1e-8 * scale
    assert best.subleading_deviation <= 1e-8 * scale
    for value in best.values:
        assert abs(source(value)) <= 1e-8 * scale
    np.testing.assert_allclose(best.coeffs, source.float_coeffs, atol=1e-8 * scale)


def test_explorer_cubic_example():
    report = quintic_explorer(8, 1, 0, 0, n=3)
    np.testing.assert_allclose(report.radicals, [2, 1, 0, 0])
    assert [c.multipliers for c in report.candidates] == [(1, 2, 0, 0), (1, 2, 1, 2), (1, 2, 2, 1)]
    for candidate in report.candidates:
        np.testing.assert_allclose(candidate.coeffs, [-9, -6, 0, 1], atol=1e-12)


def test_full_enumeration(caplog):
    with caplog.at_level(logging.WARNING, logger='sumcheck'):
        report = get_explorer(n=3, full_enumeration=True)(1, 2, 3, 4)
    assert len(report.candidates) == 3 ** 4
    assert 'Full enumeration of 81' in caplog.text
    assert len({c.multipliers for c in report.candidates}) == 81


def test_explorer_errors():
    with raises(DegreeTooLow):
        QuinticExplorer(n=1)
    with raises(DegreeUnsupported):
        QuinticExplorer(n=17)
    with raises(DegreeUnsupported):
        get_explorer(n=7, max_n=6)
