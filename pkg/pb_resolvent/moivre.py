"""
Equations of de Moivre's form

    x^n - n t x^(n-2) + n(n-3)/2 t^2 x^(n-4) - ... = alpha

solved by x = nrt(A) + nrt(B) with A, B the roots of z^2 = alpha z - beta
and beta = t^n. The form is stored with t instead of beta, so that all
coefficients stay rational.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from pb_resolvent import keys
from pb_resolvent.core import (
    DEFAULT_TOLERANCE,
    ResolventReport,
    certify,
    matching_root,
    quadratic_resolvent,
    resolvent_pair,
)
from pb_resolvent.math.polynomial import Polynomial, as_rational
from pb_resolvent.math.radical import (
    Const,
    Root,
    add,
    mul,
    nth_root,
    roots_of_unity,
)

LOG = logging.getLogger('moivre')

# Unity root indices k of (mu, nu) = (exp(2 pi i k / 5), ...) for the five
# quintic roots in the classic order I to V. Every pair has mu nu = 1.
QUINTIC_PAIRS = ((0, 0), (2, 3), (3, 2), (1, 4), (4, 1))


@dataclass(frozen=True)
class MoivreForm:
    n: int
    alpha: Fraction
    t: Fraction  # nrt(beta)

    def __post_init__(self):
        assert self.n >= 2, self.n
        object.__setattr__(self, 'alpha', as_rational(self.alpha))
        object.__setattr__(self, 't', as_rational(self.t))

    @property
    def beta(self):
        return self.t ** self.n


def moivre_coefficient(n, k):
    """
    n / (n - k) * binomial(n - k, k), the magnitude of the t^k x^(n-2k)
    coefficient.

    >>> [moivre_coefficient(7, k) for k in range(4)]
    [1, 7, 14, 7]
    """
    return n * math.comb(n - k, k) // (n - k)


def build_moivre_poly(form: MoivreForm):
    """
    >>> print(build_moivre_poly(MoivreForm(5, 2, 1)))
    x^5 - 5x^3 + 5x - 2
    >>> print(build_moivre_poly(MoivreForm(3, 9, 2)))
    x^3 - 6x - 9
    >>> print(build_moivre_poly(MoivreForm(2, 5, 2)))
    x^2 - 9
    """
    n = form.n
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    for k in range(1, n // 2 + 1):
        coeffs[n - 2 * k] += (-1) ** k * moivre_coefficient(n, k) * form.t ** k
    coeffs[0] -= form.alpha
    return Polynomial(coeffs)


def detect_moivre(p: Polynomial):
    """
    The form with build_moivre_poly(form) == p, or None. t is read from the
    x^(n-2) coefficient. For n = 2 that coefficient is the constant, which
    is taken as -alpha with t = 0.

    >>> detect_moivre(Polynomial([-2, 5, 0, -5, 0, 1]))
    MoivreForm(n=5, alpha=Fraction(2, 1), t=Fraction(1, 1))
    >>> detect_moivre(Polynomial([-2, 4, 0, -5, 0, 1])) is None
    True
    >>> detect_moivre(Polynomial([-9, -6, 0, 1]))
    MoivreForm(n=3, alpha=Fraction(9, 1), t=Fraction(2, 1))
    """
    if p.is_zero or p.degree < 2 or not p.is_monic:
        return None
    n = p.degree
    if n == 2:
        form = MoivreForm(2, alpha=-p.coeff(0), t=0)
    else:
        t = -p.coeff(n - 2) / n
        constant = build_moivre_poly(MoivreForm(n, alpha=0, t=t)).coeff(0)
        form = MoivreForm(n, alpha=constant - p.coeff(0), t=t)
    if build_moivre_poly(form) != p:
        return None
    return form


def moivre_resolvent(form: MoivreForm):
    """
    z^(n-1) = alpha z^(n-2) - beta z^(n-3): the quadratic z^2 - alpha z + beta
    with n - 3 vanishing roots. For n = 2 the equation is x^2 = alpha + 2t.

    >>> print(moivre_resolvent(MoivreForm(5, 2, 1)).to_text('z'))
    z^4 - 2z^3 + z^2
    """
    if form.n == 2:
        return quadratic_resolvent(form.alpha + 2 * form.t)
    quadratic = Polynomial([form.beta, -form.alpha, 1])
    return quadratic * Polynomial.monomial(form.n - 3)


def _radicals(form: MoivreForm):
    # (nrt(A) expr, value), (companion expr, value) with nrt(A) nrt(B) = t.
    (A_expr, A), (B_expr, B) = resolvent_pair(
        form.alpha / 2, form.alpha ** 2 / 4 - form.beta, form.beta
    )
    root_A = nth_root(A, form.n)
    if A == 0:
        return (Const(0), 0j), (None, 0j), (A, B)
    if form.t == 0:
        return (matching_root(form.n, A_expr, root_A), root_A), (None, 0j), (A, B)
    companion = float(form.t) / root_A
    return (
        (matching_root(form.n, A_expr, root_A), root_A),
        (matching_root(form.n, B_expr, companion), companion),
        (A, B),
    )


def _moivre_root(radical_A, radical_B, mu, nu):
    (expr_A, value_A), (expr_B, value_B) = radical_A, radical_B
    (mu_expr, mu_value), (nu_expr, nu_value) = mu, nu
    terms = [mul(mu_expr, expr_A)]
    if expr_B is not None:
        terms.append(mul(nu_expr, expr_B))
    return add(*terms), mu_value * value_A + nu_value * value_B


def _shifted(expr, n, k):
    # The branch k steps further, i.e. exp(2 pi i k / n) * expr.
    if isinstance(expr, Root):
        return Root(expr.index, expr.radicand, (expr.branch + k) % n)
    return expr


def solve_moivre(form: MoivreForm, tol=DEFAULT_TOLERANCE):
    """
    The n roots x_k = w^k nrt(A) + w^-k nrt(B), w = exp(2 pi i / n).

    >>> report = solve_moivre(MoivreForm(5, 2, 1))
    >>> report.roots[0].numeric, report.roots[0].residual
    ((2+0j), 0.0)
    >>> print(report.roots[0].closed_form)
    root(5, 1, 0) + root(5, 1, 0)
    >>> report = solve_moivre(MoivreForm(3, 9, 2))
    >>> bool(np.any(np.abs(report.values - 3) < 1e-12))
    True
    """
    n = form.n
    source = build_moivre_poly(form)
    (expr_A, root_A), (expr_B, companion), (A, B) = _radicals(form)
    unity = roots_of_unity(n)

    exprs, values = [], []
    for k in range(n):
        value = unity[k][1] * root_A + unity[-k % n][1] * companion
        terms = [_shifted(expr_A, n, k)]
        if expr_B is not None:
            terms.append(_shifted(expr_B, n, -k))
        exprs.append(add(*terms))
        values.append(value)
    if A == 0:
        LOG.debug(f'{source}: alpha = beta = 0, all roots vanish.')

    roots = [certify(source, e, v, tol) for e, v in zip(exprs, values)]
    return ResolventReport(
        source=source,
        resolvent=moivre_resolvent(form),
        resolvent_roots=(A, B),
        roots=roots,
        method=keys.METHOD_MOIVRE,
        tolerance=tol,
        diagnostics={
            'form': form,
            'radicals': (root_A, companion),
        },
    )


def quintic_roots(form: MoivreForm, tol=DEFAULT_TOLERANCE):
    """
    The five roots of a quintic de Moivre form written with the surd
    coefficients of the fifth roots of unity, ordered I to V.

    >>> roots = quintic_roots(MoivreForm(5, 2, 1))
    >>> print(roots[1].closed_form)  # doctest: +ELLIPSIS
    (1/4 * (-1 + -1 * root(2, 5, 0) + root(2, -10 + 2 * root(2, 5, 0), 0))) * root(5, 1, 0) + ...
    """
    assert form.n == 5, form
    source = build_moivre_poly(form)
    radical_A, radical_B, _ = _radicals(form)
    unity = roots_of_unity(5)
    out = []
    for k_mu, k_nu in QUINTIC_PAIRS:
        expr, value = _moivre_root(radical_A, radical_B, unity[k_mu], unity[k_nu])
        out.append(certify(source, expr, value, tol))
    return out
