"""
Reciprocal (palindromic) polynomials of degree 2n and their factorization
into n quadratics y^2 + alpha y + 1.

Legend:
    y        variable of the reciprocal equation
    w        y + 1/y
    u        variable of the u-equation, its roots are the alpha values
    V_k(w)   y^k + y^-k written as a polynomial in w

A palindrome of degree 2n is y^n (c_n + sum_k c_(n+k) V_k(w)) and a factor
y^2 + alpha y + 1 = y (w + alpha) vanishes at w = -alpha. The u-equation is
therefore the (monic) polynomial (-1)^n (c_n + sum_k c_(n+k) V_k(-u)).

The trinomial y^2n + p y^n + 1 additionally has the trigonometric solution
alpha_k = -2 cos((phi + 2 pi k) / n) with cos(phi) = -p/2, which is used for
the partial fraction decomposition of 1 / (y^2n + p y^n + 1).
"""
import functools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial import polynomial as npp

from pb_resolvent import keys
from pb_resolvent.core import (
    DEFAULT_TOLERANCE,
    ResolventReport,
    certify,
    matching_root,
    solve_closed_form,
)
from pb_resolvent.exceptions import (
    BoundaryAlpha,
    CertificationError,
    DegreeTooLow,
    DegreeUnsupported,
    NotMonic,
    NotPalindromic,
    OddDegree,
    RepeatedFactor,
)
from pb_resolvent.math.oracle import (
    RESIDUAL_TOL,
    OracleConfig,
    find_roots_numeric,
)
from pb_resolvent.math.polynomial import (
    Polynomial,
    as_rational,
    is_palindromic,
    poly_divmod,
)
from pb_resolvent.math.radical import Const, RadicalExpr, add, mul

LOG = logging.getLogger('reciprocal')

# alpha values closer than this count as one repeated factor.
REPEATED_FACTOR_TOL = 1e-8

# Largest u-equation degree solved in closed form.
CLOSED_FORM_MAX_DEGREE = 4

Y_PLUS_ONE = Polynomial([1, 1])


@dataclass(frozen=True)
class QuadraticFactor:
    """y^2 + alpha y + 1. `exact_alpha` is set when alpha is rational."""
    alpha: complex
    exact_alpha: Optional[Fraction] = None
    closed_form: Optional[RadicalExpr] = None

    @property
    def poly(self):
        """The exact factor, None when alpha is not rational."""
        if self.exact_alpha is None:
            return None
        return Polynomial([1, self.exact_alpha, 1])

    @property
    def float_coeffs(self):
        return np.array([1, self.alpha, 1], dtype=np.complex128)

    def roots(self):
        """
        The two roots of the factor, the one of larger modulus first. The
        second one is its reciprocal.

        >>> y1, y2 = QuadraticFactor(alpha=-2.5).roots()
        >>> round(y1.real, 12), round(y2.real, 12)
        (2.0, 0.5)
        >>> abs(y1 * y2 - 1) < 1e-12
        True
        """
        alpha = complex(self.alpha)
        sqrt_disc = np.sqrt(np.complex128(alpha ** 2 - 4))
        sign = 1 if (-alpha * np.conj(sqrt_disc)).real >= 0 else -1
        y1 = complex((-alpha + sign * sqrt_disc) / 2)
        return y1, 1 / y1


@dataclass(frozen=True)
class UEquation:
    poly: Polynomial
    source: Polynomial

    def __post_init__(self):
        assert 2 * self.poly.degree == self.source.degree, (self.poly, self.source)


@dataclass
class ReciprocalFactorization:
    source: Polynomial
    u_equation: UEquation
    factors: Tuple[QuadraticFactor, ...]
    unit_factors: int = 0  # extracted (y + 1) factors
    closed_form: bool = True

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    @property
    def is_exact(self):
        return all(f.exact_alpha is not None for f in self.factors)

    def recombine(self):
        """
        The product of all factors (and the (y + 1) factors). Exact when every
        alpha is rational, otherwise an ascending complex coefficient array.
        """
        if self.is_exact:
            out = Y_PLUS_ONE ** self.unit_factors
            for f in self.factors:
                out = out * f.poly
            return out
        out = np.array([1], dtype=np.complex128)
        for _ in range(self.unit_factors):
            out = npp.polymul(out, [1, 1])
        for f in self.factors:
            out = npp.polymul(out, f.float_coeffs)
        return out


@functools.lru_cache(maxsize=None)
def half_angle_basis(k: int):
    """
    V_k(u) with V_0 = 2, V_1 = u and V_k = u V_(k-1) - V_(k-2), i.e.
    y^k + y^-k for u = y + 1/y.

    >>> print(half_angle_basis(2).to_text('u'))
    u^2 - 2
    >>> print(half_angle_basis(3).to_text('u'))
    u^3 - 3u
    >>> print(half_angle_basis(4).to_text('u'))
    u^4 - 4u^2 + 2
    """
    assert k >= 0, k
    if k == 0:
        return Polynomial([2])
    if k == 1:
        return Polynomial([0, 1])
    return Polynomial([0, 1]) * half_angle_basis(k - 1) - half_angle_basis(k - 2)


def u_equation(p: Polynomial):
    """
    The degree n polynomial whose roots are the alpha values of the factors
    y^2 + alpha y + 1 of the monic palindrome p of degree 2n.

    >>> print(u_equation(Polynomial([1, 3, 4, 3, 1])).poly.to_text('u'))
    u^2 - 3u + 2
    >>> print(u_equation(Polynomial([1, 6, 14, 18, 14, 6, 1])).poly.to_text('u'))
    u^3 - 6u^2 + 11u - 6
    >>> u_equation(Polynomial([1, 0, 1, 1]))
    Traceback (most recent call last):
    ...
    pb_resolvent.exceptions.NotPalindromic: ('Not a reciprocal polynomial', Polynomial([1, 0, 1, 1]))
    """
    if p.is_zero:
        raise DegreeTooLow('The zero polynomial has no u-equation', p)
    if not is_palindromic(p):
        raise NotPalindromic('Not a reciprocal polynomial', p)
    if p.degree % 2 != 0:
        raise OddDegree('The u-equation needs an even degree', p)
    if not p.is_monic:
        raise NotMonic('The u-equation needs a monic polynomial', p)

    n = p.degree // 2
    minus_u = Polynomial([0, -1])
    w = Polynomial([p.coeff(n)])
    for k in range(1, n + 1):
        w = w + half_angle_basis(k).scale_by(p.coeff(n + k))
    poly = w.compose(minus_u).scale_by((-1) ** n)
    assert poly.is_monic, (p, poly)
    return UEquation(poly=poly, source=p)


def _exact_alpha(poly: Polynomial, value, tol=1e-9):
    # A rational root of poly close to value, or None.
    value = complex(value)
    if abs(value.imag) > tol:
        return None
    candidate = Fraction(value.real).limit_denominator(10 ** 6)
    _, remainder = poly_divmod(poly, Polynomial([-candidate, 1]))
    if remainder.is_zero:
        return candidate
    return None


def _u_roots(poly: Polynomial, tol, oracle: OracleConfig):
    # (value, closed form or None) per root of the u-equation and whether
    # the closed forms were used.
    if poly.degree == 0:
        return [], True
    if poly.degree <= CLOSED_FORM_MAX_DEGREE:
        try:
            report = solve_closed_form(poly, tol=tol)
        except CertificationError as e:
            LOG.warning(f'Closed form of {poly} failed, using the oracle: {e}')
        else:
            return [(r.numeric, r.closed_form) for r in report.roots], True
    else:
        LOG.debug(f'u-equation of degree {poly.degree}, using the oracle.')
    return [(z, None) for z in find_roots_numeric(poly, oracle)], False


def factor_reciprocal(
        p: Polynomial,
        max_n=16,
        tol=DEFAULT_TOLERANCE,
        oracle: OracleConfig = OracleConfig(),
):
    """
    Factor the palindrome p into quadratics y^2 + alpha y + 1. Odd degrees
    first lose a factor (y + 1); non monic input is divided by its leading
    coefficient.

    >>> [f.exact_alpha for f in factor_reciprocal(Polynomial([1, 3, 4, 3, 1]))]
    [Fraction(1, 1), Fraction(2, 1)]
    >>> result = factor_reciprocal(Polynomial([1, 0, 0, 1]))
    >>> result.unit_factors, [f.exact_alpha for f in result]
    (1, [Fraction(-1, 1)])
    """
    if p.is_zero:
        raise DegreeTooLow('The zero polynomial has no factors', p)
    if not is_palindromic(p):
        raise NotPalindromic('Not a reciprocal polynomial', p)

    q = p.scale_by(1 / p.lead)
    unit_factors = 0
    while q.degree % 2 == 1:
        q, remainder = poly_divmod(q, Y_PLUS_ONE)
        assert remainder.is_zero and is_palindromic(q), (p, q, remainder)
        unit_factors += 1

    n = q.degree // 2
    if n > max_n:
        raise DegreeUnsupported(
            f'The u-equation has degree {n} > max_n = {max_n}', p
        )

    ueq = u_equation(q)
    roots, closed = _u_roots(ueq.poly, tol, oracle)

    factors = []
    rest = ueq.poly
    for value, expr in sorted(roots, key=lambda r: (r[0].real, r[0].imag)):
        exact = _exact_alpha(rest, value)
        if exact is not None:
            rest, _ = poly_divmod(rest, Polynomial([-exact, 1]))
            factors.append(QuadraticFactor(
                alpha=complex(float(exact)), exact_alpha=exact, closed_form=Const(exact)
            ))
        else:
            factors.append(QuadraticFactor(alpha=complex(value), closed_form=expr))

    result = ReciprocalFactorization(
        source=p,
        u_equation=ueq,
        factors=tuple(factors),
        unit_factors=unit_factors,
        closed_form=closed,
    )
    _check_recombination(result, tol)
    return result


def _check_recombination(result: ReciprocalFactorization, tol):
    product = result.recombine()
    expected = result.source
    if isinstance(product, Polynomial):
        if product.scale_by(expected.lead) != expected:
            raise CertificationError(
                f'Factors of {expected} recombine to {product}'
            )
        return
    expected = expected.scale_by(1 / expected.lead).float_coeffs
    bound = tol * max(1., float(np.max(np.abs(expected))))
    deviation = float(np.max(np.abs(product - expected)))
    if deviation > bound:
        raise CertificationError(
            f'Factors of {result.source} recombine with a deviation '
            f'{deviation!r} > {bound!r}'
        )


def seventh_root_factors():
    """
    y^6 + y^5 + ... + 1, the seventh roots of unity without 1, factored
    through its cubic u-equation u^3 - u^2 - 2u + 1.

    >>> result = seventh_root_factors()
    >>> print(result.u_equation.poly.to_text('u'))
    u^3 - u^2 - 2u + 1
    >>> expected = -2 * np.cos(2 * np.pi * np.arange(1, 4) / 7)
    >>> np.allclose(sorted(f.alpha.real for f in result), sorted(expected))
    True
    """
    return factor_reciprocal(Polynomial([1] * 7))


def _factor_root(factor: QuadraticFactor, value):
    # (-alpha +- sqrt(alpha^2 - 4)) / 2 with the branch of `value`.
    alpha = factor.closed_form
    if alpha is None:
        return None
    if factor.exact_alpha is not None:
        minus_alpha = Const(-factor.exact_alpha)
        disc = Const(factor.exact_alpha ** 2 - 4)
    else:
        minus_alpha = mul(-1, alpha)
        disc = add(mul(alpha, alpha), -4)
    return mul(
        Fraction(1, 2),
        add(minus_alpha, matching_root(2, disc, 2 * value + factor.alpha)),
    )


def solve_reciprocal(
        p: Polynomial,
        max_n=16,
        tol=DEFAULT_TOLERANCE,
        oracle: OracleConfig = OracleConfig(),
):
    """
    Roots of the palindrome p: -1 for every (y + 1) factor and the two
    roots of each quadratic factor.

    >>> report = solve_reciprocal(Polynomial([1, 3, 4, 3, 1]))
    >>> report.method, report.diagnostics['alphas']
    ('reciprocal', [Fraction(1, 1), Fraction(2, 1)])
    >>> print(report.roots[-1].closed_form)
    1/2 * (-2 + root(2, 0, 0))
    """
    factorization = factor_reciprocal(p, max_n=max_n, tol=tol, oracle=oracle)
    if not factorization.closed_form:
        tol = max(tol, RESIDUAL_TOL)

    roots = [
        certify(p, Const(-1), -1, tol) for _ in range(factorization.unit_factors)
    ]
    for factor in factorization:
        for value in factor.roots():
            roots.append(certify(p, _factor_root(factor, value), value, tol))

    return ResolventReport(
        source=p,
        resolvent=None,
        resolvent_roots=[f.alpha for f in factorization],
        roots=roots,
        method=keys.METHOD_RECIPROCAL,
        tolerance=tol,
        diagnostics={
            'u_equation': factorization.u_equation.poly,
            'alphas': [
                f.exact_alpha if f.exact_alpha is not None else f.alpha
                for f in factorization
            ],
            'unit_factors': factorization.unit_factors,
        },
    )


def trinomial_u_equation(n: int, p):
    """
    u-equation of y^2n + p y^n + 1, i.e. V_n(u) + (-1)^n p.

    >>> print(trinomial_u_equation(2, -1).to_text('u'))
    u^2 - 3
    >>> print(trinomial_u_equation(4, 5).to_text('u'))
    u^4 - 4u^2 + 7
    >>> print(trinomial_u_equation(1, 3).to_text('u'))
    u - 3
    """
    assert n >= 1, n
    return half_angle_basis(n) + Polynomial([(-1) ** n * as_rational(p)])


def trinomial(n: int, p):
    """y^2n + p y^n + 1

    >>> print(trinomial(3, -2).to_text('y'))
    y^6 - 2y^3 + 1
    """
    coeffs = [0] * (2 * n + 1)
    coeffs[0] = coeffs[-1] = 1
    coeffs[n] += as_rational(p)
    return Polynomial(coeffs)


def arc_division_alphas(n: int, p):
    """
    alpha_k = -2 cos((phi + 2 pi k) / n) with cos(phi) = -p/2. For |p| > 2
    phi is complex.

    >>> np.round(arc_division_alphas(3, -2).real, 12)
    array([-2.,  1.,  1.])
    >>> np.round(arc_division_alphas(2, 0).real, 12)
    array([-1.41421356,  1.41421356])
    """
    assert n >= 1, n
    phi = np.arccos(np.complex128(-float(as_rational(p)) / 2))
    theta = (phi + 2 * np.pi * np.arange(n)) / n
    alphas = -2 * np.cos(theta)
    return np.where(np.abs(alphas.imag) < 1e-14, alphas.real, alphas).astype(np.complex128)


@dataclass(frozen=True)
class PartialFractionTerm:
    """(lin_coeff y + const_coeff) / (y^2 + alpha y + 1)"""
    alpha: complex
    lin_coeff: complex
    const_coeff: complex

    def __call__(self, y):
        return (self.lin_coeff * y + self.const_coeff) / (y * y + self.alpha * y + 1)


def partial_fractions(n: int, p):
    """
    1 / (y^2n + p y^n + 1) as a sum of PartialFractionTerms. The numerators
    follow from the residues 1 / P'(r) at the two roots r, 1/r of each
    factor.

    >>> partial_fractions(1, 3)
    [PartialFractionTerm(alpha=(3+0j), lin_coeff=0j, const_coeff=(1+0j))]
    >>> [(round(t.alpha.real, 6), round(t.lin_coeff.real, 6), round(t.const_coeff.real, 6))
    ...  for t in partial_fractions(2, 0)]
    [(-1.414214, -0.353553, 0.5), (1.414214, 0.353553, 0.5)]
    """
    assert n >= 1, n
    p = as_rational(p)
    if n == 1:
        return [PartialFractionTerm(alpha=complex(float(p)), lin_coeff=0j, const_coeff=1 + 0j)]

    alphas = arc_division_alphas(n, p)
    distance = np.abs(alphas[:, None] - alphas[None, :])
    np.fill_diagonal(distance, np.inf)
    if np.min(distance) < REPEATED_FACTOR_TOL:
        raise RepeatedFactor(
            'Repeated quadratic factors have no simple partial fractions', n, p
        )

    def derivative(y):
        return 2 * n * y ** (2 * n - 1) + n * float(p) * y ** (n - 1)

    terms = []
    for alpha in alphas:
        r, _ = QuadraticFactor(alpha=alpha).roots()
        s = 1 / r
        inv_r, inv_s = 1 / derivative(r), 1 / derivative(s)
        terms.append(PartialFractionTerm(
            alpha=complex(alpha),
            lin_coeff=complex(inv_r + inv_s),
            const_coeff=complex(-s * inv_r - r * inv_s),
        ))
    return terms


@dataclass(frozen=True)
class AntiderivativeTerm:
    """
    log_coeff * log(y^2 + alpha y + 1) + amplitude * f(argument_scale * y + argument_shift)
    with f = arctan or artanh (`inverse_kind`).
    """
    alpha: complex
    log_coeff: complex
    inverse_kind: str
    amplitude: complex
    argument_scale: complex
    argument_shift: complex

    def __call__(self, y):
        y = np.asarray(y, dtype=np.complex128)
        inverse = {'arctan': np.arctan, 'artanh': np.arctanh}[self.inverse_kind]
        return (
            self.log_coeff * np.log(y * y + self.alpha * y + 1)
            + self.amplitude * inverse(self.argument_scale * y + self.argument_shift)
        )


def antiderivative_terms(terms):
    """
    Antiderivative parameters of each (c y + d) / (y^2 + alpha y + 1):
    log_coeff = c/2 and, with s = sqrt(4 - alpha^2),
    (2d - c alpha)/s * arctan((2y + alpha)/s). For real |alpha| > 2 the
    hyperbolic form -(2d - c alpha)/r * artanh((2y + alpha)/r) with
    r = sqrt(alpha^2 - 4) is used.

    >>> t, = antiderivative_terms([PartialFractionTerm(0, 0, 1)])
    >>> t.inverse_kind, t.amplitude, t.argument_scale, t.argument_shift
    ('arctan', (1+0j), (1+0j), 0j)
    >>> t, = antiderivative_terms([PartialFractionTerm(0, 1, 0)])
    >>> t.log_coeff, t.amplitude
    ((0.5+0j), 0j)
    >>> antiderivative_terms([PartialFractionTerm(2, 0, 1)])
    Traceback (most recent call last):
    ...
    pb_resolvent.exceptions.BoundaryAlpha: ('No inverse function for |alpha| = 2', (2+0j))
    """
    out = []
    for term in terms:
        alpha = complex(term.alpha)
        c, d = complex(term.lin_coeff), complex(term.const_coeff)
        if abs(alpha * alpha - 4) < 1e-12:
            raise BoundaryAlpha('No inverse function for |alpha| = 2', alpha)
        numerator = 2 * d - c * alpha
        if abs(alpha.imag) < 1e-14 and abs(alpha.real) > 2:
            root = complex(np.sqrt(alpha.real ** 2 - 4))
            kind, amplitude = 'artanh', -numerator / root
        else:
            root = complex(np.sqrt(np.complex128(4 - alpha * alpha)))
            kind, amplitude = 'arctan', numerator / root
        out.append(AntiderivativeTerm(
            alpha=alpha,
            log_coeff=c / 2,
            inverse_kind=kind,
            amplitude=amplitude,
            argument_scale=2 / root,
            argument_shift=alpha / root,
        ))
    return out
