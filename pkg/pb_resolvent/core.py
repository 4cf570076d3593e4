"""
Resolvent constructions and closed form solutions for the degrees 1 to 4.

Legend:
    x^3 = a x + b          depressed cubic, source x^3 - a x - b
    x^4 = a x^2 + b x + c  depressed quartic, source x^4 - a x^2 - b x - c
    z                      resolvent variable
    A, B, C                resolvent roots
    mu, nu                 cube roots of unity multiplying cbrt(A) and cbrt(B)

Every root is returned as a RootCertificate: the radical tree, its numeric
value and the residual in the source polynomial. The numeric value is
computed along the tree, but cancellation prone differences are replaced by
the equivalent products (the smaller root of a quadratic from the product of
the roots, the companion cube root as a / (3 cbrt(A))).
"""
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np
from cached_property import cached_property

from pb_resolvent import keys
from pb_resolvent.exceptions import (
    CertificationError,
    DegreeMismatch,
    DegreeTooLow,
    DegreeUnsupported,
)
from pb_resolvent.mapping import Dispatcher, degree_to_method
from pb_resolvent.math.oracle import (
    RESIDUAL_TOL,
    OracleConfig,
    find_roots_numeric,
)
from pb_resolvent.math.polynomial import (
    Polynomial,
    as_rational,
    depress,
    residual,
    scale,
)
from pb_resolvent.math.radical import (
    Const,
    RadicalExpr,
    Root,
    add,
    branch_of,
    eval_radical,
    mul,
    nth_root,
    render,
    roots_of_unity,
)

LOG = logging.getLogger('resolvent')

DEFAULT_TOLERANCE = 1e-9
QUADRATIC_TOLERANCE = 1e-12


@dataclass(frozen=True)
class RootCertificate:
    closed_form: Optional[RadicalExpr]  # None for numeric only roots
    numeric: complex
    residual: float


@dataclass
class ResolventReport:
    source: Polynomial
    resolvent: Optional[Polynomial]  # None for the reciprocal and numeric methods
    resolvent_roots: Tuple[complex, ...]
    roots: Tuple[RootCertificate, ...]
    method: str
    tolerance: float = DEFAULT_TOLERANCE
    diagnostics: dict = field(default_factory=dict)

    def __post_init__(self):
        self.resolvent_roots = tuple(complex(r) for r in self.resolvent_roots)
        self.roots = tuple(self.roots)
        assert len(self.roots) == self.source.degree, (self.source, self.roots)
        if self.resolvent is not None:
            assert self.resolvent.degree == self.source.degree - 1, (
                self.source, self.resolvent
            )

    @cached_property
    def values(self):
        return np.array([r.numeric for r in self.roots], dtype=np.complex128)

    @cached_property
    def max_residual(self):
        return max(r.residual for r in self.roots)


def certify(source: Polynomial, closed_form, value, tol=DEFAULT_TOLERANCE):
    """
    >>> certify(Polynomial([-9, -6, 0, 1]), Const(3), 3)
    RootCertificate(closed_form=Const(value=Fraction(3, 1)), numeric=(3+0j), residual=0.0)
    >>> certify(Polynomial([-9, -6, 0, 1]), Const(2), 2)
    Traceback (most recent call last):
    ...
    pb_resolvent.exceptions.CertificationError: Residual 13.0 of 2 in x^3 - 6x - 9 exceeds 1e-09 * 29.0
    """
    value = complex(value)
    assert np.isfinite(value.real) and np.isfinite(value.imag), (
        source, closed_form, value
    )
    res = residual(source, value)
    bound = scale(source, value)
    if res > tol * bound:
        shown = render(closed_form) if closed_form is not None else repr(value)
        raise CertificationError(
            f'Residual {res!r} of {shown} in {source} exceeds {tol!r} * {bound!r}'
        )
    return RootCertificate(closed_form=closed_form, numeric=value, residual=res)


def matching_root(n, radicand: RadicalExpr, value):
    # Root node of `radicand` whose branch matches the numeric value.
    return Root(n, radicand, branch_of(value, eval_radical(radicand), n))


def resolvent_pair(center, disc, product):
    """
    The roots center +- sqrt(disc) of a quadratic with root product
    `product`, larger magnitude first, as (expr, value) pairs. The smaller
    root is product / larger.

    >>> (e1, v1), (e2, v2) = resolvent_pair(Fraction(9, 2), Fraction(49, 4), 8)
    >>> print(e1, v1)
    9/2 + root(2, 49/4, 0) (8+0j)
    >>> print(e2, v2)
    9/2 + -1 * root(2, 49/4, 0) (1+0j)
    """
    center = as_rational(center)
    disc = as_rational(disc)
    sqrt_disc = nth_root(disc, 2)
    c = complex(float(center))
    sign = 1 if (c * sqrt_disc.conjugate()).real >= 0 else -1
    big = c + sign * sqrt_disc
    if big == 0:
        small = 0j
    else:
        small = complex(float(as_rational(product))) / big
    if disc == 0:
        return (Const(center), big), (Const(center), small)
    root_disc = Root(2, Const(disc))
    return (
        (add(center, mul(sign, root_disc)), big),
        (add(center, mul(-sign, root_disc)), small),
    )


def quadratic_resolvent(a):
    """The resolvent z = a of x^2 = a.

    >>> print(quadratic_resolvent(4).to_text('z'))
    z - 4
    """
    return Polynomial([-as_rational(a), 1])


def resolvent_of_cubic(a, b):
    """
    z^2 - b z + a^3 / 27 for x^3 = a x + b.

    >>> print(resolvent_of_cubic(6, 9).to_text('z'))
    z^2 - 9z + 8
    >>> print(resolvent_of_cubic(3, 0).to_text('z'))
    z^2 + 1
    """
    a, b = as_rational(a), as_rational(b)
    return Polynomial([a ** 3 / 27, -b, 1])


def resolvent_of_quartic(a, b, c):
    """
    z^3 - (a/2) z^2 + ((4c + a^2)/16) z - b^2/64 for x^4 = a x^2 + b x + c.

    >>> print(resolvent_of_quartic(28, 48, 0).to_text('z'))
    z^3 - 14z^2 + 49z - 36
    >>> print(resolvent_of_quartic(2, 8, 1).to_text('z'))
    z^3 - z^2 + 1/2z - 1
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    return Polynomial([-b ** 2 / 64, (4 * c + a ** 2) / 16, -a / 2, 1])


def squared_resolvent(a, b, c):
    """
    The t-equation, whose roots are the squares of the quartic resolvent
    roots:

        t^3 - (a^2/8 - c/2) t^2
            + (c^2/16 + a^2 c/32 + a^4/256 - a b^2/64) t - b^4/4096

    >>> print(squared_resolvent(28, 48, 0).to_text('t'))
    t^3 - 98t^2 + 1393t - 1296
    >>> print(squared_resolvent(0, 0, 0).to_text('t'))
    t^3
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    return Polynomial([
        -b ** 4 / 4096,
        c ** 2 / 16 + a ** 2 * c / 32 + a ** 4 / 256 - a * b ** 2 / 64,
        -(a ** 2 / 8 - c / 2),
        1,
    ])


def solve_linear(p: Polynomial, tol=QUADRATIC_TOLERANCE):
    """
    >>> report = solve_linear(Polynomial([-7, 1]))
    >>> [print(r.closed_form) for r in report.roots]
    7
    [None]
    """
    if p.degree != 1:
        raise DegreeMismatch('solve_linear needs a degree 1 polynomial', p)
    root = -p.coeff(0) / p.coeff(1)
    cert = certify(p, Const(root), float(root), tol)
    return ResolventReport(
        source=p,
        resolvent=Polynomial([1]),
        resolvent_roots=(),
        roots=(cert,),
        method=keys.METHOD_QUADRATIC,
        tolerance=tol,
    )


def solve_quadratic(p: Polynomial, tol=QUADRATIC_TOLERANCE):
    """
    Depressed x^2 = a has the resolvent z = a and the roots +-sqrt(a).
    General quadratics are depressed first and shifted back.

    >>> report = solve_quadratic(Polynomial([-3, 2, 1]))
    >>> print(report.resolvent.to_text('z'))
    z - 4
    >>> [(str(r.closed_form), round(r.numeric.real, 12)) for r in report.roots]
    [('root(2, 4, 1) + -1', -3.0), ('root(2, 4, 0) + -1', 1.0)]
    >>> np.allclose(solve_quadratic(Polynomial([1, 0, 1])).values, [1j, -1j])
    True
    """
    if p.is_zero or p.degree != 2:
        raise DegreeMismatch('solve_quadratic needs a degree 2 polynomial', p)
    q, shift = depress(p)
    a = -q.coeff(0)

    c0, c1, c2 = p.coeffs
    # Larger magnitude root from the formula, the other from the product.
    (_, big), _ = resolvent_pair(-c1 / (2 * c2), a, 0)
    if big == 0:
        values = [0j, 0j]
    else:
        values = [big, complex(float(c0 / c2)) / big]

    first = matching_root(2, Const(a), values[0] - float(shift))
    second = Root(2, Const(a), 1 - first.branch)
    roots = [
        certify(p, add(expr, shift), value, tol)
        for expr, value in zip([first, second], values)
    ]
    LOG.debug(f'Quadratic {p}: +-sqrt({a}) shifted by {shift}')
    return ResolventReport(
        source=p,
        resolvent=quadratic_resolvent(a),
        resolvent_roots=(float(a),),
        roots=roots,
        method=keys.METHOD_QUADRATIC,
        tolerance=tol,
        diagnostics={'shift': shift},
    )


def solve_cubic(a, b, tol=DEFAULT_TOLERANCE):
    """
    x^3 = a x + b, solved by x = cbrt(A) + cbrt(B) with A, B the roots of
    z^2 - b z + a^3/27. The companion cube root is a / (3 cbrt(A)), so the
    pairing cbrt(A) cbrt(B) = a / 3 holds for every root. The other roots
    use the cube roots of unity mu, nu with mu nu = 1.

    >>> report = solve_cubic(6, 9)
    >>> print(report.resolvent.to_text('z'))
    z^2 - 9z + 8
    >>> print(report.roots[0].closed_form)
    root(3, 9/2 + root(2, 49/4, 0), 0) + root(3, 9/2 + -1 * root(2, 49/4, 0), 0)
    >>> report.roots[0].numeric
    (3+0j)
    >>> report = solve_cubic(3, 0)
    >>> abs(report.roots[0].numeric - np.sqrt(3)) < 1e-12
    True
    """
    a, b = as_rational(a), as_rational(b)
    source = Polynomial([-b, -a, 0, 1])
    resolvent = resolvent_of_cubic(a, b)
    unity = roots_of_unity(3)

    exprs, values, cube_roots, multipliers = [], [], [], []
    if a == 0:
        # A = b, B = 0: the roots are the three cube roots of b.
        resolvent_roots = (float(b), 0)
        for k in range(3):
            value = nth_root(b, 3, k)
            exprs.append(Root(3, Const(b), k) if b != 0 else Const(0))
            values.append(value)
            cube_roots.append((value, 0j))
            multipliers.append((render(unity[k][0]), render(unity[-k % 3][0])))
        LOG.debug(f'Cubic x^3 = {b}: pure cube roots.')
    else:
        (A_expr, A), (B_expr, B) = resolvent_pair(
            b / 2, b ** 2 / 4 - a ** 3 / 27, a ** 3 / 27
        )
        resolvent_roots = (A, B)
        cbrt_A = nth_root(A, 3)
        companion = float(a) / (3 * cbrt_A)
        cbrt_A_expr = matching_root(3, A_expr, cbrt_A)
        cbrt_B_expr = matching_root(3, B_expr, companion)
        for k in range(3):
            mu_expr, mu = unity[k]
            nu_expr, nu = unity[-k % 3]
            u, v = mu * cbrt_A, nu * companion
            exprs.append(add(mul(mu_expr, cbrt_A_expr), mul(nu_expr, cbrt_B_expr)))
            values.append(u + v)
            cube_roots.append((u, v))
            multipliers.append((render(mu_expr), render(nu_expr)))

    roots = [certify(source, e, v, tol) for e, v in zip(exprs, values)]
    return ResolventReport(
        source=source,
        resolvent=resolvent,
        resolvent_roots=resolvent_roots,
        roots=roots,
        method=keys.METHOD_CUBIC,
        tolerance=tol,
        diagnostics={
            'cube_roots': cube_roots,
            'unity_multipliers': multipliers,
            'pairing': a / 3,
        },
    )


def _cubic_roots(p: Polynomial, tol=DEFAULT_TOLERANCE):
    # Roots of a monic cubic as (expr, value) pairs, through solve_cubic.
    assert p.degree == 3 and p.is_monic, p
    q, shift = depress(p)
    report = solve_cubic(-q.coeff(1), -q.coeff(0), tol=tol)
    return [
        (add(r.closed_form, shift), r.numeric + float(shift))
        for r in report.roots
    ]


def _biquadratic(a, c):
    # x^4 = a x^2 + c through y = x^2, y^2 - a y - c = 0.
    a, c = as_rational(a), as_rational(c)
    out = []
    for y_expr, y in resolvent_pair(a / 2, a ** 2 / 4 + c, -c):
        sqrt_y = nth_root(y, 2)
        expr = matching_root(2, y_expr, sqrt_y)
        out.append((expr, sqrt_y))
        out.append((Root(2, y_expr, 1 - expr.branch), -sqrt_y))
    return out


_SIGN_PATTERNS = ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))


def _combine(radicals):
    # sqrt(A) + sqrt(B) + sqrt(C) and the three patterns with two minus signs.
    out = []
    for signs in _SIGN_PATTERNS:
        out.append((
            add(*[mul(s, e) for s, (e, _) in zip(signs, radicals)]),
            sum(s * v for s, (_, v) in zip(signs, radicals)),
        ))
    return out


def _largest_first(pairs):
    return sorted(pairs, key=lambda pair: -abs(pair[1]))


def solve_quartic(a, b, c, tol=DEFAULT_TOLERANCE):
    """
    x^4 = a x^2 + b x + c, solved by x = sqrt(A) + sqrt(B) + sqrt(C) with
    A, B, C the roots of the cubic resolvent and sqrt(A) sqrt(B) sqrt(C) = b/8.
    For b = 0 the pairing degenerates and the biquadratic is solved in x^2.

    >>> report = solve_quartic(28, 48, 0)
    >>> np.allclose(np.sort(report.values.real), [-4, -2, 0, 6])
    True
    >>> report = solve_quartic(5, 0, -4)
    >>> np.allclose(np.sort(report.values.real), [-2, -1, 1, 2])
    True
    >>> report.diagnostics['fallback']
    'biquadratic'
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    source = Polynomial([-c, -b, -a, 0, 1])
    resolvent = resolvent_of_quartic(a, b, c)
    z_roots = _cubic_roots(resolvent, tol)

    diagnostics = {'fallback': None}
    if b == 0:
        LOG.debug(f'Quartic {source}: b = 0, biquadratic fallback.')
        diagnostics['fallback'] = 'biquadratic'
        candidates = _biquadratic(a, c)
    else:
        (A_expr, A), (B_expr, B), (C_expr, C) = _largest_first(z_roots)
        sqrt_A, sqrt_B = nth_root(A, 2), nth_root(B, 2)
        assert sqrt_A * sqrt_B != 0, (source, z_roots)
        sqrt_C = float(b) / (8 * sqrt_A * sqrt_B)
        radicals = [
            (matching_root(2, A_expr, sqrt_A), sqrt_A),
            (matching_root(2, B_expr, sqrt_B), sqrt_B),
            (matching_root(2, C_expr, sqrt_C), sqrt_C),
        ]
        diagnostics['square_roots'] = [v for _, v in radicals]
        candidates = _combine(radicals)

    roots = [certify(source, e, v, tol) for e, v in candidates]
    return ResolventReport(
        source=source,
        resolvent=resolvent,
        resolvent_roots=[v for _, v in z_roots],
        roots=roots,
        method=keys.METHOD_QUARTIC,
        tolerance=tol,
        diagnostics=diagnostics,
    )


def _vieta_error(values, targets):
    e1 = sum(values)
    e2 = sum(u * v for u, v in itertools.combinations(values, 2))
    e3 = values[0] * values[1] * values[2]
    return sum(
        abs(e - complex(float(t))) / (1 + abs(float(t)))
        for e, t in zip((e1, e2, e3), targets)
    )


def solve_quartic_squared(a, b, c, tol=DEFAULT_TOLERANCE):
    """
    The quartic through the t-equation: x = 4rt(E) + 4rt(F) + 4rt(G) with
    E, F, G the roots of `squared_resolvent`. The signs of sqrt(E) ... are
    those whose elementary symmetric functions reproduce the cubic resolvent,
    the fourth root branches are the ones squaring to these values and the
    third one follows from 4rt(E) 4rt(F) 4rt(G) = b/8.

    >>> report = solve_quartic_squared(28, 48, 0)
    >>> np.allclose(np.sort(report.values.real), [-4, -2, 0, 6])
    True
    >>> sorted(round(r.real, 9) for r in report.resolvent_roots)
    [1.0, 16.0, 81.0]
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    source = Polynomial([-c, -b, -a, 0, 1])
    resolvent = squared_resolvent(a, b, c)
    t_roots = _cubic_roots(resolvent, tol)

    diagnostics = {'fallback': None}
    if b == 0:
        LOG.debug(f'Quartic {source}: b = 0, biquadratic fallback.')
        diagnostics['fallback'] = 'biquadratic'
        candidates = _biquadratic(a, c)
    else:
        targets = (a / 2, (4 * c + a ** 2) / 16, b ** 2 / 64)
        square_roots = [nth_root(v, 2) for _, v in t_roots]
        signs = min(
            itertools.product((1, -1), repeat=3),
            key=lambda s: _vieta_error(
                [si * qi for si, qi in zip(s, square_roots)], targets
            ),
        )
        z_values = [s * q for s, q in zip(signs, square_roots)]
        (E_expr, A), (F_expr, B), (G_expr, C) = _largest_first([
            (e, z) for (e, _), z in zip(t_roots, z_values)
        ])
        w_A, w_B = nth_root(A, 2), nth_root(B, 2)
        assert w_A * w_B != 0, (source, t_roots)
        w_C = float(b) / (8 * w_A * w_B)
        radicals = [
            (matching_root(4, E_expr, w_A), w_A),
            (matching_root(4, F_expr, w_B), w_B),
            (matching_root(4, G_expr, w_C), w_C),
        ]
        diagnostics['fourth_roots'] = [v for _, v in radicals]
        diagnostics['resolvent_signs'] = list(signs)
        candidates = _combine(radicals)

    roots = [certify(source, e, v, tol) for e, v in candidates]
    return ResolventReport(
        source=source,
        resolvent=resolvent,
        resolvent_roots=[v for _, v in t_roots],
        roots=roots,
        method=keys.METHOD_QUARTIC_SQUARED,
        tolerance=tol,
        diagnostics=diagnostics,
    )


# Solvers of the depressed equations, fed with the written form coefficients.
_depressed_solvers = Dispatcher({
    keys.METHOD_CUBIC: (3, solve_cubic),
    keys.METHOD_QUARTIC: (4, solve_quartic),
    keys.METHOD_QUARTIC_SQUARED: (4, solve_quartic_squared),
})


def solve_closed_form(p: Polynomial, method=None, tol=DEFAULT_TOLERANCE):
    """
    Certified roots of p with 1 <= deg(p) <= 4. Degree 3 and 4 are depressed,
    solved by the resolvent of their degree and shifted back.

    >>> report = solve_closed_form(Polynomial([-4, 0, 3, 1]))
    >>> report.method
    'cubic-resolvent'
    >>> sorted(round(r.numeric.real, 9) for r in report.roots)
    [-2.0, -2.0, 1.0]
    >>> solve_closed_form(Polynomial([1, 0, 0, 0, 0, 1]))
    Traceback (most recent call last):
    ...
    pb_resolvent.exceptions.DegreeUnsupported: ('Closed forms exist up to degree 4. Try the moivre or reciprocal detection or the numeric oracle.', Polynomial([1, 0, 0, 0, 0, 1]))
    """
    if p.is_zero or p.degree < 1:
        raise DegreeTooLow('A root needs a degree >= 1', p)
    if p.degree > 4:
        raise DegreeUnsupported(
            'Closed forms exist up to degree 4. Try the moivre or reciprocal '
            'detection or the numeric oracle.', p
        )
    if method == keys.METHOD_QUADRATIC:
        if p.degree > 2:
            raise DegreeMismatch(f'{method} solves the degrees 1 and 2', p)
    elif method is not None:
        degree, _ = _depressed_solvers[method]
        if degree != p.degree:
            raise DegreeMismatch(f'{method} solves degree {degree}', p)

    if p.degree == 1:
        return solve_linear(p, tol=min(tol, QUADRATIC_TOLERANCE))
    if p.degree == 2:
        return solve_quadratic(p, tol=min(tol, QUADRATIC_TOLERANCE))

    if method is None:
        method = degree_to_method[p.degree]
    _, solver = _depressed_solvers[method]

    q, shift = depress(p)
    # x^n = a x^(n-2) + b x^(n-3) + ...
    written = [-q.coeff(k) for k in range(p.degree - 2, -1, -1)]
    LOG.debug(f'{p}: {method} on {q} shifted by {shift}')
    depressed = solver(*written, tol=tol)

    roots = [
        certify(p, add(r.closed_form, shift), r.numeric + float(shift), tol)
        for r in depressed.roots
    ]
    diagnostics = dict(depressed.diagnostics, shift=shift)
    return ResolventReport(
        source=p,
        resolvent=depressed.resolvent,
        resolvent_roots=depressed.resolvent_roots,
        roots=roots,
        method=depressed.method,
        tolerance=tol,
        diagnostics=diagnostics,
    )


def solve_numeric(p: Polynomial, cfg: OracleConfig = OracleConfig(), tol=DEFAULT_TOLERANCE):
    """
    Roots of p from the oracle, without closed forms. The certification
    tolerance is at least the residual bound of the oracle.

    >>> report = solve_numeric(Polynomial([-1, 0, 0, 0, 0, 0, 1]))
    >>> report.method, report.resolvent, report.roots[0].closed_form
    ('numeric', None, None)
    >>> bool(np.allclose(np.abs(report.values), 1))
    True
    """
    tol = max(tol, RESIDUAL_TOL)
    values = find_roots_numeric(p, cfg)
    LOG.debug(f'{p}: no closed form, {len(values)} roots from the oracle.')
    return ResolventReport(
        source=p,
        resolvent=None,
        resolvent_roots=(),
        roots=[certify(p, None, v, tol) for v in values],
        method=keys.METHOD_NUMERIC,
        tolerance=tol,
    )
