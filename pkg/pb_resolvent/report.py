"""
Documents of the command line subcommands and their verification.

Every subcommand produces one self contained dict with the field names of
`pb_resolvent.keys`. `verify` re-certifies a document of any kind from its
own content, i.e. a document written with `--json` and read back in must
verify with the same result.

`solve` picks the method for a polynomial of any degree: the resolvent
constructions up to degree 4, then de Moivre's form, then reciprocal
polynomials and finally the numeric oracle.
"""
import dataclasses
import logging
from dataclasses import dataclass, field

import numpy as np

from pb_resolvent import keys
from pb_resolvent.core import (
    DEFAULT_TOLERANCE,
    certify,
    quadratic_resolvent,
    resolvent_of_cubic,
    resolvent_of_quartic,
    solve_closed_form,
    solve_numeric,
    squared_resolvent,
)
from pb_resolvent.exceptions import (
    CertificationError,
    DegreeMismatch,
    DegreeTooLow,
    DegreeUnsupported,
    NotMoivreForm,
    ParseError,
)
from pb_resolvent.io.json_module import (
    complex_from_json,
    complex_to_json,
    polynomial_from_json,
    polynomial_to_json,
)
from pb_resolvent.mapping import Dispatcher, degree_to_resolvent_kind
from pb_resolvent.math.oracle import RESIDUAL_TOL, OracleConfig
from pb_resolvent.math.polynomial import (
    Polynomial,
    as_rational,
    depress,
    is_palindromic,
    poly_divmod,
    rational_to_str,
    residual,
    scale,
)
from pb_resolvent.math.radical import render
from pb_resolvent.moivre import (
    MoivreForm,
    build_moivre_poly,
    detect_moivre,
    quintic_roots,
    solve_moivre,
)
from pb_resolvent.reciprocal import (
    Y_PLUS_ONE,
    antiderivative_terms,
    factor_reciprocal,
    partial_fractions,
    solve_reciprocal,
    trinomial,
    u_equation,
)
from pb_resolvent.sumcheck import get_explorer

LOG = logging.getLogger('report')

VERSION = 1

# Sample points of the decompose verification.
DECOMPOSE_SAMPLES = 20


###############################################################################
# solve
###############################################################################


def _monic(p: Polynomial):
    return p.scale_by(1 / p.lead)


def _recertify(report, p, tol):
    # The roots of report, certified in p, a multiple of report.source.
    if report.source == p:
        return report
    roots = [certify(p, r.closed_form, r.numeric, tol) for r in report.roots]
    return dataclasses.replace(report, source=p, roots=roots)


def _solve_moivre(p, tol, max_n, oracle):
    form = None if p.degree < 2 else detect_moivre(_monic(p))
    if form is None:
        raise NotMoivreForm('Not an equation of de Moivre form', p)
    return _recertify(solve_moivre(form, tol=tol), p, tol)


def _solve_reciprocal(p, tol, max_n, oracle):
    return solve_reciprocal(p, max_n=max_n, tol=tol, oracle=oracle)


def _solve_numeric(p, tol, max_n, oracle):
    return solve_numeric(p, oracle, tol=tol)


def _closed_form_solver(method):
    def solver(p, tol, max_n, oracle):
        return solve_closed_form(p, method=method, tol=tol)
    return solver


method_to_solver = Dispatcher({
    keys.METHOD_QUADRATIC: _closed_form_solver(keys.METHOD_QUADRATIC),
    keys.METHOD_CUBIC: _closed_form_solver(keys.METHOD_CUBIC),
    keys.METHOD_QUARTIC: _closed_form_solver(keys.METHOD_QUARTIC),
    keys.METHOD_QUARTIC_SQUARED: _closed_form_solver(keys.METHOD_QUARTIC_SQUARED),
    keys.METHOD_MOIVRE: _solve_moivre,
    keys.METHOD_RECIPROCAL: _solve_reciprocal,
    keys.METHOD_NUMERIC: _solve_numeric,
})


def solve(
        p: Polynomial,
        method=None,
        tol=DEFAULT_TOLERANCE,
        max_n=16,
        oracle: OracleConfig = OracleConfig(),
):
    """
    >>> solve(Polynomial([-9, -6, 0, 1])).method
    'cubic-resolvent'
    >>> solve(Polynomial([-2, 5, 0, -5, 0, 1])).method
    'moivre'
    >>> solve(Polynomial([1, 1, 1, 1, 1, 1, 1])).method
    'reciprocal'
    >>> solve(Polynomial([1, 1, 0, 0, 0, 1])).method
    'numeric'
    """
    if p.is_zero or p.degree < 1:
        raise DegreeTooLow('A root needs a degree >= 1', p)
    if method is not None:
        return method_to_solver[method](p, tol, max_n, oracle)
    if p.degree <= 4:
        return solve_closed_form(p, tol=tol)

    form = detect_moivre(_monic(p))
    if form is not None:
        LOG.debug(f'{p} has de Moivre form {form}')
        return _recertify(solve_moivre(form, tol=tol), p, tol)
    if is_palindromic(p):
        try:
            return solve_reciprocal(p, max_n=max_n, tol=tol, oracle=oracle)
        except DegreeUnsupported as e:
            LOG.warning(f'{e.args[0]}. Using the numeric oracle instead.')
    LOG.debug(f'{p}: no closed form method applies.')
    return solve_numeric(p, oracle, tol=tol)


###############################################################################
# documents
###############################################################################


def root_to_json(cert):
    z = complex(cert.numeric)
    return {
        keys.CLOSED_FORM: None if cert.closed_form is None else render(cert.closed_form),
        keys.RE: z.real,
        keys.IM: z.imag,
        keys.RESIDUAL: float(cert.residual),
    }


def report_to_json(report, variable='x', kind=keys.KIND_SOLVE):
    resolvent = report.resolvent
    return {
        keys.KIND: kind,
        keys.VERSION: VERSION,
        keys.METHOD: report.method,
        keys.SOURCE: polynomial_to_json(report.source, variable),
        keys.RESOLVENT: None if resolvent is None else polynomial_to_json(resolvent, 'z'),
        keys.RESOLVENT_ROOTS: [complex_to_json(z) for z in report.resolvent_roots],
        keys.ROOTS: [root_to_json(r) for r in report.roots],
        keys.TOLERANCE: report.tolerance,
        keys.DIAGNOSTICS: dict(report.diagnostics),
    }


def solve_document(
        p: Polynomial,
        variable='x',
        method=None,
        tol=DEFAULT_TOLERANCE,
        max_n=16,
        oracle: OracleConfig = OracleConfig(),
):
    report = solve(p, method=method, tol=tol, max_n=max_n, oracle=oracle)
    return report_to_json(report, variable)


resolvent_builders = Dispatcher({
    'quadratic': (2, quadratic_resolvent),
    'cubic': (3, resolvent_of_cubic),
    'quartic': (4, resolvent_of_quartic),
    'squared': (4, squared_resolvent),
})


def resolvent_of(p: Polynomial, kind=None):
    """
    Resolvent of the depressed form of p, the depressed polynomial and the
    shift.

    >>> kind, resolvent, q, shift = resolvent_of(Polynomial([-9, -6, 0, 1]))
    >>> kind, resolvent.to_text('z'), shift
    ('cubic', 'z^2 - 9z + 8', Fraction(0, 1))
    >>> resolvent_of(Polynomial([-9, -6, 0, 1]), 'squared')
    Traceback (most recent call last):
    ...
    pb_resolvent.exceptions.DegreeMismatch: ('The squared resolvent needs degree 4', Polynomial([-9, -6, 0, 1]))
    """
    if p.is_zero or p.degree < 2:
        raise DegreeTooLow('A resolvent needs a degree >= 2', p)
    if kind is None:
        if p.degree > 4:
            raise DegreeUnsupported('Resolvents exist up to degree 4', p)
        kind = degree_to_resolvent_kind[p.degree]
    degree, builder = resolvent_builders[kind]
    if degree != p.degree:
        raise DegreeMismatch(f'The {kind} resolvent needs degree {degree}', p)
    q, shift = depress(p)
    written = [-q.coeff(k) for k in range(p.degree - 2, -1, -1)]
    return kind, builder(*written), q, shift


def resolvent_document(p: Polynomial, variable='x', kind=None):
    kind, resolvent, q, shift = resolvent_of(p, kind)
    return {
        keys.KIND: keys.KIND_RESOLVENT,
        keys.VERSION: VERSION,
        keys.RESOLVENT_KIND: kind,
        keys.SOURCE: polynomial_to_json(p, variable),
        keys.DEPRESSED: polynomial_to_json(q, variable),
        keys.SHIFT: rational_to_str(shift),
        keys.RESOLVENT: polynomial_to_json(resolvent, 't' if kind == 'squared' else 'z'),
    }


def reciprocal_document(
        p: Polynomial,
        variable='y',
        max_n=16,
        tol=DEFAULT_TOLERANCE,
        oracle: OracleConfig = OracleConfig(),
):
    result = factor_reciprocal(p, max_n=max_n, tol=tol, oracle=oracle)
    factors = []
    for f in result:
        factors.append({
            keys.ALPHA: complex_to_json(f.alpha),
            keys.EXACT_ALPHA: None if f.exact_alpha is None else rational_to_str(f.exact_alpha),
            keys.CLOSED_FORM: None if f.closed_form is None else render(f.closed_form),
            keys.ROOTS: [complex_to_json(y) for y in f.roots()],
        })
    return {
        keys.KIND: keys.KIND_RECIPROCAL,
        keys.VERSION: VERSION,
        keys.SOURCE: polynomial_to_json(p, variable),
        keys.U_EQUATION: polynomial_to_json(result.u_equation.poly, 'u'),
        keys.UNIT_FACTORS: result.unit_factors,
        keys.FACTORS: factors,
        keys.TOLERANCE: tol if result.closed_form else max(tol, RESIDUAL_TOL),
    }


def moivre_document(form: MoivreForm, variable='x', tol=DEFAULT_TOLERANCE):
    report = solve_moivre(form, tol=tol)
    document = report_to_json(report, variable, kind=keys.KIND_MOIVRE)
    document[keys.MOIVRE_FORM] = {
        keys.N: form.n,
        keys.ALPHA: rational_to_str(form.alpha),
        keys.T_VALUE: rational_to_str(form.t),
    }
    if form.n == 5:
        document[keys.QUINTIC_ROOTS] = [
            root_to_json(r) for r in quintic_roots(form, tol=tol)
        ]
    return document


def decompose_document(n, p, tol=DEFAULT_TOLERANCE):
    terms = partial_fractions(n, p)
    antiderivatives = antiderivative_terms(terms)
    return {
        keys.KIND: keys.KIND_DECOMPOSE,
        keys.VERSION: VERSION,
        keys.N: n,
        keys.P: rational_to_str(as_rational(p)),
        keys.SOURCE: polynomial_to_json(trinomial(n, p), 'y'),
        keys.TERMS: [
            {
                keys.ALPHA: complex_to_json(term.alpha),
                keys.LIN_COEFF: complex_to_json(term.lin_coeff),
                keys.CONST_COEFF: complex_to_json(term.const_coeff),
                keys.ANTIDERIVATIVE: {
                    keys.LOG_COEFF: complex_to_json(a.log_coeff),
                    keys.INVERSE_KIND: a.inverse_kind,
                    keys.AMPLITUDE: complex_to_json(a.amplitude),
                    keys.ARGUMENT_SCALE: complex_to_json(a.argument_scale),
                    keys.ARGUMENT_SHIFT: complex_to_json(a.argument_shift),
                },
            }
            for term, a in zip(terms, antiderivatives)
        ],
        keys.TOLERANCE: tol,
    }


def explore_document(
        A=0, B=0, C=0, D=0,
        n=5,
        full_enumeration=False,
        max_n=16,
):
    explorer = get_explorer(n=n, full_enumeration=full_enumeration, max_n=max_n)
    return exploration_to_json(explorer(A, B, C, D), full_enumeration)


def exploration_to_json(report, full_enumeration=False):
    return {
        keys.KIND: keys.KIND_EXPLORE,
        keys.VERSION: VERSION,
        keys.N: report.n,
        keys.FULL_ENUMERATION: full_enumeration,
        keys.RADICANDS: [complex_to_json(z) for z in report.radicands],
        keys.RADICALS: [complex_to_json(z) for z in report.radicals],
        keys.CANDIDATES: [
            {
                keys.MULTIPLIERS: list(c.multipliers),
                keys.VALUES: [complex_to_json(z) for z in c.values],
                keys.COEFFS: [complex_to_json(z) for z in c.coeffs],
                keys.MAX_IMAG: c.max_imag,
                keys.SUBLEADING_DEVIATION: c.subleading_deviation,
            }
            for c in report.candidates
        ],
        keys.BEST: report.candidates.index(report.best),
        keys.TOLERANCE: DEFAULT_TOLERANCE,
    }


###############################################################################
# verify
###############################################################################


@dataclass
class Verification:
    kind: str
    checks: list = field(default_factory=list)  # (name, deviation, bound)

    def add(self, name, deviation, bound):
        self.checks.append((name, float(deviation), float(bound)))

    @property
    def failures(self):
        # `not <=` also catches nan
        return [c for c in self.checks if not c[1] <= c[2]]

    @property
    def passed(self):
        return len(self.failures) == 0

    def raise_for_failures(self):
        if not self.passed:
            lines = '\n'.join(
                f'    {name}: {deviation!r} > {bound!r}'
                for name, deviation, bound in self.failures
            )
            raise CertificationError(
                f'{len(self.failures)} of {len(self.checks)} checks of the '
                f'{self.kind} document failed:\n{lines}'
            )

    def to_json(self):
        return {
            keys.KIND: keys.KIND_VERIFY,
            keys.VERSION: VERSION,
            keys.CHECKED_KIND: self.kind,
            keys.PASSED: self.passed,
            keys.CHECKS: [
                {keys.NAME: name, keys.DEVIATION: deviation, keys.BOUND: bound}
                for name, deviation, bound in self.checks
            ],
        }


def _check_roots(verification, p, roots, tol, prefix='root'):
    verification.add(f'{prefix} count', abs(len(roots) - p.degree), 0)
    for i, root in enumerate(roots):
        z = complex_from_json(root)
        verification.add(f'{prefix} {i}', residual(p, z), tol * scale(p, z))


def _verify_solve(document, verification, tol):
    p = polynomial_from_json(document[keys.SOURCE])
    _check_roots(verification, p, document[keys.ROOTS], tol)


def _verify_moivre(document, verification, tol):
    _verify_solve(document, verification, tol)
    p = polynomial_from_json(document[keys.SOURCE])
    form = document[keys.MOIVRE_FORM]
    form = MoivreForm(form[keys.N], form[keys.ALPHA], form[keys.T_VALUE])
    verification.add('moivre form', 0 if build_moivre_poly(form) == p else np.inf, 0)
    if keys.QUINTIC_ROOTS in document:
        _check_roots(verification, p, document[keys.QUINTIC_ROOTS], tol, 'quintic root')


def _verify_resolvent(document, verification, tol):
    p = polynomial_from_json(document[keys.SOURCE])
    _, resolvent, _, _ = resolvent_of(p, document[keys.RESOLVENT_KIND])
    expected = polynomial_from_json(document[keys.RESOLVENT])
    verification.add('resolvent', 0 if resolvent == expected else np.inf, 0)


def _verify_reciprocal(document, verification, tol):
    p = polynomial_from_json(document[keys.SOURCE])
    q = _monic(p)
    for _ in range(document[keys.UNIT_FACTORS]):
        q, remainder = poly_divmod(q, Y_PLUS_ONE)
        verification.add('unit factor', 0 if remainder.is_zero else np.inf, 0)
    ueq = polynomial_from_json(document[keys.U_EQUATION])
    verification.add('u-equation', 0 if u_equation(q).poly == ueq else np.inf, 0)

    product = np.array([1], dtype=np.complex128)
    for factor in document[keys.FACTORS]:
        alpha = complex_from_json(factor[keys.ALPHA])
        product = np.polynomial.polynomial.polymul(product, [1, alpha, 1])
        y1, y2 = [complex_from_json(y) for y in factor[keys.ROOTS]]
        verification.add(f'root pair of alpha = {alpha}', abs(y1 * y2 - 1), tol)
        for y in (y1, y2):
            verification.add(
                f'root of alpha = {alpha}', abs(y * y + alpha * y + 1),
                tol * (2 + abs(alpha)) * max(1, abs(y)) ** 2,
            )
    expected = q.float_coeffs
    deviation = np.max(np.abs(product - expected)) if len(product) == len(expected) else np.inf
    verification.add('recombination', deviation, tol * max(1., np.max(np.abs(expected))))


def _verify_decompose(document, verification, tol):
    n, p = document[keys.N], as_rational(document[keys.P])
    source = trinomial(n, p)
    verification.add(
        'source', 0 if polynomial_from_json(document[keys.SOURCE]) == source else np.inf, 0
    )
    rng = np.random.RandomState(0)
    y = rng.uniform(-2, 2, DECOMPOSE_SAMPLES) + 1j * rng.uniform(-2, 2, DECOMPOSE_SAMPLES)
    total = np.zeros_like(y)
    for term in document[keys.TERMS]:
        alpha = complex_from_json(term[keys.ALPHA])
        c = complex_from_json(term[keys.LIN_COEFF])
        d = complex_from_json(term[keys.CONST_COEFF])
        total = total + (c * y + d) / (y * y + alpha * y + 1)
    expected = 1 / source(y)
    deviation = np.max(np.abs(total - expected) / np.abs(expected))
    verification.add('partial fractions', deviation, tol)


def _verify_explore(document, verification, tol):
    n = document[keys.N]
    radicals = np.array([complex_from_json(z) for z in document[keys.RADICALS]])
    size = max(1., float(np.sum(np.abs(radicals))))
    s = np.arange(n)
    for i, candidate in enumerate(document[keys.CANDIDATES]):
        multipliers = np.array(candidate[keys.MULTIPLIERS])
        values = np.array([complex_from_json(z) for z in candidate[keys.VALUES]])
        coeffs = np.array([complex_from_json(z) for z in candidate[keys.COEFFS]])
        unity = np.exp(2j * np.pi * ((s[:, None] * multipliers[None, :]) % n) / n)
        expected = unity @ radicals
        verification.add(
            f'candidate {i} values',
            np.max(np.abs(values - expected)) if len(values) == n else np.inf,
            tol * size,
        )
        recomputed = np.poly(values)[::-1]
        verification.add(
            f'candidate {i} coeffs',
            np.max(np.abs(coeffs - recomputed)) if len(coeffs) == n + 1 else np.inf,
            tol * max(1., float(np.max(np.abs(recomputed)))),
        )
        verification.add(
            f'candidate {i} max_imag',
            abs(candidate[keys.MAX_IMAG] - np.max(np.abs(coeffs.imag))),
            tol,
        )


verifiers = Dispatcher({
    keys.KIND_SOLVE: _verify_solve,
    keys.KIND_MOIVRE: _verify_moivre,
    keys.KIND_RESOLVENT: _verify_resolvent,
    keys.KIND_RECIPROCAL: _verify_reciprocal,
    keys.KIND_DECOMPOSE: _verify_decompose,
    keys.KIND_EXPLORE: _verify_explore,
})

required_fields = Dispatcher({
    keys.KIND_SOLVE: (keys.SOURCE, keys.ROOTS),
    keys.KIND_MOIVRE: (keys.SOURCE, keys.ROOTS, keys.MOIVRE_FORM),
    keys.KIND_RESOLVENT: (keys.SOURCE, keys.RESOLVENT_KIND, keys.RESOLVENT),
    keys.KIND_RECIPROCAL: (keys.SOURCE, keys.UNIT_FACTORS, keys.U_EQUATION, keys.FACTORS),
    keys.KIND_DECOMPOSE: (keys.N, keys.P, keys.SOURCE, keys.TERMS),
    keys.KIND_EXPLORE: (keys.N, keys.RADICALS, keys.CANDIDATES),
})


def verify(document, tol=None):
    """
    Re-certify a document. The tolerance defaults to the one stored in the
    document.

    >>> verify(solve_document(Polynomial([-9, -6, 0, 1]))).passed
    True
    >>> document = solve_document(Polynomial([-9, -6, 0, 1]))
    >>> document['roots'][0]['re'] += 1e-3
    >>> verify(document).failures  # doctest: +ELLIPSIS
    [('root 0', ...)]
    >>> verify({'kind': 'solve', 'tolerance': 1e-9})
    Traceback (most recent call last):
    ...
    pb_resolvent.exceptions.ParseError: solve document misses the field 'source'
    """
    kind = document.get(keys.KIND)
    if kind not in verifiers:
        raise ParseError(f'Unknown document kind {kind!r}')
    for key in required_fields[kind]:
        if key not in document:
            raise ParseError(f'{kind} document misses the field {key!r}')
    if tol is None:
        tol = document.get(keys.TOLERANCE, DEFAULT_TOLERANCE)
    verification = Verification(kind=kind)
    try:
        verifiers[kind](document, verification, tol)
    except (KeyError, TypeError) as e:
        raise ParseError(f'Malformed {kind} document: {e!r}') from e
    LOG.debug(f'Verified {len(verification.checks)} checks of a {kind} document.')
    return verification


###############################################################################
# human readable output
###############################################################################


def _complex_text(obj):
    z = complex_from_json(obj) if isinstance(obj, dict) else complex(obj)
    return f'{z.real:.15g}{z.imag:+.15g}j'


def _format_roots(roots):
    lines = [f'  {"re":>22} {"im":>22} {"residual":>10}  closed form']
    for root in roots:
        closed_form = root[keys.CLOSED_FORM] or '-'
        lines.append(
            f'  {root[keys.RE]:>22.15g} {root[keys.IM]:>22.15g} '
            f'{root[keys.RESIDUAL]:>10.2e}  {closed_form}'
        )
    return lines


def _format_solve(document):
    lines = [
        f'method:    {document[keys.METHOD]}',
        f'source:    {document[keys.SOURCE][keys.TEXT]}',
    ]
    if document[keys.RESOLVENT] is not None:
        lines.append(f'resolvent: {document[keys.RESOLVENT][keys.TEXT]}')
    if document[keys.RESOLVENT_ROOTS]:
        roots = ', '.join(_complex_text(z) for z in document[keys.RESOLVENT_ROOTS])
        lines.append(f'resolvent roots: {roots}')
    lines += _format_roots(document[keys.ROOTS])
    if keys.QUINTIC_ROOTS in document:
        lines.append('roots with the surd coefficients of the fifth roots of unity:')
        lines += _format_roots(document[keys.QUINTIC_ROOTS])
    return lines


def _format_resolvent(document):
    return [
        f'source:    {document[keys.SOURCE][keys.TEXT]}',
        f'depressed: {document[keys.DEPRESSED][keys.TEXT]} (shift {document[keys.SHIFT]})',
        f'{document[keys.RESOLVENT_KIND]} resolvent: {document[keys.RESOLVENT][keys.TEXT]}',
    ]


def _format_reciprocal(document):
    lines = [
        f'source:     {document[keys.SOURCE][keys.TEXT]}',
        f'u-equation: {document[keys.U_EQUATION][keys.TEXT]}',
    ]
    lines += ['factor: y + 1'] * document[keys.UNIT_FACTORS]
    for factor in document[keys.FACTORS]:
        alpha = factor[keys.EXACT_ALPHA] or _complex_text(factor[keys.ALPHA])
        lines.append(f'factor: y^2 + ({alpha}) y + 1')
        if factor[keys.CLOSED_FORM] is not None:
            lines.append(f'    alpha = {factor[keys.CLOSED_FORM]}')
    return lines


def _format_decompose(document):
    lines = [f'1 / ({document[keys.SOURCE][keys.TEXT]}) =']
    for term in document[keys.TERMS]:
        a = term[keys.ANTIDERIVATIVE]
        lines.append(
            f'  ({_complex_text(term[keys.LIN_COEFF])} y + '
            f'{_complex_text(term[keys.CONST_COEFF])}) / '
            f'(y^2 + {_complex_text(term[keys.ALPHA])} y + 1)'
        )
        lines.append(
            f'    integral: {_complex_text(a[keys.LOG_COEFF])} log(...) + '
            f'{_complex_text(a[keys.AMPLITUDE])} {a[keys.INVERSE_KIND]}('
            f'{_complex_text(a[keys.ARGUMENT_SCALE])} y + '
            f'{_complex_text(a[keys.ARGUMENT_SHIFT])})'
        )
    return lines


def _format_explore(document):
    lines = [f'n = {document[keys.N]}, {len(document[keys.CANDIDATES])} candidates']
    lines.append(f'  {"multipliers":<16} {"max_imag":>10} {"subleading":>10}')
    for i, candidate in enumerate(document[keys.CANDIDATES]):
        mark = '*' if i == document[keys.BEST] else ' '
        lines.append(
            f'{mark} {str(tuple(candidate[keys.MULTIPLIERS])):<16} '
            f'{candidate[keys.MAX_IMAG]:>10.2e} '
            f'{candidate[keys.SUBLEADING_DEVIATION]:>10.2e}'
        )
    return lines


def _format_verify(document):
    lines = [f'{document[keys.CHECKED_KIND]}: '
             f'{"passed" if document[keys.PASSED] else "FAILED"}']
    for check in document[keys.CHECKS]:
        ok = check[keys.DEVIATION] <= check[keys.BOUND]
        lines.append(
            f'  {"ok  " if ok else "FAIL"} {check[keys.NAME]}: '
            f'{check[keys.DEVIATION]:.2e} <= {check[keys.BOUND]:.2e}'
        )
    return lines


formatters = Dispatcher({
    keys.KIND_SOLVE: _format_solve,
    keys.KIND_MOIVRE: _format_solve,
    keys.KIND_RESOLVENT: _format_resolvent,
    keys.KIND_RECIPROCAL: _format_reciprocal,
    keys.KIND_DECOMPOSE: _format_decompose,
    keys.KIND_EXPLORE: _format_explore,
    keys.KIND_VERIFY: _format_verify,
})


def format_document(document):
    """
    >>> print(format_document(resolvent_document(Polynomial([-9, -6, 0, 1]))))
    source:    x^3 - 6x - 9
    depressed: x^3 - 6x - 9 (shift 0)
    cubic resolvent: z^2 - 9z + 8
    """
    return '\n'.join(formatters[document[keys.KIND]](document))


###############################################################################
# dispatch
###############################################################################


def _verify_document(document, tol=None):
    return verify(document, tol=tol).to_json()


document_builders = Dispatcher({
    keys.KIND_SOLVE: solve_document,
    keys.KIND_RESOLVENT: resolvent_document,
    keys.KIND_RECIPROCAL: reciprocal_document,
    keys.KIND_MOIVRE: moivre_document,
    keys.KIND_DECOMPOSE: decompose_document,
    keys.KIND_VERIFY: _verify_document,
    keys.KIND_EXPLORE: explore_document,
})


def dispatch(subcommand, *args, **flags):
    """
    The document of a subcommand.

    >>> document = dispatch('reciprocal-factor', Polynomial([1, 3, 4, 3, 1]))
    >>> document['u_equation']['text'], [f['exact_alpha'] for f in document['factors']]
    ('u^2 - 3u + 2', ['1', '2'])
    """
    LOG.debug(f'{subcommand}: {args} {flags}')
    return document_builders[subcommand](*args, **flags)
