"""
Command line of pb_resolvent.

    pb_resolvent solve "x^3 - 6x - 9"
    pb_resolvent solve --coeffs "-9, -6, 0, 1" --json
    pb_resolvent resolvent --kind squared "x^4 - 28x^2 - 48x"
    pb_resolvent reciprocal-factor "y^4 + 3y^3 + 4y^2 + 3y + 1"
    pb_resolvent moivre --n 5 --alpha 2 --t 1
    pb_resolvent decompose --n 3 --p 1
    pb_resolvent verify report.json
    pb_resolvent explore-quintic --a 1+1j --b 2 --n 5

Exit codes: 0 success, 2 parse error, 3 method precondition error,
4 certification failure, 5 oracle non-convergence.
"""
import functools
import json
import logging
import sys

import click

from pb_resolvent import keys
from pb_resolvent.core import DEFAULT_TOLERANCE
from pb_resolvent.exceptions import (
    CertificationError,
    NotMoivreForm,
    ParseError,
    ResolventError,
)
from pb_resolvent.io import dumps_json, load_json, loads_json
from pb_resolvent.io.expression import parse_coeffs, parse_source
from pb_resolvent.mapping import BRANCH_CONVENTIONS, METHODS, RESOLVENT_KINDS
from pb_resolvent.math.polynomial import as_rational
from pb_resolvent.math.radical import BranchConvention
from pb_resolvent.moivre import MoivreForm, detect_moivre
from pb_resolvent.report import dispatch, format_document

LOG = logging.getLogger('cli')


class RationalParamType(click.ParamType):
    name = 'rational'

    def convert(self, value, param, ctx):
        try:
            return as_rational(str(value))
        except (ValueError, ZeroDivisionError):
            self.fail(f'{value!r} is not a rational like 3 or -7/2', param, ctx)


class ComplexParamType(click.ParamType):
    name = 'complex'

    def convert(self, value, param, ctx):
        if isinstance(value, complex):
            return value
        try:
            return complex(str(value).replace(' ', '').replace('i', 'j'))
        except ValueError:
            self.fail(f'{value!r} is not a complex number like 1-2j', param, ctx)


RATIONAL = RationalParamType()
COMPLEX = ComplexParamType()


def combine_decorators(*decorators):
    def f(c):
        for decorator in decorators:
            c = decorator(c)
        return c

    return f


def click_output_options():
    return combine_decorators(
        click.option('--json', 'as_json', default=False, is_flag=True,
                     help='Write one structured json document instead of '
                          'the human readable table.'),
        click.option('--tol', default=DEFAULT_TOLERANCE, type=float,
                     show_default=True,
                     help='Certification tolerance relative to the '
                          'coefficient scale.'),
    )


def click_poly_source(default_variable='x', required=True):
    def callback(ctx, param, value):
        if value is None:
            return None
        try:
            if ctx.params.get('coeffs', False):
                return parse_coeffs(value), default_variable
            p, variable = parse_source(value)
        except ParseError as e:
            raise click.BadParameter(str(e), ctx=ctx, param=param)
        return p, variable if p.degree else default_variable

    return combine_decorators(
        click.argument('source', required=required, callback=callback),
        click.option('--coeffs', default=False, is_flag=True, is_eager=True,
                     help='SOURCE is an ascending coefficient list like '
                          '"-9, -6, 0, 1" instead of an expression.'),
    )


def click_max_n():
    return click.option(
        '--max-n', default=16, type=int, show_default=True,
        help='Largest half degree of reciprocal polynomials and largest n '
             'of the quintic explorer.',
    )


def exit_codes(f):
    """Reports ResolventErrors on stderr and exits with their exit code."""
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ResolventError as e:
            click.echo(f'{e.__class__.__name__}: {e}', err=True)
            sys.exit(e.exit_code)
    return wrapper


def emit(document, as_json):
    if as_json:
        click.echo(dumps_json(document))
    else:
        click.echo(format_document(document))


@click.group()
@click.option('--verbose', '-v', default=False, is_flag=True,
              help='Log the dispatch decisions.')
@click.option('--branch-convention', default='principal', show_default=True,
              type=click.Choice(BRANCH_CONVENTIONS),
              help='Branch rule of the n-th roots in the closed forms.')
@click.pass_context
def cli(ctx, verbose, branch_convention):
    logging.basicConfig(
        format='%(levelname)s: %(message)s',
        level=logging.DEBUG if verbose else logging.WARNING,
    )
    ctx.obj = BranchConvention(branch_convention)


@cli.command()
@click_poly_source()
@click_output_options()
@click_max_n()
@click.option('--method', default=None, type=click.Choice(METHODS),
              help='Force a method instead of the automatic choice.')
@exit_codes
def solve(source, coeffs, as_json, tol, max_n, method):
    """Certified roots of SOURCE."""
    p, variable = source
    emit(dispatch(keys.KIND_SOLVE, p, variable=variable, method=method,
                  tol=tol, max_n=max_n), as_json)


@cli.command()
@click_poly_source()
@click.option('--json', 'as_json', default=False, is_flag=True)
@click.option('--kind', default=None, type=click.Choice(RESOLVENT_KINDS),
              help='Resolvent to build, defaults to the one of the degree.')
@exit_codes
def resolvent(source, coeffs, as_json, kind):
    """The resolvent equation of SOURCE (degree 2 to 4)."""
    p, variable = source
    emit(dispatch(keys.KIND_RESOLVENT, p, variable=variable, kind=kind), as_json)


@cli.command('reciprocal-factor')
@click_poly_source(default_variable='y')
@click_output_options()
@click_max_n()
@exit_codes
def reciprocal_factor(source, coeffs, as_json, tol, max_n):
    """Quadratic factors y^2 + alpha y + 1 of the reciprocal SOURCE."""
    p, variable = source
    emit(dispatch(keys.KIND_RECIPROCAL, p, variable=variable, max_n=max_n,
                  tol=tol), as_json)


@cli.command()
@click_poly_source(required=False)
@click_output_options()
@click.option('--n', type=int, default=None, help='Degree of the form.')
@click.option('--alpha', type=RATIONAL, default=None)
@click.option('--t', type=RATIONAL, default=None, help='nth root of beta.')
@exit_codes
def moivre(source, coeffs, as_json, tol, n, alpha, t):
    """Roots of de Moivre's form, given by SOURCE or by --n, --alpha, --t."""
    if source is not None:
        p, variable = source
        form = detect_moivre(p.scale_by(1 / p.lead)) if p.degree and p.degree >= 2 else None
        if form is None:
            raise NotMoivreForm('Not an equation of de Moivre form', p)
    else:
        if None in (n, alpha, t):
            raise click.UsageError('Give SOURCE or all of --n, --alpha and --t.')
        if n < 2:
            raise click.BadParameter('n has to be at least 2', param_hint='--n')
        form, variable = MoivreForm(n, alpha, t), 'x'
    emit(dispatch(keys.KIND_MOIVRE, form, variable=variable, tol=tol), as_json)


@cli.command()
@click.option('--n', type=int, required=True)
@click.option('--p', type=RATIONAL, required=True)
@click_output_options()
@exit_codes
def decompose(n, p, as_json, tol):
    """Partial fractions of 1 / (y^2n + p y^n + 1) and their antiderivatives."""
    if n < 1:
        raise click.BadParameter('n has to be at least 1', param_hint='--n')
    emit(dispatch(keys.KIND_DECOMPOSE, n, p, tol=tol), as_json)


@cli.command()
@click.argument('path', type=click.Path(dir_okay=False, allow_dash=True))
@click.option('--tol', default=None, type=float,
              help='Tolerance, defaults to the one stored in the document.')
@click.option('--json', 'as_json', default=False, is_flag=True)
@exit_codes
def verify(path, tol, as_json):
    """Re-certify a json document written by another subcommand."""
    try:
        if path == '-':
            document = loads_json(sys.stdin.read())
        else:
            document = load_json(path)
    except json.JSONDecodeError as e:
        raise ParseError(f'invalid json: {e.msg}', text=None) from e
    if not isinstance(document, dict):
        raise ParseError('expected a json object')

    result = dispatch(keys.KIND_VERIFY, document, tol=tol)
    emit(result, as_json)
    if not result[keys.PASSED]:
        sys.exit(CertificationError.exit_code)


@cli.command('explore-quintic')
@click.option('--a', 'A', type=COMPLEX, default='0')
@click.option('--b', 'B', type=COMPLEX, default='0')
@click.option('--c', 'C', type=COMPLEX, default='0')
@click.option('--d', 'D', type=COMPLEX, default='0')
@click.option('--n', type=int, default=5, show_default=True)
@click.option('--full-enumeration', default=False, is_flag=True,
              help='All n^4 multiplier tuples instead of the n paired ones.')
@click_max_n()
@click.option('--json', 'as_json', default=False, is_flag=True)
@exit_codes
def explore_quintic(A, B, C, D, n, full_enumeration, max_n, as_json):
    """Candidate polynomials with the roots nrt(A) + nrt(B) + nrt(C) + nrt(D)."""
    emit(dispatch(keys.KIND_EXPLORE, A, B, C, D, n=n,
                  full_enumeration=full_enumeration, max_n=max_n), as_json)


if __name__ == '__main__':
    cli()
