import json
from pathlib import Path

from click.testing import CliRunner
from pytest import fixture, mark

from pb_resolvent import keys
from pb_resolvent.exceptions import NonConvergence
from pb_resolvent.io import dump_json, load_json
from pb_resolvent.scripts.cli import cli

GOLDEN = Path(__file__).parent.parent / 'doc' / 'golden'


@fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args), catch_exceptions=False)


def test_solve(runner):
    result = invoke(runner, 'solve', 'x^3 - 6x - 9')
    assert result.exit_code == 0, result.stderr
    assert 'cubic-resolvent' in result.stdout
    assert 'z^2 - 9z + 8' in result.stdout


def test_solve_json(runner):
    result = invoke(runner, 'solve', '--json', '--coeffs', '--', '-9, -6, 0, 1')
    assert result.exit_code == 0, result.stderr
    document = json.loads(result.stdout)
    assert document[keys.KIND] == keys.KIND_SOLVE
    assert document[keys.SOURCE][keys.TEXT] == 'x^3 - 6x - 9'
    assert len(document[keys.ROOTS]) == 3


@mark.parametrize('args', [
    ('solve', '--method', 'numeric', 'x^2 - 2'),
    ('resolvent', '--kind', 'squared', 'x^4 - 28x^2 - 48x'),
    ('reciprocal-factor', 'y^4 + 3y^3 + 4y^2 + 3y + 1'),
    ('moivre', '--n', '5', '--alpha', '2', '--t', '1'),
    ('moivre', 'x^3 - 6x - 9'),
    ('decompose', '--n', '3', '--p', '1/2'),
    ('explore-quintic', '--a', '1+1j', '--b', '2', '--n', '5'),
    ('-v', 'solve', 'x^6 + x^5 + x^4 + x^3 + x^2 + x + 1'),
])
def test_subcommands_write_verifiable_documents(runner, tmp_path, args):
    result = invoke(runner, *args, '--json')
    assert result.exit_code == 0, result.stderr
    path = tmp_path / 'document.json'
    path.write_text(result.stdout)
    result = invoke(runner, 'verify', str(path))
    assert result.exit_code == 0, result.stdout
    assert 'passed' in result.stdout


def test_human_readable_output(runner):
    result = invoke(runner, 'decompose', '--n', '2', '--p', '0')
    assert result.exit_code == 0
    assert 'arctan' in result.stdout
    result = invoke(runner, 'reciprocal-factor', 'y^4 + 3y^3 + 4y^2 + 3y + 1')
    assert 'u-equation: u^2 - 3u + 2' in result.stdout


@mark.parametrize('path', sorted(GOLDEN.glob('*.json')), ids=lambda p: p.stem)
def test_verify_golden(runner, path):
    result = invoke(runner, 'verify', '--json', str(path))
    assert result.exit_code == 0, result.stdout
    assert json.loads(result.stdout)[keys.PASSED]


def test_verify_tampered_document(runner, tmp_path):
    document = load_json(GOLDEN / 'solve.json')
    document[keys.ROOTS][1][keys.IM] += 1e-4
    path = tmp_path / 'tampered.json'
    dump_json(document, path)
    result = invoke(runner, 'verify', str(path))
    assert result.exit_code == 4
    assert 'FAILED' in result.stdout


def test_verify_from_stdin(runner):
    text = (GOLDEN / 'moivre.json').read_text()
    result = runner.invoke(cli, ['verify', '-'], input=text)
    assert result.exit_code == 0


@mark.parametrize('args', [
    ('solve', 'x^^2'),
    ('solve', 'x^2 + y'),
    ('solve', 'x^100000000'),
    ('solve', '--coeffs', '1, 0.5'),
    ('decompose', '--n', '2', '--p', 'half'),
    ('moivre', '--n', '5'),
])
def test_parse_errors_exit_with_2(runner, args):
    result = invoke(runner, *args)
    assert result.exit_code == 2


def test_invalid_json_exits_with_2(runner, tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"kind": ')
    result = invoke(runner, 'verify', str(path))
    assert result.exit_code == 2
    assert 'ParseError' in result.stderr
    path.write_text('{"kind": "unknown"}')
    assert invoke(runner, 'verify', str(path)).exit_code == 2


def test_incomplete_document_exits_with_2(runner):
    result = runner.invoke(
        cli, ['verify', '-'], input='{"kind": "solve", "tolerance": 1e-9}',
        catch_exceptions=False,
    )
    assert result.exit_code == 2
    assert "'source'" in result.stderr


@mark.parametrize('args', [
    ('resolvent', 'x^5 + 1'),
    ('resolvent', '--kind', 'squared', 'x^3 + 1'),
    ('moivre', 'x^4 + x + 1'),
    ('reciprocal-factor', 'y^3 + 2y + 1'),
    ('decompose', '--n', '3', '--p', '-2'),
    ('solve', 'x^18 + 1', '--max-n', '4', '--method', 'reciprocal'),
    ('solve', '7'),
])
def test_precondition_errors_exit_with_3(runner, args):
    result = invoke(runner, *args)
    assert result.exit_code == 3, result.stdout


def test_certification_failure_exits_with_4(runner, monkeypatch):
    from pb_resolvent import report
    from pb_resolvent.exceptions import CertificationError

    def fail(*args, **kwargs):
        raise CertificationError('Residual too large')

    monkeypatch.setattr(report, 'solve_closed_form', fail)
    result = invoke(runner, 'solve', 'x^3 - 6x - 9')
    assert result.exit_code == 4
    assert 'CertificationError' in result.stderr


def test_non_convergence_exits_with_5(runner, monkeypatch):
    from pb_resolvent import report

    def fail(*args, **kwargs):
        raise NonConvergence('No convergence after 500 iterations', [0j], [1.0])

    monkeypatch.setattr(report, 'solve_numeric', fail)
    result = invoke(runner, 'solve', 'x^5 + x + 1')
    assert result.exit_code == 5
    assert 'Max residual: 1.0' in result.stderr
