import copy
from fractions import Fraction
from pathlib import Path

import numpy as np
from pytest import mark, raises

from pb_resolvent import keys
from pb_resolvent.exceptions import (
    DegreeMismatch,
    DegreeTooLow,
    DegreeUnsupported,
    NotMoivreForm,
    ParseError,
)
from pb_resolvent.io import dumps_json, load_json, loads_json
from pb_resolvent.math.polynomial import Polynomial
from pb_resolvent.moivre import MoivreForm
from pb_resolvent.report import (
    dispatch,
    format_document,
    required_fields,
    resolvent_of,
    solve,
    verify,
)

GOLDEN = Path(__file__).parent.parent / 'doc' / 'golden'


@mark.parametrize('coeffs, method', [
    ([-4, 1], keys.METHOD_QUADRATIC),
    ([2, 0, 1], keys.METHOD_QUADRATIC),
    ([-9, -6, 0, 1], keys.METHOD_CUBIC),
    ([1, -3, 2, 0, 1], keys.METHOD_QUARTIC),
    ([-2, 5, 0, -5, 0, 1], keys.METHOD_MOIVRE),
    ([-4, 10, 0, -10, 0, 2], keys.METHOD_MOIVRE),
    ([1, 1, 1, 1, 1, 1, 1], keys.METHOD_RECIPROCAL),
    ([1, 1, 0, 0, 0, 1], keys.METHOD_NUMERIC),
])
def test_solve_routing(coeffs, method):
    p = Polynomial(coeffs)
    report = solve(p)
    assert report.method == method
    assert report.source == p
    assert len(report.roots) == p.degree


def test_forced_methods():
    p = Polynomial([-9, -6, 0, 1])
    assert solve(p, method=keys.METHOD_NUMERIC).method == keys.METHOD_NUMERIC
    assert solve(p, method=keys.METHOD_MOIVRE).method == keys.METHOD_MOIVRE
    q = Polynomial([-1296, 1393, -98, 1])
    assert solve(Polynomial([0, -48, -28, 0, 1]), method=keys.METHOD_QUARTIC_SQUARED).resolvent == q
    with raises(DegreeMismatch):
        solve(p, method=keys.METHOD_QUADRATIC)
    with raises(DegreeMismatch):
        solve(Polynomial([1, 0, 1]), method=keys.METHOD_CUBIC)
    with raises(DegreeMismatch):
        solve(Polynomial([-4, 1]), method=keys.METHOD_QUARTIC)
    with raises(DegreeMismatch):
        solve(Polynomial([1, 0, 1]), method=keys.METHOD_QUARTIC_SQUARED)
    assert solve(Polynomial([-4, 1]), method=keys.METHOD_QUADRATIC).method == keys.METHOD_QUADRATIC
    with raises(NotMoivreForm):
        solve(Polynomial([1, 1, 0, 0, 1]), method=keys.METHOD_MOIVRE)
    with raises(DegreeTooLow):
        solve(Polynomial([5]))


def test_large_palindrome_falls_back_to_the_oracle(caplog):
    p = Polynomial([1, 2] + [0] * 16 + [2, 1])
    report = solve(p, max_n=4)
    assert report.method == keys.METHOD_NUMERIC
    assert 'Using the numeric oracle instead' in caplog.text


def test_resolvent_of():
    kind, resolvent, q, shift = resolvent_of(Polynomial([-6, 11, -6, 1]))
    assert kind == 'cubic'
    assert shift == 2
    assert q == Polynomial([0, -1, 0, 1])
    with raises(DegreeUnsupported):
        resolvent_of(Polynomial([1, 0, 0, 0, 0, 1]))
    with raises(DegreeTooLow):
        resolvent_of(Polynomial([1, 1]))


def all_documents():
    yield dispatch(keys.KIND_SOLVE, Polynomial([-9, -6, 0, 1]))
    yield dispatch(keys.KIND_SOLVE, Polynomial([3, 1, -4, 0, 2]), variable='t')
    yield dispatch(keys.KIND_SOLVE, Polynomial([1, 1, 0, 0, 0, 1]))
    yield dispatch(keys.KIND_RESOLVENT, Polynomial([0, -48, -28, 0, 1]), kind='squared')
    yield dispatch(keys.KIND_RESOLVENT, Polynomial(['1/2', 1, 3]))
    yield dispatch(keys.KIND_RECIPROCAL, Polynomial([1, 3, 4, 3, 1]))
    yield dispatch(keys.KIND_RECIPROCAL, Polynomial([1] * 13))
    yield dispatch(keys.KIND_MOIVRE, MoivreForm(5, 2, 1))
    yield dispatch(keys.KIND_MOIVRE, MoivreForm(7, '1/2', -1))
    yield dispatch(keys.KIND_DECOMPOSE, 3, Fraction(1))
    yield dispatch(keys.KIND_DECOMPOSE, 2, Fraction(5, 2))
    yield dispatch(keys.KIND_EXPLORE, 1 + 1j, 2, 0.5j, -1, n=5)


@mark.parametrize('document', list(all_documents()), ids=lambda d: d[keys.KIND])
def test_documents_verify_after_a_json_round_trip(document):
    text = dumps_json(document)
    restored = loads_json(text)
    verification = verify(restored)
    assert verification.passed, verification.failures
    assert verification.to_json()[keys.PASSED]
    assert format_document(restored)
    assert dumps_json(restored) == text


def tamper(document):
    document = copy.deepcopy(document)
    kind = document[keys.KIND]
    if kind in (keys.KIND_SOLVE, keys.KIND_MOIVRE):
        document[keys.ROOTS][0][keys.RE] += 1e-3
    elif kind == keys.KIND_RESOLVENT:
        document[keys.RESOLVENT][keys.COEFFS][0] = '17'
    elif kind == keys.KIND_RECIPROCAL:
        document[keys.FACTORS][0][keys.ALPHA][keys.RE] += 1e-3
    elif kind == keys.KIND_DECOMPOSE:
        document[keys.TERMS][0][keys.CONST_COEFF][keys.RE] += 1e-3
    elif kind == keys.KIND_EXPLORE:
        document[keys.CANDIDATES][0][keys.VALUES][0][keys.RE] += 1e-3
    return document


@mark.parametrize('document', list(all_documents()), ids=lambda d: d[keys.KIND])
def test_tampered_documents_fail(document):
    assert not verify(tamper(document)).passed


def test_verify_errors():
    with raises(ParseError):
        verify({keys.KIND: 'unknown'})
    with raises(ParseError):
        verify({})


@mark.parametrize('document', list(all_documents()), ids=lambda d: d[keys.KIND])
def test_verify_names_a_missing_field(document):
    for key in required_fields[document[keys.KIND]]:
        incomplete = copy.deepcopy(document)
        del incomplete[key]
        with raises(ParseError, match=repr(key)):
            verify(incomplete)


def test_verify_rejects_malformed_entries():
    document = dispatch(keys.KIND_SOLVE, Polynomial([-9, -6, 0, 1]))
    del document[keys.ROOTS][0][keys.RE]
    with raises(ParseError, match='Malformed solve document'):
        verify(document)
    document = dispatch(keys.KIND_SOLVE, Polynomial([-9, -6, 0, 1]))
    document[keys.ROOTS] = 3
    with raises(ParseError):
        verify(document)


def test_verify_tolerance_override():
    document = dispatch(keys.KIND_SOLVE, Polynomial([-9, -6, 0, 1]))
    document[keys.ROOTS][0][keys.RE] += 1e-7
    assert not verify(document).passed
    assert verify(document, tol=1e-3).passed


@mark.parametrize('path', sorted(GOLDEN.glob('*.json')), ids=lambda p: p.stem)
def test_golden_documents_verify(path):
    document = load_json(path)
    assert document[keys.KIND] == path.stem
    verification = verify(document)
    assert verification.passed, verification.failures


def test_golden_resolvent_is_reproduced():
    document = load_json(GOLDEN / 'resolvent.json')
    source = Polynomial(document[keys.SOURCE][keys.COEFFS])
    rebuilt = dispatch(
        keys.KIND_RESOLVENT, source, kind=document[keys.RESOLVENT_KIND]
    )
    assert loads_json(dumps_json(rebuilt)) == document


def test_golden_solve_roots_are_reproduced():
    document = load_json(GOLDEN / 'solve.json')
    rebuilt = dispatch(keys.KIND_SOLVE, Polynomial(document[keys.SOURCE][keys.COEFFS]))
    assert rebuilt[keys.METHOD] == document[keys.METHOD]

    def values(d):
        return sorted(
            (complex(r[keys.RE], r[keys.IM]) for r in d[keys.ROOTS]),
            key=lambda z: (round(z.real, 9), round(z.imag, 9)),
        )

    np.testing.assert_allclose(values(rebuilt), values(document), atol=1e-12)


def test_explore_experiment(tmp_path):
    from sacred.observers import FileStorageObserver
    from pb_resolvent.scripts.explore import experiment

    experiment.observers[:] = [FileStorageObserver.create(str(tmp_path))]
    try:
        run = experiment.run(
            config_updates={'n': 3, 'A': [8, 0], 'B': [1, 0]},
            options={'--capture': 'sys'},
        )
    finally:
        experiment.observers[:] = []
    assert run.status == 'COMPLETED'
    document = load_json(tmp_path / str(run._id) / 'explore.json')
    assert document[keys.KIND] == keys.KIND_EXPLORE
    assert document[keys.BEST] == run.result
    assert verify(document).passed


def test_explore_experiment_named_config():
    from pb_resolvent.scripts.explore import experiment

    run = experiment.run(named_configs=['moivre_check'], options={'--capture': 'sys'})
    assert run.status == 'COMPLETED'
    assert run.config['n'] == 5
    assert run.config['A'] == [2, 1]
