"""
Sacred experiment around the quintic explorer.

    python -m pb_resolvent.scripts.explore with A=[1,1] B=[2,0]
    python -m pb_resolvent.scripts.explore with moivre_check
    python -m pb_resolvent.scripts.explore -F ~/sacred with n=7 full_enumeration=True

The radicands are given as [re, im] pairs. Every run writes the explore
document to <observer dir>/<run id>/explore.json, which
`pb_resolvent verify` accepts.
"""
import sys
from pathlib import Path
import inspect

import sacred
from sacred.commands import print_config
from sacred.observers import FileStorageObserver

from pb_resolvent import keys
from pb_resolvent.io import dump_json
from pb_resolvent.report import exploration_to_json
from pb_resolvent.sumcheck import get_explorer

experiment = sacred.Experiment('Quintic resolvent explorer')


@experiment.config
def config():
    locals().update({k: v.default for k, v in inspect.signature(get_explorer).parameters.items()})

    A = [1, 0]
    B = [0, 0]
    C = [0, 0]
    D = [0, 0]


@experiment.named_config
def moivre_check():
    # C = D = 0 reduces the search to the two radical form of de Moivre
    A = [2, 1]
    B = [2, -1]
    C = [0, 0]
    D = [0, 0]


@experiment.capture
def get_dir(
        _run,
):
    assert len(_run.observers) == 1, len(_run.observers)
    _dir = Path(_run.observers[0].basedir) / str(_run._id)
    return _dir


@experiment.capture
def get_radicands(A, B, C, D):
    def to_complex(value):
        if isinstance(value, (list, tuple)):
            assert len(value) == 2, value
            return complex(*value)
        return complex(value)

    return tuple(to_complex(v) for v in (A, B, C, D))


get_explorer = experiment.capture(get_explorer)


@experiment.main
def main(_run):
    run(_run)


@experiment.capture
def run(_run, full_enumeration):
    print_config(_run)
    _dir = get_dir() if _run.observers else None

    explorer = get_explorer()
    report = explorer(*get_radicands())
    document = exploration_to_json(report, full_enumeration)

    best = report.best
    print('Explorer:', explorer)
    print('Candidates:', len(report.candidates))
    print('Best multipliers:', tuple(int(m) for m in best.multipliers))
    print(f'Best max |imag|: {best.max_imag:.3e}, '
          f'subleading: {best.subleading_deviation:.3e}')

    if _dir is not None:
        dump_json(document, _dir / 'explore.json')
        print('Finished experiment dir:', _dir)
    return document[keys.BEST]


if __name__ == '__main__':

    # Custom parsing of sacred --file_storage option.
    # This allows to give this option a default.
    argv = [*sys.argv]
    import argparse
    from pb_resolvent import git_root

    parser = argparse.ArgumentParser()
    parser.add_argument('-F', '--file_storage',
                        default=git_root / 'sacred',
                        help='add a file storage observer')

    parsed, args = parser.parse_known_args()
    argv = argv[:1] + args

    path = Path(parsed.file_storage).expanduser().resolve()
    experiment.observers.append(FileStorageObserver.create(str(path)))

    experiment.run_commandline(argv)
