import dataclasses
import io
import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from pb_resolvent import keys
from pb_resolvent.math.polynomial import Polynomial, rational_to_str
from pb_resolvent.math.radical import RadicalExpr, render


def complex_to_json(z):
    """
    >>> complex_to_json(1 - 2j)
    {'re': 1.0, 'im': -2.0}
    """
    z = complex(z)
    return {keys.RE: z.real, keys.IM: z.imag}


def polynomial_to_json(p: Polynomial, variable='x'):
    """
    >>> polynomial_to_json(Polynomial(['-1/2', 0, 1]), 'y')
    {'coeffs': ['-1/2', '0', '1'], 'text': 'y^2 - 1/2', 'variable': 'y'}
    """
    return {
        keys.COEFFS: [rational_to_str(c) for c in p.coeffs],
        keys.TEXT: p.to_text(variable),
        keys.VARIABLE: variable,
    }


# http://stackoverflow.com/a/27050186
class Encoder(json.JSONEncoder):
    """
    Rationals are written as "num/den" strings, complex numbers as
    {"re": ..., "im": ...}. Floats keep the json default repr, which round
    trips exactly.

    >>> json.dumps({'a': Fraction(3, 4), 'b': 1j, 'c': np.int64(2)}, cls=Encoder)
    '{"a": "3/4", "b": {"re": 0.0, "im": 1.0}, "c": 2}'
    """
    def default(self, obj):
        if isinstance(obj, Fraction):
            return rational_to_str(obj)
        elif isinstance(obj, (complex, np.complexfloating)):
            return complex_to_json(obj)
        elif isinstance(obj, np.integer):
            return int(obj)
        elif isinstance(obj, np.floating):
            return float(obj)
        elif isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, Polynomial):
            return polynomial_to_json(obj)
        elif isinstance(obj, RadicalExpr):
            return render(obj)
        elif dataclasses.is_dataclass(obj) and not isinstance(obj, type):
            return {
                f.name: getattr(obj, f.name) for f in dataclasses.fields(obj)
            }
        elif isinstance(obj, Path):
            return str(obj)
        else:
            return super().default(obj)


def dumps_json(
        obj, *, indent=2, sort_keys=True, **kwargs):
    fd = io.StringIO()
    dump_json(
        obj,
        path=fd,
        indent=indent,
        create_path=False,
        sort_keys=sort_keys,
        **kwargs,
    )
    return fd.getvalue()


def dump_json(
        obj, path, *, indent=2, create_path=True, sort_keys=True, **kwargs):
    """
    Rationals, complex numbers, numpy types, polynomials and radical
    expressions are converted by `Encoder`.

    :param obj: Arbitrary object that is JSON serializable with `Encoder`.
    :param path: String, ``pathlib.Path`` or an open text file.
    :param indent: See ``json.dump()``.
    :param kwargs: See ``json.dump()``.
    """
    if isinstance(path, io.IOBase):
        json.dump(obj, path, cls=Encoder, indent=indent,
                  sort_keys=sort_keys, **kwargs)
    elif isinstance(path, (str, Path)):
        path = Path(path).expanduser()

        if create_path:
            path.parent.mkdir(parents=True, exist_ok=True)

        with path.open('w', encoding='utf8') as f:
            json.dump(obj, f, cls=Encoder, indent=indent,
                      sort_keys=sort_keys, **kwargs)
    else:
        raise TypeError(path)


def load_json(path, **kwargs):
    """ Loads a JSON file and returns it as a dict.

    :param path: String or ``pathlib.Path`` object.
    :param kwargs: See ``json.load()``.
    :return: Content of the JSON file.
    """
    assert isinstance(path, (str, Path)), path
    path = Path(path).expanduser()

    with path.open(encoding='utf8') as fid:
        return json.load(fid, **kwargs)


def loads_json(text, **kwargs):
    assert isinstance(text, str), text
    return json.loads(text, **kwargs)


def complex_from_json(obj):
    return complex(obj[keys.RE], obj[keys.IM])


def polynomial_from_json(obj):
    """
    >>> polynomial_from_json({'coeffs': ['-1/2', '0', '1']})
    Polynomial(['-1/2', 0, 1])
    """
    return Polynomial(obj[keys.COEFFS])
