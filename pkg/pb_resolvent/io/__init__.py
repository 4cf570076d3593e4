"""
Input and output: the polynomial expression parser and the json documents.

The file path is called `path`. It should either be a ``pathlib.Path``
object or a string.
"""

from pb_resolvent.io.expression import (
    parse_coeffs,
    parse_poly,
    parse_source,
)
from pb_resolvent.io.json_module import (
    Encoder,
    dump_json,
    dumps_json,
    load_json,
    loads_json,
)

__all__ = [
    "parse_poly",
    "parse_source",
    "parse_coeffs",
    "Encoder",
    "load_json",
    "loads_json",
    "dump_json",
    "dumps_json",
]
