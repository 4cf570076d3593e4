from pathlib import Path

git_root = Path(__file__).parent.parent.resolve().expanduser()

from . import (
    keys,
    mapping,
    exceptions,
    math,
    core,
    moivre,
    reciprocal,
    sumcheck,
    report,
)
from .core import (
    solve_closed_form,
    solve_cubic,
    solve_quadratic,
    solve_quartic,
)
from .report import solve
