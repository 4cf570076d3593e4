"""
Field names of the structured documents written by the command line.

The names and their nesting are the compatibility contract of the `--json`
output and of the `verify` subcommand. Please avoid abbreviations and
discuss first, before adding new keys.
"""
KIND = 'kind'  # subcommand that produced the document
VERSION = 'version'
METHOD = 'method'
SOURCE = 'source'
RESOLVENT = 'resolvent'
RESOLVENT_KIND = 'resolvent_kind'
RESOLVENT_ROOTS = 'resolvent_roots'
DEPRESSED = 'depressed'
SHIFT = 'shift'
ROOTS = 'roots'
DIAGNOSTICS = 'diagnostics'
TOLERANCE = 'tolerance'

# Polynomials: ascending "num/den" strings plus the rendered text.
COEFFS = 'coeffs'
TEXT = 'text'
VARIABLE = 'variable'

# Roots and complex numbers
CLOSED_FORM = 'closed_form'
RE = 're'
IM = 'im'
RESIDUAL = 'residual'

# reciprocal-factor
U_EQUATION = 'u_equation'
FACTORS = 'factors'
ALPHA = 'alpha'
EXACT_ALPHA = 'exact_alpha'
UNIT_FACTORS = 'unit_factors'  # number of extracted (y + 1) factors

# decompose
N = 'n'
P = 'p'
TERMS = 'terms'
LIN_COEFF = 'lin_coeff'
CONST_COEFF = 'const_coeff'
ANTIDERIVATIVE = 'antiderivative'
LOG_COEFF = 'log_coeff'
INVERSE_KIND = 'inverse_kind'  # 'arctan' or 'artanh'
AMPLITUDE = 'amplitude'
ARGUMENT_SCALE = 'argument_scale'
ARGUMENT_SHIFT = 'argument_shift'

# explore-quintic
RADICANDS = 'radicands'
RADICALS = 'radicals'
CANDIDATES = 'candidates'
BEST = 'best'  # index into candidates
MULTIPLIERS = 'multipliers'
VALUES = 'values'
MAX_IMAG = 'max_imag'
SUBLEADING_DEVIATION = 'subleading_deviation'
FULL_ENUMERATION = 'full_enumeration'

# moivre
MOIVRE_FORM = 'moivre_form'
T_VALUE = 't'
QUINTIC_ROOTS = 'quintic_roots'

# Kinds of documents, i.e. the subcommands.
KIND_SOLVE = 'solve'
KIND_RESOLVENT = 'resolvent'
KIND_RECIPROCAL = 'reciprocal-factor'
KIND_MOIVRE = 'moivre'
KIND_DECOMPOSE = 'decompose'
KIND_EXPLORE = 'explore-quintic'

# Method tags
METHOD_QUADRATIC = 'quadratic'
METHOD_CUBIC = 'cubic-resolvent'
METHOD_QUARTIC = 'quartic-resolvent'
METHOD_QUARTIC_SQUARED = 'quartic-squared-resolvent'
METHOD_MOIVRE = 'moivre'
METHOD_RECIPROCAL = 'reciprocal'
METHOD_NUMERIC = 'numeric'

# verify
KIND_VERIFY = 'verify'
CHECKED_KIND = 'checked_kind'
PASSED = 'passed'
CHECKS = 'checks'
NAME = 'name'
DEVIATION = 'deviation'
BOUND = 'bound'
