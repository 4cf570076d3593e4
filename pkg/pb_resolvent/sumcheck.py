"""
Power sums of radicals of resolvent roots.

Legend:
    n            index of the radicals nrt(A), nrt(B), ...
    x            sum of the radicals
    p            sum of the pairwise products
    q            sum of the products of three (four radicals only)
    g, h         product of all radicals, i.e. nrt(ABC) resp. nrt(ABCD)
    R_m, S_m     sums of the m-th powers of the radicals resp. of the
                 pairwise products

The identities are polynomial, they are checked numerically at concrete
radicals. The quintic explorer at the end is an experiment: it reports how
far the candidate polynomials are from being real and depressed, it does not
claim that they are.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Tuple

import numpy as np
from cached_property import cached_property

from pb_resolvent.core import squared_resolvent
from pb_resolvent.exceptions import DegreeTooLow, DegreeUnsupported
from pb_resolvent.math.polynomial import Polynomial, as_rational
from pb_resolvent.math.radical import nth_root

LOG = logging.getLogger('sumcheck')

IDENTITY_TOL = 1e-9


def two_term_sum(x, t, m: int):
    """
    s_m = nrt(A)^m + nrt(B)^m from x = nrt(A) + nrt(B) and t = nrt(A) nrt(B)
    by s_0 = 2, s_1 = x, s_m = x s_(m-1) - t s_(m-2). Works for numbers and
    for Polynomials in x.

    >>> two_term_sum(3, 2, 4)  # 1 + 2^4
    17
    >>> X = Polynomial([0, 1])
    >>> print(two_term_sum(X, 1, 5))
    x^5 - 5x^3 + 5x
    >>> two_term_sum(X, 1, 0)
    2
    """
    assert m >= 0, m
    previous, current = 2, x
    if m == 0:
        return previous
    for _ in range(m - 1):
        previous, current = current, x * current - t * previous
    return current


def _elementary(radicals):
    return [
        sum(np.prod(c) for c in itertools.combinations(radicals, k))
        for k in range(1, len(radicals) + 1)
    ]


@dataclass(frozen=True)
class TripleSumState:
    x: complex
    p: complex
    g: complex
    radicals: Tuple[complex, complex, complex] = field(default=None, compare=False)

    @classmethod
    def from_radicands(cls, A, B, C, n, branches=(0, 0, 0)):
        """
        >>> state = TripleSumState.from_radicands(1, 1, 1, 1)
        >>> state.x, state.p, state.g
        ((3+0j), (3+0j), (1+0j))
        """
        radicals = tuple(
            nth_root(v, n, k) for v, k in zip((A, B, C), branches)
        )
        x, p, g = _elementary(radicals)
        return cls(x=complex(x), p=complex(p), g=complex(g), radicals=radicals)


@dataclass(frozen=True)
class QuadSumState:
    x: complex
    p: complex
    q: complex
    h: complex
    radicals: Tuple[complex, ...] = field(default=None, compare=False)

    @classmethod
    def from_radicands(cls, A, B, C, D, n, branches=(0, 0, 0, 0)):
        radicals = tuple(
            nth_root(v, n, k) for v, k in zip((A, B, C, D), branches)
        )
        x, p, q, h = _elementary(radicals)
        return cls(
            x=complex(x), p=complex(p), q=complex(q), h=complex(h),
            radicals=radicals,
        )


def triple_sums(state: TripleSumState, m: int):
    """
    (R_m, S_m) by

        R_m = x R_(m-1) - p R_(m-2) + g R_(m-3)
        S_m = p S_(m-1) - x g S_(m-2) + g^2 S_(m-3)

    starting from R_0 = S_0 = 3, R_1 = x, S_1 = p, R_2 = x^2 - 2p and
    S_2 = p^2 - 2xg.

    >>> triple_sums(TripleSumState(x=1, p=2, g=3), 2)
    (-3, -2)
    >>> triple_sums(TripleSumState(x=1, p=2, g=3), 0)
    (3, 3)
    """
    assert m >= 0, m
    x, p, g = state.x, state.p, state.g
    R = [3, x, x * x - 2 * p]
    S = [3, p, p * p - 2 * x * g]
    for k in range(3, m + 1):
        R.append(x * R[k - 1] - p * R[k - 2] + g * R[k - 3])
        S.append(p * S[k - 1] - x * g * S[k - 2] + g * g * S[k - 3])
    return R[m], S[m]


def direct_triple_sums(state: TripleSumState, m: int):
    """(R_m, S_m) from the radicals the state was built from."""
    assert state.radicals is not None, state
    r = np.asarray(state.radicals, dtype=np.complex128)
    pairs = np.array([a * b for a, b in itertools.combinations(r, 2)])
    return complex(np.sum(r ** m)), complex(np.sum(pairs ** m))


def quad_sums(state: QuadSumState, m: int):
    """
    Direct power sums of the four radical state: the m-th powers of the
    radicals, of the pairwise products and of the products of three.

    >>> state = QuadSumState.from_radicands(1, 1, 1, 1, n=3)
    >>> quad_sums(state, 2)
    ((4+0j), (6+0j), (4+0j))
    """
    assert state.radicals is not None, state
    r = np.asarray(state.radicals, dtype=np.complex128)
    return tuple(
        complex(np.sum(np.array([np.prod(c) for c in itertools.combinations(r, k)]) ** m))
        for k in (1, 2, 3)
    )


@dataclass
class IdentityReport:
    m: int
    deviations: dict  # name -> relative deviation
    tol: float = IDENTITY_TOL

    @property
    def passed(self):
        return {name: d <= self.tol for name, d in self.deviations.items()}

    @property
    def all_passed(self):
        return all(self.passed.values())

    @property
    def max_deviation(self):
        return max(self.deviations.values())


def _relative(lhs, rhs):
    return abs(lhs - rhs) / max(1., abs(lhs), abs(rhs))


def multiplication_identities(state: TripleSumState, m: int, tol=IDENTITY_TOL):
    """
    Doubling and tripling of the power sum index:

        R_2m = R_m^2 - 2 S_m
        S_2m = S_m^2 - 2 R_m g^m
        R_3m = R_m^3 - 3 R_m S_m + 3 g^m
        S_3m = S_m^3 - 3 R_m S_m g^m + 3 g^2m

    >>> report = multiplication_identities(TripleSumState.from_radicands(1, 1, 1, 1), 1)
    >>> report.all_passed, report.max_deviation
    (True, 0.0)
    """
    assert m >= 1, m
    R_m, S_m = triple_sums(state, m)
    R_2m, S_2m = triple_sums(state, 2 * m)
    R_3m, S_3m = triple_sums(state, 3 * m)
    g_m = state.g ** m
    deviations = {
        'R_2m': _relative(R_2m, R_m ** 2 - 2 * S_m),
        'S_2m': _relative(S_2m, S_m ** 2 - 2 * R_m * g_m),
        'R_3m': _relative(R_3m, R_m ** 3 - 3 * R_m * S_m + 3 * g_m),
        'S_3m': _relative(S_3m, S_m ** 3 - 3 * R_m * S_m * g_m + 3 * g_m ** 2),
    }
    report = IdentityReport(m=m, deviations=deviations, tol=tol)
    if not report.all_passed:
        LOG.warning(f'Multiplication identities failed for m = {m}: {deviations}')
    return report


@dataclass(frozen=True)
class EliminationReport:
    alpha: object
    beta: object
    gamma: object
    resolvent: Polynomial
    matches: bool


def quartic_elimination(a, b, c):
    """
    The t-equation t^3 - alpha t^2 + beta t - gamma rebuilt from the power
    sums of the cubic resolvent roots A, B, C: with R = A + B + C,
    S = AB + AC + BC and P = ABC

        alpha = R^2 - 2S,  beta = S^2 - 2RP,  gamma = P^2

    and compared exactly with `squared_resolvent`.

    >>> report = quartic_elimination(28, 48, 0)
    >>> report.alpha, report.beta, report.gamma, report.matches
    (Fraction(98, 1), Fraction(1393, 1), Fraction(1296, 1), True)
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    R, S, P = a / 2, (4 * c + a ** 2) / 16, b ** 2 / 64
    alpha = R ** 2 - 2 * S
    beta = S ** 2 - 2 * R * P
    gamma = P ** 2
    resolvent = Polynomial([-gamma, beta, -alpha, 1])
    expected = squared_resolvent(a, b, c)
    matches = (
        resolvent == expected
        and alpha == a ** 2 / 8 - c / 2
        and beta == c ** 2 / 16 + a ** 2 * c / 32 + a ** 4 / 256 - a * b ** 2 / 64
    )
    if not matches:
        LOG.warning(
            f'Elimination of x^4 = {a} x^2 + {b} x + {c} gave {resolvent}, '
            f'expected {expected}'
        )
    return EliminationReport(
        alpha=alpha, beta=beta, gamma=gamma, resolvent=resolvent, matches=matches,
    )


def elimination_quartic(alpha, beta, gamma_root):
    """
    x^4 - 2 alpha x^2 - 8 x sqrt(gamma) - (4 beta - alpha^2), obtained by
    eliminating p from R_2 = x^2 - 2p = alpha and S_2 = p^2 - 2 x sqrt(gamma)
    = beta. Here alpha, beta and gamma are the coefficients of the cubic
    resolvent, for x^4 = a x^2 + b x + c: a/2, (4c + a^2)/16 and sqrt(gamma)
    = b/8.

    >>> print(elimination_quartic(14, 49, 6))
    x^4 - 28x^2 - 48x
    """
    alpha, beta, gamma_root = (
        as_rational(alpha), as_rational(beta), as_rational(gamma_root)
    )
    return Polynomial([-(4 * beta - alpha ** 2), -8 * gamma_root, -2 * alpha, 0, 1])


@dataclass(frozen=True)
class Candidate:
    multipliers: Tuple[int, int, int, int]
    values: np.ndarray = field(compare=False)
    coeffs: np.ndarray = field(compare=False)  # ascending, monic

    @property
    def max_imag(self):
        return float(np.max(np.abs(self.coeffs.imag)))

    @property
    def subleading_deviation(self):
        return float(abs(self.coeffs[-2]))


@dataclass
class ExplorationReport:
    n: int
    radicands: Tuple[complex, complex, complex, complex]
    radicals: Tuple[complex, complex, complex, complex]
    candidates: Tuple[Candidate, ...]

    @cached_property
    def best(self):
        """The candidate closest to a real depressed polynomial."""
        return min(
            self.candidates,
            key=lambda c: c.max_imag + c.subleading_deviation,
        )


def paired_radicals(A, B, C, D, n):
    """
    Principal nrt(A), nrt(C); nrt(B), nrt(D) such that nrt(A) nrt(B) and
    nrt(C) nrt(D) are the principal roots of AB and CD.
    """
    out = []
    for first, second in ((A, B), (C, D)):
        root_first = nth_root(first, n)
        if root_first == 0:
            root_second = nth_root(second, n)
        else:
            root_second = nth_root(complex(first) * complex(second), n) / root_first
        out += [root_first, root_second]
    return tuple(out)


@dataclass
class QuinticExplorer:
    n: int = 5
    full_enumeration: bool = False
    max_n: int = 16

    def __post_init__(self):
        if self.n < 2:
            raise DegreeTooLow('The explorer needs n >= 2', self.n)
        if self.n > self.max_n:
            raise DegreeUnsupported(f'n = {self.n} > max_n = {self.max_n}', self.n)

    def multipliers(self):
        """
        Multiplier tuples m; the candidate of m has the values
        x_s = sum_r w^(s m_r) nrt(R_r), s = 0 .. n-1, w = exp(2 pi i / n).

        By default (1, -1, j, -j) for j = 0 .. n-1, which keeps
        nrt(A) nrt(B) and nrt(C) nrt(D) fixed. With full_enumeration all n^4
        tuples.

        >>> QuinticExplorer(n=3).multipliers().tolist()
        [[1, 2, 0, 0], [1, 2, 1, 2], [1, 2, 2, 1]]
        """
        n = self.n
        if self.full_enumeration:
            LOG.warning(
                f'Full enumeration of {n ** 4} multiplier tuples '
                f'with {n} values each.'
            )
            return np.array(list(itertools.product(range(n), repeat=4)))
        return np.array([[1, -1 % n, j, -j % n] for j in range(n)])

    def __call__(self, A, B, C, D):
        n = self.n
        radicands = tuple(complex(v) for v in (A, B, C, D))
        radicals = np.array(paired_radicals(*radicands, n), dtype=np.complex128)

        multipliers = self.multipliers()
        s = np.arange(n)
        exponents = (s[None, :, None] * multipliers[:, None, :]) % n
        unity = np.exp(2j * np.pi * exponents / n)
        values = np.sum(unity * radicals, axis=-1)  # candidates x n

        candidates = tuple(
            Candidate(
                multipliers=tuple(int(v) for v in m),
                values=v,
                coeffs=np.poly(v)[::-1].astype(np.complex128),
            )
            for m, v in zip(multipliers, values)
        )
        LOG.debug(f'Explored {len(candidates)} candidates for n = {n}.')
        return ExplorationReport(
            n=n,
            radicands=radicands,
            radicals=tuple(complex(r) for r in radicals),
            candidates=candidates,
        )


def get_explorer(
        n=5,
        full_enumeration=False,
        max_n=16,
):
    return QuinticExplorer(
        n=n,
        full_enumeration=full_enumeration,
        max_n=max_n,
    )


def quintic_explorer(A, B, C, D, n=5, full_enumeration=False, max_n=16):
    """
    >>> report = quintic_explorer(0, 0, 0, 0, n=5)
    >>> np.abs(report.best.coeffs).tolist()
    [0.0, 0.0, 0.0, 0.0, 0.0, 1.0]
    """
    explorer = get_explorer(n=n, full_enumeration=full_enumeration, max_n=max_n)
    return explorer(A, B, C, D)
