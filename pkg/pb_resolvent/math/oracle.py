"""
Independent numeric root finder: the verification oracle for every closed
form.

The iteration is Aberth-Ehrlich with simultaneous (Jacobi) updates of all
roots, vectorized with numpy. Multiple roots are not deflated; the contract
of the oracle is residual level, not multiplicity level.
"""
import logging
from dataclasses import dataclass

import numpy as np

from pb_resolvent.exceptions import (
    DegreeTooLow,
    LengthMismatch,
    NonConvergence,
)
from pb_resolvent.math.polynomial import Polynomial, scale

LOG = logging.getLogger('oracle')

# Residual bound a returned root has to satisfy, relative to `scale`.
RESIDUAL_TOL = 1e-8

# Start angles are 2 pi k / n + ANGULAR_OFFSET / n. The offset is irrational
# to break the symmetry of real coefficient polynomials.
ANGULAR_OFFSET = np.sqrt(2)


@dataclass(frozen=True)
class OracleConfig:
    max_iterations: int = 500
    convergence_tol: float = 1e-13
    initial_radius_factor: float = 1.0

    def __post_init__(self):
        assert self.max_iterations >= 1, self.max_iterations
        assert self.convergence_tol > 0, self.convergence_tol
        assert self.initial_radius_factor > 0, self.initial_radius_factor


def initial_guesses(p: Polynomial, cfg: OracleConfig = OracleConfig()):
    """
    >>> z = initial_guesses(Polynomial([-1, 0, 1]))
    >>> np.round(np.abs(z), 12)
    array([2., 2.])
    """
    coeffs = p.float_coeffs
    n = p.degree
    radius = 1 + np.max(np.abs(coeffs[:-1])) / np.abs(coeffs[-1])
    radius *= cfg.initial_radius_factor
    angles = (2 * np.pi * np.arange(n) + ANGULAR_OFFSET) / n
    return radius * np.exp(1j * angles)


def _aberth_step(coeffs_desc, deriv_desc, z):
    pz = np.polyval(coeffs_desc, z)
    dpz = np.polyval(deriv_desc, z)

    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, 1)
    inv = 1 / diff
    np.fill_diagonal(inv, 0)
    repulsion = np.sum(inv, axis=1)

    with np.errstate(divide='ignore', invalid='ignore'):
        newton = pz / dpz
        delta = newton / (1 - newton * repulsion)

    # Exact hits and stationary points: keep the root resp. nudge it.
    delta = np.where(pz == 0, 0, delta)
    bad = ~np.isfinite(delta)
    if np.any(bad):
        delta[bad] = 1e-3 * (1 + np.abs(z[bad])) * np.exp(1j * ANGULAR_OFFSET)
    return delta


def find_roots_numeric(p: Polynomial, cfg: OracleConfig = OracleConfig()):
    """
    All deg(p) roots of p. Raises NonConvergence when a residual exceeds
    RESIDUAL_TOL * scale(p, root) after the iteration stopped.

    >>> roots = find_roots_numeric(Polynomial([-9, -6, 0, 1]))
    >>> expected = [3, (-3 + 1j * np.sqrt(3)) / 2, (-3 - 1j * np.sqrt(3)) / 2]
    >>> multiset_match(roots, expected, 1e-10) is not None
    True
    >>> roots = find_roots_numeric(Polynomial([1, -2, 1]))
    >>> np.allclose(roots, 1, atol=1e-6)
    True
    """
    if p.is_zero or p.degree < 1:
        raise DegreeTooLow('The oracle needs a degree >= 1', p)

    coeffs_desc = p.float_coeffs[::-1]
    if p.degree == 1:
        return np.array([-coeffs_desc[1] / coeffs_desc[0]])

    deriv_desc = np.polyder(coeffs_desc)
    z = initial_guesses(p, cfg)

    # Roundoff floor of the residual; below it an update is noise.
    floor = 4 * np.finfo(np.float64).eps * p.degree

    iteration = 0
    for iteration in range(1, cfg.max_iterations + 1):
        delta = _aberth_step(coeffs_desc, deriv_desc, z)
        z = z - delta
        step = np.max(np.abs(delta) / np.maximum(1, np.abs(z)))
        if step < cfg.convergence_tol:
            break
        if np.all(np.abs(np.polyval(coeffs_desc, z)) <= floor * scale(p, z)):
            break

    residuals = np.abs(np.polyval(coeffs_desc, z))
    bound = RESIDUAL_TOL * scale(p, z)
    LOG.debug(
        f'Oracle stopped after {iteration} iterations, '
        f'max relative residual {float(np.max(residuals / bound)) * RESIDUAL_TOL!r}'
    )
    if np.any(residuals > bound):
        raise NonConvergence(
            f'Oracle did not reach the residual bound for {p} '
            f'within {cfg.max_iterations} iterations.',
            roots=z,
            residuals=residuals,
        )
    return z


def multiset_match(u, v, tol):
    """
    Greedy nearest neighbour matching of two root multisets. Pairs are taken
    in order of increasing distance. Returns the list of index pairs (i, j)
    or None when a matched pair is further apart than tol.

    >>> multiset_match([1, 2], [2.0 + 1e-12, 1.0], 1e-9)
    [(0, 1), (1, 0)]
    >>> multiset_match([0], [1], 0.5) is None
    True
    >>> multiset_match([0], [1, 2], 0.5)
    Traceback (most recent call last):
    ...
    pb_resolvent.exceptions.LengthMismatch: ('Multisets differ in size', 1, 2)
    """
    u = np.asarray(u, dtype=np.complex128).ravel()
    v = np.asarray(v, dtype=np.complex128).ravel()
    if len(u) != len(v):
        raise LengthMismatch('Multisets differ in size', len(u), len(v))

    distance = np.abs(u[:, None] - v[None, :])
    order = np.argsort(distance, axis=None, kind='stable')
    used_u = np.zeros(len(u), dtype=bool)
    used_v = np.zeros(len(v), dtype=bool)
    pairs = []
    for flat in order:
        i, j = np.unravel_index(flat, distance.shape)
        if used_u[i] or used_v[j]:
            continue
        if distance[i, j] > tol:
            return None
        used_u[i] = used_v[j] = True
        pairs.append((int(i), int(j)))
        if len(pairs) == len(u):
            break
    return sorted(pairs)
