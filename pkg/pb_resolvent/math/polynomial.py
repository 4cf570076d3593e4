"""
Exact polynomial arithmetic over the rationals.

Legend:
    coeffs[k] ... coefficient of x^k (ascending, the written form of the
                  equations is descending)
    lead      ... coeffs[-1]

A polynomial is stored normalized: no trailing zero coefficients. The zero
polynomial has an empty coefficient tuple and no degree (`degree` is None);
operations that need a degree reject it.
"""
import numbers
import operator
from fractions import Fraction

import numpy as np
from cached_property import cached_property

from pb_resolvent.exceptions import (
    DegreeTooLow,
    DivisionByZeroPolynomial,
)
from pb_resolvent.mapping import Dispatcher

ExactRational = Fraction


def as_rational(value):
    """
    >>> as_rational(3)
    Fraction(3, 1)
    >>> as_rational('-6/4')
    Fraction(-3, 2)
    >>> as_rational(Fraction(1, 3))
    Fraction(1, 3)
    >>> as_rational(0.5)
    Traceback (most recent call last):
    ...
    TypeError: (0.5, 'Floats are not exact. Use a str or a Fraction.')
    """
    if isinstance(value, Fraction):
        return value
    elif isinstance(value, numbers.Integral):
        return Fraction(int(value))
    elif isinstance(value, str):
        return Fraction(value)
    elif isinstance(value, numbers.Rational):
        return Fraction(value.numerator, value.denominator)
    else:
        raise TypeError(value, 'Floats are not exact. Use a str or a Fraction.')


def rational_to_str(value):
    """
    >>> rational_to_str(Fraction(-3, 2))
    '-3/2'
    >>> rational_to_str(Fraction(4))
    '4'
    """
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


class Polynomial:
    """
    Immutable dense polynomial with ascending `Fraction` coefficients.

    >>> p = Polynomial([-9, -6, 0, 1])
    >>> p
    Polynomial([-9, -6, 0, 1])
    >>> print(p)
    x^3 - 6x - 9
    >>> p.degree
    3
    >>> Polynomial([1, 2, 0, 0])
    Polynomial([1, 2])
    >>> Polynomial([0, 0]).is_zero, Polynomial([0, 0]).degree
    (True, None)
    >>> print(Polynomial(['1/2', 0, '-3/4']))
    -3/4x^2 + 1/2
    """
    def __init__(self, coeffs=()):
        coeffs = [as_rational(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, degree, coeff=1):
        """
        >>> Polynomial.monomial(2, 3)
        Polynomial([0, 0, 3])
        """
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots):
        """Product of (x - r) over exact roots.

        >>> Polynomial.from_roots([1, 2])
        Polynomial([2, -3, 1])
        """
        p = cls([1])
        for r in roots:
            p = p * cls([-as_rational(r), 1])
        return p

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def is_zero(self):
        return len(self._coeffs) == 0

    @property
    def degree(self):
        if self.is_zero:
            return None
        return len(self._coeffs) - 1

    @property
    def lead(self):
        if self.is_zero:
            return Fraction(0)
        return self._coeffs[-1]

    @property
    def is_monic(self):
        return self.lead == 1

    def coeff(self, k):
        """Coefficient of x^k, zero outside the stored range."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    @cached_property
    def float_coeffs(self):
        """Ascending coefficients as a complex128 array (evaluation domain)."""
        return np.array([complex(float(c)) for c in self._coeffs],
                        dtype=np.complex128)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        items = ', '.join(
            str(c.numerator) if c.denominator == 1 else repr(rational_to_str(c))
            for c in self._coeffs
        )
        return f'{self.__class__.__name__}([{items}])'

    def __str__(self):
        return self.to_text()

    def to_text(self, variable='x'):
        """
        Canonical text, the inverse of `pb_resolvent.io.parse_poly`.

        >>> Polynomial([1, 3, 4, 3, 1]).to_text('y')
        'y^4 + 3y^3 + 4y^2 + 3y + 1'
        >>> Polynomial([]).to_text()
        '0'
        >>> Polynomial([0, -1]).to_text()
        '-x'
        """
        if self.is_zero:
            return '0'
        parts = []
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = '-' if c < 0 else '+'
            mag = abs(c)
            if k == 0:
                body = rational_to_str(mag)
            else:
                power = variable if k == 1 else f'{variable}^{k}'
                body = power if mag == 1 else rational_to_str(mag) + power
            if not parts:
                parts.append(body if sign == '+' else f'-{body}')
            else:
                parts.append(f'{sign} {body}')
        return ' '.join(parts)

    def __call__(self, z):
        return poly_eval(self, z)

    def __neg__(self):
        return Polynomial([-c for c in self._coeffs])

    def __add__(self, other):
        other = _as_polynomial(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_polynomial(other))

    def __rsub__(self, other):
        return _as_polynomial(other) - self

    def __mul__(self, other):
        other = _as_polynomial(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        assert isinstance(exponent, numbers.Integral) and exponent >= 0, exponent
        out = Polynomial([1])
        for _ in range(exponent):
            out = out * self
        return out

    def __divmod__(self, other):
        return poly_divmod(self, _as_polynomial(other))

    def scale_by(self, factor):
        factor = as_rational(factor)
        return Polynomial([c * factor for c in self._coeffs])

    def compose(self, other):
        """p(other(x)) by Horner's scheme.

        >>> Polynomial([0, 0, 1]).compose(Polynomial([1, 1]))
        Polynomial([1, 2, 1])
        """
        other = _as_polynomial(other)
        out = Polynomial()
        for c in reversed(self._coeffs):
            out = out * other + Polynomial([c])
        return out

    def reversed(self):
        """x^deg p(1/x), i.e. the coefficient sequence read backwards."""
        return Polynomial(self._coeffs[::-1])


def _as_polynomial(value):
    if isinstance(value, Polynomial):
        return value
    return Polynomial([value])


def poly_eval(p: Polynomial, z):
    """
    Horner evaluation. The exact coefficients are converted to double
    precision at evaluation time. `z` may be a number or a numpy array.

    >>> poly_eval(Polynomial([-9, -6, 0, 1]), 3)
    0j
    >>> poly_eval(Polynomial([]), 1 + 2j)
    0j
    >>> poly_eval(Polynomial([1, 0, 1]), 1j)
    0j
    """
    if isinstance(z, np.ndarray):
        acc = np.zeros(z.shape, dtype=np.complex128)
        for c in reversed(p.float_coeffs):
            acc = acc * z + c
        return acc
    acc = 0j
    z = complex(z)
    for c in reversed(p.float_coeffs.tolist()):
        acc = acc * z + c
    return acc


_arith = Dispatcher({
    'add': operator.add,
    'sub': operator.sub,
    'mul': operator.mul,
})


def poly_arith(p: Polynomial, q: Polynomial, op: str):
    """
    >>> poly_arith(Polynomial([1, 1, 1]), Polynomial([1, 2, 1]), 'mul')
    Polynomial([1, 3, 4, 3, 1])
    >>> p = Polynomial([1, 2, 3])
    >>> poly_arith(p, -p, 'add')
    Polynomial([])
    >>> poly_arith(p, Polynomial([1]), 'mul') == p
    True
    """
    return _arith[op](p, q)


def poly_divmod(p: Polynomial, d: Polynomial):
    """
    Exact long division: p = quotient * d + remainder, deg(remainder) < deg(d).

    >>> poly_divmod(Polynomial([1, 0, 0, 1]), Polynomial([1, 1]))
    (Polynomial([1, -1, 1]), Polynomial([]))
    >>> poly_divmod(Polynomial([1, 3, 4, 3, 1]), Polynomial([1, 1, 1]))
    (Polynomial([1, 2, 1]), Polynomial([]))
    >>> poly_divmod(Polynomial([1, 2]), Polynomial([]))
    Traceback (most recent call last):
    ...
    pb_resolvent.exceptions.DivisionByZeroPolynomial: Division by the zero polynomial.
    """
    if d.is_zero:
        raise DivisionByZeroPolynomial('Division by the zero polynomial.')
    remainder = list(p.coeffs)
    n_d = d.degree
    if p.is_zero or p.degree < n_d:
        return Polynomial(), p
    quotient = [Fraction(0)] * (p.degree - n_d + 1)
    lead = d.lead
    for k in range(p.degree - n_d, -1, -1):
        factor = remainder[k + n_d] / lead
        quotient[k] = factor
        if factor == 0:
            continue
        for j, c in enumerate(d.coeffs):
            remainder[k + j] -= factor * c
    return Polynomial(quotient), Polynomial(remainder[:n_d])


def depress(p: Polynomial):
    """
    Remove the x^(n-1) term: q(x) = p(x + shift) / lead(p) with
    shift = -a_(n-1) / (n a_n). r is a root of q iff r + shift is a root of p.

    >>> depress(Polynomial([1, 3, 3, 1]))
    (Polynomial([0, 0, 0, 1]), Fraction(-1, 1))
    >>> depress(Polynomial([-9, -6, 0, 1]))
    (Polynomial([-9, -6, 0, 1]), Fraction(0, 1))
    >>> depress(Polynomial([2, 4, 2]))
    (Polynomial([0, 0, 1]), Fraction(-1, 1))
    >>> depress(Polynomial([1, 1]))
    Traceback (most recent call last):
    ...
    pb_resolvent.exceptions.DegreeTooLow: ('depress needs a degree >= 2', Polynomial([1, 1]))
    """
    if p.is_zero or p.degree < 2:
        raise DegreeTooLow('depress needs a degree >= 2', p)
    n = p.degree
    shift = -p.coeff(n - 1) / (n * p.lead)
    q = p.compose(Polynomial([shift, 1])).scale_by(1 / p.lead)
    assert q.coeff(n - 1) == 0, (p, q, shift)
    return q, shift


def is_palindromic(p: Polynomial):
    """
    >>> is_palindromic(Polynomial([1, 6, 14, 18, 14, 6, 1]))
    True
    >>> is_palindromic(Polynomial([3, 2, 1]))
    False
    >>> is_palindromic(Polynomial([5]))
    True
    """
    return p.coeffs == p.coeffs[::-1]


def scale(p: Polynomial, z):
    """
    Magnitude scale of p at z: sum_k |a_k| max(1, |z|)^k.
    Residuals are certified relative to this value.

    >>> scale(Polynomial([-9, -6, 0, 1]), 0.5)
    16.0
    >>> scale(Polynomial([-9, -6, 0, 1]), 2)
    29.0
    """
    if isinstance(z, np.ndarray):
        r = np.maximum(1., np.abs(z))
    else:
        r = max(1., abs(complex(z)))
    acc = 0. * r
    for c in reversed(np.abs(p.float_coeffs).tolist()):
        acc = acc * r + c
    return acc


def residual(p: Polynomial, z):
    """|p(z)|, the certification residual."""
    if isinstance(z, np.ndarray):
        return np.abs(poly_eval(p, z))
    return abs(poly_eval(p, z))
