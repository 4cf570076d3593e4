"""
Closed form radical expressions.

A RadicalExpr is a tree of

    Const(value)                  exact rational
    Sum(children)                 at least two children
    Product(children)             at least two children
    Root(index, radicand, branch) one of the `index` complex roots

The trees are never simplified; numeric certification carries correctness.
Root(n, r, k) evaluates to |v|^(1/n) exp(i (arg(v) + 2 pi k) / n) with
v = eval(r) and arg(v) in (-pi, pi]. The root of zero is zero for every
branch.
"""
import functools
import numbers
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from pb_resolvent.math.polynomial import as_rational, rational_to_str


@dataclass(frozen=True)
class BranchConvention:
    name: str = 'principal'

    def __post_init__(self):
        assert self.name == 'principal', (
            'Only the principal branch convention is supported.', self.name
        )


PRINCIPAL = BranchConvention()


class RadicalExpr:
    def evaluate(self):
        return eval_radical(self)

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Const(RadicalExpr):
    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'value', as_rational(self.value))


@dataclass(frozen=True)
class Sum(RadicalExpr):
    children: Tuple[RadicalExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, 'children', tuple(self.children))
        assert len(self.children) >= 2, self.children
        assert all(isinstance(c, RadicalExpr) for c in self.children), self.children


@dataclass(frozen=True)
class Product(RadicalExpr):
    children: Tuple[RadicalExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, 'children', tuple(self.children))
        assert len(self.children) >= 2, self.children
        assert all(isinstance(c, RadicalExpr) for c in self.children), self.children


@dataclass(frozen=True)
class Root(RadicalExpr):
    index: int
    radicand: RadicalExpr
    branch: int = 0

    def __post_init__(self):
        assert isinstance(self.index, numbers.Integral) and self.index >= 2, self.index
        assert 0 <= self.branch < self.index, (self.branch, self.index)
        assert isinstance(self.radicand, RadicalExpr), self.radicand


def const(value):
    if isinstance(value, RadicalExpr):
        return value
    return Const(value)


def add(*terms):
    """Sum of the terms; zero constants are dropped.

    >>> print(add(1, Root(2, Const(5))))
    1 + root(2, 5, 0)
    >>> print(add(0, Root(2, Const(5))))
    root(2, 5, 0)
    >>> add(Const(3))
    Const(value=Fraction(3, 1))
    """
    terms = [const(t) for t in terms]
    terms = [t for t in terms if t != Const(0)] or [Const(0)]
    if len(terms) == 1:
        return terms[0]
    return Sum(terms)


def mul(*factors):
    """Product of the factors; unit constants are dropped.

    >>> print(mul('1/2', Root(2, Const(5))))
    1/2 * root(2, 5, 0)
    >>> print(mul(1, Root(2, Const(5))))
    root(2, 5, 0)
    """
    factors = [const(f) for f in factors]
    factors = [f for f in factors if f != Const(1)] or [Const(1)]
    if len(factors) == 1:
        return factors[0]
    return Product(factors)


def principal_arg(v):
    """arg(v) in (-pi, pi]; a negative real with signed zero imaginary part
    gives +pi.

    >>> principal_arg(complex(-3, -0.0)) == np.pi
    True
    """
    theta = float(np.angle(v))
    if theta <= -np.pi:
        theta = np.pi
    return theta


def nth_root(v, n, branch=0):
    """
    >>> nth_root(8, 3)
    (2+0j)
    >>> abs(nth_root(1, 3, 1) - (-1 + 1j * np.sqrt(3)) / 2) < 1e-15
    True
    >>> nth_root(0, 5, 3)
    0j
    """
    v = complex(v)
    if v == 0:
        return 0j
    if v.imag == 0 and v.real > 0 and branch == 0:
        return complex(v.real ** (1 / n))
    theta = (principal_arg(v) + 2 * np.pi * branch) / n
    return complex(abs(v) ** (1 / n) * np.exp(1j * theta))


def branch_of(value, radicand, n):
    """Index k of the branch of the n-th root of `radicand` closest to value.

    >>> branch_of(-1, 1, 2)
    1
    """
    candidates = [nth_root(radicand, n, k) for k in range(n)]
    return int(np.argmin([abs(c - value) for c in candidates]))


@functools.singledispatch
def eval_radical(e, convention=PRINCIPAL):
    """
    >>> eval_radical(Root(3, Const(8)))
    (2+0j)
    >>> abs(eval_radical(Root(2, Const(-3))) - 1.7320508075688772j) < 1e-15
    True
    >>> z = eval_radical(Root(3, Const(1), 1))
    >>> abs(z - (-1 + 1j * np.sqrt(3)) / 2) < 1e-15
    True
    """
    raise TypeError(type(e), e)


@eval_radical.register(Const)
def _(e, convention=PRINCIPAL):
    return complex(float(e.value))


@eval_radical.register(Sum)
def _(e, convention=PRINCIPAL):
    return sum((eval_radical(c, convention) for c in e.children), 0j)


@eval_radical.register(Product)
def _(e, convention=PRINCIPAL):
    out = 1 + 0j
    for c in e.children:
        out *= eval_radical(c, convention)
    return out


@eval_radical.register(Root)
def _(e, convention=PRINCIPAL):
    return nth_root(eval_radical(e.radicand, convention), e.index, e.branch)


def render(e):
    """
    Unambiguous infix text. Sums inside products are parenthesized.

    >>> render(Sum([Root(3, Const(8), 0), Root(3, Const(1), 0)]))
    'root(3, 8, 0) + root(3, 1, 0)'
    >>> render(Const(Fraction(-3, 2)))
    '-3/2'
    >>> render(Product([Const(Fraction(1, 2)), Root(2, Const(5), 0)]))
    '1/2 * root(2, 5, 0)'
    >>> render(Product([Const(2), Sum([Const(1), Const(-1)])]))
    '2 * (1 + -1)'
    """
    if isinstance(e, Const):
        return rational_to_str(e.value)
    elif isinstance(e, Sum):
        return ' + '.join(
            f'({render(c)})' if isinstance(c, Sum) else render(c)
            for c in e.children
        )
    elif isinstance(e, Product):
        return ' * '.join(
            f'({render(c)})' if isinstance(c, (Sum, Product)) else render(c)
            for c in e.children
        )
    elif isinstance(e, Root):
        return f'root({e.index}, {render(e.radicand)}, {e.branch})'
    else:
        raise TypeError(type(e), e)


SQRT_MINUS_3 = Root(2, Const(-3))
SQRT_5 = Root(2, Const(5))


def _half_unit(real_sign, imag_sign):
    # (real_sign + imag_sign sqrt(-3)) / 2
    return add(Fraction(real_sign, 2), mul(Fraction(imag_sign, 2), SQRT_MINUS_3))


def _quarter_unit(sqrt5_sign, outer_sign):
    # (-1 + s sqrt5 + t sqrt(-10 - 2 s sqrt5)) / 4
    inner = Root(2, add(-10, mul(-2 * sqrt5_sign, SQRT_5)))
    return mul(
        Fraction(1, 4),
        add(-1, mul(sqrt5_sign, SQRT_5), mul(outer_sign, inner)),
    )


# Exact forms of exp(2 pi i k / n), index k.
_EXACT_UNITY = {
    1: [Const(1)],
    2: [Const(1), Const(-1)],
    3: [Const(1), _half_unit(-1, 1), _half_unit(-1, -1)],
    4: [Const(1), Root(2, Const(-1)), Const(-1), mul(-1, Root(2, Const(-1)))],
    5: [
        Const(1),
        _quarter_unit(1, 1),
        _quarter_unit(-1, 1),
        _quarter_unit(-1, -1),
        _quarter_unit(1, -1),
    ],
    6: [
        Const(1),
        _half_unit(1, 1),
        _half_unit(-1, 1),
        Const(-1),
        _half_unit(-1, -1),
        _half_unit(1, -1),
    ],
}


def roots_of_unity(n):
    """
    All n-th roots of unity as (exact form or None, value) pairs, ordered by
    k in exp(2 pi i k / n). Exact forms exist for n <= 6.

    >>> [(render(e), round(v.real, 12), round(v.imag, 12)) for e, v in roots_of_unity(2)]
    [('1', 1.0, 0.0), ('-1', -1.0, 0.0)]
    >>> render(roots_of_unity(3)[1][0])
    '-1/2 + 1/2 * root(2, -3, 0)'
    >>> roots_of_unity(7)[3][0] is None
    True
    """
    assert isinstance(n, numbers.Integral) and n >= 1, n
    exact = _EXACT_UNITY.get(n, [None] * n)
    out = []
    for k in range(n):
        if k == 0:
            value = 1 + 0j
        else:
            value = complex(np.exp(2j * np.pi * k / n))
        out.append((exact[k], value))
    return out
