"""
Parser of polynomial expressions in one variable.

Grammar (whitespace is ignored, '−' is read as '-'):

    polynomial := [sign] term (sign term)*
    term       := coefficient ['*'] [power] | power
    power      := variable ['^' integer]
    coefficient:= integer ['/' integer]
    sign       := '+' | '-'

The canonical text `Polynomial.to_text` is a fixed point of
`parse_poly` followed by `to_text`.
"""
import re
from fractions import Fraction

from pb_resolvent.exceptions import MixedVariables, ParseError
from pb_resolvent.math.polynomial import Polynomial, as_rational

_INTEGER = re.compile(r'\d+')
_VARIABLE = re.compile(r'[A-Za-z]')

# Largest degree a text may ask for.
MAX_EXPONENT = 4096


class PolyParser:
    """
    >>> parser = PolyParser('y^4 + 3y^3 + 4y^2 + 3y + 1')
    >>> parser.parse()
    Polynomial([1, 3, 4, 3, 1])
    >>> parser.variable
    'y'
    """
    def __init__(self, text):
        self.text = text
        self.normalized = text.replace('−', '-')
        self.pos = 0
        self.variable = None

    def error(self, msg, cls=ParseError):
        return cls(msg, text=self.text, position=self.pos)

    def skip_whitespace(self):
        while self.pos < len(self.normalized) and self.normalized[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_whitespace()
        if self.pos < len(self.normalized):
            return self.normalized[self.pos]
        return None

    def take(self, char):
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def integer(self, expected):
        self.skip_whitespace()
        match = _INTEGER.match(self.normalized, self.pos)
        if match is None:
            raise self.error(f'expected {expected}')
        self.pos = match.end()
        return int(match.group())

    def coefficient(self):
        numerator = self.integer('a coefficient')
        if self.take('/'):
            start = self.pos
            denominator = self.integer('a denominator')
            if denominator == 0:
                self.pos = start
                raise self.error('zero denominator')
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def power(self):
        self.skip_whitespace()
        match = _VARIABLE.match(self.normalized, self.pos)
        if match is None:
            raise self.error('expected a variable')
        symbol = match.group()
        if self.variable is None:
            self.variable = symbol
        elif symbol != self.variable:
            raise self.error(
                f'second variable {symbol!r} next to {self.variable!r}',
                cls=MixedVariables,
            )
        self.pos = match.end()
        if self.take('^'):
            self.skip_whitespace()
            start = self.pos
            exponent = self.integer('an exponent')
            if exponent > MAX_EXPONENT:
                self.pos = start
                raise self.error(f'exponent {exponent} exceeds {MAX_EXPONENT}')
            return exponent
        return 1

    def term(self):
        char = self.peek()
        if char is not None and char.isdigit():
            coeff = self.coefficient()
            explicit = self.take('*')
            char = self.peek()
            if explicit or (char is not None and _VARIABLE.match(char)):
                return coeff, self.power()
            return coeff, 0
        return Fraction(1), self.power()

    def parse(self):
        terms = {}
        sign = 1
        if self.take('-'):
            sign = -1
        else:
            self.take('+')
        while True:
            if self.peek() is None:
                raise self.error('expected a term')
            coeff, exponent = self.term()
            terms[exponent] = terms.get(exponent, 0) + sign * coeff
            char = self.peek()
            if char is None:
                break
            if char == '+':
                sign = 1
            elif char == '-':
                sign = -1
            else:
                raise self.error("expected '+' or '-'")
            self.pos += 1

        coeffs = [Fraction(0)] * (max(terms) + 1)
        for exponent, coeff in terms.items():
            coeffs[exponent] += coeff
        return Polynomial(coeffs)


def parse_poly(text):
    """
    >>> parse_poly('x^3 - 6x - 9')
    Polynomial([-9, -6, 0, 1])
    >>> parse_poly('x + x')
    Polynomial([0, 2])
    >>> parse_poly('-3/4x^2 + 1/2')
    Polynomial(['1/2', 0, '-3/4'])
    >>> parse_poly('2*x^2 - 2 * x^2')
    Polynomial([])
    >>> parse_poly('x^2 + y')
    Traceback (most recent call last):
    ...
    pb_resolvent.exceptions.MixedVariables: second variable 'y' next to 'x' at position 6
        x^2 + y
              ^
    >>> parse_poly('x^ + 1')
    Traceback (most recent call last):
    ...
    pb_resolvent.exceptions.ParseError: expected an exponent at position 3
        x^ + 1
           ^
    """
    return PolyParser(text).parse()


def parse_source(text):
    """The polynomial and its variable symbol ('x' for constants)."""
    parser = PolyParser(text)
    p = parser.parse()
    return p, parser.variable or 'x'


def parse_coeffs(text):
    """
    Ascending coefficient list, separated by commas and/or whitespace.

    >>> parse_coeffs('-9, -6, 0, 1')
    Polynomial([-9, -6, 0, 1])
    >>> parse_coeffs('1/2 0 1')
    Polynomial(['1/2', 0, 1])
    >>> parse_coeffs('1, 0.5')
    Traceback (most recent call last):
    ...
    pb_resolvent.exceptions.ParseError: expected a rational, got '0.5'
    """
    items = [item for item in re.split(r'[,\s]+', text.strip()) if item]
    if not items:
        raise ParseError('expected at least one coefficient')
    coeffs = []
    for item in items:
        if not re.fullmatch(r'[-+−]?\d+(/\d+)?', item):
            raise ParseError(f'expected a rational, got {item!r}')
        try:
            coeffs.append(as_rational(item.replace('−', '-')))
        except ZeroDivisionError:
            raise ParseError(f'zero denominator in {item!r}') from None
    return Polynomial(coeffs)
