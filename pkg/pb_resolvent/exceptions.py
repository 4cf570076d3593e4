"""
All errors raised by pb_resolvent derive from ResolventError.

Each class carries the exit code the command line reports for it:

    0 success
    2 parse error
    3 method precondition error
    4 certification failure
    5 oracle non-convergence
"""


class ResolventError(Exception):
    exit_code = 1


class ParseError(ResolventError):
    """
    >>> print(ParseError('expected exponent', text='x^', position=2))
    expected exponent at position 2
        x^
          ^
    """
    exit_code = 2

    def __init__(self, msg, text=None, position=None):
        super().__init__(msg)
        self.msg = msg
        self.text = text
        self.position = position

    def __str__(self):
        if self.text is None or self.position is None:
            return self.msg
        return (
            f'{self.msg} at position {self.position}\n'
            f'    {self.text}\n'
            f'    {" " * self.position}^'
        )


class MixedVariables(ParseError):
    pass


class PreconditionError(ResolventError, ValueError):
    exit_code = 3


class DivisionByZeroPolynomial(PreconditionError, ZeroDivisionError):
    pass


class DegreeTooLow(PreconditionError):
    pass


class DegreeMismatch(PreconditionError):
    pass


class DegreeUnsupported(PreconditionError):
    pass


class NotMoivreForm(PreconditionError):
    pass


class NotPalindromic(PreconditionError):
    pass


class OddDegree(PreconditionError):
    pass


class NotMonic(PreconditionError):
    pass


class RepeatedFactor(PreconditionError):
    pass


class BoundaryAlpha(PreconditionError):
    pass


class LengthMismatch(PreconditionError):
    pass


class CertificationError(ResolventError):
    exit_code = 4


class NonConvergence(ResolventError):
    """
    Raised by the numeric oracle. The best effort roots and their residuals
    are kept, so a caller can still report them.
    """
    exit_code = 5

    def __init__(self, msg, roots=None, residuals=None):
        super().__init__(msg)
        self.roots = roots
        self.residuals = residuals

    def __str__(self):
        s = super().__str__()
        if self.residuals is not None and len(self.residuals) > 0:
            s += f'\nMax residual: {max(self.residuals)!r}'
        return s
