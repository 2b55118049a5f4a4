#
# Copyright 2026 The kahlerlens developers.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction
from functools import wraps
from math import gcd

import pandas as pd
from IPython.display import display


SCHEMA_VERSION = 1


class KahlerLensError(Exception):
    """Base class of every error raised by kahlerlens."""
    pass


class VariableCountMismatchError(KahlerLensError, ValueError):
    pass


class NotDivisibleError(KahlerLensError, ArithmeticError):
    """
    Raised by exact division when the divisor does not divide the dividend.
    The nonzero partial remainder is kept on the exception.
    """

    def __init__(self, remainder, message=None):
        self.remainder = remainder
        if message is None:
            message = "polynomial is not exactly divisible, remainder {}" \
                .format(remainder)
        super(NotDivisibleError, self).__init__(message)


class PolynomialSyntaxError(KahlerLensError, ValueError):
    """
    Raised when a polynomial expression cannot be parsed. `position` is the
    0-based character offset of the failure inside `text`.
    """

    def __init__(self, message, text=None, position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = "{} (at position {})".format(message, position)
        super(PolynomialSyntaxError, self).__init__(message)


class UnknownVariableError(PolynomialSyntaxError):
    pass


class NegativeExponentError(PolynomialSyntaxError):
    pass


class InvalidEinsteinDataError(KahlerLensError, ValueError):
    pass


class InadmissibleCandidateError(KahlerLensError, ValueError):
    pass


class InvalidCauchyDatumError(KahlerLensError, ValueError):
    pass


class ObstructionError(KahlerLensError, ArithmeticError):
    """
    No polynomial continues a truncated expansion: the equation at x2-order
    `order` cannot be solved for the next coefficient. `remainder` is the
    nonzero remainder of the failed division.
    """

    def __init__(self, order, remainder):
        self.order = order
        self.remainder = remainder
        super(ObstructionError, self).__init__(
            "expansion obstructed at x2-order {}, remainder {}"
            .format(order, remainder))


class RootExtractionError(KahlerLensError, ArithmeticError):
    pass


class UnsupportedDimensionError(KahlerLensError, ValueError):
    pass


class NonIntegralWeightError(KahlerLensError, ValueError):
    pass


def obstruction_hint(func):
    """
    Give user a more informative error when an exact division that is
    guaranteed by the Monge-Ampere structure fails.
    """
    @wraps(func)
    def dec(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except NotDivisibleError:
            print("""
    The determinant of the Monge-Ampere matrix was not divisible by the
    expected power of the candidate. This division holds for every
    polynomial with nonzero constant term, so its failure means the input
    violates that precondition or the arithmetic kernel is broken. Check:
    1 - the candidate has a nonzero constant term
    2 - all polynomials involved share the same number of variables
                  """)
            raise
    return dec


def as_rational(value):
    """
    Coerce ints, Fractions and 'a/b' strings to an exact Fraction.
    Floats are rejected: no floating point value ever enters the system.
    """
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not supported: "
                        "{!r}".format(value))
    return Fraction(value)


def rational_to_str(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{}/{}".format(value.numerator, value.denominator)


def coprime(a, b):
    return gcd(a, b) == 1


def print_table(table, name=None):
    """
    Pretty print a pandas DataFrame.

    Uses HTML output if running inside Jupyter Notebook, otherwise
    formatted text output.

    Parameters
    ----------
    table : pd.Series or pd.DataFrame
        Table to pretty-print. Cells hold exact values rendered as strings.
    name : str, optional
        Table name to display in upper left corner.
    """
    if isinstance(table, pd.Series):
        table = pd.DataFrame(table)

    table.columns.name = name
    display(table)
