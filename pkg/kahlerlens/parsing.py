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

"""
Polynomial expression grammar.

    expr   := term (('+' | '-') term)*
    term   := ['+' | '-'] power (['*' | '/'] power)*
    power  := atom ['^' integer]
    atom   := integer | variable | '(' expr ')'

A missing operator between two powers means multiplication, so
``1/3 x1^2 x2``, ``2x1`` and ``x1x2`` are accepted. Division is only
allowed by nonzero constants.
"""

import re
from fractions import Fraction

from pyparsing import (Forward,
                       Literal,
                       Optional,
                       ParseBaseException,
                       Regex,
                       Suppress,
                       ZeroOrMore)

from .polynomial import Polynomial, default_names
from .utils import (NegativeExponentError,
                    PolynomialSyntaxError,
                    UnknownVariableError)


class _Op(object):
    __slots__ = ('symbol', 'loc')

    def __init__(self, symbol, loc):
        self.symbol = symbol
        self.loc = loc


def _make_grammar(names, text):
    n = len(names)
    index = {name: i for i, name in enumerate(names)}

    def number_action(s, loc, toks):
        return Polynomial.constant(n, Fraction(int(toks[0])))

    def variable_action(s, loc, toks):
        name = toks[0]
        if name not in index:
            raise UnknownVariableError(
                "unknown variable {!r}, expected one of {}"
                .format(name, list(names)), text=text, position=loc)
        return Polynomial.variable(n, index[name])

    def exponent_action(s, loc, toks):
        value = int(toks[0])
        if value < 0:
            raise NegativeExponentError(
                "negative exponent {}".format(value), text=text,
                position=loc)
        return value

    def power_action(s, loc, toks):
        if len(toks) == 1:
            return toks[0]
        return toks[0] ** toks[1]

    def op_action(s, loc, toks):
        return _Op(toks[0], loc)

    def term_action(s, loc, toks):
        items = list(toks)
        negate = False
        if isinstance(items[0], _Op):
            negate = items[0].symbol == '-'
            items = items[1:]
        acc = items[0]
        i = 1
        while i < len(items):
            if isinstance(items[i], _Op):
                op, operand = items[i], items[i + 1]
                i += 2
            else:
                op, operand = None, items[i]
                i += 1
            if op is not None and op.symbol == '/':
                acc = _divide(acc, operand, op.loc, text)
            else:
                acc = acc * operand
        return -acc if negate else acc

    def expr_action(s, loc, toks):
        items = list(toks)
        acc = items[0]
        for op, operand in zip(items[1::2], items[2::2]):
            acc = acc + operand if op.symbol == '+' else acc - operand
        return acc

    expr = Forward()
    number = Regex(r"\d+").set_parse_action(number_action)
    # known names longest first, so x1x2 reads as x1*x2 but x12 does not
    known = Regex("(?:{})(?![0-9])".format(
        "|".join(re.escape(name)
                 for name in sorted(names, key=len, reverse=True)))) \
        .set_parse_action(variable_action)
    unknown = Regex(r"[A-Za-z_][A-Za-z_0-9]*") \
        .set_parse_action(variable_action)
    atom = (number | known | unknown |
            (Suppress("(") + expr + Suppress(")")))
    exponent = Regex(r"-?\d+").set_parse_action(exponent_action)
    power = (atom + Optional(Suppress("^") + exponent)) \
        .set_parse_action(power_action)
    mulop = (Literal("*") | Literal("/")).set_parse_action(op_action)
    addop = (Literal("+") | Literal("-")).set_parse_action(op_action)
    term = (Optional(addop) + power + ZeroOrMore(Optional(mulop) + power)) \
        .set_parse_action(term_action)
    expr <<= (term + ZeroOrMore(addop + term)).set_parse_action(expr_action)
    return expr


def _divide(numerator, denominator, loc, text):
    if not denominator.is_constant():
        raise PolynomialSyntaxError("division by a non-constant expression",
                                    text=text, position=loc)
    value = denominator.constant_term
    if value == 0:
        raise PolynomialSyntaxError("division by zero", text=text,
                                    position=loc)
    return numerator * (1 / value)


def parse_expression(text, names=None, variable_count=None):
    """
    Parse a polynomial expression into an exact Polynomial.

    Parameters
    ----------
    text : str
        Expression using rationals, variable names, + - * / ^ and
        parentheses. Whitespace is ignored.
    names : sequence of str, optional
        Variable names, in ring order. Defaults to x1..xn.
    variable_count : int, optional
        n for the default names; 2 when neither argument is given.

    Returns
    -------
    Polynomial

    Raises
    ------
    PolynomialSyntaxError
        Malformed input; `position` locates the failure.
    UnknownVariableError
        A name outside `names`.
    NegativeExponentError
        An exponent below zero.
    """
    if names is None:
        names = default_names(variable_count or 2)
    names = list(names)
    grammar = _make_grammar(names, text)
    try:
        result = grammar.parse_string(text, parse_all=True)
    except ParseBaseException as e:
        raise PolynomialSyntaxError(
            "cannot parse {!r}: {}".format(text, e.msg),
            text=text, position=e.loc)
    return result[0]
