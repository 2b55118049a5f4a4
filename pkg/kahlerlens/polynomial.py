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
Exact sparse multivariate polynomials over the rationals.

A polynomial in n variables is a map from exponent vectors (tuples of n
non-negative ints) to nonzero Fractions. Monomials are ordered by total
degree, then lexicographically with x1 most significant.
"""

import heapq
from fractions import Fraction

import numpy as np

from .utils import (NotDivisibleError,
                    VariableCountMismatchError,
                    as_rational,
                    rational_to_str)


Rational = Fraction


def monomial_key(exponents):
    """Sort key of the (total degree, lexicographic) monomial order."""
    return (sum(exponents), tuple(exponents))


class _Descending(object):
    # heapq is a min-heap; wrap keys to pop the largest monomial first
    __slots__ = ('exp', 'key')

    def __init__(self, exp):
        self.exp = exp
        self.key = monomial_key(exp)

    def __lt__(self, other):
        return self.key > other.key


class Polynomial(object):
    """
    Immutable sparse polynomial with Fraction coefficients.

    Parameters
    ----------
    variable_count : int
        Number of variables n.
    terms : dict, optional
        Mapping exponent tuple -> coefficient. Zero coefficients are
        dropped, so two polynomials are equal iff their term maps are.
    """

    __slots__ = ('_n', '_terms', '_hash')

    def __init__(self, variable_count, terms=None):
        if variable_count < 1:
            raise ValueError("a polynomial needs at least one variable")
        self._n = int(variable_count)
        clean = {}
        if terms:
            for exp, coef in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != self._n:
                    raise VariableCountMismatchError(
                        "exponent {} does not have {} entries"
                        .format(exp, self._n))
                if any(e < 0 for e in exp):
                    raise ValueError("negative exponent in {}".format(exp))
                coef = as_rational(coef)
                if coef:
                    clean[exp] = clean.get(exp, 0) + coef
            clean = {e: c for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_clean(cls, variable_count, terms):
        # terms already canonical: tuple keys, nonzero Fraction values
        poly = cls.__new__(cls)
        poly._n = variable_count
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, variable_count):
        return cls._from_clean(variable_count, {})

    @classmethod
    def one(cls, variable_count):
        return cls.constant(variable_count, 1)

    @classmethod
    def constant(cls, variable_count, value):
        return cls(variable_count, {(0,) * variable_count: value})

    @classmethod
    def variable(cls, variable_count, index):
        if not 0 <= index < variable_count:
            raise IndexError("variable index {} out of range for {} "
                             "variables".format(index, variable_count))
        exp = [0] * variable_count
        exp[index] = 1
        return cls._from_clean(variable_count, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, exponents, coefficient=1):
        return cls(len(exponents), {tuple(exponents): coefficient})

    @classmethod
    def from_coefficients(cls, coefficients):
        """Univariate polynomial c0 + c1*t + c2*t^2 + ..."""
        return cls(1, {(i,): c for i, c in enumerate(coefficients)})

    @property
    def variable_count(self):
        return self._n

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        """Terms as (exponent, coefficient) pairs in descending order."""
        return sorted(self._terms.items(),
                      key=lambda item: monomial_key(item[0]),
                      reverse=True)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(not any(exp) for exp in self._terms)

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(exp) for exp in self._terms)

    def degree_in(self, index):
        if not self._terms:
            return -1
        return max(exp[index] for exp in self._terms)

    def coefficient(self, exponents):
        return self._terms.get(tuple(exponents), Fraction(0))

    @property
    def constant_term(self):
        return self.coefficient((0,) * self._n)

    def leading_term(self):
        """(exponents, coefficient) of the largest monomial."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        exp = max(self._terms, key=monomial_key)
        return exp, self._terms[exp]

    def evaluate(self, point):
        if len(point) != self._n:
            raise VariableCountMismatchError(
                "expected {} values, got {}".format(self._n, len(point)))
        point = [as_rational(v) for v in point]
        total = Fraction(0)
        for exp, coef in self._terms.items():
            value = coef
            for x, e in zip(point, exp):
                if e:
                    value *= x ** e
            total += value
        return total

    def _check(self, other):
        if self._n != other._n:
            raise VariableCountMismatchError(
                "cannot combine polynomials in {} and {} variables"
                .format(self._n, other._n))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self._n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_clean(
            self._n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        if isinstance(other, Polynomial):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return power(self, exponent)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self._n, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        # constants compare equal to their value, so they hash like it
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term)
            else:
                self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return "Polynomial({!r})".format(format_polynomial(self))

    def __str__(self):
        return format_polynomial(self)


def default_names(variable_count):
    if variable_count == 1:
        return ['t']
    return ['x{}'.format(i + 1) for i in range(variable_count)]


def add(a, b):
    """
    Exact sum of two polynomials.

    Raises
    ------
    VariableCountMismatchError
        If a and b live in rings with different numbers of variables.
    """
    a._check(b)
    if len(a._terms) < len(b._terms):
        a, b = b, a
    terms = dict(a._terms)
    for exp, coef in b._terms.items():
        value = terms.get(exp, 0) + coef
        if value:
            terms[exp] = value
        else:
            terms.pop(exp, None)
    return Polynomial._from_clean(a._n, terms)


def neg(a):
    return -a


def sub(a, b):
    return add(a, -b)


def scale(a, factor):
    factor = as_rational(factor)
    if not factor:
        return Polynomial.zero(a._n)
    return Polynomial._from_clean(
        a._n, {e: c * factor for e, c in a._terms.items()})


def mul(a, b):
    """Exact product; degrees add."""
    a._check(b)
    terms = {}
    for ea, ca in a._terms.items():
        for eb, cb in b._terms.items():
            exp = tuple(x + y for x, y in zip(ea, eb))
            terms[exp] = terms.get(exp, 0) + ca * cb
    return Polynomial._from_clean(a._n, {e: c for e, c in terms.items() if c})


def power(a, exponent):
    """a**exponent by repeated squaring; a**0 is 1."""
    if exponent < 0 or int(exponent) != exponent:
        raise ValueError("exponent must be a non-negative integer, got {}"
                         .format(exponent))
    result = Polynomial.one(a._n)
    base = a
    exponent = int(exponent)
    while exponent:
        if exponent & 1:
            result = mul(result, base)
        exponent >>= 1
        if exponent:
            base = mul(base, base)
    return result


def partial(a, var_index):
    """Formal partial derivative with respect to variable `var_index`."""
    if not 0 <= var_index < a._n:
        raise IndexError("variable index {} out of range for {} variables"
                         .format(var_index, a._n))
    terms = {}
    for exp, coef in a._terms.items():
        e = exp[var_index]
        if e:
            new = list(exp)
            new[var_index] = e - 1
            terms[tuple(new)] = coef * e
    return Polynomial._from_clean(a._n, terms)


def exact_divide(a, b):
    """
    Divide a by b exactly.

    Leading terms of the running remainder are eliminated under the
    (degree, lex) order. Any monomial order works here because every
    division performed by the package is exact.

    Returns
    -------
    quotient : Polynomial
        c with a == b * c.

    Raises
    ------
    NotDivisibleError
        If a leading term of the remainder is not a multiple of the
        leading term of b. The exception carries the remainder.
    ZeroDivisionError
        If b is the zero polynomial.
    """
    a._check(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead_exp, lead_coef = b.leading_term()
    divisor = list(b._terms.items())
    remainder = dict(a._terms)
    quotient = {}
    heap = [_Descending(e) for e in remainder]
    heapq.heapify(heap)
    while heap:
        exp = heapq.heappop(heap).exp
        coef = remainder.get(exp)
        if coef is None:
            continue
        shift = tuple(x - y for x, y in zip(exp, lead_exp))
        if any(s < 0 for s in shift):
            raise NotDivisibleError(
                Polynomial._from_clean(a._n, dict(remainder)))
        factor = coef / lead_coef
        quotient[shift] = factor
        for dexp, dcoef in divisor:
            target = tuple(x + y for x, y in zip(dexp, shift))
            value = remainder.get(target, 0) - factor * dcoef
            if value:
                if target not in remainder:
                    heapq.heappush(heap, _Descending(target))
                remainder[target] = value
            else:
                remainder.pop(target, None)
    return Polynomial._from_clean(a._n, quotient)


def scale_vars(a, factors):
    """Substitute x_i -> factors[i] * x_i."""
    if len(factors) != a._n:
        raise VariableCountMismatchError(
            "expected {} scale factors, got {}".format(a._n, len(factors)))
    factors = [as_rational(f) for f in factors]
    if any(f == 0 for f in factors):
        raise ValueError("scale factors must be nonzero")
    terms = {}
    for exp, coef in a._terms.items():
        value = coef
        for f, e in zip(factors, exp):
            if e:
                value *= f ** e
        terms[exp] = value
    return Polynomial._from_clean(a._n, terms)


def substitute_zero(a, var_index):
    """a with variable `var_index` set to zero, in the same ring."""
    if not 0 <= var_index < a._n:
        raise IndexError("variable index {} out of range for {} variables"
                         .format(var_index, a._n))
    return Polynomial._from_clean(
        a._n, {e: c for e, c in a._terms.items() if e[var_index] == 0})


def univariate_coefficients(u):
    """[c0, c1, ..., c_deg] of a univariate polynomial."""
    if u.variable_count != 1:
        raise VariableCountMismatchError("expected a univariate polynomial")
    return [u.coefficient((i,)) for i in range(u.degree + 1)]


def restrict_axis(a, axis_index):
    """
    Set every variable except `axis_index` to zero and return the
    univariate restriction.
    """
    if not 0 <= axis_index < a._n:
        raise IndexError("axis {} out of range for {} variables"
                         .format(axis_index, a._n))
    terms = {}
    for exp, coef in a._terms.items():
        if all(e == 0 for i, e in enumerate(exp) if i != axis_index):
            terms[(exp[axis_index],)] = coef
    return Polynomial._from_clean(1, terms)


def embed(u, variable_count, axis_index):
    """Move a univariate polynomial onto variable `axis_index` of a ring
    with `variable_count` variables."""
    if u.variable_count != 1:
        raise VariableCountMismatchError("embed expects a univariate "
                                         "polynomial")
    if not 0 <= axis_index < variable_count:
        raise IndexError("axis {} out of range".format(axis_index))
    terms = {}
    for (e,), coef in u._terms.items():
        exp = [0] * variable_count
        exp[axis_index] = e
        terms[tuple(exp)] = coef
    return Polynomial._from_clean(variable_count, terms)


def permute_variables(a, order):
    """Return a with variable i renamed to variable order[i]."""
    if sorted(order) != list(range(a._n)):
        raise ValueError("{} is not a permutation of the variables"
                         .format(order))
    terms = {}
    for exp, coef in a._terms.items():
        new = [0] * a._n
        for i, e in enumerate(exp):
            new[order[i]] = e
        terms[tuple(new)] = coef
    return Polynomial._from_clean(a._n, terms)


def homogeneous_component(a, d):
    return Polynomial._from_clean(
        a._n, {e: c for e, c in a._terms.items() if sum(e) == d})


def series_in(a, var_index):
    """
    Split a polynomial in two variables into its coefficients with
    respect to variable `var_index`.

    Returns
    -------
    coefficients : list of Polynomial
        Univariate polynomials in the other variable, lowest power first.
    """
    if a._n != 2:
        raise VariableCountMismatchError("series_in expects a bivariate "
                                         "polynomial")
    other = 1 - var_index
    buckets = [dict() for _ in range(max(a.degree_in(var_index), -1) + 1)]
    for exp, coef in a._terms.items():
        buckets[exp[var_index]][(exp[other],)] = coef
    return [Polynomial._from_clean(1, b) for b in buckets]


class PolyMatrix(object):
    """
    Square matrix of polynomials sharing one ring.

    Parameters
    ----------
    entries : sequence of sequences of Polynomial
        Rows of the matrix.
    """

    def __init__(self, entries):
        rows = [list(row) for row in entries]
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ValueError("a PolyMatrix must be square and non-empty")
        counts = {p.variable_count for row in rows for p in row}
        if len(counts) != 1:
            raise VariableCountMismatchError(
                "matrix entries live in rings of different sizes: {}"
                .format(sorted(counts)))
        grid = np.empty((n, n), dtype=object)
        for i, row in enumerate(rows):
            for j, p in enumerate(row):
                grid[i, j] = p
        self._grid = grid

    @classmethod
    def from_rows(cls, rows):
        return cls(rows)

    @classmethod
    def identity(cls, dimension, variable_count):
        one = Polynomial.one(variable_count)
        zero = Polynomial.zero(variable_count)
        return cls([[one if i == j else zero for j in range(dimension)]
                    for i in range(dimension)])

    @property
    def dimension(self):
        return self._grid.shape[0]

    @property
    def variable_count(self):
        return self._grid[0, 0].variable_count

    def __getitem__(self, index):
        return self._grid[index]

    def rows(self):
        return [list(self._grid[i]) for i in range(self.dimension)]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.rows() == other.rows()

    def __repr__(self):
        return "PolyMatrix({})".format(
            [[str(p) for p in row] for row in self.rows()])


def determinant(m):
    """
    Determinant by cofactor expansion along the first row.

    Adequate for the n <= 3 matrices of the Monge-Ampere operator; a
    fraction-free elimination would be the next step for larger n.
    """
    return _cofactor(m.rows(), m.variable_count)


def _cofactor(rows, variable_count):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Polynomial.zero(variable_count)
    for j, entry in enumerate(rows[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * _cofactor(minor, variable_count)
        total = total + term if j % 2 == 0 else total - term
    return total


def rational_determinant(rows):
    """Determinant of a square matrix of rationals by Gaussian elimination."""
    m = [[as_rational(v) for v in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        fp = m[c][c]
        det *= fp
        for r in range(c + 1, n):
            fr = m[r][c]
            if fr == 0:
                continue
            frp = fr / fp
            for k in range(c, n):
                m[r][k] -= m[c][k] * frp
    return det


def _format_monomial(exp, names):
    parts = []
    for name, e in zip(names, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("{}^{}".format(name, e))
    return "*".join(parts)


def format_polynomial(a, names=None):
    """
    Canonical text form: terms in descending (degree, lex) order,
    coefficients as `a` or `a/b`, e.g. ``1/4*x1^2 + x1 + 1``.
    """
    if names is None:
        names = default_names(a.variable_count)
    if a.is_zero():
        return "0"
    pieces = []
    for exp, coef in a.items():
        mono = _format_monomial(exp, names)
        magnitude = abs(coef)
        if not mono:
            body = rational_to_str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = "{}*{}".format(rational_to_str(magnitude), mono)
        if not pieces:
            pieces.append(body if coef > 0 else "-" + body)
        else:
            pieces.append(("+ " if coef > 0 else "- ") + body)
    return " ".join(pieces)


def to_json(a, names=None):
    """Interchange form; coefficients are strings to stay exact."""
    if names is None:
        names = default_names(a.variable_count)
    return {'vars': list(names),
            'terms': [{'exp': list(exp), 'coef': rational_to_str(coef)}
                      for exp, coef in a.items()]}


def from_json(data):
    names = data['vars']
    terms = {}
    for term in data['terms']:
        exp = tuple(term['exp'])
        if len(exp) != len(names):
            raise VariableCountMismatchError(
                "exponent {} does not match variables {}".format(exp, names))
        terms[exp] = terms.get(exp, 0) + Fraction(term['coef'])
    return Polynomial(len(names), terms)
