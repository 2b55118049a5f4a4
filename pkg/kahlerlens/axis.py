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
Restrictions of solutions to the coordinate axes and the Cauchy data
they force on the line x2 = 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from scipy.special import factorial

from .mongeampere import d_operator
from .polynomial import (Polynomial,
                         embed,
                         partial,
                         power,
                         rational_determinant,
                         restrict_axis,
                         to_json)
from .utils import (InvalidCauchyDatumError,
                    UnsupportedDimensionError)


def binomial_profile(k, exponent=None):
    """(1 + t/k)^exponent, exponent defaulting to k."""
    if exponent is None:
        exponent = k
    base = Polynomial.from_coefficients([1, Fraction(1, k)])
    return power(base, exponent)


def profile_exponent(k, s, n=2):
    """Degree k(n-s-1)+2 of the companion profile on an axis."""
    return k * (n - s - 1) + 2


@dataclass(frozen=True)
class AxisProfile(object):
    """
    p is the restriction of P to an axis, q_profile the restriction of the
    product of the partials of P along the other axes.
    """
    p: Polynomial
    q_profile: Polynomial
    axis_index: int


@dataclass(frozen=True)
class CauchyDatum(object):
    """Initial data P(x1, 0) = p0 and dP/dx2(x1, 0) = p1 for given (s, k)."""
    s: int
    k: int
    p0: Polynomial
    p1: Polynomial


@dataclass(frozen=True)
class RootSystem(object):
    """Distinct nonzero roots r_i with positive multiplicities k_i."""
    roots: Tuple[Fraction, ...]
    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        if len(self.roots) != len(self.multiplicities):
            raise ValueError("one multiplicity per root is required")
        _check_roots(self.roots)
        if any(k < 1 for k in self.multiplicities):
            raise ValueError("multiplicities must be positive")

    @property
    def size(self):
        return len(self.roots)


def root_system(roots, multiplicities):
    return RootSystem(tuple(Fraction(r) for r in roots),
                      tuple(int(k) for k in multiplicities))


def _check_roots(roots):
    if any(r == 0 for r in roots):
        raise ValueError("roots must be nonzero")
    if len(set(roots)) != len(roots):
        raise ValueError("roots must be pairwise distinct")


def axis_profile(P, axis_index):
    """
    Restrict P and the product of its off-axis partials to one axis.

    Parameters
    ----------
    P : Polynomial
        Admissible candidate in n >= 2 variables.
    axis_index : int
        0-based axis; 0 is x1.

    Returns
    -------
    AxisProfile
    """
    n = P.variable_count
    if n < 2:
        raise ValueError("axis profiles need at least two variables")
    if not 0 <= axis_index < n:
        raise IndexError("axis {} out of range for {} variables"
                         .format(axis_index, n))
    product = Polynomial.one(n)
    for j in range(n):
        if j != axis_index:
            product = product * partial(P, j)
    return AxisProfile(restrict_axis(P, axis_index),
                       restrict_axis(product, axis_index),
                       axis_index)


def binomial_power_match(p):
    """
    k if p == (1 + t/k)^k with k = deg p, otherwise None.

    No roots are computed: the candidate is compared structurally against
    the only binomial power of its degree.
    """
    if p.variable_count != 1 or p.constant_term != 1:
        return None
    k = p.degree
    if k < 1:
        return None
    return k if p == binomial_profile(k) else None


def admitted_axis_degrees(s, n=2):
    """
    Axis degrees k allowed for a solution with parameter s in dimension n.

    Returns a frozenset, or None when every positive k is allowed.
    """
    if s == n + 1:
        return frozenset([1])
    if s == n:
        return frozenset([1, 2])
    if 1 <= s <= n - 1:
        return None
    return frozenset()


def axis_consistency_check(profile, s, n=2):
    """
    True iff p == (1 + t/k)^k for an admitted k, the companion profile is
    (1 + t/k)^(k(n-s-1)+2) and D_1(p) * q_profile == p^(n-s+1).
    """
    k = binomial_power_match(profile.p)
    if k is None:
        return False
    admitted = admitted_axis_degrees(s, n)
    if admitted is not None and k not in admitted:
        return False
    exponent = profile_exponent(k, s, n)
    if exponent < 0 or n - s + 1 < 0:
        return False
    if profile.q_profile != binomial_profile(k, exponent):
        return False
    return d_operator(profile.p) * profile.q_profile == \
        power(profile.p, n - s + 1)


def root_system_lhs(rs):
    """
    sum_i k_i r_i prod_{j != i} (t + r_j)^2 - prod_i r_i^2

    which vanishes identically only for a single root with k_1 == r_1.
    """
    total = Polynomial.zero(1)
    for i, (r, k) in enumerate(zip(rs.roots, rs.multiplicities)):
        total = total + _column_polynomial(rs.roots, i) * k
    constant = Fraction(1)
    for r in rs.roots:
        constant *= r * r
    return total - Polynomial.constant(1, constant)


def _column_polynomial(roots, i):
    # coefficient of k_i in root_system_lhs
    result = Polynomial.constant(1, roots[i])
    for j, r in enumerate(roots):
        if j != i:
            result = result * power(Polynomial.from_coefficients([r, 1]), 2)
    return result


def root_system_matrix(roots):
    """
    R x R matrix of the top R coefficients of root_system_lhs, seen as a
    linear form in the multiplicities: row m holds the t^(2R-2-m)
    coefficients, column i belongs to k_i.
    """
    R = len(roots)
    columns = [_column_polynomial(roots, i) for i in range(R)]
    top = 2 * R - 2
    return [[col.coefficient((top - m,)) for col in columns]
            for m in range(R)]


def vandermonde_det(roots, R=None):
    """
    Determinant of root_system_matrix(roots).

    Equals R! * prod r_i * prod_{i<j} (r_i - r_j), see
    vandermonde_closed_form.
    """
    roots = tuple(Fraction(r) for r in roots)
    if R is not None and R != len(roots):
        raise ValueError("R = {} but {} roots were given"
                         .format(R, len(roots)))
    _check_roots(roots)
    return rational_determinant(root_system_matrix(roots))


def vandermonde_closed_form(roots):
    roots = [Fraction(r) for r in roots]
    R = len(roots)
    value = Fraction(int(factorial(R, exact=True)))
    for r in roots:
        value *= r
    for i in range(R):
        for j in range(i + 1, R):
            value *= roots[i] - roots[j]
    return value


def d1_closed_form(rs):
    """
    D_1 of prod (t + r_i)^k_i in product form:
    prod (t + r_i)^(2k_i - 2) * sum_i k_i r_i prod_{j != i} (t + r_j)^2.
    """
    front = Polynomial.one(1)
    for r, k in zip(rs.roots, rs.multiplicities):
        front = front * power(Polynomial.from_coefficients([r, 1]), 2 * k - 2)
    inner = Polynomial.zero(1)
    for i, k in enumerate(rs.multiplicities):
        inner = inner + _column_polynomial(rs.roots, i) * k
    return front * inner


def diophantine_residual(s, k):
    return s * s * k * k - 5 * s * k + 6


def cauchy_datum(s, k, n=2):
    """
    Validated Cauchy datum for (s, k).

    Raises
    ------
    InvalidCauchyDatumError
        If s*k is not in {2, 3}.
    """
    if n != 2:
        raise UnsupportedDimensionError("Cauchy data are classified for n=2 "
                                        "only, got n={}".format(n))
    if s not in (1, 2, 3):
        raise InvalidCauchyDatumError("s must be 1, 2 or 3, got {}"
                                      .format(s))
    if k < 1 or diophantine_residual(s, k) != 0:
        raise InvalidCauchyDatumError(
            "(s={}, k={}) is not a Cauchy datum: s*k must be 2 or 3"
            .format(s, k))
    return CauchyDatum(s, k, binomial_profile(k),
                       binomial_profile(k, profile_exponent(k, s, n)))


def enumerate_cauchy_data(s, n=2):
    """
    All Cauchy data for parameter s, smallest k first.

    The positive integer roots of s^2 k^2 - 5 s k + 6 = 0 are exactly the
    k with s*k in {2, 3}.
    """
    if n != 2:
        raise UnsupportedDimensionError("Cauchy data are classified for n=2 "
                                        "only, got n={}".format(n))
    if s not in (1, 2, 3):
        raise InvalidCauchyDatumError("s must be 1, 2 or 3, got {}"
                                      .format(s))
    return [cauchy_datum(s, product // s, n)
            for product in (2, 3) if product % s == 0]


def soln2_template(k, s):
    """
    The bivariate skeleton forced by symmetric axis data (k, k), with the
    unknown x1^2 x2^2 tail set to zero.
    """
    if s not in (1, 2, 3):
        raise ValueError("s must be 1, 2 or 3, got {}".format(s))
    if k < 1:
        raise ValueError("k must be positive")
    m = profile_exponent(k, s, 2)
    if m < 0:
        raise ValueError("k(1-s)+2 = {} is negative for k={}, s={}"
                         .format(m, k, s))
    x1 = Polynomial.variable(2, 0)
    x2 = Polynomial.variable(2, 1)
    axis1 = embed(binomial_profile(k), 2, 0)
    axis2 = embed(binomial_profile(k), 2, 1)
    side1 = embed(binomial_profile(k, m), 2, 0)
    side2 = embed(binomial_profile(k, m), 2, 1)
    mixed = 1 - s + Fraction(2, k)
    return (axis1 + axis2 - 1 + x1 * side2 + x2 * side1
            - x1 - x2 - x1 * x2 * mixed)


def mixed_coefficient(k, s):
    """
    x1*x2 coefficient of D_2(T) - T^(3-s) for T = soln2_template(k, s).

    It equals 2(s^2 k^2 - 5 s k + 6)/k^2, so it vanishes exactly on the
    Cauchy data.
    """
    T = soln2_template(k, s)
    return (d_operator(T) - power(T, 3 - s)).coefficient((1, 1))


def datum_to_json(datum):
    return {'s': datum.s,
            'k': datum.k,
            'p0': to_json(datum.p0),
            'p1': to_json(datum.p1)}
