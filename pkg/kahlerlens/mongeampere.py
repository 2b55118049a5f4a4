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

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .polynomial import (Polynomial,
                         PolyMatrix,
                         determinant,
                         exact_divide,
                         from_json,
                         homogeneous_component,
                         partial,
                         scale_vars,
                         to_json)
from .utils import (InvalidEinsteinDataError,
                    RootExtractionError,
                    VariableCountMismatchError,
                    coprime,
                    obstruction_hint,
                    rational_to_str)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EinsteinData(object):
    """
    Einstein data of a candidate: lambda = 2s/q in dimension n.

    The right-hand side of the equation is P^(n+1-s/q); that exponent is
    a non-negative integer exactly when q == 1 and s <= n+1.
    """
    s: int
    q: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidEinsteinDataError("dimension n must be positive, "
                                           "got {}".format(self.n))
        if self.s < 1 or self.q < 1:
            raise InvalidEinsteinDataError(
                "s and q must be positive integers, got s={}, q={}"
                .format(self.s, self.q))
        if not coprime(self.s, self.q):
            raise InvalidEinsteinDataError(
                "s={} and q={} are not coprime".format(self.s, self.q))
        if self.einstein_constant > 2 * (self.n + 1):
            raise InvalidEinsteinDataError(
                "lambda = {} exceeds the bound 2(n+1) = {}"
                .format(rational_to_str(self.einstein_constant),
                        2 * (self.n + 1)))

    @property
    def einstein_constant(self):
        return Fraction(2 * self.s, self.q)

    @property
    def exponent(self):
        return self.n + 1 - Fraction(self.s, self.q)

    @property
    def is_integral(self):
        return self.q == 1 and self.s <= self.n + 1

    @property
    def power_exponent(self):
        """Exponent of P in the cleared form D_n(P)^q = P^(q(n+1)-s)."""
        return self.q * (self.n + 1) - self.s


def einstein_data(s, q=1, n=2):
    return EinsteinData(int(s), int(q), int(n))


@dataclass(frozen=True)
class VerificationCertificate(object):
    candidate: Polynomial
    einstein: EinsteinData
    residual: Polynomial

    @property
    def verdict(self):
        return self.residual.is_zero()


def ma_matrix(P):
    """
    The matrix whose determinant defines D_n.

    Entry (a, b) is (P*P_ab - P_a*P_b)*x_a + P*P_a*delta_ab.
    """
    n = P.variable_count
    first = [partial(P, a) for a in range(n)]
    rows = []
    for a in range(n):
        x_a = Polynomial.variable(n, a)
        row = []
        for b in range(n):
            entry = (P * partial(first[a], b) - first[a] * first[b]) * x_a
            if a == b:
                entry = entry + P * first[a]
            row.append(entry)
        rows.append(row)
    return PolyMatrix(rows)


@obstruction_hint
def d_operator(P):
    """
    D_n(P) = det(ma_matrix(P)) / P^(n-1).

    The division is exact for every P with nonzero constant term: the
    P_a*P_b*x_a part of the matrix has rank one, so multilinearity leaves
    at most one factor of it in each term of the expansion.

    Raises
    ------
    ValueError
        If P has zero constant term.
    NotDivisibleError
        Never for valid input.
    """
    if P.constant_term == 0:
        raise ValueError("D_n needs a candidate with nonzero constant term")
    n = P.variable_count
    det = determinant(ma_matrix(P))
    if n == 1:
        return det
    return exact_divide(det, P ** (n - 1))


def mae_residual(P, einstein):
    """
    Check D_n(P)^q == P^(q(n+1)-s) exactly.

    Parameters
    ----------
    P : Polynomial
        Normalized candidate (constant term 1).
    einstein : EinsteinData
        s, q and the dimension n, which must equal P's variable count.

    Returns
    -------
    VerificationCertificate
        verdict is True iff the residual vanishes identically.
    """
    if P.variable_count != einstein.n:
        raise VariableCountMismatchError(
            "candidate has {} variables but n = {}"
            .format(P.variable_count, einstein.n))
    lhs = d_operator(P) ** einstein.q
    residual = lhs - P ** einstein.power_exponent
    certificate = VerificationCertificate(P, einstein, residual)
    log.debug("verified %s with s=%d q=%d n=%d: %s", P, einstein.s,
              einstein.q, einstein.n, certificate.verdict)
    return certificate


def verify_batch(candidates, einstein, max_workers=None):
    """Certificates for many candidates; threads when max_workers is set."""
    if not max_workers:
        return [mae_residual(P, einstein) for P in candidates]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(lambda P: mae_residual(P, einstein), candidates))


def lambda_bounds(P, n):
    """
    Closed interval [2n/deg P, 2(n+1)] that contains every admissible
    Einstein constant of P.
    """
    if P.degree < 1:
        raise ValueError("lambda bounds need a non-constant candidate")
    return Fraction(2 * n, P.degree), Fraction(2 * (n + 1))


def admissible_candidate_check(P):
    """
    True iff P = 1 + x1 + ... + xn + (positive terms of degree >= 2),
    the shape of the exponential of a projectively induced diastasis.
    """
    n = P.variable_count
    if P.constant_term != 1:
        return False
    for i in range(n):
        exp = [0] * n
        exp[i] = 1
        if P.coefficient(exp) != 1:
            return False
    return all(coef > 0 for exp, coef in P.terms.items() if sum(exp) >= 2)


def _check_lift(s, q, n):
    # the identity D_n(P)^q == P^(q(n+1)-s) needs no coprimality
    if s < 1 or q < 1 or n < 1:
        raise InvalidEinsteinDataError(
            "s, q and n must be positive, got s={}, q={}, n={}"
            .format(s, q, n))


def power_lift(S, s, q, n):
    """
    Turn a q=1 solution S into the solution for lambda = 2s/q:
    P(x) = S(x/q)^q.
    """
    _check_lift(s, q, n)
    if S.variable_count != n:
        raise VariableCountMismatchError(
            "S has {} variables, expected {}".format(S.variable_count, n))
    if q == 1:
        return S
    return scale_vars(S, [Fraction(1, q)] * n) ** q


def power_reduce(P, s, q, n):
    """
    Inverse of power_lift: extract the q-th root of P and undo the
    change of variables.

    Raises
    ------
    RootExtractionError
        If P is not the q-th power of a polynomial with constant term 1.
    """
    _check_lift(s, q, n)
    if P.variable_count != n:
        raise VariableCountMismatchError(
            "P has {} variables, expected {}".format(P.variable_count, n))
    if q == 1:
        return P
    root = qth_root(P, q)
    return scale_vars(root, [q] * n)


def qth_root(P, q):
    """
    Polynomial R with R^q == P and R(0) == 1.

    Homogeneous components are matched from degree 0 upwards: the degree
    d part of R^q is q*R_d plus terms that only involve lower parts.
    """
    if P.constant_term != 1:
        raise RootExtractionError("root extraction needs constant term 1")
    if P.degree % q:
        raise RootExtractionError(
            "degree {} is not a multiple of {}".format(P.degree, q))
    n = P.variable_count
    root = Polynomial.one(n)
    for d in range(1, P.degree // q + 1):
        known = homogeneous_component(root ** q, d)
        root = root + (homogeneous_component(P, d) - known) * Fraction(1, q)
    if root ** q != P:
        raise RootExtractionError("{} is not a perfect {}-th power"
                                  .format(P, q))
    return root


def certificate_to_json(certificate):
    e = certificate.einstein
    data = {'candidate': to_json(certificate.candidate),
            's': e.s,
            'q': e.q,
            'n': e.n,
            'lambda': rational_to_str(e.einstein_constant),
            'verdict': certificate.verdict}
    if not certificate.verdict:
        data['residual'] = to_json(certificate.residual)
    return data


def certificate_from_json(data):
    candidate = from_json(data['candidate'])
    einstein = einstein_data(data['s'], data['q'], data['n'])
    if 'residual' in data:
        residual = from_json(data['residual'])
    else:
        residual = Polynomial.zero(candidate.variable_count)
    return VerificationCertificate(candidate, einstein, residual)
