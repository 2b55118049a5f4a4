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
Propagation of Cauchy data along x2.

A bivariate candidate is handled as P = sum_h c_h(x1) x2^h. Given c_0 and
c_1 on the line x2 = 0, the x2^h coefficient of

    G_s(P) = det(ma_matrix(P)) - P^(4-s)

is affine in c_{h+1} with slope (h+1)^2 c_0 E(x1), E = edge_factor(c_0),
so each higher coefficient is determined by the ones below it.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .axis import enumerate_cauchy_data
from .mongeampere import (admissible_candidate_check,
                          einstein_data,
                          ma_matrix,
                          mae_residual)
from .polynomial import (Polynomial,
                         determinant,
                         embed,
                         exact_divide,
                         partial,
                         series_in,
                         to_json)
from .utils import NotDivisibleError, ObstructionError

log = logging.getLogger(__name__)

TERMINATED = 'terminated_polynomial'
STILL_OPEN = 'still_open'
OBSTRUCTED = 'obstructed'


@dataclass(frozen=True)
class X2Series(object):
    """
    Truncated expansion sum_{h <= H} c_h(x1) x2^h.

    coefficients holds univariate polynomials c_0..c_H; H is
    truncation_order.
    """
    coefficients: Tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a series needs at least c_0")
        if any(c.variable_count != 1 for c in self.coefficients):
            raise ValueError("series coefficients must be univariate")
        if self.coefficients[0].constant_term != 1:
            raise ValueError("c_0 must have constant term 1")

    @classmethod
    def from_polynomial(cls, P, order):
        """Expand a bivariate P in powers of x2 through x2^order."""
        coefficients = series_in(P, 1)[:order + 1]
        coefficients += [Polynomial.zero(1)] * (order + 1 - len(coefficients))
        return cls(tuple(coefficients))

    @property
    def truncation_order(self):
        return len(self.coefficients) - 1

    def coefficient(self, h):
        if h < len(self.coefficients):
            return self.coefficients[h]
        return Polynomial.zero(1)

    def extended(self, c):
        return X2Series(self.coefficients + (c,))

    def truncate(self, order):
        if order < 0:
            raise ValueError("order must be non-negative")
        return X2Series(self.coefficients[:order + 1])

    def last_nonzero(self):
        for h in range(len(self.coefficients) - 1, -1, -1):
            if not self.coefficients[h].is_zero():
                return h
        return -1

    def assemble(self, prefix=None):
        """
        The bivariate polynomial sum c_h(x1) x2^h over the first
        `prefix` + 1 coefficients (all of them by default).
        """
        if prefix is None:
            prefix = self.truncation_order
        x2 = Polynomial.variable(2, 1)
        total = Polynomial.zero(2)
        x2_power = Polynomial.one(2)
        for c in self.coefficients[:prefix + 1]:
            total = total + embed(c, 2, 0) * x2_power
            x2_power = x2_power * x2
        return total


@dataclass(frozen=True)
class PropagationOutcome(object):
    series: X2Series
    status: str
    s: int
    k: int
    obstruction_detail: Optional[Tuple[int, Polynomial]] = None
    terminated_at: Optional[int] = None

    @property
    def polynomial(self):
        """The assembled solution when terminated, otherwise None."""
        if self.status != TERMINATED:
            return None
        return self.series.assemble()

    @property
    def resolved(self):
        return self.status != STILL_OPEN


@dataclass(frozen=True)
class Classification(object):
    """
    Solutions for one s, complete for expansions that terminate by
    max_order. Iterating yields the SolutionRecords.
    """
    s: int
    max_order: int
    solutions: List = field(default_factory=list)
    outcomes: List[PropagationOutcome] = field(default_factory=list)
    inconclusive: List = field(default_factory=list)

    @property
    def resolved(self):
        return not self.inconclusive

    def __iter__(self):
        return iter(self.solutions)

    def __len__(self):
        return len(self.solutions)


def edge_factor(c0):
    """
    E(t) = (c0*c0'' - c0'^2)*t + c0*c0', the (1, 1) entry of the
    Monge-Ampere matrix on the line x2 = 0.

    Parameters
    ----------
    c0 : Polynomial
        Univariate, c0(0) == 1.

    Returns
    -------
    Polynomial
        (1 + t/k)^(2k-2) when c0 = (1 + t/k)^k; zero for constant c0.
    """
    d1 = partial(c0, 0)
    d2 = partial(d1, 0)
    t = Polynomial.variable(1, 0)
    return (c0 * d2 - d1 * d1) * t + c0 * d1


def _check_s(s):
    if s not in (1, 2, 3):
        raise ValueError("s must be 1, 2 or 3, got {}".format(s))


def x2_residual_coefficient(series, s, h):
    """
    Coefficient of x2^h in det(ma_matrix(P)) - P^(4-s), P the assembled
    series. It only involves c_0..c_{h+1}.
    """
    _check_s(s)
    P = series.assemble()
    G = determinant(ma_matrix(P)) - P ** (4 - s)
    coefficients = series_in(G, 1)
    if h < len(coefficients):
        return coefficients[h]
    return Polynomial.zero(1)


def propagate_step(series, s, h):
    """
    Solve the x2^h equation for c_{h+1}.

    Parameters
    ----------
    series : X2Series
        Known through order h; coefficients beyond h are ignored.
    s : int
        Equation parameter, 1 <= s <= 3.
    h : int
        Order of the equation, h >= 1.

    Returns
    -------
    Polynomial
        The unique univariate c_{h+1}.

    Raises
    ------
    ObstructionError
        If no polynomial c_{h+1} solves the equation.
    """
    _check_s(s)
    if h < 1:
        raise ValueError("propagation starts at h = 1, got {}".format(h))
    if series.truncation_order < h:
        raise ValueError("series known through order {} only, need {}"
                         .format(series.truncation_order, h))
    c0 = series.coefficients[0]
    edge = edge_factor(c0)
    if edge.is_zero():
        raise ValueError("edge factor of c_0 = {} vanishes".format(c0))

    prefix = series.truncate(h)
    base = x2_residual_coefficient(prefix.extended(Polynomial.zero(1)), s, h)
    unit = x2_residual_coefficient(prefix.extended(Polynomial.one(1)), s, h)
    slope = unit - base
    _check_slope(slope, c0 * edge, h)

    try:
        c = exact_divide(-base, slope)
    except NotDivisibleError as e:
        raise ObstructionError(h, e.remainder)
    log.debug("order %d: c_%d = %s (degree %d)", h, h + 1, c, c.degree)
    return c


def _check_slope(slope, expected, h):
    # slope must be a nonzero rational multiple of c_0 * E
    try:
        ratio = exact_divide(slope, expected)
    except NotDivisibleError:
        ratio = None
    if ratio is None or not ratio.is_constant() or ratio.is_zero():
        raise AssertionError(
            "x2^{} equation is not affine in c_{} with slope a multiple "
            "of c_0*E: slope {}".format(h, h + 1, slope))


def propagate(datum, max_order=20):
    """
    Propagate a Cauchy datum through x2-order `max_order`.

    The series is always carried to max_order, so coefficients can be
    compared against other expansions even after termination. A prefix
    counts as a polynomial solution only after exact verification.

    Parameters
    ----------
    datum : CauchyDatum
    max_order : int, optional
        Truncation order H >= 2.

    Returns
    -------
    PropagationOutcome
    """
    if max_order < 2:
        raise ValueError("max_order must be at least 2, got {}"
                         .format(max_order))
    einstein = einstein_data(datum.s, 1, 2)
    series = X2Series((datum.p0, datum.p1))
    verified = None
    terminated_at = None

    for h in range(1, max_order):
        try:
            c = propagate_step(series, datum.s, h)
        except ObstructionError as e:
            log.info("datum s=%d k=%d obstructed at order %d",
                     datum.s, datum.k, e.order)
            return PropagationOutcome(series, OBSTRUCTED, datum.s, datum.k,
                                      obstruction_detail=(e.order,
                                                          e.remainder))
        series = series.extended(c)
        if terminated_at is None and c.is_zero():
            candidate = series.assemble()
            if mae_residual(candidate, einstein).verdict:
                verified = candidate
                terminated_at = series.truncation_order
                log.debug("datum s=%d k=%d verified at order %d",
                          datum.s, datum.k, terminated_at)

    status = STILL_OPEN
    if series.last_nonzero() < series.truncation_order:
        final = series.assemble()
        if final == verified or mae_residual(final, einstein).verdict:
            status = TERMINATED
    if status == STILL_OPEN:
        log.warning("datum s=%d k=%d still open at order %d",
                    datum.s, datum.k, max_order)
    else:
        log.info("datum s=%d k=%d terminated: %s", datum.s, datum.k,
                 series.assemble())
    return PropagationOutcome(series, status, datum.s, datum.k,
                              terminated_at=terminated_at)


def classify(s, max_order=20, max_workers=None):
    """
    Every admissible polynomial solution for parameter s whose expansion
    terminates by `max_order`.

    Parameters
    ----------
    s : int
        1, 2 or 3.
    max_order : int, optional
    max_workers : int, optional
        Propagate the Cauchy data on a thread pool of this size.

    Returns
    -------
    Classification
        Data whose propagation is still open are listed in `inconclusive`
        instead of being dropped.
    """
    from .geometry import make_record

    data = enumerate_cauchy_data(s)
    if max_workers:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            outcomes = list(pool.map(lambda d: propagate(d, max_order), data))
    else:
        outcomes = [propagate(d, max_order) for d in data]

    solutions = []
    inconclusive = []
    for datum, outcome in zip(data, outcomes):
        if outcome.status == TERMINATED:
            P = outcome.polynomial
            if admissible_candidate_check(P):
                solutions.append(make_record(P, s))
        elif outcome.status == STILL_OPEN:
            inconclusive.append(datum)

    log.info("s=%d: %d solution(s), %d inconclusive datum(s) at order %d",
             s, len(solutions), len(inconclusive), max_order)
    return Classification(s, max_order, solutions, outcomes, inconclusive)


def outcome_to_json(outcome):
    data = {'s': outcome.s,
            'k': outcome.k,
            'status': outcome.status,
            'max_order': outcome.series.truncation_order,
            'coefficients': [to_json(c) for c in outcome.series.coefficients]}
    if outcome.terminated_at is not None:
        data['terminated_at'] = outcome.terminated_at
    if outcome.status == TERMINATED:
        data['polynomial'] = to_json(outcome.polynomial)
    if outcome.obstruction_detail is not None:
        order, remainder = outcome.obstruction_detail
        data['obstruction'] = {'order': order,
                               'remainder': to_json(remainder)}
    return data
