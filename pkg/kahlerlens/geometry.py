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

import json
import logging
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt
from typing import Tuple

from scipy.special import comb, factorial

from .mongeampere import (EinsteinData,
                          VerificationCertificate,
                          certificate_from_json,
                          certificate_to_json,
                          einstein_data,
                          mae_residual,
                          power_lift)
from .parsing import parse_expression
from .polynomial import Polynomial, embed, from_json, restrict_axis, to_json
from .utils import (SCHEMA_VERSION,
                    InvalidEinsteinDataError,
                    NonIntegralWeightError,
                    UnsupportedDimensionError,
                    coprime,
                    rational_to_str)

log = logging.getLogger(__name__)

CATALOG_PATH = os.path.join(os.path.dirname(__file__), 'catalog.json')

# (expression, s) of the known n=2 solutions with q=1
_CATALOG_N2 = [
    ("1 + x1 + x2", 3),
    ("(1 + x1)*(1 + x2)", 2),
    ("(1 + (x1 + x2)/3)^3", 1),
    ("(1 + x1/2)^2*(1 + x2/2)^2", 1),
]


@dataclass(frozen=True)
class SolutionRecord(object):
    """
    A verified solution together with the model geometry it realizes.
    The label is read off the factorization pattern; it is metadata.
    """
    polynomial: Polynomial
    einstein: EinsteinData
    label: str
    certificate: VerificationCertificate

    def __post_init__(self):
        if not self.certificate.verdict:
            raise ArithmeticError("record for {} does not verify"
                                  .format(self.polynomial))

    @property
    def einstein_constant(self):
        return self.einstein.einstein_constant


@dataclass(frozen=True)
class FlagProduct(object):
    """
    Product of projective spaces CP^{n_1} x ... x CP^{n_k}, scaled by q.
    """
    factor_dims: Tuple[int, ...]
    q: int = 1

    def __post_init__(self):
        if not self.factor_dims:
            raise ValueError("at least one factor is required")
        if any(d < 1 for d in self.factor_dims):
            raise ValueError("factor dimensions must be positive, got {}"
                             .format(list(self.factor_dims)))
        if self.q < 1:
            raise ValueError("q must be positive, got {}".format(self.q))

    @property
    def gcd(self):
        """G = gcd(n_1 + 1, ..., n_k + 1)."""
        return reduce(gcd, (d + 1 for d in self.factor_dims))

    @property
    def weights(self):
        """
        c_i = prod_{j != i} (n_j + 1) / G^(k-1).

        Raises
        ------
        NonIntegralWeightError
            If some c_i is not an integer.
        """
        k = len(self.factor_dims)
        G = self.gcd
        weights = []
        for i in range(k):
            numerator = 1
            for j, d in enumerate(self.factor_dims):
                if j != i:
                    numerator *= d + 1
            c = Fraction(numerator, G ** (k - 1))
            if c.denominator != 1:
                raise NonIntegralWeightError(
                    "weight c_{} = {} of {} is not an integer"
                    .format(i + 1, c, list(self.factor_dims)))
            weights.append(int(c))
        return tuple(weights)


@dataclass(frozen=True)
class VeroneseConstant(object):
    """Exact radicand (c-1)!/c^(c-2) of the Veronese normalization."""
    c: int
    radicand: Fraction
    is_perfect_square: bool


def flag_product(dims, q=1):
    return FlagProduct(tuple(int(d) for d in dims), int(q))


def veronese_dimension(n, c):
    """N = C(n+c, c) - 1, the target of the degree c Veronese map of CP^n."""
    return int(comb(n + c, c, exact=True)) - 1


def segre_dimension(dims):
    """prod (N_i + 1) - 1."""
    total = 1
    for d in dims:
        total *= d + 1
    return total - 1


def embedding_dimension(fp):
    """
    Dimension of the projective space the scaled flag product embeds in:
    prod C(n_i + q c_i, q c_i) - 1.
    """
    return segre_dimension(veronese_dimension(n, fp.q * c)
                           for n, c in zip(fp.factor_dims, fp.weights))


def veronese_constant(c):
    if c < 1:
        raise ValueError("c must be positive, got {}".format(c))
    radicand = Fraction(int(factorial(c - 1, exact=True))) / \
        Fraction(c) ** (c - 2)
    return VeroneseConstant(c, radicand, _is_square(radicand))


def _is_square(value):
    num, den = value.numerator, value.denominator
    return isqrt(num) ** 2 == num and isqrt(den) ** 2 == den


def lambda_of(s, q, n=None):
    """
    Einstein constant 2s/q.

    Raises
    ------
    InvalidEinsteinDataError
        If (s, q) are not coprime positive integers, or when n is given
        and 2s/q exceeds 2(n+1).
    """
    if n is not None:
        return einstein_data(s, q, n).einstein_constant
    if s < 1 or q < 1:
        raise InvalidEinsteinDataError(
            "s and q must be positive, got s={}, q={}".format(s, q))
    if not coprime(s, q):
        raise InvalidEinsteinDataError(
            "s={} and q={} are not coprime".format(s, q))
    return Fraction(2 * s, q)


def _is_separable(P):
    x1_part = embed(restrict_axis(P, 0), 2, 0)
    x2_part = embed(restrict_axis(P, 1), 2, 1)
    return x1_part * x2_part == P


def model_label(P):
    """
    Name the model geometry of a bivariate solution: a product
    P(x1, 0) * P(0, x2) means CP^1 x CP^1 scaled by the axis degree,
    anything else CP^2 scaled by the total degree.
    """
    if P.variable_count != 2:
        raise UnsupportedDimensionError("labels exist for n=2 only")
    if _is_separable(P):
        c = restrict_axis(P, 0).degree
        metric = "g_FS + g_FS" if c == 1 else "{}(g_FS + g_FS)".format(c)
        return "CP^1 x CP^1, " + metric
    c = P.degree
    return "CP^2, " + ("g_FS" if c == 1 else "{} g_FS".format(c))


def make_record(P, s, q=1, label=None):
    """
    Verify P for (s, q) in dimension P.variable_count and wrap it in a
    SolutionRecord.

    Raises
    ------
    ArithmeticError
        If the residual does not vanish.
    """
    einstein = einstein_data(s, q, P.variable_count)
    certificate = mae_residual(P, einstein)
    if label is None:
        label = model_label(P)
    return SolutionRecord(P, einstein, label, certificate)


def catalog(n=2):
    """
    The known solutions with q = 1, each verified on construction.

    Raises
    ------
    UnsupportedDimensionError
        For n != 2.
    """
    if n != 2:
        raise UnsupportedDimensionError(
            "only the n=2 solutions are classified, got n={}".format(n))
    return [make_record(parse_expression(text), s) for text, s in _CATALOG_N2]


def q_family(record, q):
    """
    Lift a q=1 record to Einstein constant 2s/q.

    When gcd(s, q) = g > 1 the record is stored with the reduced pair
    (s/g, q/g), which describes the same Einstein constant.
    """
    if record.einstein.q != 1:
        raise ValueError("q_family expects a q=1 record, got q={}"
                         .format(record.einstein.q))
    if q < 1:
        raise ValueError("q must be positive, got {}".format(q))
    if q == 1:
        return record
    s = record.einstein.s
    n = record.einstein.n
    lifted = power_lift(record.polynomial, s, q, n)
    g = gcd(s, q)
    return make_record(lifted, s // g, q // g)


def record_to_json(record):
    e = record.einstein
    return {'polynomial': to_json(record.polynomial),
            's': e.s,
            'q': e.q,
            'n': e.n,
            'lambda': rational_to_str(e.einstein_constant),
            'label': record.label,
            'certificate': certificate_to_json(record.certificate)}


def record_from_json(data):
    return SolutionRecord(from_json(data['polynomial']),
                          einstein_data(data['s'], data['q'], data['n']),
                          data['label'],
                          certificate_from_json(data['certificate']))


def write_catalog(path=None):
    """Regenerate the catalog file from freshly verified records."""
    path = path or CATALOG_PATH
    payload = {'schema': SCHEMA_VERSION,
               'records': [record_to_json(r) for r in catalog()]}
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(payload, f, indent=2)
        f.write('\n')
    log.info("wrote %d catalog records to %s", len(payload['records']), path)
    return path


def load_catalog(path=None):
    with open(path or CATALOG_PATH, encoding='utf-8') as f:
        payload = json.load(f)
    if payload.get('schema') != SCHEMA_VERSION:
        raise ValueError("unsupported catalog schema {!r}"
                         .format(payload.get('schema')))
    return [record_from_json(r) for r in payload['records']]
