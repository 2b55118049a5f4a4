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
from unittest import TestCase

from numpy.random import RandomState
from parameterized import parameterized

from .. mongeampere import (admissible_candidate_check,
                            certificate_from_json,
                            certificate_to_json,
                            d_operator,
                            einstein_data,
                            lambda_bounds,
                            ma_matrix,
                            mae_residual,
                            power_lift,
                            power_reduce,
                            qth_root,
                            verify_batch)
from .. parsing import parse_expression
from .. polynomial import (Polynomial,
                           determinant,
                           exact_divide,
                           permute_variables,
                           scale_vars)
from .. taylor import edge_factor
from .. utils import (InvalidEinsteinDataError,
                      RootExtractionError,
                      VariableCountMismatchError)

CATALOG = [("1+x1+x2", 3),
           ("(1+x1)*(1+x2)", 2),
           ("(1+(x1+x2)/3)^3", 1),
           ("(1+x1/2)^2*(1+x2/2)^2", 1)]


def random_candidate(rs, n, max_terms=3, max_degree=4):
    """1 plus a few random monomials of degree 1..max_degree."""
    terms = {(0,) * n: 1}
    for _ in range(rs.randint(1, max_terms + 1)):
        degree = rs.randint(1, max_degree + 1)
        exp = [0] * n
        for _ in range(degree):
            exp[rs.randint(n)] += 1
        num = int(rs.choice([-5, -3, -2, -1, 1, 2, 3, 5]))
        den = int(rs.randint(1, 5))
        terms[tuple(exp)] = Fraction(num, den)
    return Polynomial(n, terms)


class EinsteinDataTestCase(TestCase):

    def test_properties(self):
        e = einstein_data(3, 2, 2)
        self.assertEqual(e.einstein_constant, 3)
        self.assertEqual(e.exponent, Fraction(3, 2))
        self.assertFalse(e.is_integral)
        self.assertEqual(e.power_exponent, 3)
        self.assertTrue(einstein_data(2).is_integral)

    @parameterized.expand([(2, 2, 2), (0, 1, 2), (1, 0, 2), (7, 1, 2),
                           (1, 1, 0)])
    def test_invalid(self, s, q, n):
        with self.assertRaises(InvalidEinsteinDataError):
            einstein_data(s, q, n)

    def test_lambda_bounds(self):
        P = parse_expression("1+x1+x2")
        self.assertEqual(lambda_bounds(P, 2), (4, 6))
        Q = parse_expression("(1+(x1+x2)/3)^3")
        low, high = lambda_bounds(Q, 2)
        self.assertTrue(low <= 2 <= high)


class MongeAmpereTestCase(TestCase):

    @parameterized.expand(CATALOG)
    def test_catalog_solutions_verify(self, text, s):
        P = parse_expression(text)
        certificate = mae_residual(P, einstein_data(s))
        self.assertTrue(certificate.verdict)
        self.assertTrue(certificate.residual.is_zero())
        self.assertEqual(d_operator(P), P ** (3 - s))

    def test_ma_matrix(self):
        P = parse_expression("1+x1+x2")
        m = ma_matrix(P)
        self.assertEqual(m.dimension, 2)
        # (P*P_12 - P_1*P_2)*x1 with P_12 = 0
        self.assertEqual(m[0, 1], parse_expression("-x1"))
        self.assertEqual(m[1, 0], parse_expression("-x2"))

    @parameterized.expand([("1+t", ), ("(1+t/2)^2", ), ("(1+t/3)^3", ),
                           ("1 + t + 5t^3", )])
    def test_univariate_operator_is_edge_factor(self, text):
        p = parse_expression(text, names=['t'])
        self.assertEqual(d_operator(p), edge_factor(p))

    def test_non_solution(self):
        P = parse_expression("1+x1+x2+x1*x2^2")
        certificate = mae_residual(P, einstein_data(2))
        self.assertFalse(certificate.verdict)
        self.assertFalse(certificate.residual.is_zero())

    def test_dimension_mismatch(self):
        with self.assertRaises(VariableCountMismatchError):
            mae_residual(parse_expression("1+x1+x2"), einstein_data(3, 1, 3))

    def test_zero_constant_term(self):
        with self.assertRaises(ValueError):
            d_operator(parse_expression("x1 + x2"))

    def test_divisibility(self):
        rs = RandomState(1337)
        for n, count in ((2, 300), (3, 200)):
            for _ in range(count):
                P = random_candidate(rs, n)
                det = determinant(ma_matrix(P))
                quotient = exact_divide(det, P ** (n - 1))
                self.assertEqual(quotient * P ** (n - 1), det)

    def test_verdict_symmetric_in_variables(self):
        rs = RandomState(2718)
        candidates = [parse_expression(text) for text, _ in CATALOG]
        candidates += [random_candidate(rs, 2) for _ in range(60)]
        for P in candidates:
            swapped = permute_variables(P, [1, 0])
            for s in (1, 2, 3):
                e = einstein_data(s)
                certificate = mae_residual(P, e)
                mirrored = mae_residual(swapped, e)
                self.assertEqual(certificate.verdict, mirrored.verdict)
                self.assertEqual(
                    permute_variables(certificate.residual, [1, 0]),
                    mirrored.residual)

    def test_verify_batch(self):
        candidates = [parse_expression(text) for text, _ in CATALOG[2:]]
        e = einstein_data(1)
        serial = verify_batch(candidates, e)
        threaded = verify_batch(candidates, e, max_workers=2)
        self.assertEqual(serial, threaded)
        self.assertTrue(all(c.verdict for c in serial))

    def test_certificate_json(self):
        P = parse_expression("1+x1+x2+x1*x2^2")
        certificate = mae_residual(P, einstein_data(2))
        data = certificate_to_json(certificate)
        self.assertFalse(data['verdict'])
        self.assertEqual(data['lambda'], '4')
        self.assertIn('residual', data)
        self.assertEqual(certificate_from_json(data), certificate)

        solved = mae_residual(parse_expression("1+x1+x2"), einstein_data(3))
        self.assertNotIn('residual', certificate_to_json(solved))


class AdmissibilityTestCase(TestCase):

    @parameterized.expand([
        ("1+x1+x2", True),
        ("(1+(x1+x2)/3)^3", True),
        ("1+2x1+x2", False),
        ("1+x1", False),
        ("2+x1+x2", False),
        ("1+x1+x2-x1*x2", False),
    ])
    def test_admissible_candidate_check(self, text, expected):
        self.assertEqual(admissible_candidate_check(parse_expression(text)),
                         expected)


class PowerLiftTestCase(TestCase):

    def test_lift_example(self):
        S = parse_expression("1+x1+x2")
        self.assertEqual(power_lift(S, 3, 2, 2),
                         parse_expression("(1+(x1+x2)/2)^2"))
        self.assertEqual(power_lift(S, 3, 1, 2), S)

    @parameterized.expand([(text, s, q) for text, s in CATALOG
                           for q in (2, 3, 4)])
    def test_lift_solves_and_reduces(self, text, s, q):
        S = parse_expression(text)
        P = power_lift(S, s, q, 2)
        root = scale_vars(S, [Fraction(1, q)] * 2)
        self.assertEqual(root ** q, P)
        # D_2(P)^q == P^(3q-s) with P = root^q
        self.assertEqual(d_operator(P), root ** (3 * q - s))
        self.assertEqual(power_reduce(P, s, q, 2), S)

    @parameterized.expand([(text, s) for text, s in CATALOG])
    def test_lift_identity_q2(self, text, s):
        P = power_lift(parse_expression(text), s, 2, 2)
        self.assertEqual(d_operator(P) ** 2, P ** (6 - s))

    def test_qth_root_failure(self):
        with self.assertRaises(RootExtractionError):
            qth_root(parse_expression("1+x1+x2"), 2)
        with self.assertRaises(RootExtractionError):
            qth_root(parse_expression("1+x1+x2^2"), 2)
