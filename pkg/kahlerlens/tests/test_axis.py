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
from itertools import combinations, product
from unittest import TestCase

from numpy.random import RandomState
from parameterized import parameterized

from .. axis import (AxisProfile,
                     admitted_axis_degrees,
                     axis_consistency_check,
                     axis_profile,
                     binomial_power_match,
                     binomial_profile,
                     cauchy_datum,
                     d1_closed_form,
                     datum_to_json,
                     diophantine_residual,
                     enumerate_cauchy_data,
                     mixed_coefficient,
                     root_system,
                     root_system_lhs,
                     soln2_template,
                     vandermonde_closed_form,
                     vandermonde_det)
from .. mongeampere import d_operator
from .. parsing import parse_expression
from .. polynomial import Polynomial, power
from .. utils import InvalidCauchyDatumError, UnsupportedDimensionError

CATALOG = [("1+x1+x2", 3, 1),
           ("(1+x1)*(1+x2)", 2, 1),
           ("(1+(x1+x2)/3)^3", 1, 3),
           ("(1+x1/2)^2*(1+x2/2)^2", 1, 2)]


def univariate(text):
    return parse_expression(text, names=['t'])


class AxisProfileTestCase(TestCase):

    @parameterized.expand([
        ("(1+x1)*(1+x2)", "1+t", "1+t"),
        ("1+x1+x2", "1+t", "1"),
        ("(1+(x1+x2)/3)^3", "(1+t/3)^3", "(1+t/3)^2"),
    ])
    def test_axis_profile(self, text, p, q_profile):
        profile = axis_profile(parse_expression(text), 0)
        self.assertEqual(profile.p, univariate(p))
        self.assertEqual(profile.q_profile, univariate(q_profile))

    def test_axis_out_of_range(self):
        with self.assertRaises(IndexError):
            axis_profile(parse_expression("1+x1+x2"), 2)

    @parameterized.expand([
        ("1+t+t^2/4", 2),
        ("1+t", 1),
        ("(1+t/5)^5", 5),
        ("1+t+t^2", None),
        ("1", None),
        ("2+t", None),
    ])
    def test_binomial_power_match(self, text, expected):
        self.assertEqual(binomial_power_match(univariate(text)), expected)

    @parameterized.expand([(text, s, k, axis) for text, s, k in CATALOG
                           for axis in (0, 1)])
    def test_catalog_axes(self, text, s, k, axis):
        profile = axis_profile(parse_expression(text), axis)
        self.assertEqual(binomial_power_match(profile.p), k)
        self.assertEqual(profile.q_profile,
                         binomial_profile(k, k * (1 - s) + 2))
        self.assertEqual(d_operator(profile.p) * profile.q_profile,
                         power(profile.p, 3 - s))
        self.assertTrue(axis_consistency_check(profile, s, 2))

    def test_inadmissible_degree(self):
        p = univariate("(1+t/2)^2")
        profile = AxisProfile(p, univariate("(1+t/2)^0"), 0)
        self.assertFalse(axis_consistency_check(profile, 3, 2))

    def test_profile_mismatch(self):
        profile = AxisProfile(univariate("1+t"), univariate("1+t^2"), 0)
        self.assertFalse(axis_consistency_check(profile, 2, 2))

    def test_admitted_axis_degrees(self):
        self.assertEqual(admitted_axis_degrees(3, 2), {1})
        self.assertEqual(admitted_axis_degrees(2, 2), {1, 2})
        self.assertIsNone(admitted_axis_degrees(1, 2))
        self.assertIsNone(admitted_axis_degrees(2, 4))


class RootSystemTestCase(TestCase):

    @parameterized.expand([
        ((3,), (3,), "0"),
        ((2,), (3,), "2"),
        ((1, 2), (1, 1), "3t^2 + 8t + 2"),
    ])
    def test_root_system_lhs(self, roots, multiplicities, expected):
        rs = root_system(roots, multiplicities)
        self.assertEqual(root_system_lhs(rs), univariate(expected))

    def test_lhs_vanishes_only_for_single_matching_root(self):
        candidates = [Fraction(1), Fraction(2), Fraction(3), Fraction(-1),
                      Fraction(1, 2)]
        for R in (1, 2, 3):
            for roots in combinations(candidates, R):
                for ks in product(range(1, 5), repeat=R):
                    lhs = root_system_lhs(root_system(roots, ks))
                    expected = R == 1 and ks[0] == roots[0]
                    self.assertEqual(lhs.is_zero(), expected)

    @parameterized.expand([
        ((5,), 5),
        ((1, 2), -4),
        ((1, 2, 3), -72),
    ])
    def test_vandermonde_examples(self, roots, expected):
        self.assertEqual(vandermonde_det(roots), expected)
        self.assertEqual(vandermonde_closed_form(roots), expected)

    def test_vandermonde_random(self):
        rs = RandomState(42)
        samples = 0
        while samples < 100:
            R = rs.randint(1, 6)
            roots = {Fraction(int(rs.choice([-1, 1]) * rs.randint(1, 10)),
                              int(rs.randint(1, 6)))
                     for _ in range(R)}
            if len(roots) != R:
                continue
            roots = sorted(roots)
            self.assertEqual(vandermonde_det(roots, R),
                             vandermonde_closed_form(roots))
            samples += 1

    @parameterized.expand([((1, 1),), ((0, 2),)])
    def test_vandermonde_invalid_roots(self, roots):
        with self.assertRaises(ValueError):
            vandermonde_det(roots)

    @parameterized.expand([
        ((1, 2), (2, 1)),
        ((3,), (3,)),
        ((Fraction(1, 2), -3), (1, 2)),
    ])
    def test_d1_closed_form(self, roots, multiplicities):
        rs = root_system(roots, multiplicities)
        p = Polynomial.one(1)
        for r, k in zip(rs.roots, rs.multiplicities):
            p = p * power(Polynomial.from_coefficients([r, 1]), k)
        self.assertEqual(d1_closed_form(rs), d_operator(p))

    def test_d1_closed_form_random(self):
        rs = RandomState(4242)
        for _ in range(40):
            size = rs.randint(1, 4)
            roots = set()
            while len(roots) < size:
                r = Fraction(int(rs.randint(-9, 10)), int(rs.randint(1, 6)))
                if r != 0:
                    roots.add(r)
            multiplicities = [int(k) for k in rs.randint(1, 5, size=size)]
            system = root_system(sorted(roots), multiplicities)
            p = Polynomial.one(1)
            for r, k in zip(system.roots, system.multiplicities):
                p = p * power(Polynomial.from_coefficients([r, 1]), k)
            self.assertEqual(d1_closed_form(system), d_operator(p))


class CauchyDataTestCase(TestCase):

    @parameterized.expand([
        (1, [(2, "(1+t/2)^2"), (3, "(1+t/3)^2")]),
        (2, [(1, "1+t")]),
        (3, [(1, "1")]),
    ])
    def test_enumerate(self, s, expected):
        data = enumerate_cauchy_data(s)
        self.assertEqual([(d.k, d.p1) for d in data],
                         [(k, univariate(p1)) for k, p1 in expected])
        for d in data:
            self.assertEqual(d.p0, binomial_profile(d.k))
            self.assertEqual(d_operator(d.p0) * d.p1, power(d.p0, 3 - s))

    def test_enumerate_all_pairs(self):
        pairs = {(d.s, d.k) for s in (1, 2, 3)
                 for d in enumerate_cauchy_data(s)}
        self.assertEqual(pairs, {(3, 1), (2, 1), (1, 2), (1, 3)})

    def test_diophantine_brute_force(self):
        for s in range(1, 51):
            for k in range(1, 51):
                self.assertEqual(diophantine_residual(s, k) == 0,
                                 s * k in (2, 3))
        for s in (1, 2, 3):
            roots = {k for k in range(1, 51)
                     if diophantine_residual(s, k) == 0}
            self.assertEqual({d.k for d in enumerate_cauchy_data(s)}, roots)

    @parameterized.expand([(4,), (0,)])
    def test_s_out_of_range(self, s):
        with self.assertRaises(InvalidCauchyDatumError):
            enumerate_cauchy_data(s)

    def test_unsupported_dimension(self):
        with self.assertRaises(UnsupportedDimensionError):
            enumerate_cauchy_data(1, n=3)

    def test_invalid_datum(self):
        with self.assertRaises(InvalidCauchyDatumError):
            cauchy_datum(1, 5)
        self.assertEqual(cauchy_datum(2, 1).p1, univariate("1+t"))

    def test_datum_json(self):
        data = datum_to_json(cauchy_datum(3, 1))
        self.assertEqual(data['s'], 3)
        self.assertEqual(data['k'], 1)
        self.assertEqual(data['p1'], {'vars': ['t'],
                                      'terms': [{'exp': [0], 'coef': '1'}]})


class TemplateTestCase(TestCase):

    def test_product_template(self):
        self.assertEqual(soln2_template(1, 2),
                         parse_expression("(1+x1)*(1+x2)"))

    def test_linear_template(self):
        self.assertEqual(soln2_template(1, 3), parse_expression("1+x1+x2"))

    def test_cubic_template(self):
        self.assertEqual(soln2_template(3, 1),
                         parse_expression("(1+(x1+x2)/3)^3"))

    def test_product_tail(self):
        P = parse_expression("(1+x1/2)^2*(1+x2/2)^2")
        self.assertEqual(P - soln2_template(2, 1),
                         Polynomial.monomial((2, 2), Fraction(1, 16)))

    def test_negative_exponent(self):
        with self.assertRaises(ValueError):
            soln2_template(3, 2)

    @parameterized.expand([(1, k) for k in (1, 2, 3, 4)] +
                          [(2, 1), (2, 2), (3, 1)])
    def test_mixed_coefficient(self, s, k):
        self.assertEqual(mixed_coefficient(k, s),
                         Fraction(2 * diophantine_residual(s, k), k * k))

    @parameterized.expand([(1, 0), (1, 4), (2, -1)])
    def test_parameter_out_of_range(self, k, s):
        with self.assertRaises(ValueError):
            soln2_template(k, s)
