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
DataFrame views of results. Exact values are rendered as strings so that
no cell ever passes through a float.
"""

import pandas as pd

from .geometry import embedding_dimension
from .polynomial import format_polynomial
from .utils import rational_to_str


def catalog_table(records):
    """
    One row per SolutionRecord.

    Returns
    -------
    pd.DataFrame
        Indexed from 1, columns polynomial, s, q, lambda, label, verified.
    """
    rows = [{'polynomial': format_polynomial(r.polynomial),
             's': r.einstein.s,
             'q': r.einstein.q,
             'lambda': rational_to_str(r.einstein_constant),
             'label': r.label,
             'verified': r.certificate.verdict}
            for r in records]
    table = pd.DataFrame(rows, columns=['polynomial', 's', 'q', 'lambda',
                                        'label', 'verified'])
    table.index = pd.RangeIndex(1, len(table) + 1, name='record')
    return table


def certificate_table(certificate):
    e = certificate.einstein
    return pd.Series({'candidate': format_polynomial(certificate.candidate),
                      's': e.s,
                      'q': e.q,
                      'n': e.n,
                      'lambda': rational_to_str(e.einstein_constant),
                      'verdict': certificate.verdict,
                      'residual': format_polynomial(certificate.residual)},
                     name='certificate')


def cauchy_table(data):
    rows = [{'s': d.s,
             'k': d.k,
             'p0': format_polynomial(d.p0),
             'p1': format_polynomial(d.p1)} for d in data]
    return pd.DataFrame(rows, columns=['s', 'k', 'p0', 'p1'])


def coefficient_table(series):
    """c_h(x1) for every order h of an X2Series."""
    names = ['x1']
    table = pd.DataFrame(
        [{'c_h': format_polynomial(c, names), 'degree': c.degree}
         for c in series.coefficients],
        columns=['c_h', 'degree'])
    table.index.name = 'h'
    return table


def outcome_table(outcomes):
    rows = []
    for o in outcomes:
        P = o.polynomial
        rows.append({'s': o.s,
                     'k': o.k,
                     'status': o.status,
                     'terminated_at': o.terminated_at,
                     'polynomial': None if P is None
                     else format_polynomial(P)})
    return pd.DataFrame(rows, columns=['s', 'k', 'status', 'terminated_at',
                                       'polynomial'])


def embedding_table(fp):
    """
    Per-factor embedding data of a FlagProduct, with G and N repeated on
    every row.
    """
    weights = fp.weights
    N = embedding_dimension(fp)
    rows = [{'n_i': n, 'c_i': c, 'q*c_i': fp.q * c, 'G': fp.gcd, 'N': N}
            for n, c in zip(fp.factor_dims, weights)]
    table = pd.DataFrame(rows, columns=['n_i', 'c_i', 'q*c_i', 'G', 'N'])
    table.index = pd.RangeIndex(1, len(table) + 1, name='factor')
    return table
