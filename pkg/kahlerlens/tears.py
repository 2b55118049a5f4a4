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

from . import axis
from . import geometry
from . import tables
from . import taylor
from . import utils


def create_catalog_tear_sheet(q=1):
    """
    Prints the known n=2 solutions, lifted to Einstein constant 2s/q.

    Parameters
    ----------
    q : int
        Lift every record with power_lift; 1 shows the catalog itself.

    Returns
    -------
    records : list of SolutionRecord
    """
    records = [geometry.q_family(r, q) for r in geometry.catalog()]
    print("Known Solutions")
    utils.print_table(tables.catalog_table(records))
    return records


def create_propagation_tear_sheet(s, k, max_order=20):
    """
    Propagates the Cauchy datum (s, k) and prints every coefficient c_h.

    Parameters
    ----------
    s : int
        1, 2 or 3.
    k : int
        Axis degree, s*k in {2, 3}.
    max_order : int
        Truncation order of the expansion in x2.
    """
    outcome = taylor.propagate(axis.cauchy_datum(s, k), max_order)

    print("Propagation of (s={}, k={})".format(s, k))
    utils.print_table(tables.coefficient_table(outcome.series))
    utils.print_table(tables.outcome_table([outcome]), name='outcome')
    return outcome


def create_classification_tear_sheet(s, max_order=20, max_workers=None):
    """
    Creates a tear sheet for the classification of one s: Cauchy data,
    their propagation outcomes and the resulting solutions.

    Parameters
    ----------
    s : int
        1, 2 or 3.
    max_order : int
        The classification is complete for expansions terminating by
        this order.
    max_workers : int, optional
        Thread pool size for propagating the Cauchy data.
    """
    result = taylor.classify(s, max_order, max_workers=max_workers)

    print("Cauchy Data")
    utils.print_table(tables.cauchy_table(axis.enumerate_cauchy_data(s)))

    print("Propagation Outcomes (complete to order {})".format(max_order))
    utils.print_table(tables.outcome_table(result.outcomes))

    print("Solutions")
    utils.print_table(tables.catalog_table(result.solutions))
    return result


def create_embedding_tear_sheet(dims, q=1):
    fp = geometry.flag_product(dims, q)
    print("Embedding of CP^{}".format(" x CP^".join(str(d) for d in dims)))
    utils.print_table(tables.embedding_table(fp))
    return geometry.embedding_dimension(fp)


def create_full_tear_sheet(max_order=20, max_workers=None):
    """
    Creates a full tear sheet: the classification for s = 3, 2, 1 followed
    by the catalog.
    """
    results = {}
    for s in (3, 2, 1):
        results[s] = create_classification_tear_sheet(
            s, max_order, max_workers=max_workers)
    create_catalog_tear_sheet()
    return results
