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
Command line interface.

Exit codes: 0 verified or resolved, 1 verified false or obstructed,
2 input error, 3 inconclusive at the requested order.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, field
from functools import wraps
from typing import List

from . import axis
from . import geometry
from . import tables
from . import taylor
from .mongeampere import (admissible_candidate_check,
                          certificate_to_json,
                          einstein_data,
                          mae_residual)
from .parsing import parse_expression
from .polynomial import format_polynomial, from_json
from .utils import (SCHEMA_VERSION,
                    InadmissibleCandidateError,
                    KahlerLensError,
                    VariableCountMismatchError,
                    rational_to_str)

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_INCONCLUSIVE = 3

DEFAULT_MAX_ORDER = 20
MAX_ORDER_ENV = 'MA_CLASSIFY_MAX_ORDER'


@dataclass
class Report(object):
    """
    Result of one command. `outputs` holds the exact values in interchange
    form; `tables` and `notes` are their text rendering.
    """
    command: str
    inputs: dict
    outputs: dict
    status: int
    tables: List = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def to_json(self):
        return {'schema': SCHEMA_VERSION,
                'command': self.command,
                'inputs': self.inputs,
                'outputs': self.outputs,
                'status': self.status}

    def render(self, emit='text'):
        if emit == 'json':
            return json.dumps(self.to_json(), indent=2, ensure_ascii=False)
        lines = ["{} (status {})".format(self.command, self.status)]
        for key, value in self.inputs.items():
            if isinstance(value, dict) and 'terms' in value:
                value = format_polynomial(from_json(value), value['vars'])
            lines.append("  {}: {}".format(key, value))
        for title, table in self.tables:
            lines.append("")
            lines.append(title)
            lines.append(table.to_string())
        if self.notes:
            lines.append("")
            lines.extend(self.notes)
        return "\n".join(lines)


def report_errors(func):
    """
    Turn input errors into a one-line diagnostic on stderr and exit code 2
    instead of a traceback.
    """
    @wraps(func)
    def dec(args):
        try:
            return func(args)
        except (KahlerLensError, ValueError, IndexError, OSError) as e:
            log.debug("input error in %s", func.__name__, exc_info=True)
            print("error: {}".format(e), file=sys.stderr)
            return EXIT_INPUT
    return dec


def default_max_order():
    """
    The expansion order used when --max-order is omitted: the value of
    MA_CLASSIFY_MAX_ORDER if it is a positive integer, otherwise 20.
    """
    value = os.environ.get(MAX_ORDER_ENV)
    if value is None:
        return DEFAULT_MAX_ORDER
    try:
        order = int(value)
    except ValueError:
        order = 0
    if order < 1:
        log.warning("ignoring %s=%r, using %d", MAX_ORDER_ENV, value,
                    DEFAULT_MAX_ORDER)
        return DEFAULT_MAX_ORDER
    return order


def read_polynomial(text, n):
    """Inline expression, or `@path` to a JSON polynomial."""
    if text.startswith('@'):
        with open(text[1:], encoding='utf-8') as f:
            P = from_json(json.load(f))
    else:
        P = parse_expression(text, variable_count=n)
    if P.variable_count != n:
        raise VariableCountMismatchError(
            "polynomial has {} variables but n = {}"
            .format(P.variable_count, n))
    return P


def _dims(text):
    try:
        dims = [int(part) for part in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(
            "expected comma separated integers, got {!r}".format(text))
    if not dims or any(d < 1 for d in dims):
        raise argparse.ArgumentTypeError(
            "dimensions must be positive, got {!r}".format(text))
    return dims


def cmd_verify(args):
    P = read_polynomial(args.poly, args.n)
    einstein = einstein_data(args.s, args.q, args.n)
    if not admissible_candidate_check(P):
        raise InadmissibleCandidateError(
            "{} is not of the form 1 + x1 + ... + xn + (positive terms of "
            "degree >= 2)".format(P))
    certificate = mae_residual(P, einstein)
    status = EXIT_OK if certificate.verdict else EXIT_FALSE
    inputs = {'poly': certificate_to_json(certificate)['candidate'],
              's': args.s, 'q': args.q, 'n': args.n}
    return Report('verify', inputs, certificate_to_json(certificate), status,
                  tables=[("Certificate",
                           tables.certificate_table(certificate).to_frame())])


def cmd_cauchy(args):
    data = axis.enumerate_cauchy_data(args.s)
    return Report('cauchy', {'s': args.s},
                  {'data': [axis.datum_to_json(d) for d in data]},
                  EXIT_OK,
                  tables=[("Cauchy Data", tables.cauchy_table(data))])


def _max_order(args):
    order = args.max_order
    if order is None:
        order = default_max_order()
    return order


def cmd_classify(args):
    max_order = _max_order(args)
    if max_order < 4:
        raise ValueError("--max-order must be at least 4, got {}"
                         .format(max_order))
    result = taylor.classify(args.s, max_order, max_workers=args.workers)
    status = EXIT_OK if result.resolved else EXIT_INCONCLUSIVE
    outputs = {
        'complete_to_order': max_order,
        'solutions': [geometry.record_to_json(r) for r in result.solutions],
        'outcomes': [taylor.outcome_to_json(o) for o in result.outcomes],
        'inconclusive': [axis.datum_to_json(d) for d in result.inconclusive],
    }
    notes = ["Complete for solutions whose expansion in x2 terminates by "
             "order {}.".format(max_order)]
    if not result.resolved:
        notes.append("Inconclusive at this order: {} Cauchy datum(s) still "
                     "open.".format(len(result.inconclusive)))
    return Report('classify', {'s': args.s, 'max_order': max_order},
                  outputs, status,
                  tables=[("Propagation Outcomes",
                           tables.outcome_table(result.outcomes)),
                          ("Solutions",
                           tables.catalog_table(result.solutions))],
                  notes=notes)


def cmd_propagate(args):
    max_order = _max_order(args)
    datum = axis.cauchy_datum(args.s, args.k)
    outcome = taylor.propagate(datum, max_order)
    status = {taylor.TERMINATED: EXIT_OK,
              taylor.OBSTRUCTED: EXIT_FALSE,
              taylor.STILL_OPEN: EXIT_INCONCLUSIVE}[outcome.status]
    notes = ["status: {}".format(outcome.status)]
    if outcome.polynomial is not None:
        notes.append("polynomial: {}".format(outcome.polynomial))
    return Report('propagate',
                  {'s': args.s, 'k': args.k, 'max_order': max_order},
                  taylor.outcome_to_json(outcome), status,
                  tables=[("Coefficients",
                           tables.coefficient_table(outcome.series))],
                  notes=notes)


def cmd_embed_dim(args):
    fp = geometry.flag_product(args.dims, args.q)
    outputs = {'G': fp.gcd,
               'weights': list(fp.weights),
               'N': geometry.embedding_dimension(fp)}
    return Report('embed-dim', {'dims': list(fp.factor_dims), 'q': fp.q},
                  outputs, EXIT_OK,
                  tables=[("Embedding", tables.embedding_table(fp))],
                  notes=["N = {}".format(outputs['N'])])


def cmd_catalog(args):
    records = [geometry.q_family(r, args.q) for r in geometry.catalog()]
    outputs = {'records': [geometry.record_to_json(r) for r in records]}
    lambdas = sorted({rational_to_str(r.einstein_constant) for r in records})
    return Report('catalog', {'q': args.q}, outputs, EXIT_OK,
                  tables=[("Known Solutions", tables.catalog_table(records))],
                  notes=["lambda: {}".format(", ".join(lambdas))])


def build_parser():
    from . import __version__

    # also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--emit', choices=['text', 'json'],
                        default=argparse.SUPPRESS,
                        help="output format (default: text)")
    common.add_argument('-v', '--verbose', action='count',
                        default=argparse.SUPPRESS,
                        help="log INFO, or DEBUG when repeated")

    parser = argparse.ArgumentParser(
        prog='kahlerlens', parents=[common],
        description="Verify and classify polynomial solutions of the "
                    "rotation invariant Monge-Ampere equations.")
    parser.add_argument('--version', action='version',
                        version='%(prog)s {}'.format(__version__))
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('verify', parents=[common],
                       help="verify a candidate polynomial")
    p.add_argument('-p', '--poly', required=True,
                   help="expression, or @file.json")
    p.add_argument('-s', '--s', type=int, required=True,
                   help="equation parameter, lambda = 2s/q")
    p.add_argument('-q', '--q', type=int, default=1)
    p.add_argument('-n', '--n', type=int, default=2,
                   help="number of variables")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('cauchy', parents=[common],
                       help="list the Cauchy data of s")
    p.add_argument('-s', '--s', type=int, required=True,
                   help="equation parameter, lambda = 2s/q")
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser('classify', parents=[common],
                       help="classify the solutions of s")
    p.add_argument('-s', '--s', type=int, required=True,
                   help="equation parameter, lambda = 2s/q")
    p.add_argument('--max-order', type=int, default=None)
    p.add_argument('--workers', type=int, default=None,
                   help="propagate Cauchy data on this many threads")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser('propagate', parents=[common],
                       help="propagate one Cauchy datum")
    p.add_argument('-s', '--s', type=int, required=True,
                   help="equation parameter, lambda = 2s/q")
    p.add_argument('-k', '--k', type=int, required=True,
                   help="axis degree of the Cauchy datum")
    p.add_argument('--max-order', type=int, default=None)
    p.set_defaults(func=cmd_propagate)

    p = sub.add_parser('embed-dim', parents=[common],
                       help="embedding dimension of a flag product")
    p.add_argument('-n', '--dims', type=_dims, required=True,
                   help="comma separated factor dimensions, e.g. 1,1")
    p.add_argument('-q', '--q', type=int, default=1)
    p.set_defaults(func=cmd_embed_dim)

    p = sub.add_parser('catalog', parents=[common],
                       help="print the known solutions")
    p.add_argument('-q', '--q', type=int, default=1,
                   help="lift to Einstein constant 2s/q")
    p.set_defaults(func=cmd_catalog)
    return parser


def configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    args = build_parser().parse_args(argv)
    configure_logging(getattr(args, 'verbose', 0))
    report = report_errors(args.func)(args)
    if isinstance(report, int):
        return report
    print(report.render(getattr(args, 'emit', 'text')))
    return report.status
