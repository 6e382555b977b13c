# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""The ``distribution`` command: the whole law of the found count, not just one tail."""
import json
from collections import OrderedDict

from subtuple_pvalue.combinatorics import make_rational, rational_string
from subtuple_pvalue.commands import instance_args
from subtuple_pvalue.commands.console_utils import EXIT_OK, print_table, run_guarded
from subtuple_pvalue.exact_engine import ProblemInstance, count_distribution
from subtuple_pvalue.internal.decimal_rendering import decimal_string


def distribution_rows(n, x, y):
    """One row per k: (k, count, point probability, tail probability from k).

    Probabilities are exact rationals.
    """
    counts = count_distribution(n, x, y)
    total = sum(counts)
    rows = []
    tail = total
    for k, count in enumerate(counts):
        rows.append((k, count, make_rational(count, total), make_rational(tail, total)))
        tail -= count
    return rows


def print_distribution(args):
    """Print the distribution table or its JSON form.

    Returns:
        exit code
    """
    settings = instance_args.resolve_computation_settings(args)
    # validates n, x, y the same way a tail query would
    ProblemInstance(args.n, args.x, args.y, 0)
    rows = distribution_rows(args.n, args.x, args.y)
    precision = settings.precision

    if args.format == instance_args.FORMAT_JSON:
        json_rows = []
        for (k, count, point, tail) in rows:
            json_rows.append(
                OrderedDict([('k', str(k)), ('count', str(count)), ('p_rational', rational_string(point)),
                             ('p_decimal', decimal_string(point, precision)), ('tail_rational', rational_string(tail)),
                             ('tail_decimal', decimal_string(tail, precision))]))
        instance = OrderedDict((name, str(getattr(args, name))) for name in ('n', 'x', 'y'))
        total = sum(count for (_, count, _, _) in rows)
        print(json.dumps(OrderedDict([('instance', instance), ('total_count', str(total)), ('rows', json_rows)])))
    else:
        print_table(["k", "count", "p_exactly_k", "p_at_least_k"],
                    [(k, count, decimal_string(point, precision), decimal_string(tail, precision))
                     for (k, count, point, tail) in rows])
    return EXIT_OK


def main(args):
    """Start the distribution command and return exit status code."""
    return run_guarded(lambda: print_distribution(args))
