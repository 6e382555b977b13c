# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""The ``validate`` command: cross-check the fast formula over a grid."""
from subtuple_pvalue import validation
from subtuple_pvalue.commands import instance_args
from subtuple_pvalue.commands.console_utils import (EXIT_MISMATCH, EXIT_OK, CommandLineError, print_error,
                                                    print_status_errors, print_table, run_guarded)
from subtuple_pvalue.internal.budget import DEFAULT_BUDGET


def add_validate_args(preset):
    """Add the grid bounds and the per-evaluation budget."""
    preset.add_argument('--max-n', metavar='N', type=int, default=None, help="Largest n in the grid (default 8)")
    preset.add_argument('--max-x', metavar='X', type=int, default=None, help="Largest x in the grid (default 12)")
    preset.add_argument('--max-y', metavar='Y', type=int, default=None, help="Largest y in the grid (default 5)")
    preset.add_argument('--oracle-max-n',
                        metavar='N',
                        type=int,
                        default=None,
                        help="Largest n checked against exhaustive enumeration (default 4)")
    preset.add_argument('--budget',
                        metavar='STEPS',
                        type=int,
                        default=None,
                        help="Enumeration cap for each slow evaluation")


def _grid_setting(args, settings, name, default):
    value = getattr(args, name)
    if value is None:
        return settings.get_int(['validate', name], default)
    return value


def validate_grid(args):
    """Run both grid checks and print a summary.

    Returns:
        exit code
    """
    settings = instance_args.load_settings(args)
    max_n = _grid_setting(args, settings, 'max_n', validation.DEFAULT_MAX_N)
    max_x = _grid_setting(args, settings, 'max_x', validation.DEFAULT_MAX_X)
    max_y = _grid_setting(args, settings, 'max_y', validation.DEFAULT_MAX_Y)
    oracle_max_n = _grid_setting(args, settings, 'oracle_max_n', validation.DEFAULT_ORACLE_MAX_N)
    budget = args.budget
    if budget is None:
        budget = settings.get_int('budget', DEFAULT_BUDGET, minimum=1)
    elif budget < 1:
        raise CommandLineError("--budget must be at least 1 (got %d)" % budget)

    # check all bounds before running either grid
    validation.check_grid_bounds(max_n, max_x, max_y)
    if oracle_max_n < 2:
        raise CommandLineError("--oracle-max-n must be at least 2, since n >= 2 (got %d)" % oracle_max_n)

    statuses = [validation.check_fast_against_naive(max_n, max_x, max_y, budget=budget),
                validation.check_fast_against_exhaustive(min(oracle_max_n, max_n), max_x, max_y, budget=budget)]

    print_table(["Check", "Comparisons", "Mismatches"],
                [(status.name, status.checked, len(status.mismatches)) for status in statuses])
    mismatches = sum(len(status.mismatches) for status in statuses)
    print("%d mismatches" % mismatches)

    failed = [status for status in statuses if not status]
    if not failed:
        return EXIT_OK
    (inst, mode, expected, actual) = failed[0].mismatches[0]
    print_error("First failing instance: n=%d x=%d y=%d z=%d (%s remainder): expected %s, fast gave %s" %
                (inst.n, inst.x, inst.y, inst.z, mode, expected, actual))
    for status in failed:
        print_status_errors(status)
    return EXIT_MISMATCH


def main(args):
    """Start the validate command and return exit status code."""
    return run_guarded(lambda: validate_grid(args))
