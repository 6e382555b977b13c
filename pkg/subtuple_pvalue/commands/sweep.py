# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""The ``sweep`` command: one report per z, or per x, over an inclusive range."""
import re

from subtuple_pvalue.commands import instance_args
from subtuple_pvalue.commands.console_utils import EXIT_OK, CommandLineError, print_table, run_guarded
from subtuple_pvalue.exact_engine import ProblemInstance
from subtuple_pvalue.report import compute_report

_RANGE = re.compile(r'^\s*(?P<first>-?\d+)\s*\.\.\s*(?P<last>-?\d+)\s*$')


def parse_range(flag, text):
    """Parse ``A..B`` into ``range(A, B + 1)``; an empty range is an error."""
    match = _RANGE.match(text)
    if match is None:
        raise CommandLineError("%s expects an inclusive range like 0..5 (got %r)" % (flag, text))
    first = int(match.group('first'))
    last = int(match.group('last'))
    if last < first:
        raise CommandLineError("%s range %s is empty" % (flag, text))
    return range(first, last + 1)


def add_sweep_args(preset):
    """Add the two mutually exclusive sweep flags."""
    group = preset.add_mutually_exclusive_group(required=True)
    group.add_argument('--sweep-z', metavar='A..B', default=None, help="Report every z in the inclusive range")
    group.add_argument('--sweep-x', metavar='A..B', default=None, help="Report every x in the inclusive range")


def swept_instances(args):
    """Build every instance of the sweep up front, so a bad value fails before any output.

    Returns:
        tuple of (swept field name, list of ``ProblemInstance``)
    """
    for name in ('n', 'y'):
        if getattr(args, name) is None:
            raise CommandLineError("--%s is required" % name)
    if args.sweep_z is not None:
        if args.x is None:
            raise CommandLineError("--x is required with --sweep-z")
        values = parse_range('--sweep-z', args.sweep_z)
        return ('z', [ProblemInstance(args.n, args.x, args.y, z) for z in values])
    if args.z is None:
        raise CommandLineError("--z is required with --sweep-x")
    values = parse_range('--sweep-x', args.sweep_x)
    return ('x', [ProblemInstance(args.n, x, args.y, args.z) for x in values])


def sweep(args):
    """Compute and print one report per swept value.

    Returns:
        exit code
    """
    settings = instance_args.resolve_computation_settings(args)
    (field, instances) = swept_instances(args)
    reports = []
    for inst in instances:
        report = compute_report(inst,
                                mode=settings.mode,
                                remainder_mode=settings.remainder_mode,
                                precision=settings.precision,
                                budget=settings.budget,
                                samples=settings.samples,
                                seed=settings.seed)
        instance_args.report_diagnostics(report)
        reports.append(report)

    if args.format == instance_args.FORMAT_JSON:
        for report in reports:
            print(report.to_json())
    else:
        print_table([field, "p_rational", "p_decimal", "log10_p"],
                    [(getattr(r.instance, field), r.p_rational, r.p_decimal, r.log10_p) for r in reports])
    return EXIT_OK


def main(args):
    """Start the sweep command and return exit status code."""
    return run_guarded(lambda: sweep(args))
