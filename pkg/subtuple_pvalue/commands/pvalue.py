# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""The ``pvalue`` command: one tail probability for given (n, x, y, z)."""
from subtuple_pvalue.commands import instance_args
from subtuple_pvalue.commands.console_utils import EXIT_OK, run_guarded
from subtuple_pvalue.exact_engine import ProblemInstance
from subtuple_pvalue.report import compute_report


def compute_pvalue(args):
    """Compute and print the report.

    Returns:
        exit code
    """
    settings = instance_args.resolve_computation_settings(args)
    inst = ProblemInstance(args.n, args.x, args.y, args.z)
    report = compute_report(inst,
                            mode=settings.mode,
                            remainder_mode=settings.remainder_mode,
                            precision=settings.precision,
                            budget=settings.budget,
                            samples=settings.samples,
                            seed=settings.seed)
    instance_args.print_report(report, args.format)
    return EXIT_OK


def main(args):
    """Start the pvalue command and return exit status code."""
    return run_guarded(lambda: compute_pvalue(args))
