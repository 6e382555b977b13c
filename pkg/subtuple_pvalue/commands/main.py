# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""The ``main`` function chooses and runs a subcommand."""
import sys
from argparse import ArgumentParser

from subtuple_pvalue.version import version
from subtuple_pvalue.verbose import make_stderr_logger, push_verbose_logger, pop_verbose_logger
from subtuple_pvalue.commands.bug_handler import handle_bugs
from subtuple_pvalue.commands.console_utils import EXIT_INVALID_INPUT
from subtuple_pvalue.commands import instance_args
import subtuple_pvalue.commands.pvalue as pvalue
import subtuple_pvalue.commands.validate as validate
import subtuple_pvalue.commands.enrich as enrich
import subtuple_pvalue.commands.sweep as sweep
import subtuple_pvalue.commands.distribution as distribution

PROGRAM_NAME = "subtuple-pvalue"


def _parse_args_and_run_subcommand(argv):
    parser = ArgumentParser(prog=PROGRAM_NAME,
                            description="Exact tail probabilities for designated types found in a random subtuple.")

    subparsers = parser.add_subparsers(help="Sub-commands")

    parser.add_argument('-v', '--version', action='version', version=version)
    parser.add_argument('--verbose', action='store_true', default=False, help="show verbose debugging details")

    def add_config_arg(preset):
        preset.add_argument('--config',
                            metavar='SETTINGS_FILE',
                            default=None,
                            help="Settings file (defaults to subtuple-pvalue.yml in the current directory)")

    preset = subparsers.add_parser('pvalue', help="Probability of finding z or more designated types")
    instance_args.add_instance_args(preset)
    instance_args.add_computation_args(preset)
    add_config_arg(preset)
    preset.set_defaults(main=pvalue.main)

    preset = subparsers.add_parser('validate', help="Cross-check the fast formula against enumeration over a grid")
    validate.add_validate_args(preset)
    add_config_arg(preset)
    preset.set_defaults(main=validate.main)

    preset = subparsers.add_parser('enrich', help="Derive (n, x, y, z) from an edge list and report its p-value")
    enrich.add_enrich_args(preset)
    instance_args.add_computation_args(preset)
    add_config_arg(preset)
    preset.set_defaults(main=enrich.main)

    preset = subparsers.add_parser('sweep', help="Report the p-value over a range of z or of x")
    instance_args.add_instance_args(preset, optional=('n', 'x', 'y', 'z'))
    sweep.add_sweep_args(preset)
    instance_args.add_computation_args(preset, formats=(instance_args.FORMAT_JSON, instance_args.FORMAT_TEXT))
    add_config_arg(preset)
    preset.set_defaults(main=sweep.main)

    preset = subparsers.add_parser('distribution', help="Exact distribution of the number of designated types found")
    instance_args.add_instance_args(preset, optional=('z', ))
    preset.add_argument('--format',
                        metavar='FORMAT',
                        default=instance_args.FORMAT_TEXT,
                        choices=(instance_args.FORMAT_TEXT, instance_args.FORMAT_JSON),
                        help="One of text, json")
    preset.add_argument('--precision',
                        metavar='DIGITS',
                        type=int,
                        default=None,
                        help="Significant digits for decimal output (default 15)")
    add_config_arg(preset)
    preset.set_defaults(main=distribution.main)

    # argparse doesn't do this for us for whatever reason
    if len(argv) < 2:
        print("Must specify a subcommand.", file=sys.stderr)
        parser.print_usage(file=sys.stderr)
        return EXIT_INVALID_INPUT  # argparse exits with 2 on bad args, copy that

    try:
        args = parser.parse_args(argv[1:])
    except SystemExit as e:
        return e.code

    if 'main' not in args:
        print("Must specify a subcommand.", file=sys.stderr)
        parser.print_usage(file=sys.stderr)
        return EXIT_INVALID_INPUT

    if args.verbose:
        push_verbose_logger(make_stderr_logger(sys.stderr))

    try:
        return args.main(args)
    finally:
        if args.verbose:
            pop_verbose_logger()


def _main_without_bug_handler():
    return _parse_args_and_run_subcommand(sys.argv)


def main():
    """subtuple-pvalue command line tool entry point.

    Takes no args and returns an exit code.
    """
    details = {'version': version}
    return handle_bugs(_main_without_bug_handler, program_name=PROGRAM_NAME, details_dict=details)
