# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Flags shared by the commands that compute a tail probability."""
import os
from collections import namedtuple

from subtuple_pvalue.commands.console_utils import CommandLineError, print_error, print_warning
from subtuple_pvalue.exact_engine import DEFAULT_REMAINDER_MODE, REMAINDER_PAPER_FAITHFUL, all_remainder_modes
from subtuple_pvalue.internal.budget import DEFAULT_BUDGET
from subtuple_pvalue.report import (DEFAULT_PRECISION, DEFAULT_SAMPLES, DEFAULT_SEED, MODE_FAST, MODE_MONTECARLO,
                                    all_computation_modes)
from subtuple_pvalue.settings_file import SettingsFile

FORMAT_JSON = "json"
FORMAT_RATIONAL = "rational"
FORMAT_DECIMAL = "decimal"
FORMAT_TEXT = "text"

ComputationSettings = namedtuple('ComputationSettings',
                                 ['mode', 'remainder_mode', 'precision', 'samples', 'seed', 'budget'])

_instance_help = dict(n="number of distinct element types (genes)",
                      x="size of the drawn subtuple (filtered regulations)",
                      y="number of designated types (known regulators)",
                      z="threshold: count designated types found, z or more")


def add_instance_args(preset, optional=()):
    """Add --n, --x, --y, --z; names in ``optional`` may be omitted."""
    for name in ('n', 'x', 'y', 'z'):
        preset.add_argument('--' + name,
                            metavar=name.upper(),
                            type=int,
                            default=None,
                            required=name not in optional,
                            help=_instance_help[name])


def add_computation_args(preset, formats=(FORMAT_JSON, FORMAT_RATIONAL, FORMAT_DECIMAL), with_mode=True):
    """Add the flags choosing how a value is computed and printed."""
    if with_mode:
        preset.add_argument('--mode',
                            metavar='MODE',
                            default=MODE_FAST,
                            choices=all_computation_modes,
                            help="One of " + ", ".join(all_computation_modes) + " (default fast)")
        preset.add_argument('--samples', metavar='SAMPLES', type=int, default=None, help="Monte Carlo sample count")
        preset.add_argument('--seed', metavar='SEED', type=int, default=None, help="Monte Carlo seed (64-bit integer)")
        preset.add_argument('--budget',
                            metavar='STEPS',
                            type=int,
                            default=None,
                            help="Enumeration cap for naive and exhaustive modes")
    preset.add_argument('--remainder',
                        metavar='REMAINDER_MODE',
                        default=None,
                        choices=all_remainder_modes,
                        help="Remainder pool: corrected (n - y types) or paper (n - min(x, y) types)")
    preset.add_argument('--format', metavar='FORMAT', default=formats[0], choices=formats, help="One of " +
                        ", ".join(formats))
    preset.add_argument('--precision',
                        metavar='DIGITS',
                        type=int,
                        default=None,
                        help="Significant digits for decimal output (default 15)")


def load_settings(args):
    """Load the settings file named by --config, or the one in the current directory."""
    path = getattr(args, 'config', None)
    if path is not None:
        if not os.path.isfile(path):
            raise CommandLineError("settings file %s does not exist" % path)
        return SettingsFile(path)
    return SettingsFile.load_for_directory(os.getcwd())


def _at_least(flag, value, minimum):
    if value < minimum:
        raise CommandLineError("--%s must be at least %d (got %d)" % (flag, minimum, value))
    return value


def resolve_computation_settings(args, settings=None):
    """Fill in unset flags from the settings file, then from built-in defaults.

    Returns:
        ``ComputationSettings``
    """
    if settings is None:
        settings = load_settings(args)

    def pick(flag, from_settings):
        value = getattr(args, flag, None)
        if value is None:
            return from_settings()
        return value

    precision = _at_least('precision', pick('precision', lambda: settings.get_int('precision', DEFAULT_PRECISION)), 1)
    remainder_mode = pick('remainder',
                          lambda: settings.get_choice('remainder', DEFAULT_REMAINDER_MODE, all_remainder_modes))
    samples = _at_least('samples', pick('samples', lambda: settings.get_int('samples', DEFAULT_SAMPLES)), 1)
    seed = pick('seed', lambda: settings.get_int('seed', DEFAULT_SEED))
    if not -(1 << 63) <= seed < (1 << 64):
        raise CommandLineError("--seed must fit in 64 bits (got %d)" % seed)
    budget = _at_least('budget', pick('budget', lambda: settings.get_int('budget', DEFAULT_BUDGET)), 1)
    return ComputationSettings(mode=getattr(args, 'mode', MODE_FAST),
                               remainder_mode=remainder_mode,
                               precision=precision,
                               samples=samples,
                               seed=seed,
                               budget=budget)


def report_diagnostics(report):
    """Print to stderr whatever a reader of the value needs to know about it."""
    if report.exceeds_one:
        print_warning("%s exceeds 1 and is not a probability; the %s remainder pool overcounts when x < y "
                      "(use --remainder corrected)" % (report.p_rational, REMAINDER_PAPER_FAITHFUL))
    if report.mode == MODE_MONTECARLO:
        print_error("Monte Carlo standard error: %s" % report.standard_error)


def print_report(report, output_format):
    """Print one report in the requested format, diagnostics to stderr."""
    report_diagnostics(report)
    if output_format == FORMAT_RATIONAL:
        print(report.p_rational)
    elif output_format == FORMAT_DECIMAL:
        print(report.p_decimal)
    else:
        print(report.to_json())
