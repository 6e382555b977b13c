# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Utilities for implementing console interaction."""
import sys

from subtuple_pvalue.combinatorics import InvalidRationalError
from subtuple_pvalue.exact_engine import InvalidInstanceError
from subtuple_pvalue.ingest import IngestError
from subtuple_pvalue.internal.budget import BudgetExceededError
from subtuple_pvalue.settings_file import SettingsError

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID_INPUT = 2
EXIT_BUDGET_EXCEEDED = 3


class CommandLineError(ValueError):
    pass


def print_error(message):
    """Print a diagnostic to stderr."""
    print(message, file=sys.stderr)


def print_warning(message):
    """Print a warning to stderr."""
    print("Warning: " + message, file=sys.stderr)


def print_status_errors(status):
    """Print logs and errors from the status."""
    assert status is not None
    for log in status.logs:
        print(log, file=sys.stderr)
    for error in status.errors:
        print(error, file=sys.stderr)
    print(status.status_description, file=sys.stderr)


def run_guarded(func):
    """Run a command body, turning anticipated failures into exit codes.

    Invalid input exits with 2 and an exceeded enumeration budget with 3;
    the message goes to stderr. Anything else propagates to the bug
    handler.

    Args:
        func (function): takes no args and returns an exit code

    Returns:
        exit code
    """
    try:
        return func()
    except (CommandLineError, InvalidInstanceError, InvalidRationalError, IngestError, SettingsError) as e:
        print_error("Error: " + str(e))
        return EXIT_INVALID_INPUT
    except BudgetExceededError as e:
        print_error("Error: " + str(e))
        print_error("Raise the limit with --budget, or use --mode fast.")
        return EXIT_BUDGET_EXCEEDED


def format_table(headers, rows):
    """Format rows as a text table with left-aligned, space-separated columns.

    Column order is fixed by ``headers``; nothing depends on the locale.

    Args:
        headers (sequence of str): column titles
        rows (iterable of sequences): cell values, converted with ``str``

    Returns:
        the table as one string ending in a newline
    """
    lines = [list(headers), ["=" * len(h) for h in headers]]
    lines.extend([str(cell) for cell in row] for row in rows)
    widths = [max(len(line[i]) for line in lines) for i in range(len(headers))]
    table = ""
    for line in lines:
        cells = [cell.ljust(width) for cell, width in zip(line, widths)]
        table = table + "  ".join(cells).rstrip() + "\n"
    return table


def print_table(headers, rows):
    """Print a table to stdout, see ``format_table``."""
    # we chop the newline off
    print(format_table(headers, rows)[:-1])
