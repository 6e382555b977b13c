# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
import pytest

import subtuple_pvalue.commands.console_utils as console_utils
from subtuple_pvalue.exact_engine import ProblemInstance
from subtuple_pvalue.internal.budget import BudgetExceededError
from subtuple_pvalue.internal.simple_status import SimpleStatus


def test_format_table():
    table = console_utils.format_table(["k", "count"], [(0, 1), (1, 10), (2, "4")])
    assert ("k  count\n"
            "=  =====\n"
            "0  1\n"
            "1  10\n"
            "2  4\n") == table


def test_format_table_widens_to_contents():
    table = console_utils.format_table(["z", "p"], [(10, "1/1"), (2, "14/15")])
    assert ("z   p\n"
            "==  =\n"
            "10  1/1\n"
            "2   14/15\n") == table


def test_print_table(capsys):
    console_utils.print_table(["a"], [("x", )])
    out, err = capsys.readouterr()
    assert "a\n=\nx\n" == out
    assert "" == err


def test_print_status_errors(capsys):
    status = SimpleStatus(success=False, description="it failed", logs=["a log"], errors=["an error"])
    console_utils.print_status_errors(status)
    out, err = capsys.readouterr()
    assert "" == out
    assert "a log\nan error\nit failed\n" == err


def test_print_warning(capsys):
    console_utils.print_warning("careful")
    out, err = capsys.readouterr()
    assert "" == out
    assert "Warning: careful\n" == err


def test_run_guarded_passes_through_exit_code():
    assert 0 == console_utils.run_guarded(lambda: 0)
    assert 1 == console_utils.run_guarded(lambda: 1)


def test_run_guarded_invalid_input(capsys):
    code = console_utils.run_guarded(lambda: ProblemInstance(1, 0, 0, 0))
    assert console_utils.EXIT_INVALID_INPUT == code
    out, err = capsys.readouterr()
    assert "" == out
    assert "Error: n must be at least 2 (got 1)\n" == err


def test_run_guarded_budget(capsys):
    def too_much():
        raise BudgetExceededError(10, "things", required=11)

    code = console_utils.run_guarded(too_much)
    assert console_utils.EXIT_BUDGET_EXCEEDED == code
    out, err = capsys.readouterr()
    assert "" == out
    assert ("Error: enumeration budget of 10 exceeded: enumerating things requires 11 steps\n"
            "Raise the limit with --budget, or use --mode fast.\n") == err


def test_run_guarded_lets_bugs_through():
    def buggy():
        raise AssertionError("bug")

    with pytest.raises(AssertionError):
        console_utils.run_guarded(buggy)
