# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
import os
import sys

import pytest

from subtuple_pvalue.commands.main import _parse_args_and_run_subcommand, main
from subtuple_pvalue.verbose import _verbose_logger, _null_logger
from subtuple_pvalue.version import version

all_subcommands = ('pvalue', 'validate', 'enrich', 'sweep', 'distribution')
all_subcommands_in_curlies = "{" + ",".join(all_subcommands) + "}"


def test_main_no_subcommand(capsys):
    code = _parse_args_and_run_subcommand(['subtuple-pvalue'])

    assert 2 == code

    out, err = capsys.readouterr()
    assert "" == out
    assert err.startswith('Must specify a subcommand.\nusage: subtuple-pvalue [-h] [-v] [--verbose]')
    assert all_subcommands_in_curlies in err


def test_main_only_global_flags(capsys):
    code = _parse_args_and_run_subcommand(['subtuple-pvalue', '--verbose'])

    assert 2 == code
    out, err = capsys.readouterr()
    assert "" == out
    assert err.startswith('Must specify a subcommand.\n')


def test_main_bad_subcommand(capsys):
    code = _parse_args_and_run_subcommand(['subtuple-pvalue', 'foo'])

    out, err = capsys.readouterr()
    assert "" == out
    assert "subtuple-pvalue: error: argument" in err
    assert "invalid choice: 'foo'" in err
    assert 2 == code


def test_main_help(capsys):
    code = _parse_args_and_run_subcommand(['subtuple-pvalue', '--help'])

    out, err = capsys.readouterr()
    assert 0 == code
    assert "" == err
    assert out.startswith("usage: subtuple-pvalue")
    assert "Exact tail probabilities" in out
    for subcommand in all_subcommands:
        assert subcommand in out


@pytest.mark.parametrize("subcommand", all_subcommands)
def test_subcommand_help(capsys, subcommand):
    code = _parse_args_and_run_subcommand(['subtuple-pvalue', subcommand, '--help'])

    out, err = capsys.readouterr()
    assert 0 == code
    assert out.startswith("usage: subtuple-pvalue " + subcommand)
    assert "--config SETTINGS_FILE" in out


def test_main_version(capsys):
    code = _parse_args_and_run_subcommand(['subtuple-pvalue', '--version'])

    out, err = capsys.readouterr()
    assert 0 == code
    assert version + "\n" == out


def test_main_verbose_logs_to_stderr(capsys):
    code = _parse_args_and_run_subcommand(['subtuple-pvalue', '--verbose', 'pvalue', '--n', '3', '--x', '2', '--y',
                                           '1', '--z', '1', '--format', 'rational'])

    out, err = capsys.readouterr()
    assert 0 == code
    assert "3/5\n" == out
    assert "DEBUG: fast count for ProblemInstance(n=3, x=2, y=1, z=1) in corrected mode" in err
    # the logger is popped once the command is done
    assert _null_logger() is _verbose_logger()


def test_main_entry_point(capsys, monkeypatch):
    monkeypatch.setattr(sys, 'argv', ['subtuple-pvalue', 'pvalue', '--n', '3', '--x', '2', '--y', '1', '--z', '0',
                                      '--format', 'rational'])
    code = main()

    out, err = capsys.readouterr()
    assert 0 == code
    assert "1/1\n" == out


def test_main_entry_point_reports_bugs(capsys, monkeypatch):
    def broken(*args, **kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr('subtuple_pvalue.commands.pvalue.compute_report', broken)
    monkeypatch.setattr(sys, 'argv', ['subtuple-pvalue', 'pvalue', '--n', '3', '--x', '2', '--y', '1', '--z', '1'])
    code = main()

    out, err = capsys.readouterr()
    assert 1 == code
    assert "" == out
    assert err.startswith("An unexpected error occurred, most likely a bug in subtuple-pvalue.\n"
                          "    (The error was: RuntimeError: boom)\n")
    filename = err.split()[-1]
    os.remove(filename)
