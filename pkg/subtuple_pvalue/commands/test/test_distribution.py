# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
import json
from fractions import Fraction

from subtuple_pvalue.commands.distribution import distribution_rows
from subtuple_pvalue.commands.main import _parse_args_and_run_subcommand


def _run(capsys, *args):
    code = _parse_args_and_run_subcommand(['subtuple-pvalue', 'distribution'] + list(args))
    out, err = capsys.readouterr()
    return (code, out, err)


def test_distribution_rows():
    rows = distribution_rows(3, 2, 2)
    assert [(0, 1, Fraction(1, 15), Fraction(1)), (1, 10, Fraction(2, 3), Fraction(14, 15)),
            (2, 4, Fraction(4, 15), Fraction(4, 15))] == rows


def test_distribution_text(capsys):
    (code, out, err) = _run(capsys, '--n', '3', '--x', '2', '--y', '2', '--precision', '3')
    assert 0 == code
    assert "" == err
    lines = [line.split() for line in out.splitlines()]
    assert ["k", "count", "p_exactly_k", "p_at_least_k"] == lines[0]
    assert [["0", "1", "0.0667", "1.00"], ["1", "10", "0.667", "0.933"], ["2", "4", "0.267", "0.267"]] == lines[2:]


def test_distribution_json(capsys):
    (code, out, err) = _run(capsys, '--n', '3', '--x', '2', '--y', '2', '--format', 'json')
    assert 0 == code
    parsed = json.loads(out)
    assert dict(n="3", x="2", y="2") == parsed['instance']
    assert "15" == parsed['total_count']
    assert ["1/15", "2/3", "4/15"] == [row['p_rational'] for row in parsed['rows']]
    assert ["1/1", "14/15", "4/15"] == [row['tail_rational'] for row in parsed['rows']]


def test_distribution_without_designated_types(capsys):
    (code, out, err) = _run(capsys, '--n', '3', '--x', '2', '--y', '0', '--format', 'json')
    assert 0 == code
    parsed = json.loads(out)
    assert 1 == len(parsed['rows'])
    assert "1/1" == parsed['rows'][0]['p_rational']


def test_distribution_invalid_instance(capsys):
    (code, out, err) = _run(capsys, '--n', '3', '--x', '2', '--y', '4')
    assert 2 == code
    assert "" == out
    assert "Error: y must be between 0 and n = 3 (got 4)\n" == err
