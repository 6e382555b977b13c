# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
import json
from fractions import Fraction

import pytest

from subtuple_pvalue.exact_engine import REMAINDER_PAPER_FAITHFUL, ProblemInstance
from subtuple_pvalue.internal.budget import BudgetExceededError, EnumerationBudget
from subtuple_pvalue.report import (MODE_EXHAUSTIVE, MODE_FAST, MODE_MONTECARLO, MODE_NAIVE, REPORT_KEYS,
                                    PValueReport, compute_report)
from subtuple_pvalue.version import version


def test_report_properties():
    report = compute_report(ProblemInstance(3, 2, 1, 1))
    assert MODE_FAST == report.mode
    assert "corrected" == report.remainder_mode
    assert Fraction(3, 5) == report.p
    assert 9 == report.favorable_count
    assert 15 == report.total_count
    assert "3/5" == report.p_rational
    assert "0.600000000000000" == report.p_decimal
    assert "-0.221848749616356" == report.log10_p
    assert not report.exceeds_one
    assert report.standard_error is None


def test_report_json_schema():
    report = compute_report(ProblemInstance(3, 2, 1, 1), precision=5)
    parsed = json.loads(report.to_json())
    assert list(REPORT_KEYS) == list(parsed.keys())
    assert dict(n="3", x="2", y="1", z="1") == parsed['instance']
    assert "0.60000" == parsed['p_decimal']
    assert "9" == parsed['favorable_count']
    assert "15" == parsed['total_count']
    assert dict(tool="subtuple-pvalue", version=version, schema_version="1",
                parameters=dict(precision="5")) == parsed['provenance']


def test_report_values_are_all_strings():
    report = compute_report(ProblemInstance(500, 200, 50, 10))
    values = report.to_json_dict()

    def check(value):
        if isinstance(value, dict):
            for nested in value.values():
                check(nested)
        else:
            assert isinstance(value, str)

    check(values)
    # the exact counts are far too large for a float
    assert len(values['total_count']) > 300
    assert Fraction(int(values['favorable_count']), int(values['total_count'])) == report.p


def test_report_in_every_mode_agrees():
    inst = ProblemInstance(4, 3, 2, 1)
    fast = compute_report(inst, mode=MODE_FAST)
    naive = compute_report(inst, mode=MODE_NAIVE, budget=1000)
    exhaustive = compute_report(inst, mode=MODE_EXHAUSTIVE, budget=EnumerationBudget(1000))
    assert fast.p == naive.p == exhaustive.p == Fraction(10, 11)
    assert dict(precision="15", budget="1000") == exhaustive.to_json_dict()['provenance']['parameters']
    assert dict(precision="15", budget="1000") == naive.to_json_dict()['provenance']['parameters']


def test_report_montecarlo():
    report = compute_report(ProblemInstance(4, 3, 2, 1), mode=MODE_MONTECARLO, samples=500, seed=3)
    assert 500 == report.total_count
    assert report.standard_error is not None
    assert dict(precision="15", samples="500", seed="3") == report.to_json_dict()['provenance']['parameters']


def test_report_paper_mode_can_exceed_one():
    report = compute_report(ProblemInstance(4, 2, 3, 1), remainder_mode=REMAINDER_PAPER_FAITHFUL)
    assert report.exceeds_one
    assert "15/11" == report.p_rational
    assert 90 == report.favorable_count
    assert 66 == report.total_count


def test_report_budget_exceeded():
    with pytest.raises(BudgetExceededError):
        compute_report(ProblemInstance(5, 10, 3, 1), mode=MODE_EXHAUSTIVE, budget=100)


def test_report_unknown_mode():
    with pytest.raises(ValueError):
        compute_report(ProblemInstance(3, 2, 1, 1), mode="guess")


def test_report_certain_and_impossible():
    certain = PValueReport(ProblemInstance(3, 2, 1, 0), MODE_FAST, "corrected", 15, 15, 15)
    assert "1/1" == certain.p_rational
    assert "1.00000000000000" == certain.p_decimal
    assert "0" == certain.log10_p
    impossible = PValueReport(ProblemInstance(3, 2, 1, 2), MODE_FAST, "corrected", 0, 15, 15)
    assert "0/1" == impossible.p_rational
    assert "0" == impossible.p_decimal
    assert "-Infinity" == impossible.log10_p
