# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
import pytest

from subtuple_pvalue.internal.budget import DEFAULT_BUDGET, BudgetExceededError, EnumerationBudget, as_budget


def test_budget_counts_steps():
    budget = EnumerationBudget(10)
    budget.require(10, "things")
    budget.consume("things", 4)
    budget.consume("things")
    assert 5 == budget.used
    assert 10 == budget.limit


def test_budget_require_refuses_up_front():
    budget = EnumerationBudget(10)
    budget.consume("things", 8)
    with pytest.raises(BudgetExceededError) as excinfo:
        budget.require(3, "more things")
    assert ("enumeration budget of 10 exceeded: enumerating more things requires 3 steps" == str(excinfo.value))
    assert 3 == excinfo.value.required
    # nothing was consumed by the refusal
    assert 8 == budget.used


def test_budget_consume_past_limit():
    budget = EnumerationBudget(2)
    with pytest.raises(BudgetExceededError) as excinfo:
        budget.consume("widgets", 3)
    assert "enumeration budget of 2 exceeded while enumerating widgets" == str(excinfo.value)
    assert excinfo.value.required is None
    assert "widgets" == excinfo.value.what
    assert 2 == excinfo.value.limit


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        EnumerationBudget(0)


def test_as_budget():
    assert DEFAULT_BUDGET == as_budget(None).limit
    assert 7 == as_budget(7).limit
    budget = EnumerationBudget(9)
    assert budget is as_budget(budget)
