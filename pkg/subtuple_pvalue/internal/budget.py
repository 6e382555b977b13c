# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Caps on how much work an enumerating computation may do."""
from subtuple_pvalue import verbose

DEFAULT_BUDGET = 10**8


class BudgetExceededError(RuntimeError):
    def __init__(self, limit, what, required=None):
        if required is None:
            message = "enumeration budget of {limit} exceeded while enumerating {what}".format(limit=limit, what=what)
        else:
            message = ("enumeration budget of {limit} exceeded: enumerating {what} "
                       "requires {required} steps").format(limit=limit, what=what, required=required)
        super(BudgetExceededError, self).__init__(message)
        self.limit = limit
        self.what = what
        self.required = required


class EnumerationBudget(object):
    """Counts enumeration steps and fails loudly once a limit is passed.

    A budget is meant for one computation; it is not shared between threads.
    """

    def __init__(self, limit=DEFAULT_BUDGET):
        if limit < 1:
            raise ValueError("enumeration budget must be at least 1 (got %r)" % (limit, ))
        self._limit = limit
        self._used = 0

    @property
    def limit(self):
        """Maximum number of steps."""
        return self._limit

    @property
    def used(self):
        """Steps consumed so far."""
        return self._used

    def require(self, required, what):
        """Refuse up front a computation known to need ``required`` steps.

        Raises:
            BudgetExceededError: if ``required`` plus the steps already used exceeds the limit
        """
        verbose._verbose_logger().debug("%s needs %d of %d remaining enumeration steps", what, required,
                                        self._limit - self._used)
        if self._used + required > self._limit:
            raise BudgetExceededError(self._limit, what, required=required)

    def consume(self, what, steps=1):
        """Record ``steps`` steps of work, raising if that passes the limit."""
        self._used += steps
        if self._used > self._limit:
            raise BudgetExceededError(self._limit, what)


def as_budget(budget):
    """Accept an ``EnumerationBudget``, an integer limit, or None for the default."""
    if budget is None:
        return EnumerationBudget()
    elif isinstance(budget, EnumerationBudget):
        return budget
    else:
        return EnumerationBudget(int(budget))
