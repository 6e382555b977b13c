# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Cross-check the fast formula against the slower evaluations over a grid."""
from subtuple_pvalue import verbose
from subtuple_pvalue.exact_engine import (InvalidInstanceError, ProblemInstance, REMAINDER_CORRECTED,
                                          all_remainder_modes, pvalue_fast, pvalue_naive)
from subtuple_pvalue.internal.budget import DEFAULT_BUDGET, EnumerationBudget
from subtuple_pvalue.internal.simple_status import SimpleStatus
from subtuple_pvalue.oracles import pvalue_exhaustive

DEFAULT_MAX_N = 8
DEFAULT_MAX_X = 12
DEFAULT_MAX_Y = 5
DEFAULT_ORACLE_MAX_N = 4


class GridCheckStatus(SimpleStatus):
    """Outcome of comparing two evaluations over a grid of instances."""

    def __init__(self, name, checked, mismatches, logs=(), errors=()):
        if mismatches:
            description = "%s: %d of %d comparisons disagree" % (name, len(mismatches), checked)
        else:
            description = "%s: %d comparisons, 0 mismatches" % (name, checked)
        super(GridCheckStatus, self).__init__(not mismatches, description, logs=logs, errors=errors)
        self._name = name
        self._checked = checked
        self._mismatches = tuple(mismatches)

    @property
    def name(self):
        """Short name of the comparison."""
        return self._name

    @property
    def checked(self):
        """Number of comparisons made."""
        return self._checked

    @property
    def mismatches(self):
        """List of (instance, mode, expected, actual) for every disagreement."""
        return list(self._mismatches)


def instance_grid(max_n, max_x, max_y, min_n=2):
    """Every valid instance with n in [min_n, max_n], x <= max_x, y <= max_y and z <= min(x, y).

    Returns:
        generator of ``ProblemInstance``, ordered by n, x, y, z
    """
    for n in range(min_n, max_n + 1):
        for x in range(0, min(n * (n - 1), max_x) + 1):
            for y in range(0, min(n, max_y) + 1):
                for z in range(0, min(x, y) + 1):
                    yield ProblemInstance(n, x, y, z)


def check_grid_bounds(max_n, max_x, max_y):
    if max_n < 2:
        raise InvalidInstanceError("max-n must be at least 2, since n >= 2 (got %d)" % max_n)
    if max_x < 0 or max_y < 0:
        raise InvalidInstanceError("max-x and max-y must be nonnegative (got %d, %d)" % (max_x, max_y))


def check_fast_against_naive(max_n=DEFAULT_MAX_N,
                             max_x=DEFAULT_MAX_X,
                             max_y=DEFAULT_MAX_Y,
                             modes=all_remainder_modes,
                             budget=DEFAULT_BUDGET):
    """Compare the closed form with count-vector enumeration, in every remainder mode.

    Args:
        budget (int): enumeration limit for each naive evaluation

    Returns:
        ``GridCheckStatus``
    """
    check_grid_bounds(max_n, max_x, max_y)
    log = verbose._verbose_logger()
    checked = 0
    mismatches = []
    logs = []
    for n in range(2, max_n + 1):
        before = checked
        for inst in instance_grid(n, max_x, max_y, min_n=n):
            for mode in modes:
                fast = pvalue_fast(inst, mode)
                naive = pvalue_naive(inst, mode, EnumerationBudget(budget))
                checked += 1
                if fast != naive:
                    mismatches.append((inst, mode, naive, fast))
        message = "n=%d: %d fast-vs-naive comparisons" % (n, checked - before)
        log.info(message)
        logs.append(message)
    errors = ["%r in %s mode: naive %s, fast %s" % m for m in mismatches]
    return GridCheckStatus("fast-vs-naive", checked, mismatches, logs=logs, errors=errors)


def check_fast_against_exhaustive(max_n=DEFAULT_ORACLE_MAX_N,
                                  max_x=DEFAULT_MAX_X,
                                  max_y=DEFAULT_MAX_Y,
                                  budget=DEFAULT_BUDGET):
    """Compare the corrected closed form with exhaustive subset enumeration.

    Returns:
        ``GridCheckStatus``
    """
    check_grid_bounds(max_n, max_x, max_y)
    log = verbose._verbose_logger()
    checked = 0
    mismatches = []
    logs = []
    for n in range(2, max_n + 1):
        before = checked
        for inst in instance_grid(n, max_x, max_y, min_n=n):
            fast = pvalue_fast(inst, REMAINDER_CORRECTED)
            exhaustive = pvalue_exhaustive(inst, EnumerationBudget(budget))
            checked += 1
            if fast != exhaustive:
                mismatches.append((inst, REMAINDER_CORRECTED, exhaustive, fast))
        message = "n=%d: %d fast-vs-exhaustive comparisons" % (n, checked - before)
        log.info(message)
        logs.append(message)
    errors = ["%r in %s mode: exhaustive %s, fast %s" % m for m in mismatches]
    return GridCheckStatus("fast-vs-exhaustive", checked, mismatches, logs=logs, errors=errors)
