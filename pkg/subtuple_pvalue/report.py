# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""The PValueReport type and the computation behind it.

A report's JSON form is a stable schema: the keys in ``REPORT_KEYS`` in
that order, every number as a string so nothing is truncated to a
native numeric type. Changing the key set requires bumping
``REPORT_SCHEMA_VERSION``.
"""
import json
from collections import OrderedDict

from subtuple_pvalue.combinatorics import make_rational, rational_string
from subtuple_pvalue.exact_engine import DEFAULT_REMAINDER_MODE, tail_counts_fast, tail_counts_naive
from subtuple_pvalue.internal.decimal_rendering import decimal_string, log10_string
from subtuple_pvalue.oracles import pvalue_montecarlo, tail_counts_exhaustive
from subtuple_pvalue.version import version

MODE_FAST = "fast"
MODE_NAIVE = "naive"
MODE_EXHAUSTIVE = "exhaustive"
MODE_MONTECARLO = "montecarlo"

all_computation_modes = (MODE_FAST, MODE_NAIVE, MODE_EXHAUSTIVE, MODE_MONTECARLO)

DEFAULT_PRECISION = 15
DEFAULT_SAMPLES = 100000
DEFAULT_SEED = 0

REPORT_SCHEMA_VERSION = 1

REPORT_KEYS = ('instance', 'mode', 'remainder_mode', 'p_rational', 'p_decimal', 'log10_p', 'favorable_count',
               'total_count', 'provenance')

TOOL_NAME = "subtuple-pvalue"


class PValueReport(object):
    """A tail probability with its exact counts and renderings.

    ``p_decimal`` and ``log10_p`` are always renderings of ``p_rational``,
    never separately computed.
    """

    def __init__(self, instance, mode, remainder_mode, favorable, total, precision, parameters=None,
                 standard_error=None):
        self._instance = instance
        self._mode = mode
        self._remainder_mode = remainder_mode
        self._favorable = favorable
        self._total = total
        self._precision = precision
        self._p = make_rational(favorable, total)
        self._parameters = OrderedDict(parameters or ())
        self._standard_error = standard_error

    @property
    def instance(self):
        """The ``ProblemInstance`` asked about."""
        return self._instance

    @property
    def mode(self):
        """How the value was computed: fast, naive, exhaustive or montecarlo."""
        return self._mode

    @property
    def remainder_mode(self):
        """Remainder pool mode used by the formula paths."""
        return self._remainder_mode

    @property
    def p(self):
        """The probability as an exact rational."""
        return self._p

    @property
    def favorable_count(self):
        """Unreduced numerator."""
        return self._favorable

    @property
    def total_count(self):
        """Unreduced denominator."""
        return self._total

    @property
    def standard_error(self):
        """Binomial standard error for Monte Carlo estimates, None otherwise."""
        return self._standard_error

    @property
    def exceeds_one(self):
        """True if the value is not a probability (possible in paper mode only)."""
        return self._p > 1

    @property
    def p_rational(self):
        """The probability as "num/den"."""
        return rational_string(self._p)

    @property
    def p_decimal(self):
        """The probability rounded to the configured significant digits."""
        return decimal_string(self._p, self._precision)

    @property
    def log10_p(self):
        """log10 of the probability, to the configured significant digits."""
        return log10_string(self._p, self._precision)

    def to_json_dict(self):
        """The report as an ordered mapping of strings, ready for ``json.dumps``."""
        inst = self._instance
        instance = OrderedDict((name, str(getattr(inst, name))) for name in ('n', 'x', 'y', 'z'))
        parameters = OrderedDict([('precision', str(self._precision))])
        for key, value in self._parameters.items():
            parameters[key] = str(value)
        provenance = OrderedDict([('tool', TOOL_NAME), ('version', version),
                                  ('schema_version', str(REPORT_SCHEMA_VERSION)), ('parameters', parameters)])
        values = OrderedDict()
        values['instance'] = instance
        values['mode'] = self._mode
        values['remainder_mode'] = self._remainder_mode
        values['p_rational'] = self.p_rational
        values['p_decimal'] = self.p_decimal
        values['log10_p'] = self.log10_p
        values['favorable_count'] = str(self._favorable)
        values['total_count'] = str(self._total)
        values['provenance'] = provenance
        assert tuple(values.keys()) == REPORT_KEYS
        return values

    def to_json(self, indent=None):
        """Serialize with the fixed key order."""
        return json.dumps(self.to_json_dict(), indent=indent)


def compute_report(inst,
                   mode=MODE_FAST,
                   remainder_mode=DEFAULT_REMAINDER_MODE,
                   precision=DEFAULT_PRECISION,
                   budget=None,
                   samples=DEFAULT_SAMPLES,
                   seed=DEFAULT_SEED):
    """Compute the tail probability of ``inst`` the requested way.

    Args:
        inst (ProblemInstance): the query
        mode (str): one of ``all_computation_modes``
        remainder_mode (str): remainder pool mode for the fast and naive paths
        precision (int): significant digits for the decimal renderings
        budget (EnumerationBudget or int or None): cap for naive and exhaustive
        samples (int): Monte Carlo sample count
        seed (int): Monte Carlo seed

    Returns:
        ``PValueReport``
    """
    parameters = []
    if mode in (MODE_NAIVE, MODE_EXHAUSTIVE) and budget is not None:
        parameters.append(('budget', getattr(budget, 'limit', budget)))
    standard_error = None
    if mode == MODE_FAST:
        favorable, total = tail_counts_fast(inst, remainder_mode)
    elif mode == MODE_NAIVE:
        favorable, total = tail_counts_naive(inst, remainder_mode, budget)
    elif mode == MODE_EXHAUSTIVE:
        favorable, total = tail_counts_exhaustive(inst, budget)
    elif mode == MODE_MONTECARLO:
        estimate = pvalue_montecarlo(inst, samples, seed)
        favorable, total = estimate.hits, estimate.samples
        standard_error = estimate.standard_error
        parameters = [('samples', samples), ('seed', seed)]
    else:
        raise ValueError("computation mode must be one of %s (got %r)" % (", ".join(all_computation_modes), mode))
    return PValueReport(inst,
                        mode,
                        remainder_mode,
                        favorable,
                        total,
                        precision,
                        parameters=parameters,
                        standard_error=standard_error)
