# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Independent checks of the exact engine.

Both oracles work directly on labeled positions: position p holds type
p // (n - 1), and the designated types are 0 ... y - 1 (any choice of y
types gives the same probability by symmetry). Neither reuses the
engine's counting.
"""
import itertools
from collections import namedtuple
from decimal import Decimal, localcontext

import numpy as np

from subtuple_pvalue import verbose
from subtuple_pvalue.combinatorics import binomial, make_rational
from subtuple_pvalue.internal.budget import as_budget

_SEED_MASK = (1 << 64) - 1

# above this many positions we stop materializing one random key per position
_DENSE_POSITION_LIMIT = 4096
_DENSE_CHUNK_CELLS = 2000000

MonteCarloEstimate = namedtuple('MonteCarloEstimate', ['estimate', 'hits', 'samples', 'standard_error', 'seed'])
MonteCarloEstimate.__doc__ = """Result of ``pvalue_montecarlo``.

``estimate`` is hits/samples as an exact rational, ``standard_error`` is
the binomial standard error as a ``decimal.Decimal``.
"""


def _position_types(inst):
    return [position // inst.copies for position in range(inst.population)]


def tail_counts_exhaustive(inst, budget=None):
    """Count qualifying x-subsets by visiting every one of them.

    Returns:
        (favorable, total) where total is the number of subsets visited

    Raises:
        BudgetExceededError: if C(n(n-1), x) exceeds the budget
    """
    budget = as_budget(budget)
    budget.require(binomial(inst.population, inst.x), "%d-subsets of %d positions" % (inst.x, inst.population))
    types = _position_types(inst)
    designated = inst.y
    favorable = 0
    total = 0
    for subset in itertools.combinations(range(inst.population), inst.x):
        found = set()
        for position in subset:
            t = types[position]
            if t < designated:
                found.add(t)
        if len(found) >= inst.z:
            favorable += 1
        total += 1
    budget.consume("position subsets", total)
    assert total == binomial(inst.population, inst.x)
    return (favorable, total)


def pvalue_exhaustive(inst, budget=None):
    """Exact tail probability by exhaustive enumeration of position subsets."""
    return make_rational(*tail_counts_exhaustive(inst, budget))


def _standard_error(hits, samples):
    with localcontext() as context:
        context.prec = 28
        return (Decimal(hits * (samples - hits)) / Decimal(samples**3)).sqrt()


def _check_seed(seed):
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise ValueError("seed must be an integer (got %r)" % (seed, ))
    if not -(1 << 63) <= seed <= _SEED_MASK:
        raise ValueError("seed must fit in 64 bits (got %d)" % seed)
    return seed & _SEED_MASK


def _found_counts(chosen, inst):
    """Distinct designated types per row of a (rows, x) array of positions."""
    rows = chosen.shape[0]
    types = chosen // inst.copies
    # non-designated positions all land in the spare column y
    present = np.zeros((rows, inst.y + 1), dtype=bool)
    present[np.arange(rows)[:, None], np.where(types < inst.y, types, inst.y)] = True
    return present[:, :inst.y].sum(axis=1)


def _dense_hits(inst, samples, rng):
    rows_per_chunk = max(1, _DENSE_CHUNK_CELLS // inst.population)
    hits = 0
    remaining = samples
    while remaining > 0:
        rows = min(rows_per_chunk, remaining)
        keys = rng.random((rows, inst.population))
        if inst.x < inst.population:
            chosen = np.argpartition(keys, inst.x - 1, axis=1)[:, :inst.x]
        else:
            chosen = np.argsort(keys, axis=1)
        hits += int(np.count_nonzero(_found_counts(chosen, inst) >= inst.z))
        remaining -= rows
    return hits


def _sparse_hits(inst, samples, rng):
    hits = 0
    for _ in range(samples):
        chosen = rng.choice(inst.population, size=inst.x, replace=False, shuffle=False)
        if _found_counts(chosen.reshape(1, -1), inst)[0] >= inst.z:
            hits += 1
    return hits


def pvalue_montecarlo(inst, samples, seed):
    """Estimate the tail probability from ``samples`` uniform draws.

    Draws come from numpy's PCG64 generator seeded with ``seed``, so the
    same (instance, samples, seed) always gives the same estimate.

    Returns:
        ``MonteCarloEstimate``
    """
    if isinstance(samples, bool) or not isinstance(samples, int) or samples < 1:
        raise ValueError("samples must be a positive integer (got %r)" % (samples, ))
    unsigned_seed = _check_seed(seed)
    rng = np.random.Generator(np.random.PCG64(unsigned_seed))
    log = verbose._verbose_logger()

    if inst.x == 0:
        hits = samples if inst.z <= 0 else 0
    elif inst.population <= _DENSE_POSITION_LIMIT:
        log.debug("sampling %d draws of %d from %d positions in dense chunks", samples, inst.x, inst.population)
        hits = _dense_hits(inst, samples, rng)
    else:
        log.debug("sampling %d draws of %d from %d positions one at a time", samples, inst.x, inst.population)
        hits = _sparse_hits(inst, samples, rng)

    return MonteCarloEstimate(estimate=make_rational(hits, samples),
                              hits=hits,
                              samples=samples,
                              standard_error=_standard_error(hits, samples),
                              seed=seed)
