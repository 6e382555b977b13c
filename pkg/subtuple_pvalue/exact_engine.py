# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Exact tail probabilities for the occurrence-in-subtuple problem.

The population is n element types, each present n - 1 times, so there
are n(n - 1) labeled positions. A draw takes x positions uniformly
without replacement. Of the n types, y are designated. The tail
probability is the chance that at least z distinct designated types
show up in the draw.

Two evaluations are provided. The fast one collapses the sum over count
vectors with inclusion-exclusion and costs O(min(x, y) * x^2) big-integer
operations. The naive one enumerates count vectors and is exponential in
min(x, y); it exists as an oracle for the fast one.
"""
import itertools
from collections import namedtuple

from subtuple_pvalue import verbose
from subtuple_pvalue.combinatorics import make_rational, shared_binomials
from subtuple_pvalue.internal.budget import as_budget
from subtuple_pvalue.internal.compositions import bounded_compositions, composition_counts

# these strings are used as values for command line options, so they are user-visible

REMAINDER_PAPER_FAITHFUL = "paper"
REMAINDER_CORRECTED = "corrected"

all_remainder_modes = (REMAINDER_CORRECTED, REMAINDER_PAPER_FAITHFUL)

DEFAULT_REMAINDER_MODE = REMAINDER_CORRECTED


class InvalidInstanceError(ValueError):
    pass


def _require_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInstanceError("%s must be an integer (got %r)" % (name, value))


_ProblemInstanceFields = namedtuple('ProblemInstance', ['n', 'x', 'y', 'z'])


class ProblemInstance(_ProblemInstanceFields):
    """The four parameters (n, x, y, z) of a tail query.

    Construction validates the invariants, so holding a ``ProblemInstance``
    means holding a valid one.
    """

    __slots__ = ()

    def __new__(cls, n, x, y, z):
        """Validate and build an instance.

        Raises:
            InvalidInstanceError: naming the first violated invariant
        """
        for name, value in (('n', n), ('x', x), ('y', y), ('z', z)):
            _require_int(name, value)
        if n < 2:
            raise InvalidInstanceError("n must be at least 2 (got %d)" % n)
        if not 0 <= x <= n * (n - 1):
            raise InvalidInstanceError("x must be between 0 and n*(n-1) = %d (got %d)" % (n * (n - 1), x))
        if not 0 <= y <= n:
            raise InvalidInstanceError("y must be between 0 and n = %d (got %d)" % (n, y))
        if z < 0:
            raise InvalidInstanceError("z must be nonnegative (got %d)" % z)
        return super(ProblemInstance, cls).__new__(cls, n, x, y, z)

    @property
    def population(self):
        """Number of labeled positions, n(n - 1)."""
        return self.n * (self.n - 1)

    @property
    def copies(self):
        """How many times each type occurs, n - 1."""
        return self.n - 1

    @property
    def max_found(self):
        """The most designated types a draw can contain, min(x, y)."""
        return min(self.x, self.y)

    def with_z(self, z):
        """Same instance with another threshold."""
        return ProblemInstance(self.n, self.x, self.y, z)

    def with_x(self, x):
        """Same instance with another draw size."""
        return ProblemInstance(self.n, x, self.y, self.z)


def _check_mode(mode):
    if mode not in all_remainder_modes:
        raise ValueError("remainder mode must be one of %s (got %r)" % (", ".join(all_remainder_modes), mode))


def remainder_pool_size(inst, mode):
    """Positions available to the non-designated part of the draw.

    Corrected mode uses the n - y non-designated types. Paper-faithful
    mode uses n - min(x, y) types as printed in the derivation, which lets
    unchosen designated types into the pool when x < y.
    """
    _check_mode(mode)
    if mode == REMAINDER_CORRECTED:
        types = inst.n - inst.y
    else:
        types = inst.n - inst.max_found
    return types * inst.copies


def _check_inner_args(k, s, n):
    if k < 1:
        raise ValueError("inner sum needs k >= 1 (got %r)" % (k, ))
    if n < 2:
        raise ValueError("inner sum needs n >= 2 (got %r)" % (n, ))
    if s < 0:
        raise ValueError("inner sum needs s >= 0 (got %r)" % (s, ))


def inner_sum_closed(k, s, n, binomials=None):
    """Closed form of the sum over positive count vectors.

    Sums, over every (i_1 ... i_k) with 1 <= i_j <= n - 1 and total s, the
    product of C(n - 1, i_j). Inclusion-exclusion over the components
    forced to zero gives::

        C(k(n-1), s) + sum_{j=1}^{k-1} (-1)^j C(k, j) C((k-j)(n-1), s)

    The j = k term C(0, s) is omitted; it only matters at s = 0, where
    no positive count vector exists and the result is 0.

    Args:
        k (int): number of components, at least 1
        s (int): required sum, nonnegative
        n (int): number of types, at least 2

    Returns:
        nonnegative int
    """
    _check_inner_args(k, s, n)
    if s < k:
        return 0
    if binomials is None:
        binomials = shared_binomials()
    copies = n - 1
    result = binomials(k * copies, s)
    for j in range(1, k):
        term = binomials(k, j) * binomials((k - j) * copies, s)
        if j % 2 == 1:
            result -= term
        else:
            result += term
    assert result >= 0
    return result


def inner_sum_enumerated(k, s, n, components_from_zero=False, budget=None, binomials=None):
    """The inner sum by brute force over count vectors.

    With ``components_from_zero`` the components range over [0, n - 1]
    instead of [1, n - 1]; the result is then C(k(n-1), s).

    Raises:
        BudgetExceededError: if the number of count vectors exceeds the budget
    """
    _check_inner_args(k, s, n)
    budget = as_budget(budget)
    if binomials is None:
        binomials = shared_binomials()
    low = 0 if components_from_zero else 1
    copies = n - 1
    what = "count vectors of length %d summing to %d" % (k, s)
    required = composition_counts(k, s, low, copies)[k][s]
    budget.require(required, what)

    result = 0
    visited = 0
    for vector in bounded_compositions(k, s, low, copies):
        product = 1
        for component in vector:
            product *= binomials(copies, component)
        result += product
        visited += 1
    budget.consume(what, visited)
    return result


def generalized_vandermonde_lhs(n, factor_count, x, budget=None, binomials=None):
    """Left side of the generalized Vandermonde identity, by enumeration.

    Sums C(n, k_1) ... C(n, k_{f-1}) C(n, x - k_1 - ... - k_{f-1}) over all
    k_i in [0, n], where f is ``factor_count``. Should equal
    C(f * n, x).

    Raises:
        BudgetExceededError: if (n + 1)^(f - 1) exceeds the budget
    """
    if factor_count < 1:
        raise ValueError("factor_count must be at least 1 (got %r)" % (factor_count, ))
    if n < 0 or x < 0:
        raise ValueError("n and x must be nonnegative (got n=%r, x=%r)" % (n, x))
    budget = as_budget(budget)
    if binomials is None:
        binomials = shared_binomials()
    free = factor_count - 1
    what = "%d free lower indices in [0, %d]" % (free, n)
    budget.require((n + 1)**free, what)

    result = 0
    visited = 0
    for lowers in itertools.product(range(n + 1), repeat=free):
        product = binomials(n, x - sum(lowers))
        for lower in lowers:
            if product == 0:
                break
            product *= binomials(n, lower)
        result += product
        visited += 1
    budget.consume(what, visited)
    return result


def _exactly_k_count(inst, k, pool, binomials):
    # draws with exactly k given designated types present and all others from the pool
    upper = min(inst.x, k * inst.copies)
    start = max(k, inst.x - pool)
    acc = 0
    for s in range(start, upper + 1):
        inner = inner_sum_closed(k, s, inst.n, binomials)
        if inner:
            acc += inner * binomials(pool, inst.x - s)
    return acc


def favorable_count_fast(inst, mode=DEFAULT_REMAINDER_MODE, binomials=None):
    """Number of x-subsets with at least z designated types, in closed form.

    Requires 1 <= z <= min(x, y); other thresholds are handled by
    ``tail_counts_fast``.
    """
    if not 1 <= inst.z <= inst.max_found:
        raise ValueError("favorable_count_fast needs 1 <= z <= min(x, y) = %d (got z=%d)" %
                         (inst.max_found, inst.z))
    if binomials is None:
        binomials = shared_binomials()
    pool = remainder_pool_size(inst, mode)
    log = verbose._verbose_logger()
    log.debug("fast count for %r in %s mode, remainder pool of %d positions", inst, mode, pool)
    favorable = 0
    for k in range(inst.z, inst.max_found + 1):
        favorable += binomials(inst.y, k) * _exactly_k_count(inst, k, pool, binomials)
    log.debug("binomial cache holds %d coefficients", binomials.cache_size)
    return favorable


def tail_counts_fast(inst, mode=DEFAULT_REMAINDER_MODE, binomials=None):
    """The (favorable, total) pair behind ``pvalue_fast``, unreduced."""
    _check_mode(mode)
    if binomials is None:
        binomials = shared_binomials()
    total = binomials(inst.population, inst.x)
    if inst.z <= 0:
        return (total, total)
    if inst.z > inst.max_found:
        return (0, total)
    return (favorable_count_fast(inst, mode, binomials), total)


def pvalue_fast(inst, mode=DEFAULT_REMAINDER_MODE, binomials=None):
    """P(at least z designated types in the draw) as an exact rational."""
    return make_rational(*tail_counts_fast(inst, mode, binomials))


def count_distribution(n, x, y, binomials=None):
    """Exact distribution of the number of designated types found.

    Returns:
        list whose element k is the number of x-subsets containing exactly k
        distinct designated types, for k = 0 ... min(x, y); the list sums to
        C(n(n-1), x)
    """
    inst = ProblemInstance(n, x, y, 0)
    if binomials is None:
        binomials = shared_binomials()
    pool = remainder_pool_size(inst, REMAINDER_CORRECTED)
    counts = [binomials(pool, x)]
    for k in range(1, inst.max_found + 1):
        counts.append(binomials(y, k) * _exactly_k_count(inst, k, pool, binomials))
    return counts


def naive_enumeration_size(inst):
    """How many count vectors ``pvalue_naive`` visits for this instance."""
    if inst.z <= 0 or inst.z > inst.max_found:
        return 0
    counts = composition_counts(inst.max_found, inst.x, 1, inst.copies)
    return sum(sum(counts[k][k:inst.x + 1]) for k in range(inst.z, inst.max_found + 1))


def tail_counts_naive(inst, mode=DEFAULT_REMAINDER_MODE, budget=None, binomials=None):
    """The (favorable, total) pair by enumerating count vectors.

    Raises:
        BudgetExceededError: before any enumeration, if the instance needs more
            count vectors than the budget allows
    """
    _check_mode(mode)
    budget = as_budget(budget)
    if binomials is None:
        binomials = shared_binomials()
    total = binomials(inst.population, inst.x)
    if inst.z <= 0:
        return (total, total)
    if inst.z > inst.max_found:
        return (0, total)

    budget.require(naive_enumeration_size(inst), "count vectors for %r" % (inst, ))
    pool = remainder_pool_size(inst, mode)
    favorable = 0
    for k in range(inst.z, inst.max_found + 1):
        acc = 0
        for s in range(k, inst.x + 1):
            inner = inner_sum_enumerated(k, s, inst.n, False, budget, binomials)
            acc += inner * binomials(pool, inst.x - s)
        favorable += binomials(inst.y, k) * acc
    verbose._verbose_logger().debug("naive count for %r visited %d count vectors", inst, budget.used)
    return (favorable, total)


def pvalue_naive(inst, mode=DEFAULT_REMAINDER_MODE, budget=None, binomials=None):
    """Same value as ``pvalue_fast``, computed the slow way."""
    return make_rational(*tail_counts_naive(inst, mode, budget, binomials))
