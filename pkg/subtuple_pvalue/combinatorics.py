# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Arbitrary-precision binomial coefficients and exact rationals.

Nothing in this module touches floating point. Python integers are
arbitrary precision, and ``fractions.Fraction`` keeps every value reduced
with a positive denominator, which is exactly the ``ExactRational``
contract.
"""
import math
import threading
from fractions import Fraction

ExactRational = Fraction


class InvalidRationalError(ValueError):
    pass


class BinomialProvider(object):
    """Memoizing source of binomial coefficients.

    Out-of-range lower indices give zero, so sums over compositions
    can run over loose ranges and let the impossible terms vanish.

    The cache is observationally irrelevant: every call returns what
    ``math.comb`` would, whatever was asked before. Safe to share
    between threads.
    """

    def __init__(self, max_entries=1 << 16, max_bits=1 << 27):
        """Create a provider.

        Args:
            max_entries (int): the cache is dropped wholesale once it holds this many coefficients
            max_bits (int): or once the coefficients it holds add up to this many bits
        """
        self._cache = dict()
        self._lock = threading.Lock()
        self._max_entries = max_entries
        self._max_bits = max_bits
        self._bits = 0

    def __call__(self, a, b):
        """Get C(a, b), or 0 when b < 0 or b > a.

        Args:
            a (int): upper index, must be nonnegative
            b (int): lower index, any integer

        Returns:
            the coefficient as a Python int
        """
        if a < 0:
            raise ValueError("binomial upper index must be nonnegative (got %r)" % (a, ))
        if b < 0 or b > a:
            return 0
        # C(a, b) == C(a, a - b); store one of the two
        if b > a - b:
            b = a - b
        if b <= 1:
            return 1 if b == 0 else a
        key = (a, b)
        with self._lock:
            value = self._cache.get(key)
        if value is None:
            value = math.comb(a, b)
            bits = value.bit_length()
            if bits > self._max_bits:
                return value
            with self._lock:
                if key not in self._cache:
                    if len(self._cache) >= self._max_entries or self._bits + bits > self._max_bits:
                        self._cache.clear()
                        self._bits = 0
                    self._cache[key] = value
                    self._bits += bits
        return value

    @property
    def cache_size(self):
        """Number of memoized coefficients."""
        with self._lock:
            return len(self._cache)

    @property
    def cache_bits(self):
        """Total bit length of the memoized coefficients."""
        with self._lock:
            return self._bits

    def clear(self):
        """Forget all memoized coefficients."""
        with self._lock:
            self._cache.clear()
            self._bits = 0


_shared_provider = BinomialProvider()


def shared_binomials():
    """The process-wide provider used when callers don't bring their own."""
    return _shared_provider


def binomial(a, b):
    """C(a, b) with the out-of-range-is-zero convention.

    >>> binomial(5, 2)
    10
    >>> binomial(3, 5)
    0
    """
    return _shared_provider(a, b)


def make_rational(num, den):
    """Build the reduced fraction num/den with a positive denominator.

    Raises:
        InvalidRationalError: if den is zero
    """
    if den == 0:
        raise InvalidRationalError("denominator must be nonzero (got %r/%r)" % (num, den))
    return Fraction(int(num), int(den))


def rational_string(value):
    """Render an ``ExactRational`` as "num/den", always with the slash."""
    return "%d/%d" % (value.numerator, value.denominator)
