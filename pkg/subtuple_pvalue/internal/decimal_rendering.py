# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Decimal renderings of exact rationals.

Numerators and denominators here can have tens of thousands of digits,
well past what a float holds, so everything goes through integer
arithmetic and leading digits. Output never depends on the locale.
"""
from decimal import Decimal, localcontext
from fractions import Fraction

# log10(2) scaled by 10^20, rounded down
_LOG10_2_SCALED = 30102999566398119521
_LOG10_2_SCALE = 10**20


def _digit_count(value):
    """Number of decimal digits of a positive int, without converting it to str."""
    assert value > 0
    estimate = (value.bit_length() * _LOG10_2_SCALED) // _LOG10_2_SCALE
    # never above the true count, and at most two below it
    while value >= 10**estimate:
        estimate += 1
    return estimate


def _check_precision(precision):
    if precision < 1:
        raise ValueError("precision must be at least 1 significant digit (got %r)" % (precision, ))


def decimal_string(value, precision):
    """Round a nonnegative rational to ``precision`` significant digits, half to even.

    Args:
        value (Fraction): the exact value
        precision (int): significant digits

    Returns:
        str such as ``"0.600000000000000"`` or ``"1.23456789012346E-42"``
    """
    _check_precision(precision)
    num = value.numerator
    den = value.denominator
    if num < 0:
        raise ValueError("only nonnegative values are rendered (got %s)" % value)
    if num == 0:
        return "0"

    # exponent of the leading digit: 10^e <= num/den < 10^(e+1)
    e = _digit_count(num) - _digit_count(den)
    if e >= 0:
        below = num < den * 10**e
    else:
        below = num * 10**(-e) < den
    if below:
        e -= 1

    shift = precision - 1 - e
    if shift >= 0:
        scaled_num = num * 10**shift
        scaled_den = den
    else:
        scaled_num = num
        scaled_den = den * 10**(-shift)
    mantissa, remainder = divmod(scaled_num, scaled_den)
    twice = 2 * remainder
    if twice > scaled_den or (twice == scaled_den and mantissa % 2 == 1):
        mantissa += 1
    if mantissa == 10**precision:
        mantissa //= 10
        shift -= 1

    digits = tuple(int(c) for c in str(mantissa))
    return str(Decimal((0, digits, -shift)))


def _log10_positive_int(value, precision):
    digits = _digit_count(value)
    dropped = max(0, digits - (precision + 10))
    lead = value // 10**dropped
    return Decimal(lead).log10() + dropped


_NEAR_ONE = Fraction(1, 100)


def _log10_near_one(value, precision):
    # log(num) - log(den) cancels near 1; sum the series for log(1 + q)
    q = value - 1
    q_decimal = Decimal(decimal_string(abs(q), precision + 10))
    if q < 0:
        q_decimal = -q_decimal
    total = Decimal(0)
    power = Decimal(1)
    # |q| < 1/100, so each term is 100 times smaller than the last
    for k in range(1, precision // 2 + 8):
        power *= q_decimal
        if k % 2 == 1:
            total += power / k
        else:
            total -= power / k
    return total / Decimal(10).ln()


def log10_string(value, precision):
    """log10 of a nonnegative rational, to ``precision`` significant digits.

    Only the leading digits of the numerator and denominator are fed to
    the logarithm; the rest is accounted for by counting digits. Values
    within 1/100 of 1 use a series instead.

    Returns:
        str such as ``"-0.221848749616356"``, or ``"-Infinity"`` for zero
    """
    _check_precision(precision)
    if value.numerator < 0:
        raise ValueError("log10 of a negative value (got %s)" % value)
    if value.numerator == 0:
        return "-Infinity"
    if value.numerator == value.denominator:
        return "0"
    with localcontext() as context:
        context.prec = precision + 10
        if abs(value - 1) < _NEAR_ONE:
            result = _log10_near_one(value, precision)
        else:
            result = (_log10_positive_int(value.numerator, precision) -
                      _log10_positive_int(value.denominator, precision))
        context.prec = precision
        return str(+result)
