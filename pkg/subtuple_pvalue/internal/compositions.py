# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Enumerate and count compositions with bounded parts (count vectors)."""


def bounded_compositions(parts, total, low, high):
    """Enumerate every tuple of ``parts`` integers in [low, high] summing to ``total``.

    Tuples come out in lexicographic order. Branches that cannot reach
    ``total`` are pruned, so the work is proportional to the output.

    Args:
        parts (int): tuple length, at least 1
        total (int): required sum
        low (int): smallest allowed component
        high (int): largest allowed component

    Returns:
        generator of tuples
    """
    if parts < 1:
        raise ValueError("a composition needs at least one part (got %r)" % (parts, ))
    if high < low:
        return

    prefix = []

    def extend(remaining_parts, remaining_total):
        if remaining_parts == 1:
            if low <= remaining_total <= high:
                yield tuple(prefix) + (remaining_total, )
            return
        rest = remaining_parts - 1
        first = max(low, remaining_total - rest * high)
        last = min(high, remaining_total - rest * low)
        for value in range(first, last + 1):
            prefix.append(value)
            for composition in extend(rest, remaining_total - value):
                yield composition
            prefix.pop()

    for composition in extend(parts, total):
        yield composition


def composition_counts(max_parts, max_total, low, high):
    """Count compositions for every (parts, total) up to the given maxima.

    Uses a running-window recurrence, not enumeration, so it is cheap even
    where the counts are astronomically large.

    Returns:
        list ``counts`` where ``counts[parts][total]`` is the number of tuples
        of ``parts`` integers in [low, high] summing to ``total`` (row 0 is the
        empty tuple, which only sums to 0)
    """
    row = [0] * (max_total + 1)
    row[0] = 1
    counts = [row]
    for _ in range(max_parts):
        # next[t] = sum(row[t - v] for v in [low, high])
        window = [0] * (max_total + 2)
        for t in range(max_total + 1):
            window[t + 1] = window[t] + row[t]
        following = [0] * (max_total + 1)
        if high >= low:
            for t in range(max_total + 1):
                top = t - low
                bottom = t - high
                if top < 0:
                    continue
                following[t] = window[top + 1] - window[max(bottom, 0)]
        counts.append(following)
        row = following
    return counts
