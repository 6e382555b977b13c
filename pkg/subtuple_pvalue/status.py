# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Outcome of a consistency check."""
from abc import ABCMeta, abstractmethod


class Status(metaclass=ABCMeta):
    """What a check found: truthy when nothing disagreed.

    ``logs`` holds progress lines and ``errors`` one line per
    disagreement. Statuses are not modified after construction.
    """

    @property
    @abstractmethod
    def status_description(self):
        """Short summary, for example "fast-vs-naive: 812 comparisons, 0 mismatches"."""
        pass  # pragma: no cover

    @property
    @abstractmethod
    def logs(self):
        """List of progress lines."""
        pass  # pragma: no cover

    @property
    @abstractmethod
    def errors(self):
        """List of disagreement lines, empty on success."""
        pass  # pragma: no cover
