# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""The SimpleStatus type, a status carrying only its lists of messages."""
from subtuple_pvalue.status import Status


class SimpleStatus(Status):
    def __init__(self, success, description, logs=(), errors=()):
        self._success = success
        self._description = description
        self._logs = tuple(logs)
        self._errors = tuple(errors)

    def __bool__(self):
        return self._success

    def __repr__(self):
        return "SimpleStatus(%r, %r)" % (self._success, self._description)

    @property
    def status_description(self):
        return self._description

    @property
    def logs(self):
        return list(self._logs)

    @property
    def errors(self):
        return list(self._errors)
