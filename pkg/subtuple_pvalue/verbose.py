# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Control verbose diagnostics.

Library code never installs handlers; it asks ``_verbose_logger()`` for
whatever logger the caller pushed, and gets a silent one otherwise.
"""
import logging
import threading

_verbose_loggers = []
_stack_lock = threading.Lock()


def push_verbose_logger(logger):
    """Push a logger to receive verbose messages."""
    with _stack_lock:
        _verbose_loggers.append(logger)


def pop_verbose_logger():
    """Remove the most recently-pushed verbose logger."""
    with _stack_lock:
        assert len(_verbose_loggers) > 0
        _verbose_loggers.pop()


_cached_null_logger = None


def _null_logger():
    global _cached_null_logger
    if _cached_null_logger is None:
        logger = logging.getLogger(name='subtuple_pvalue_null')
        logger.addHandler(logging.NullHandler())
        logger.propagate = False
        _cached_null_logger = logger
    return _cached_null_logger


def _verbose_logger():
    """Used internally to get the current verbose logger."""
    with _stack_lock:
        if len(_verbose_loggers) > 0:
            return _verbose_loggers[-1]
    return _null_logger()


def make_stderr_logger(stream):
    """Create the DEBUG-level logger the command line pushes for ``--verbose``.

    Args:
        stream (file): where to write, normally ``sys.stderr``

    Returns:
        a ``logging.Logger`` not attached to the logging hierarchy
    """
    logger = (logging.getLoggerClass())(name="subtuple_pvalue_verbose")
    logger.setLevel(logging.DEBUG)
    handler = logging.StreamHandler(stream=stream)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    logger.addHandler(handler)
    return logger
