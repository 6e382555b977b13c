# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright © 2026, subtuple-pvalue developers. All rights reserved.
#
# The full license is in the file LICENSE.txt, distributed with this software.
# ----------------------------------------------------------------------------
"""Library for exact tail probabilities of the occurrence-in-subtuple problem."""
