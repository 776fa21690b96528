# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4
"""
qcollatz: a workbench for the generalized Collatz system qn+1.

The maps, parity vectors, closed forms, periodicity conditions, bounded
cycle searches and the binomial model of the parity coefficient live in
the submodules; `qcollatz.cli` ties them to the command line.
"""

import sys

# Iterates of divergent orbits run to hundreds of thousands of digits and
# are printed and JSON encoded as plain integers.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)
