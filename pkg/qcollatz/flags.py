"""
Global command-line flags for configuration, plus a wrapper around gflags.
Subcommand flags are defined per invocation in `qcollatz.cli`; the ones
here are shared by the test runner, the job loader and the library
defaults.
"""

# pylint: disable=W0401, W0622, W0614

from gflags import *
from gflags import FLAGS
from gflags import DEFINE_string
from gflags import DEFINE_boolean, DEFINE_integer

(_, _, _, _) = FLAGS, DEFINE_boolean, DEFINE_integer, DEFINE_string

DEFINE_string('debug', 'warn',
    'Turns on debug logging and verbose output')
DEFINE_integer('enumeration_budget', 2 ** 24,
    'Largest number of seeds or parity vectors an exhaustive run may visit')
DEFINE_integer('size_cap_bits', 1000000,
    'Iterates longer than this many bits mark a trajectory as capped')


def default(name):
    """Value of a global flag, parsed or not."""
    return FLAGS[name].value
