# -*- coding: utf-8 -*-

""" A single search or statistics job """

import hashlib
import json
import os
import re

from configparser import ConfigParser

from qcollatz import flags
from qcollatz.logs import LOG

RE_INCLUDE = re.compile(r'^(.*)_INCLUDE')
CHUNK_SIZE = 1000

FLAGS = flags.FLAGS
flags.DEFINE_boolean('include_defaults', True, "Exclude default configs")

# Config keys that may stand in for an absent command-line flag.
CONFIGURABLE = ('STEP_CAP', 'SIZE_CAP_BITS', 'ENUMERATION_BUDGET',
                'CHUNK_SIZE', 'CHECKPOINT_EVERY', 'LAMBDA_MAX')


def parse_config_file(config_file):
    """
    Read one ConfigParser file. Keys are upper-cased; a key of the form
    "NAME_INCLUDE = other.conf" pulls in another file, resolved relative
    to this one, whose keys land before the keys that follow.
    """

    parser = ConfigParser()
    parser.read(config_file)

    params = {}
    sections = []
    for section in parser.sections():
        for key, value in parser.items(section):
            key = key.upper()
            if RE_INCLUDE.match(key):
                include = os.path.join(os.path.dirname(config_file), value)
                new_sections, new_params = parse_config_file(include)
                sections.extend(new_sections)
                params.update(new_params)
            else:
                sections.append(section)
                params[key] = value
    return sections, params


class Job(object):
    """A job is a collection of parameters identified by a digest of them."""

    __cwd = os.path.dirname(__file__)
    __defaults = [os.path.join(__cwd, "default.conf"),   # package
                  "qcollatz.conf",                       # working dir
                  "/etc/qcollatz.conf",                  # site
                  "~/.qcollatz.conf"]                    # user

    @classmethod
    def default_configs(cls, include_defaults=None):
        """
         Default job configuration files, writes a warning if they don't exist.
        """
        if include_defaults is None:
            include_defaults = flags.default('include_defaults')
        if not include_defaults:
            return []

        paths = [os.path.expanduser(cfg) for cfg in cls.__defaults]
        if not any(os.path.exists(cfg) for cfg in paths):
            LOG.warning("No default configuration! Caps and budgets fall "
                        "back to the flag defaults.")
        return paths

    @staticmethod
    def from_file(config_file=None, include_defaults=None):
        """ Create a job from the default configs and an optional file. """
        files = Job.default_configs(include_defaults)
        if config_file is not None:
            config_file = os.path.abspath(config_file)
            if not os.path.exists(config_file):
                raise IOError("no such config file: %s" % config_file)
            LOG.debug("Loading Job from %s", config_file)
            files = files + [config_file]
        params = {}
        sections = []
        for each_config_file in files:
            new_sections, new_params = parse_config_file(each_config_file)
            sections.extend(new_sections)
            params.update(new_params)
        job = Job(params, sections=sections)
        job.config_file = config_file  # pylint: disable=W0201
        return job

    def __init__(self, params, sections=()):
        self.params = dict(params)
        uniq = []
        for section in sections:
            if section not in uniq:
                uniq.append(section)
        self.sections = uniq

    def has(self, name):
        """Return true if this job has the given parameter defined
        and specified, false otherwise."""
        return name in self.params and self.params[name] != ""

    def get_int(self, name, default=None):
        if not self.has(name):
            return default
        try:
            return int(self.params[name])
        except ValueError:
            raise ValueError("config key %s is not an integer: %r" % (
                    name, self.params[name]))

    @property
    def job_id(self):
        """First 12 hex digits of the sha1 of the sorted parameters."""
        encoded = json.dumps(self.params, sort_keys=True, default=str)
        return hashlib.sha1(encoded.encode('utf-8')).hexdigest()[:12]

    def __getitem__(self, name):
        return self.params[name]

    def __eq__(self, other):
        return isinstance(other, Job) and self.params == other.params

    def __str__(self):
        return str(self.params)


class ChunkSplitter(object):
    """Split the integer range [lo, hi) into consecutive (start, stop)
    chunks of at most chunk_size values."""

    def __init__(self, lo, hi, chunk_size=CHUNK_SIZE):
        if chunk_size < 1:
            raise ValueError("chunk size must be >= 1, got %s" % chunk_size)
        self.lo = lo
        self.hi = hi
        self.chunk_size = chunk_size

    def __iter__(self):
        for start in range(self.lo, self.hi, self.chunk_size):
            yield (start, min(start + self.chunk_size, self.hi))

    def __len__(self):
        if self.hi <= self.lo:
            return 0
        return -(-(self.hi - self.lo) // self.chunk_size)

    def chunks(self, prefix=(), suffix=()):
        """Kernel argument tuples prefix + (start, stop) + suffix."""
        return [tuple(prefix) + pair + tuple(suffix) for pair in self]
