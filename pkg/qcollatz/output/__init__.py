"""
Constants and helper functions for the output generation: conversion of
results into JSON-able values and the writer for each --format.
"""

from fractions import Fraction

import numpy

from qcollatz.parity import ParityVector

JSON = 'json'
CSV = 'csv'
PLAIN = 'plain'
FORMATS = (JSON, CSV, PLAIN)


def encode_value(value):
    """Exact rationals as "a/b", parity vectors as bitstrings, numpy
    scalars as Python numbers; containers are converted recursively."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return "%s" % value.numerator
        return "%s/%s" % (value.numerator, value.denominator)
    if isinstance(value, ParityVector):
        return str(value)
    if isinstance(value, numpy.integer):
        return int(value)
    if isinstance(value, numpy.floating):
        return float(value)
    if isinstance(value, int):
        return int(value)
    if isinstance(value, dict):
        return dict((str(k), encode_value(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [encode_value(v) for v in value]
    return value


def cell(value):
    """Text of one value in a CSV or plain record."""
    value = encode_value(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ",".join(cell(v) for v in value)
    return str(value)
