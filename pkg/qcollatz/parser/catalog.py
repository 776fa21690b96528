# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4
"""
Reader for cycle catalogs and the check of a catalog row against a
recomputed cycle.

A catalog is a JSON array of rows

    {"q": 5, "n0": 13, "x0": 105, "p": 7, "P_p": 3, "s": 3, "h": 3,
     "lambda": 2, "parity": "1110000"}

or the JSON document written by `cycles-search`, whose "cycles" member is
such an array. Only q, x0 and p are required.
"""

import json
import os

from qcollatz import cycles
from qcollatz import logs
from qcollatz import producer
from qcollatz.maps import DomainError

LOG = logs.SEARCH_LOG

KNOWN_CYCLES = os.path.join(os.path.dirname(os.path.dirname(__file__)),
                            'data', 'known_cycles.json')


class CatalogError(ValueError):
    """A catalog file that cannot be read as rows of cycles."""


class CatalogReader(producer.FileProducer):
    """Yield the rows of a cycle catalog as dicts of typed fields."""

    REQUIRED_ATTRIBUTES = (('q', int), ('x0', int), ('p', int))
    OPTIONAL_ATTRIBUTES = (('n0', int), ('P_p', int), ('s', int),
                           ('h', int), ('lambda', int), ('parity', str))

    def _parse(self):
        try:
            data = json.load(self.file)
        except ValueError as e:
            raise CatalogError("%s is not valid JSON: %s" % (self.path, e))
        if isinstance(data, dict):
            data = data.get('cycles')
        if not isinstance(data, list):
            raise CatalogError("%s holds no list of cycles" % self.path)
        for element in data:
            if not isinstance(element, dict):
                raise CatalogError("%s: row %r is not an object" % (
                        self.path, element))
            try:
                self._set_meta(element)
            except (TypeError, ValueError) as e:
                raise CatalogError("%s: %s" % (self.path, e))
            yield dict(self._current_meta)


def read_catalog(path=None, q=None):
    """Rows of the catalog at path (the shipped one by default), optionally
    only those of multiplier q."""
    reader = CatalogReader(path or KNOWN_CYCLES)
    try:
        if q is None:
            return list(reader)
        return list(reader.filter(producer.AttributeConstraint({'q': q})))
    finally:
        reader.close()


def verify_catalog_row(row):
    """Recompute the cycle of a catalog row and run every structural check.

    Returns a dict with the recomputed `cycle` row, the `mismatches`
    (catalog fields that disagree), the names of failed checks, the
    certified `margin` of 2 - q^{P/p} and an overall `verified` flag."""
    verdict = {'row': dict(row), 'cycle': None, 'mismatches': [],
               'failures': [], 'margin': None, 'verified': False}
    try:
        cycle = cycles.Cycle.from_dict(row)
    except DomainError as e:
        LOG.warning("catalog row %s: %s", row, e)
        verdict['failures'].append('orbit')
        return verdict
    if cycle.period != row['p'] or cycle.min_seed_x != row['x0']:
        verdict['failures'].append('orbit')

    q = cycle.q
    failures = list(cycle.invariant_failures())
    if not cycles.second_periodicity_check(q, cycle.min_seed_n, cycle.parity):
        failures.append('second_periodicity')
    if cycles.first_periodicity_solve(q, cycle.parity) != cycle.min_seed_x:
        failures.append('first_periodicity')
    if not cycles.divisor_condition(q, cycle):
        failures.append('divisor')
    if not cycles.parity_coeff_bounds_check(q, cycle):
        failures.append('bounds')
    if cycle.class_h in cycles.class_exclusions(q):
        failures.append('class_excluded')
    try:
        solved = cycles.cycle_congruence_solve(q, cycle.period, cycle.s)
        if solved['h'] != cycle.class_h:
            failures.append('congruence')
    except DomainError:
        failures.append('congruence')

    verdict['failures'].extend(failures)
    verdict['cycle'] = cycle.to_dict()
    verdict['mismatches'] = cycle.mismatches(row)
    verdict['margin'] = cycles.cycle_margin(cycle)
    verdict['verified'] = not verdict['failures'] and \
        not verdict['mismatches']
    return verdict
