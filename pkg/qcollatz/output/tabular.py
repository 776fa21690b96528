# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4
"""
Row-oriented writers: CSV with a header row, and plain text.
"""

import csv

from qcollatz import writer
from qcollatz.output import cell


class CsvWriter(writer.FileWriter):
    """One CSV record per row, after a header of column names."""

    def __init__(self, target, columns):
        super(CsvWriter, self).__init__(target)
        self.columns = list(columns)
        self.csv = csv.writer(self.file, lineterminator="\n")

    def write_header(self):
        self.csv.writerow(self.columns)

    def write(self, key, value):
        """Write row `value`, a sequence in column order or a dict."""
        if isinstance(value, dict):
            value = [value.get(name) for name in self.columns]
        if len(value) != len(self.columns):
            raise ValueError("row %s has %s fields, expected %s" % (
                    key, len(value), len(self.columns)))
        self.csv.writerow([cell(v) for v in value])


class PlainWriter(writer.FileWriter):
    """Lines of space-separated values."""

    def write(self, key, value):
        if isinstance(value, (list, tuple)):
            value = " ".join(cell(v) for v in value)
        self.file.write("%s\n" % value)
