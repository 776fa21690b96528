# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4
"""
A JSON document per invocation, with sorted keys so that identical runs
give identical bytes.
"""

import json

from qcollatz import writer
from qcollatz.output import encode_value


class JsonWriter(writer.FileWriter):
    """Collect key/value pairs and write them as one JSON object."""

    def __init__(self, target):
        super(JsonWriter, self).__init__(target)
        self.document = {}

    def write(self, key, value):
        self.document[str(key)] = encode_value(value)

    def write_footer(self):
        json.dump(self.document, self.file, sort_keys=True, indent=2)
        self.file.write("\n")
