# -*- coding: utf-8 -*-
"""
JSON-encoded values on disk: job parameters and search checkpoints.

A checkpoint records where a chunked search stopped so that `--resume`
can continue it:

    {"q": 5, "method": "orbit", "next_chunk": 40,
     "partial_counts": {...}, "report": {...}}
"""

import json
import os

from qcollatz import logs

LOG = logs.LOG

CHECKPOINT_FIELDS = ('q', 'method', 'next_chunk', 'partial_counts', 'report')


class CheckpointError(ValueError):
    """A checkpoint that is unreadable or belongs to another search."""


def get_value_json_decoded(path):
    """ Read path and json decode it; None when the file is missing """
    if not os.path.exists(path):
        return None
    with open(path) as stored:
        raw = stored.read()
    try:
        return json.loads(raw)
    except ValueError as e:
        LOG.debug("Raw JSON in %s was: %s", path, raw[:200])
        raise CheckpointError("%s is not valid JSON: %s" % (path, e))


def set_value_json_encoded(path, value):
    """ Encode value and write it to path, replacing the file in one step """
    try:
        encoded_value = json.dumps(value, sort_keys=True)
    except (TypeError, ValueError):
        raise ValueError("cannot encode value %s to JSON" % (value,))

    tmp_path = "%s.tmp" % path
    with open(tmp_path, "w") as stored:
        stored.write(encoded_value)
    os.replace(tmp_path, path)
    return True


def save_checkpoint(path, q, method, next_chunk, partial_counts, report):
    """Write the state of a search that has finished chunks
    0..next_chunk-1."""
    set_value_json_encoded(path, {'q': int(q),
                                  'method': method,
                                  'next_chunk': next_chunk,
                                  'partial_counts': partial_counts,
                                  'report': report})
    LOG.debug("checkpoint %s at chunk %s", path, next_chunk)


def load_checkpoint(path, q=None, method=None):
    """Read a checkpoint, checking it belongs to the search for (q, method)."""
    state = get_value_json_decoded(path)
    if state is None:
        raise CheckpointError("no checkpoint at %s" % path)
    if not isinstance(state, dict):
        raise CheckpointError("%s does not hold a checkpoint" % path)
    missing = [name for name in CHECKPOINT_FIELDS if name not in state]
    if missing:
        raise CheckpointError("checkpoint %s lacks %s" % (
                path, ", ".join(missing)))
    if q is not None and state['q'] != int(q):
        raise CheckpointError("checkpoint %s is for q=%s, not q=%s" % (
                path, state['q'], int(q)))
    if method is not None and state['method'] != method:
        raise CheckpointError("checkpoint %s is for method %s, not %s" % (
                path, state['method'], method))
    if not isinstance(state['next_chunk'], int) or state['next_chunk'] < 0:
        raise CheckpointError("checkpoint %s has a bad next_chunk %r" % (
                path, state['next_chunk']))
    return state
