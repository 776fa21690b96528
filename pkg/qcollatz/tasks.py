# -*- coding: utf-8 -*-
# vim: tabstop=4 shiftwidth=4 softtabstop=4

"""
The chunk kernels a search is split into, by name:
    * orbit       cycles.orbit_chunk
    * parity      cycles.parity_chunk
    * class       cycles.class_chunk
    * hist        stats.hist_chunk
    * sampled     stats.sampled_hist_chunk
    * bounds      trajectory.bounds_chunk
    * collatz     trajectory.convergence_scan

Kernels take and return JSON-able values. `run_chunk` runs one on a celery
worker; `execute_chunk` runs one in this process or a pool worker.
"""

from celery import Celery
from celery.utils.log import get_task_logger

from qcollatz import cycles
from qcollatz import stats
from qcollatz import trajectory

app = Celery('qcollatz')
app.config_from_object('celeryconfig', silent=True)

LOG = get_task_logger(__name__)

KERNELS = {
    'orbit': cycles.orbit_chunk,
    'parity': cycles.parity_chunk,
    'class': cycles.class_chunk,
    'hist': stats.hist_chunk,
    'sampled': stats.sampled_hist_chunk,
    'bounds': trajectory.bounds_chunk,
    'collatz': trajectory.convergence_scan,
}


def execute_chunk(kind, args):
    """Run the kernel registered as `kind` on one chunk of arguments."""
    try:
        kernel = KERNELS[kind]
    except KeyError:
        raise ValueError("unknown chunk kind %r" % (kind,))
    return kernel(*args)


@app.task(name='qcollatz.tasks.run_chunk')
def run_chunk(kind, args):
    """ Celery entry point for one chunk """
    LOG.debug("running %s chunk %s", kind, args)
    return execute_chunk(kind, list(args))
