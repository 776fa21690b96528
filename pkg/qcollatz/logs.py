# -*- coding: utf-8 -*-
"""
Set up some system-wide loggers
"""
import logging
import os

from qcollatz import flags
FLAGS = flags.FLAGS

LEVELS = {'debug': logging.DEBUG,
          'info': logging.INFO,
          'warn': logging.WARNING,
          'error': logging.ERROR,
          'critical': logging.CRITICAL,
          # Verification verdicts sit between INFO and WARNING.
          'report': 25}

SEARCH_LOG = logging.getLogger("search")
STATS_LOG = logging.getLogger("stats")
LOG = logging.getLogger()


def init_logs(level_name=None):
    """Load logging config, and set log levels based on flags"""
    if level_name is None:
        level_name = flags.default('debug')
    level = LEVELS.get(level_name, logging.ERROR)
    logging.basicConfig(level=level)
    for noisy in ("amqp", "celery", "kombu"):
        logging.getLogger(noisy).setLevel(logging.ERROR)

    LOG.setLevel(level)
    SEARCH_LOG.setLevel(level)
    STATS_LOG.setLevel(level)


def make_job_logger(job_id, log_dir=None):
    """Make a logger dedicated to one search job. It behaves like a normal
    logging.Logger with an extra `report` method that logs at the 'report'
    level into <log_dir>/<job_id>.log (the working directory by default)."""

    def _report(msg, *args, **kwargs):
        """Log at the 'report' level."""
        return report_logger.log(LEVELS['report'], msg, *args, **kwargs)

    report_logger = logging.getLogger("job.%s" % job_id)
    report_logger.report = _report
    report_logger.setLevel(LEVELS['report'])
    report_logger.propagate = False

    log_file_path = os.path.join(log_dir or os.getcwd(), "%s.log" % job_id)
    for handler in list(report_logger.handlers):
        if getattr(handler, 'baseFilename', None) == \
                os.path.abspath(log_file_path):
            return report_logger
    report_logger.addHandler(logging.FileHandler(log_file_path))
    return report_logger


def close_job_logger(job_id):
    """Detach and close the file handlers of a job logger."""
    report_logger = logging.getLogger("job.%s" % job_id)
    for handler in list(report_logger.handlers):
        report_logger.removeHandler(handler)
        handler.close()
