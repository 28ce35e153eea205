""" Logging module for the package

The logging is handled with the abseil library. On top of it there are
verbosity levels for tracing long computations (`verbose`), a summary of
check reports (`log_report`) and progress messages for exhaustive
enumerations (`progress`).
"""
from __future__ import absolute_import

from absl import flags
from absl.logging import (DEBUG, ERROR, FATAL, INFO, WARN, WARNING, debug,
                          error, fatal, info, set_verbosity, skip_log_prefix,
                          warn, warning)

# This removes warning and redirection to stderr
flags.FLAGS.mark_as_parsed()

# Define verbosity
_VERBOSITY_INFO_LEVEL = 0


def set_info_level(level):
    global _VERBOSITY_INFO_LEVEL
    set_verbosity(INFO)
    _VERBOSITY_INFO_LEVEL = level


def get_info_level():
    return _VERBOSITY_INFO_LEVEL


def verbose(msg, level=0):
    if level <= _VERBOSITY_INFO_LEVEL:
        info(msg)


def log_report(report, level=1):
    """ Logs the outcome of a check report.

    A single line is logged when every identity holds, otherwise one warning
    per failing identity with its witness.

    # Arguments
        report: CheckReport. Report returned by any of the checkers.
        level: Integer. Verbosity level of the summary line.
    """
    failures = [r for r in report.results if not r.passed]
    if not failures:
        verbose('{}: {} identities hold'.format(report.title,
                                                len(report.results)), level)
        return
    for result in failures:
        warning('{}: {} fails at {}'.format(report.title, result.name,
                                             result.witness))


def progress(iterable, total=None, every=1000, what='candidates'):
    """ Yields the items of `iterable` logging a message every `every` items.
    """
    count = 0
    for count, item in enumerate(iterable, 1):
        if count % every == 0:
            verbose('Processed {}/{} {}'.format(count, total or '?', what), 2)
        yield item
    verbose('Processed {} {}'.format(count, what), 2)


# Register frame to not show that verbose messages come from this file
skip_log_prefix(verbose)
skip_log_prefix(log_report)
