""" Reports returned by the validation and checking operations.

A report is an ordered ledger of identities. Each entry keeps the displayed
formula it verifies and, when it fails, the first witness found in
lexicographic order of the quantified variables.
"""
from __future__ import absolute_import

import collections

import pandas as pd

__all__ = ['IdentityResult', 'CheckReport']


class IdentityResult(
        collections.namedtuple('IdentityResult',
                               ['name', 'formula', 'passed', 'witness'])):

    def to_dict(self):
        return {
            'identity': self.name,
            'formula': self.formula,
            'status': 'pass' if self.passed else 'fail',
            'witness': None if self.witness is None else
                       [_plain(w) for w in self.witness],
        }


def _plain(value):
    if isinstance(value, (tuple, list)):
        return [_plain(v) for v in value]
    return int(value)


class CheckReport(object):
    """ Ordered pass/fail ledger of identities.

    # Arguments
        title: String. Name of the check that produced the report.
    """

    def __init__(self, title):
        self.title = title
        self.results = []

    def add(self, name, formula, witness):
        """ Appends an identity, `witness=None` meaning that it holds. """
        result = IdentityResult(name, formula, witness is None,
                                None if witness is None else tuple(witness))
        self.results.append(result)
        return result

    def extend(self, other):
        self.results.extend(other.results)
        return self

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def __getitem__(self, name):
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __contains__(self, name):
        return any(r.name == name for r in self.results)

    def first_failure(self):
        for r in self.results:
            if not r.passed:
                return r
        return None

    def failures(self):
        return [r for r in self.results if not r.passed]

    def to_dict(self):
        return [r.to_dict() for r in self.results]

    def to_frame(self):
        """ Returns the report as a pandas DataFrame, one row per identity. """
        rows = [r.to_dict() for r in self.results]
        return pd.DataFrame(
            rows, columns=['identity', 'status', 'witness', 'formula'])

    def __repr__(self):
        return 'CheckReport({}, {}/{} pass)'.format(
            self.title, sum(r.passed for r in self.results), len(self.results))
