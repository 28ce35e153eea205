""" Braces and Rump's correspondence with linear cycle sets.

For a linear cycle set `A` the product `ab = ᵃb + a`, where `ᵃb` inverts the
left translation by `a`, makes `A` a brace. Conversely a brace gives back the
linear cycle set `a·b = a⁻¹(a+b)`.
"""
from __future__ import absolute_import, division

import numpy as np

from ..report import CheckReport
from .cycle_set import LinearCycleSet

__all__ = [
    'Brace', 'lcs_to_brace', 'brace_to_lcs', 'check_brace_compatibility',
    'brace_inverse', 'lcs_from_brace_table'
]


class Brace(object):
    """ Finite brace with additive group `group` and multiplication table.

    # Arguments
        group: AbstractGroup.
        mul_table: Integer array (n x n), `mul_table[a, b]` the index of `ab`.
        validate: Boolean. Raise `ValueError` if the brace axioms fail.
    """

    def __init__(self, group, mul_table, validate=True):
        n = group.order
        table = np.asarray(mul_table, dtype=np.int64)
        if table.shape != (n, n):
            raise ValueError('mul_table must have shape ({n}, {n})'.format(
                n=n))
        self.group = group
        self.mul_table = table
        self._mul_inv_table = None
        if validate:
            failure = self.check().first_failure()
            if failure is not None:
                raise ValueError('Not a brace: {} fails at {}'.format(
                    failure.formula, failure.witness))

    @property
    def order(self):
        return self.group.order

    @property
    def mul_inv_table(self):
        """ `mul_inv_table[a]` is the multiplicative inverse of `a`. """
        if self._mul_inv_table is None:
            self._mul_inv_table = np.argmin(self.mul_table, axis=1)
        return self._mul_inv_table

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def inverse(self, a):
        return int(self.mul_inv_table[a])

    def check(self):
        """ Exhaustive check of the brace axioms. """
        n = self.order
        M = self.mul_table
        P = self.group.add_table
        N = self.group.neg_table
        report = CheckReport('brace')
        rng = np.arange(n)
        identity = None
        if not (np.array_equal(M[0], rng) and np.array_equal(M[:, 0], rng)):
            identity = (0,)
        report.add('identity', '0a = a0 = a', identity)
        bad_rows = [a for a in range(n) if len(np.unique(M[a])) != n or
                    len(np.unique(M[:, a])) != n]
        report.add('latin', 'b -> ab and b -> ba are permutations',
                   (bad_rows[0],) if bad_rows else None)
        report.add('associativity', '(ab)c = a(bc)',
                   _first(M[M, :] != M[:, M]))
        left = M[:, P]
        # ab + ac - a
        right = P[P[M[:, :, None], M[:, None, :]], N[rng][:, None, None]]
        report.add('(1.1)', 'a(b+c) = ab + ac - a', _first(left != right))
        return report


def _first(mask):
    positions = np.argwhere(mask)
    if not len(positions):
        return None
    return tuple(int(v) for v in positions[0])


def lcs_to_brace(L):
    """ Brace associated with a linear cycle set, `ab = ᵃb + a`. """
    n = L.order
    a = np.arange(n)[:, None]
    mul = L.group.add_table[L.inv_dot_table, a]
    return Brace(L.group, mul, validate=False)


def brace_to_lcs(B):
    """ Linear cycle set associated with a brace, `a·b = a⁻¹(a+b)`. """
    n = B.order
    a = np.arange(n)[:, None]
    dot = B.mul_table[B.mul_inv_table[a], B.group.add_table]
    return LinearCycleSet(B.group, dot, validate=False)


def check_brace_compatibility(L):
    """ Checks `a·(b+c) = (a·b)((a+b)·c)` in the brace of `L` for all triples.
    """
    B = lcs_to_brace(L)
    D, P, M = L.dot_table, L.group.add_table, B.mul_table
    left = D[:, P]
    right = M[D[:, :, None], D[P]]
    report = CheckReport('brace compatibility')
    report.add('(1.6)', 'a·(b+c) = (a·b)((a+b)·c)', _first(left != right))
    return report


def brace_inverse(L, a):
    """ Inverse of `a` in the multiplicative group of the brace of `L`. """
    return lcs_to_brace(L).inverse(a)


def lcs_from_brace_table(group, mul_table):
    """ Linear cycle set of a brace given by its multiplication table.

    # Returns
        tuple: `(lcs, report)` with `lcs` `None` when the brace axioms fail.

    # Raises
        ValueError: if the table is malformed.
    """
    brace = Brace(group, mul_table, validate=False)
    report = brace.check()
    if not report.passed:
        return None, report
    return brace_to_lcs(brace), report
