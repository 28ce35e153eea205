from __future__ import absolute_import, division

import numpy as np

from .. import logging
from ..abelian import automorphisms
from ..common import check_guard, resolve_limits
from .cycle_set import LinearCycleSet

__all__ = ['enumerate_lcs']


def _consistent(rows, assigned, P):
    """ Checks `(a+b)·c = (a·b)·(a·c)` on every pair whose three rows are set.

    In terms of rows: `row[a+b] = row[a·b] o row[a]`.
    """
    for a in range(assigned):
        row_a = rows[a]
        for b in range(len(row_a)):
            s, t = P[a, b], row_a[b]
            if s < assigned and t < assigned:
                if not np.array_equal(rows[s], rows[t][row_a]):
                    return False
    return True


def enumerate_lcs(group, limits=None):
    """ All linear cycle sets on `group`, in lexicographic order of tables.

    Every left translation of a linear cycle set is an automorphism of the
    additive group (`a·(b+c) = a·b + a·c` and bijectivity), so the rows are
    searched among the automorphisms. Row `0` is the identity. A partial
    table is abandoned as soon as `(a+b)·c = (a·b)·(a·c)` fails on its
    completed rows.

    # Arguments
        group: FiniteAbelianGroup.
        limits: SizeLimits. `max_enumerate_order` bounds the group order.

    # Returns
        list: LinearCycleSet instances, no isomorphism reduction applied.

    # Raises
        SizeGuardError: if the group is too large.
    """
    limits = resolve_limits(limits)
    check_guard(limits, 'max_enumerate_order', group.order)
    n = group.order
    P = group.add_table
    candidates = automorphisms(group, limits=limits)
    logging.verbose(
        'Enumerating linear cycle sets on {} with {} candidate rows'.format(
            group, len(candidates)), 1)

    found = []
    rows = [None] * n
    rows[0] = np.arange(n)

    def extend(a):
        if a == n:
            found.append(np.array(rows, dtype=np.int64))
            return
        for row in candidates:
            rows[a] = row
            if _consistent(rows, a + 1, P):
                extend(a + 1)
        rows[a] = None

    if _consistent(rows, 1, P):
        extend(1)
    logging.verbose('Found {} linear cycle sets on {}'.format(
        len(found), group), 1)
    return [LinearCycleSet(group, table, validate=False) for table in found]
