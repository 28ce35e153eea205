from __future__ import absolute_import, division

import numpy as np

from ..report import CheckReport

__all__ = [
    'LinearCycleSet', 'lcs_from_table', 'trivial_lcs', 'yleft', 'socle',
    'center', 'is_ideal', 'is_lcs_morphism', 'validate_lcs'
]

AXIOMS = [
    ('group', '(A, +) is an abelian group with neutral element 0'),
    ('bijectivity', 'b -> a·b is a permutation of A'),
    ('(1.2)', 'a·(b+c) = a·b + a·c'),
    ('(1.3)', '(a+b)·c = (a·b)·(a·c)'),
]


def _as_table(table, n, name):
    table = np.asarray(table, dtype=np.int64)
    if table.shape != (n, n):
        raise ValueError('{} must have shape ({n}, {n}), got {}'.format(
            name, table.shape, n=n))
    if n and (table.min() < 0 or table.max() >= n):
        raise ValueError('{} has entries out of range [0, {})'.format(
            name, n))
    return table


def validate_lcs(group, dot_table):
    """ Checks the linear cycle set axioms exhaustively.

    # Arguments
        group: AbstractGroup. Additive structure.
        dot_table: Integer array (n x n), `dot_table[a, b]` the index of `a·b`.

    # Returns
        CheckReport: One entry per axiom, with the first witness in
            lexicographic order of `(a, b, c)` when it fails.

    # Raises
        ValueError: if the table has the wrong shape or entries out of range.
    """
    n = group.order
    D = _as_table(dot_table, n, 'dot_table')
    P = group.add_table
    report = CheckReport('linear cycle set')

    finder = getattr(group, 'find_violation', None)
    violation = finder() if finder is not None else None
    report.add(AXIOMS[0][0], AXIOMS[0][1],
               None if violation is None else violation[1])

    witness = None
    for a in range(n):
        if len(np.unique(D[a])) != n:
            witness = (a,)
            break
    report.add(AXIOMS[1][0], AXIOMS[1][1], witness)

    left = D[:, P]
    right = P[D[:, :, None], D[:, None, :]]
    report.add(AXIOMS[2][0], AXIOMS[2][1], _first(left != right))

    left = D[P]
    right = D[D[:, :, None], D[:, None, :]]
    report.add(AXIOMS[3][0], AXIOMS[3][1], _first(left != right))
    return report


def _first(mask):
    positions = np.argwhere(mask)
    if not len(positions):
        return None
    return tuple(int(v) for v in positions[0])


class LinearCycleSet(object):
    """ Finite linear cycle set.

    An abelian group `(A, +)` with an operation `·` whose left translations
    are bijective and such that `a·(b+c) = a·b + a·c` and
    `(a+b)·c = (a·b)·(a·c)`. Elements are the indices of `group`.

    # Arguments
        group: AbstractGroup. The additive structure.
        dot_table: Integer array (n x n). Row `a` is the left translation by
            `a`.
        validate: Boolean. Check the axioms and raise if they fail. Candidate
            structures that may be invalid are built with `validate=False`
            and checked with `validate_lcs`.

    # Raises
        ValueError: if validating and an axiom fails.
    """

    def __init__(self, group, dot_table, validate=True):
        self.group = group
        self.dot_table = _as_table(dot_table, group.order, 'dot_table')
        self._inv_dot_table = None
        self._yleft_table = None
        if validate:
            failure = validate_lcs(group, self.dot_table).first_failure()
            if failure is not None:
                raise ValueError('Not a linear cycle set: {} fails at {}'.format(
                    failure.formula, failure.witness))

    @property
    def order(self):
        return self.group.order

    @property
    def inv_dot_table(self):
        """ Table of `ᵃb`, the element `c` with `a·c = b`. """
        if self._inv_dot_table is None:
            self._inv_dot_table = np.argsort(self.dot_table, axis=1)
        return self._inv_dot_table

    @property
    def yleft_table(self):
        """ Table of `y ⊲ a = y·a - a`, indexed `[y, a]`. """
        if self._yleft_table is None:
            n = self.order
            a = np.arange(n)[None, :]
            self._yleft_table = self.group.add_table[
                self.dot_table, self.group.neg_table[a]]
        return self._yleft_table

    def dot(self, a, b):
        return int(self.dot_table[a, b])

    def inv_dot(self, a, b):
        return int(self.inv_dot_table[a, b])

    def yleft(self, y, a):
        return int(self.yleft_table[y, a])

    def is_trivial(self):
        return bool(np.all(self.dot_table == np.arange(self.order)[None, :]))

    def __eq__(self, other):
        return (isinstance(other, LinearCycleSet) and
                np.array_equal(self.group.add_table, other.group.add_table) and
                np.array_equal(self.dot_table, other.dot_table))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'LinearCycleSet(order={}, trivial={})'.format(
            self.order, self.is_trivial())


def lcs_from_table(group, dot_table):
    """ Builds a linear cycle set from its `·` table.

    # Arguments
        group: AbstractGroup.
        dot_table: Integer array (n x n).

    # Returns
        tuple: `(lcs, report)`. `lcs` is `None` when some axiom fails, the
            report names every violated axiom with its first witness.

    # Raises
        ValueError: if the table is malformed.
    """
    report = validate_lcs(group, dot_table)
    if not report.passed:
        return None, report
    return LinearCycleSet(group, dot_table, validate=False), report


def trivial_lcs(group):
    """ The trivial linear cycle set `a·b = b` on `group`. """
    n = group.order
    table = np.tile(np.arange(n, dtype=np.int64), (n, 1))
    return LinearCycleSet(group, table, validate=False)


def yleft(L, y, a):
    """ Returns `y ⊲ a = y·a - a`. """
    return L.yleft(y, a)


def socle(L):
    """ Elements `y` with `y·a = a` for all `a`, as a sorted tuple. """
    n = L.order
    fixed = np.all(L.dot_table == np.arange(n)[None, :], axis=1)
    return tuple(int(y) for y in np.flatnonzero(fixed))


def center(L):
    """ Socle elements fixed by every left translation. """
    return tuple(
        y for y in socle(L) if np.all(L.dot_table[:, y] == y))


def is_ideal(L, elements):
    """ Whether a subgroup `S` of `(A, +)` is an ideal.

    # Arguments
        L: LinearCycleSet.
        elements: Iterable of element indices of `S`.

    # Returns
        bool: `True` iff `a·y` and `y·a - a` lie in `S` for all `a`, `y` in
            `S`.

    # Raises
        ValueError: if `elements` is not a subgroup.
    """
    elements = sorted(set(int(e) for e in elements))
    if not L.group.is_subgroup(elements):
        raise ValueError('{} is not a subgroup'.format(elements))
    members = np.zeros(L.order, dtype=bool)
    members[elements] = True
    ys = np.asarray(elements)
    return bool(members[L.dot_table[:, ys]].all() and
                members[L.yleft_table[ys, :]].all())


def is_lcs_morphism(L1, L2, table):
    """ Whether `table` (indices of L2 for each element of L1) preserves `+`
    and `·`.
    """
    f = np.asarray(table, dtype=np.int64)
    if f.shape != (L1.order,):
        raise ValueError('Morphism table must have {} entries'.format(
            L1.order))
    sums = np.array_equal(f[L1.group.add_table],
                          L2.group.add_table[f[:, None], f[None, :]])
    dots = np.array_equal(f[L1.dot_table], L2.dot_table[f[:, None],
                                                        f[None, :]])
    return sums and dots
