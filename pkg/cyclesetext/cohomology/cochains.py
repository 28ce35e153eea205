""" Shuffle-normalized cochain groups.

A cochain of bidegree `(r, s)` is a function `H̄^(r+s) -> I`, extended by
zero to every argument list containing `0`, whose last `s` arguments satisfy
the shuffle relations. Cochains are stored in the ambient group `I^T` of all
functions on the `T = (|H|-1)^(r+s)` basis tuples, in lexicographic order:
coordinate `t * rank(I) + c` is the `c`-th coordinate of the value at the
`t`-th tuple.
"""
from __future__ import absolute_import, division

import itertools

import numpy as np

from .. import logging
from ..abelian import FiniteAbelianGroup, GroupHom, hom_kernel, preimage
from ..common import NotACochainError, check_guard, resolve_limits

__all__ = [
    'CochainGroup', 'cochain_group', 'basis_tuples', 'tuple_index',
    'shuffles', 'value_group', 'TermMatrix'
]


def value_group(I):
    """ Group of values of the cochains, `I` may be a linear cycle set. """
    group = getattr(I, 'group', I)
    if not isinstance(group, FiniteAbelianGroup):
        raise ValueError(
            'Cochains need values in a FiniteAbelianGroup, got {}'.format(
                group))
    return group


def basis_tuples(nH, m):
    """ All `m`-tuples of nonzero indices of `H`, lexicographically sorted.
    """
    tuples = list(itertools.product(range(1, nH), repeat=m))
    return np.asarray(tuples, dtype=np.int64).reshape(len(tuples), m)


def tuple_index(nH, args):
    """ Position of each argument tuple among the basis tuples, `-1` when it
    has a zero entry.

    # Arguments
        nH: Integer. Order of `H`.
        args: Integer array (... x m) of indices of `H`.

    # Returns
        Integer array with the shape of `args` without its last axis.
    """
    args = np.asarray(args, dtype=np.int64)
    m = args.shape[-1]
    weights = (nH - 1)**np.arange(m - 1, -1, -1, dtype=np.int64)
    index = (args - 1).dot(weights)
    return np.where((args == 0).any(axis=-1), -1, index)


def shuffles(l, s):
    """ The `(l, s-l)` shuffles with their signs.

    The shuffle `σ` sends the word `x_1...x_s` to the word having `x_i` at
    position `σ(i)`, with `σ` increasing on `1..l` and on `l+1..s`.

    # Yields
        tuple: `(sign, order)`, the shuffled word being
            `[x[i] for i in order]`.
    """
    for first in itertools.combinations(range(s), l):
        rest = [p for p in range(s) if p not in first]
        inversions = sum(1 for a in first for b in rest if a > b)
        order = [0] * s
        for i, p in enumerate(list(first) + rest):
            order[p] = i
        yield (-1)**inversions, order


class TermMatrix(object):
    """ Integer matrix of a map `I^T -> I^T'` assembled from terms.

    Each term sends the value at a source tuple to a target tuple through
    `sign * E` for an endomorphism `E` of `I` given by its index table.

    # Arguments
        values: FiniteAbelianGroup. The group `I`.
        n_source: Integer. Number of source tuples `T`.
        n_target: Integer. Number of target tuples `T'`.
    """

    def __init__(self, values, n_source, n_target):
        self.values = values
        self.n_source = n_source
        self.n_target = n_target
        k = values.rank
        self.matrix = np.zeros((n_target * k, n_source * k), dtype=np.int64)
        self._units = [values.index(e) for e in np.eye(k, dtype=np.int64)]

    def add(self, target, source, sign, tables=None):
        """ Adds one term per entry of `target`.

        # Arguments
            target: Integer array of target tuple positions.
            source: Integer array of source tuple positions, `-1` for an
                argument list that contains `0`.
            sign: Integer or integer array.
            tables: Integer array (len(target) x |I|) with the table of `E`
                for every term, `None` for the identity.
        """
        k = self.values.rank
        target = np.asarray(target, dtype=np.int64)
        source = np.asarray(source, dtype=np.int64)
        keep = source >= 0
        if not k or not keep.any():
            return
        sign = np.broadcast_to(np.asarray(sign, dtype=np.int64), target.shape)
        if tables is None:
            mats = np.broadcast_to(np.eye(k, dtype=np.int64),
                                   (int(keep.sum()), k, k))
        else:
            tables = np.asarray(tables, dtype=np.int64)[keep]
            # column c of E is the image of the c-th unit
            mats = self.values.coordinates[tables[:, self._units]]
            mats = mats.transpose(0, 2, 1)
        a = np.arange(k)
        rows = target[keep][:, None, None] * k + a[None, :, None]
        cols = source[keep][:, None, None] * k + a[None, None, :]
        rows, cols = np.broadcast_arrays(rows, cols)
        np.add.at(self.matrix, (rows, cols),
                  sign[keep][:, None, None] * mats)

    def hom(self, domain, codomain):
        return GroupHom(domain, codomain, self.matrix)


class CochainGroup(object):
    """ The group `Ĉ^{rs}(H, I)` of shuffle-normalized cochains.

    The relation map and its kernel are computed on first use, so that
    maps between ambient groups can be assembled without them.

    # Arguments
        H: LinearCycleSet. Only its order is used.
        I: FiniteAbelianGroup or LinearCycleSet. Group of values.
        r: Integer. Number of leading arguments, `r >= 0`.
        s: Integer. Number of shuffled arguments, `s >= 1`.
        limits: SizeLimits. `max_tuples` bounds the number of basis tuples.

    # Attributes
        tuples: Integer array (T x (r+s)) with the basis tuples.
        values: FiniteAbelianGroup. The group of values.
        ambient: FiniteAbelianGroup. All functions on the basis tuples.

    # Raises
        ValueError: if the bidegree is out of range.
        SizeGuardError: if there are more than `max_tuples` basis tuples.
    """

    def __init__(self, H, I, r, s, limits=None):
        if r < 0 or s < 1:
            raise ValueError('Bidegree ({}, {}) needs r >= 0 and s >= 1'.format(
                r, s))
        self.r, self.s = r, s
        self.nH = H.order
        self.values = value_group(I)
        check_guard(resolve_limits(limits), 'max_tuples',
                    (self.nH - 1)**(r + s))
        self.tuples = basis_tuples(self.nH, r + s)
        self.ambient = FiniteAbelianGroup(self.values.cyclic_orders *
                                          len(self.tuples))
        self._relations = None
        self._group = None
        self._inclusion = None

    @property
    def size(self):
        return len(self.tuples)

    @property
    def relations(self):
        """ GroupHom from the ambient group onto the shuffle relations,
        `None` when there are none.
        """
        if self._relations is None and self.s > 1:
            self._relations = self._relation_map()
        return self._relations or None

    def _relation_map(self):
        T, k, r = self.size, self.values.rank, self.r
        terms = TermMatrix(self.values, T, (self.s - 1) * T)
        target = np.arange(T)
        for l in range(1, self.s):
            for sign, order in shuffles(l, self.s):
                args = self.tuples.copy()
                args[:, r:] = self.tuples[:, r + np.asarray(order)]
                terms.add((l - 1) * T + target, tuple_index(self.nH, args),
                          sign)
        # duplicate and trivial relations are dropped
        rows = terms.matrix.reshape((self.s - 1) * T, k * T * k) if k else \
            np.zeros((0, 0), dtype=np.int64)
        rows = rows[rows.any(axis=1)] if rows.size else rows
        if not len(rows):
            return False
        rows = np.unique(rows, axis=0)
        codomain = FiniteAbelianGroup(self.values.cyclic_orders * len(rows))
        matrix = rows.reshape(len(rows) * k, T * k)
        return GroupHom(self.ambient, codomain, matrix)

    def _solve(self):
        if self.relations is None:
            self._group = self.ambient
            self._inclusion = GroupHom.identity(self.ambient)
        else:
            self._group, self._inclusion = hom_kernel(self.relations)
        logging.verbose(
            'Cochain group C^({},{}): {} basis tuples, invariant factors {}'.
            format(self.r, self.s, self.size, list(self._group.cyclic_orders)),
            1)

    @property
    def group(self):
        """ FiniteAbelianGroup. The cochains, in invariant factor form. """
        if self._group is None:
            self._solve()
        return self._group

    @property
    def inclusion(self):
        """ GroupHom. Inclusion of `group` into `ambient`. """
        if self._inclusion is None:
            self._solve()
        return self._inclusion

    def vector(self, values):
        """ Ambient element of the function with the given values.

        # Arguments
            values: Integer sequence with one index of `I` per basis tuple.
        """
        values = np.asarray(values, dtype=np.int64)
        if values.shape != (self.size,):
            raise ValueError('Expected {} values, got shape {}'.format(
                self.size, values.shape))
        if values.size and (values.min() < 0 or
                            values.max() >= self.values.order):
            raise ValueError('Values out of range [0, {})'.format(
                self.values.order))
        return tuple(int(v) for v in self.values.coordinates[values].ravel())

    def to_values(self, vector):
        """ Indices of `I` at every basis tuple of an ambient element. """
        coords = np.asarray(vector, dtype=np.int64).reshape(
            self.size, self.values.rank)
        return self.values.indices_of(coords)

    def restrict(self, table):
        """ Values on the basis tuples of a full table on `H^(r+s)`.

        # Raises
            NotACochainError: if the table is not zero at some argument list
                containing `0`.
        """
        m = self.r + self.s
        table = np.asarray(table, dtype=np.int64)
        if table.shape != (self.nH,) * m:
            raise ValueError('Cochain table must have shape {}, got {}'.format(
                (self.nH,) * m, table.shape))
        mask = np.ones(table.shape, dtype=bool)
        mask[(slice(1, None),) * m] = False
        bad = np.argwhere(mask & (table != 0))
        if len(bad):
            raise NotACochainError(
                'Cochain of bidegree ({}, {}) is not zero at {}'.format(
                    self.r, self.s, tuple(int(v) for v in bad[0])))
        return table[tuple(self.tuples.T)] if self.size else \
            np.zeros(0, dtype=np.int64)

    def table(self, values):
        """ Full table on `H^(r+s)`, zero at argument lists containing `0`. """
        m = self.r + self.s
        table = np.zeros((self.nH,) * m, dtype=np.int64)
        if self.size:
            table[tuple(self.tuples.T)] = values
        return table

    def contains(self, values):
        """ Whether the function with the given values satisfies the shuffle
        relations.
        """
        if self.relations is None:
            return True
        image = self.relations(self.vector(values))
        return not any(image)

    def element(self, values):
        """ Element of `group` with the given values.

        # Raises
            NotACochainError: if the values violate a shuffle relation.
        """
        if not self.contains(values):
            raise NotACochainError(
                'Function violates the shuffle relations of C^({},{})'.format(
                    self.r, self.s))
        return preimage(self.inclusion, self.vector(values))

    def __repr__(self):
        return 'CochainGroup(r={}, s={}, tuples={})'.format(
            self.r, self.s, self.size)


def cochain_group(H, I, r, s, limits=None):
    """ The cochain group `Ĉ^{rs}(H, I)` with its inclusion into the
    functions on `H̄^(r+s)`.

    For `s = 1` there are no relations and the inclusion is the identity.
    """
    return CochainGroup(H, I, r, s, limits=limits)
