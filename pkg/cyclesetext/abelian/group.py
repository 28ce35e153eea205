from __future__ import absolute_import, division

import itertools

import numpy as np
from sympy import factorint

__all__ = [
    'AbstractGroup', 'FiniteAbelianGroup', 'TableGroup', 'group_from_orders',
    'add', 'neg', 'zero'
]


class AbstractGroup(object):
    """ Finite abelian group whose elements are the integers `0..order-1`.

    Index `0` is always the neutral element. Subclasses provide the addition
    table, everything else is derived from it.
    """

    @property
    def order(self):
        raise NotImplementedError('This is an abstract class')

    @property
    def add_table(self):
        raise NotImplementedError('This is an abstract class')

    @property
    def neg_table(self):
        if getattr(self, '_neg_table', None) is None:
            table = self.add_table
            # The neutral element is at index 0: -a is the column where a row
            # hits it.
            self._neg_table = np.argmin(table, axis=1)
        return self._neg_table

    def sum(self, a, b):
        return int(self.add_table[a, b])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg_table[b]])

    def is_subgroup(self, elements):
        """ Whether a set of element indices is a subgroup. """
        elements = set(int(e) for e in elements)
        if 0 not in elements:
            return False
        for a in elements:
            if int(self.neg_table[a]) not in elements:
                return False
            for b in elements:
                if int(self.add_table[a, b]) not in elements:
                    return False
        return True

    def generated_subgroup(self, generators):
        """ Returns the sorted list of indices of the subgroup generated. """
        elements = {0}
        frontier = [0]
        generators = [int(g) for g in generators]
        while frontier:
            a = frontier.pop()
            for g in generators:
                b = int(self.add_table[a, g])
                if b not in elements:
                    elements.add(b)
                    frontier.append(b)
        return sorted(elements)

    def generators(self):
        """ Greedy generating set: each element, in index order, that is not
        in the subgroup spanned by the previous ones.
        """
        gens, span = [], {0}
        for a in range(self.order):
            if a not in span:
                gens.append(a)
                span = set(self.generated_subgroup(gens))
        return gens

    def spanning_steps(self):
        """ Breadth-first construction of every element from `generators`.

        # Returns
            tuple: `(gens, steps)`. `steps` lists triples `(b, a, g)` with
                `b = a + g`, `g` a generator and `a` either `0`, a generator
                or an earlier `b`. Every element other than `0` and the
                generators appears exactly once as `b`.
        """
        gens = self.generators()
        seen = set([0] + gens)
        frontier = [0] + gens
        steps = []
        while frontier:
            a = frontier.pop(0)
            for g in gens:
                b = int(self.add_table[a, g])
                if b not in seen:
                    seen.add(b)
                    steps.append((b, a, g))
                    frontier.append(b)
        return gens, steps


class FiniteAbelianGroup(AbstractGroup):
    """ Direct sum of cyclic groups.

    Elements are coordinate tuples, one entry per cyclic factor reduced
    modulo its order. Element indices are the mixed-radix encoding of the
    coordinates with the last coordinate varying fastest.

    # Arguments
        cyclic_orders: List of Integers. Orders of the cyclic factors, all of
            them positive. They are kept as given, `invariant_factors`
            normalizes them.

    # Raises
        ValueError: if any order is smaller than 1.
    """

    def __init__(self, cyclic_orders):
        orders = tuple(int(n) for n in cyclic_orders)
        for n in orders:
            if n < 1:
                raise ValueError(
                    'Cyclic orders must be positive, got {}'.format(orders))
        self.cyclic_orders = orders
        self._order = int(np.prod(orders, dtype=object)) if orders else 1
        strides = [1] * len(orders)
        for i in range(len(orders) - 2, -1, -1):
            strides[i] = strides[i + 1] * orders[i + 1]
        self.strides = tuple(strides)
        self._add_table = None
        self._neg_table = None
        self._coordinates = None

    @property
    def order(self):
        return self._order

    @property
    def rank(self):
        return len(self.cyclic_orders)

    def __eq__(self, other):
        return (isinstance(other, FiniteAbelianGroup) and
                self.cyclic_orders == other.cyclic_orders)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.cyclic_orders)

    def __repr__(self):
        return 'FiniteAbelianGroup({})'.format(list(self.cyclic_orders))

    def element(self, coordinates):
        """ Validates and reduces a coordinate vector.

        # Raises
            ValueError: if the number of coordinates does not match the number
                of cyclic factors.
        """
        coordinates = tuple(int(c) for c in coordinates)
        if len(coordinates) != self.rank:
            raise ValueError(
                'Element {} has {} coordinates, group {} needs {}'.format(
                    coordinates, len(coordinates), self, self.rank))
        return tuple(c % n for c, n in zip(coordinates, self.cyclic_orders))

    def index(self, coordinates):
        x = self.element(coordinates)
        return sum(c * s for c, s in zip(x, self.strides))

    def from_index(self, index):
        index = int(index)
        if not 0 <= index < self.order:
            raise ValueError('Index {} out of range for {}'.format(
                index, self))
        return tuple((index // s) % n
                     for s, n in zip(self.strides, self.cyclic_orders))

    def elements(self):
        """ Iterates over all elements in index order. """
        return itertools.product(*[range(n) for n in self.cyclic_orders])

    def zero(self):
        return (0,) * self.rank

    def add(self, x, y):
        x, y = self.element(x), self.element(y)
        return tuple(
            (a + b) % n for a, b, n in zip(x, y, self.cyclic_orders))

    def neg(self, x):
        x = self.element(x)
        return tuple((-a) % n for a, n in zip(x, self.cyclic_orders))

    def scale(self, k, x):
        x = self.element(x)
        return tuple((k * a) % n for a, n in zip(x, self.cyclic_orders))

    @property
    def coordinates(self):
        """ Array of shape (order x rank) with the coordinates of every index.
        """
        if self._coordinates is None:
            idx = np.arange(self.order, dtype=np.int64)[:, None]
            strides = np.asarray(self.strides, dtype=np.int64)[None, :]
            orders = np.asarray(self.cyclic_orders, dtype=np.int64)[None, :]
            self._coordinates = (idx // strides) % orders if self.rank else \
                np.zeros((self.order, 0), dtype=np.int64)
        return self._coordinates

    def indices_of(self, coordinates):
        """ Vectorized mixed-radix encoding of an array of coordinates. """
        coordinates = np.asarray(coordinates, dtype=np.int64)
        orders = np.asarray(self.cyclic_orders, dtype=np.int64)
        strides = np.asarray(self.strides, dtype=np.int64)
        return (coordinates % orders).dot(strides) if self.rank else \
            np.zeros(coordinates.shape[:-1], dtype=np.int64)

    @property
    def add_table(self):
        if self._add_table is None:
            coords = self.coordinates
            total = coords[:, None, :] + coords[None, :, :]
            self._add_table = self.indices_of(total)
        return self._add_table

    @property
    def neg_table(self):
        if self._neg_table is None:
            self._neg_table = self.indices_of(-self.coordinates)
        return self._neg_table

    def invariant_factors(self):
        """ Invariant factors d_1 | d_2 | ... of the group, trivial ones
        omitted.
        """
        from .snf import smith_normal_form
        diagonal = np.diag(np.asarray(self.cyclic_orders, dtype=object)) \
            if self.rank else np.zeros((0, 0), dtype=object)
        S, _, _ = smith_normal_form(diagonal)
        return [int(d) for d in np.diagonal(S) if d > 1]

    def elementary_divisors(self):
        """ Prime power orders of the primary decomposition, sorted. """
        divisors = []
        for d in self.cyclic_orders:
            for p, e in factorint(d).items():
                divisors.append(p**e)
        return sorted(divisors)


class TableGroup(AbstractGroup):
    """ Abelian group given by its addition table.

    Used for additive structures that are not presented as a direct sum of
    cyclic groups, like the twisted sum of a product extension.

    # Arguments
        add_table: Integer array of shape (n x n). `add_table[a, b]` is the
            index of `a + b`. Index 0 must be the neutral element.
        validate: Boolean. Check the abelian group axioms exhaustively.

    # Raises
        ValueError: if the table is malformed or, when validating, not an
            abelian group with neutral element 0.
    """

    def __init__(self, add_table, validate=True):
        table = np.asarray(add_table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or \
                table.shape[0] == 0:
            raise ValueError('Addition table must be a non-empty square '
                             'table, got shape {}'.format(table.shape))
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise ValueError('Addition table entries out of range')
        self._table = table
        self._neg_table = None
        if validate:
            violation = self.find_violation()
            if violation is not None:
                raise ValueError('Not an abelian group: {} fails at {}'.format(
                    *violation))

    @property
    def order(self):
        return self._table.shape[0]

    @property
    def add_table(self):
        return self._table

    def find_violation(self):
        """ First failing abelian group axiom as (name, witness) or `None`. """
        t = self._table
        n = self.order
        rng = np.arange(n)
        if not (np.array_equal(t[0], rng) and np.array_equal(t[:, 0], rng)):
            return 'identity', (0,)
        if not np.array_equal(t, t.T):
            a, b = np.argwhere(t != t.T)[0]
            return 'commutativity', (int(a), int(b))
        for a in range(n):
            if not np.any(t[a] == 0):
                return 'inverse', (a,)
        # (a + b) + c against a + (b + c) for all triples at once.
        left = t[t, :]
        right = t[:, t]
        if not np.array_equal(left, right):
            a, b, c = np.argwhere(left != right)[0]
            return 'associativity', (int(a), int(b), int(c))
        return None


def group_from_orders(orders):
    """ Direct sum of cyclic groups of the given orders.

    # Arguments
        orders: List of Integers. Orders of the cyclic factors.

    # Returns
        FiniteAbelianGroup: The group, with `prod(orders)` elements.

    # Raises
        ValueError: if any order is zero or negative.
    """
    return FiniteAbelianGroup(orders)


def add(G, x, y):
    return G.add(x, y)


def neg(G, x):
    return G.neg(x)


def zero(G):
    return G.zero()
