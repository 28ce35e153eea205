""" Cocycle data of an extension and the linear cycle set it builds on
`I x H`.

Elements of `I x H` are encoded as `y * |H| + h`, so that the pair `(y, h)`
is `y + w_h` with `w_h = (0, h)` and index `0` is the neutral element.
"""
from __future__ import absolute_import, division

import numpy as np

from ..abelian import TableGroup
from ..common import InvalidActionError
from ..lcs import LinearCycleSet
from ..report import CheckReport

__all__ = [
    'ExtensionData', 'ProductExtension', 'build_product_extension',
    'twist_by_cochain', 'trivial_data', 'invariant_report', 'ACTION_LAWS'
]


def _first(mask):
    positions = np.argwhere(mask)
    if not len(positions):
        return None
    return tuple(int(v) for v in positions[0])


def _table(table, shape, bound, name):
    table = np.asarray(table, dtype=np.int64)
    if table.shape != shape:
        raise ValueError('{} must have shape {}, got {}'.format(
            name, shape, table.shape))
    if table.size and (table.min() < 0 or table.max() >= bound):
        raise ValueError('{} has entries out of range [0, {})'.format(
            name, bound))
    return table


def invariant_report(data):
    """ Checks the standing assumptions on a set of cocycle data.

    They are the abelian cocycle conditions on `beta`, the elementary
    properties of `◆`, `⊲` and `f`, and the bijectivity of every map
    `y -> h◆y`.

    # Arguments
        data: ExtensionData.

    # Returns
        CheckReport: One entry per condition.
    """
    PI, PH = data.I.group.add_table, data.H.group.add_table
    beta, f, dia, yl = data.beta, data.f, data.diamond, data.yleft
    nI = data.I.order
    report = CheckReport('extension data')

    left = PI[beta[:, :, None], beta[PH][:, :, :]]
    right = PI[beta[None, :, :], beta[:, PH]]
    report.add('(2.2)', "β(h,h')+β(h+h',h'') = β(h',h'')+β(h,h'+h'')",
               _first(left != right))
    zero_rows = np.concatenate([beta[:, 0], beta[0, :]])
    report.add('(2.3)', 'β(h,0) = β(0,h) = 0',
               None if not zero_rows.any() else
               (int(np.flatnonzero(zero_rows)[0]) % data.H.order,))
    report.add('symmetry', "β(h,h') = β(h',h)", _first(beta != beta.T))

    additive = dia[:, PI] != PI[dia[:, :, None], dia[:, None, :]]
    report.add('(1)', "h◆(y+y') = h◆y + h◆y'", _first(additive))
    report.add('(2)', '0◆y = y', _first(dia[0] != np.arange(nI)))
    report.add('(3)', '0⊲h = 0', _first(yl[0] != 0))
    report.add('(4)', 'y⊲0 = 0', _first(yl[:, 0] != 0))
    normal = np.concatenate([f[:, 0], f[0, :]])
    report.add('(5)', 'f(h,0) = f(0,h) = 0',
               None if not normal.any() else
               (int(np.flatnonzero(normal)[0]) % data.H.order,))
    bad = [h for h in range(data.H.order) if len(np.unique(dia[h])) != nI]
    report.add('bijectivity', 'y -> h◆y is a permutation of I',
               (bad[0],) if bad else None)
    return report


ACTION_LAWS = ('(1)', '(2)', '(3)', '(4)', 'bijectivity')


class ExtensionData(object):
    """ The maps `β`, `f`, `◆` and `⊲` that determine a product extension.

    # Arguments
        I: LinearCycleSet. The ideal.
        H: LinearCycleSet. The quotient.
        beta: Integer array (|H| x |H|) with values in `I`.
        f: Integer array (|H| x |H|) with values in `I`.
        diamond: Integer array (|H| x |I|), `diamond[h, y]` is `h◆y`.
        yleft: Integer array (|I| x |H|), `yleft[y, h]` is `y⊲h`.
        validate: Boolean. Check the standing assumptions of
            `invariant_report`. Candidate data that may violate them are
            built with `validate=False`.

    # Raises
        ValueError: if a table is malformed or, when validating, `beta` or
            `f` violate their normalization or cocycle conditions.
        InvalidActionError: if, when validating, `◆` or `⊲` violate one of
            their elementary laws.
    """

    def __init__(self, I, H, beta, f, diamond, yleft, validate=True):
        nI, nH = I.order, H.order
        self.I = I
        self.H = H
        self.beta = _table(beta, (nH, nH), nI, 'beta')
        self.f = _table(f, (nH, nH), nI, 'f')
        self.diamond = _table(diamond, (nH, nI), nI, 'diamond')
        self.yleft = _table(yleft, (nI, nH), nI, 'yleft')
        if validate:
            failure = invariant_report(self).first_failure()
            if failure is not None:
                if failure.name in ACTION_LAWS:
                    raise InvalidActionError(failure.formula, failure.witness)
                raise ValueError(
                    'Invalid extension data: {} fails at {}'.format(
                        failure.formula, failure.witness))

    def replace(self, validate=False, **tables):
        """ Copy with some of the tables replaced. """
        fields = dict(beta=self.beta, f=self.f, diamond=self.diamond,
                      yleft=self.yleft)
        fields.update(tables)
        return ExtensionData(self.I, self.H, validate=validate, **fields)

    def same_actions(self, other):
        return (np.array_equal(self.diamond, other.diamond) and
                np.array_equal(self.yleft, other.yleft))

    def key(self):
        """ Table-lexicographic sort key of `(β, f)`. """
        return tuple(self.beta.ravel()) + tuple(self.f.ravel())

    def __eq__(self, other):
        return (isinstance(other, ExtensionData) and self.I == other.I and
                self.H == other.H and
                np.array_equal(self.beta, other.beta) and
                np.array_equal(self.f, other.f) and self.same_actions(other))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'ExtensionData(|I|={}, |H|={})'.format(self.I.order,
                                                      self.H.order)


def trivial_data(I, H):
    """ Data of the direct product: `β = f = 0`, `◆` trivial and `⊲ = 0`. """
    nI, nH = I.order, H.order
    zeros = np.zeros((nH, nH), dtype=np.int64)
    return ExtensionData(
        I, H, zeros, zeros,
        np.tile(np.arange(nI, dtype=np.int64), (nH, 1)),
        np.zeros((nI, nH), dtype=np.int64))


class ProductExtension(object):
    """ The sequence `0 -> I -> I x H -> H -> 0` built from cocycle data.

    Construction never fails: whether `B` is a linear cycle set and `iota`,
    `pi` are morphisms is decided by the checkers.

    # Attributes
        data: ExtensionData.
        B: LinearCycleSet (unvalidated) on the indices of `I x H`.
        iota: Integer array, `iota[y]` the index of `(y, 0)`.
        pi: Integer array, `pi[b]` the `H` component of `b`.
        section: Integer array, `section[h]` the index of `w_h`.
    """

    def __init__(self, data):
        self.data = data
        nI, nH = data.I.order, data.H.order
        self.B = LinearCycleSet(
            TableGroup(_sum_table(data), validate=False), _dot_table(data),
            validate=False)
        self.iota = np.arange(nI, dtype=np.int64) * nH
        self.pi = np.arange(nI * nH, dtype=np.int64) % nH
        self.section = np.arange(nH, dtype=np.int64)

    @property
    def order(self):
        return self.B.order

    def index(self, y, h):
        return int(y) * self.data.H.order + int(h)

    def split(self, b):
        """ Returns `(y, h)` with `b = y + w_h`. """
        return divmod(int(b), self.data.H.order)

    def __repr__(self):
        return 'ProductExtension(order={})'.format(self.order)


def _sum_table(data):
    # (y + w_h) + (y' + w_h') = y + y' + β(h,h') + w_{h+h'}
    nI, nH = data.I.order, data.H.order
    PI, PH = data.I.group.add_table, data.H.group.add_table
    y = np.arange(nI)[:, None, None, None]
    h = np.arange(nH)[None, :, None, None]
    y2 = np.arange(nI)[None, None, :, None]
    h2 = np.arange(nH)[None, None, None, :]
    ys = PI[PI[y, y2], data.beta[h, h2]]
    table = ys * nH + PH[h, h2]
    return table.reshape(nI * nH, nI * nH)


def _dot_table(data):
    # (y + w_h)·(y' + w_h') =
    #     (h◆y)·(h◆y') + (h◆y)·f(h,h') + (h◆y)⊲(h·h') + w_{h·h'}
    nI, nH = data.I.order, data.H.order
    PI, DI = data.I.group.add_table, data.I.dot_table
    DH = data.H.dot_table
    y = np.arange(nI)[:, None, None, None]
    h = np.arange(nH)[None, :, None, None]
    y2 = np.arange(nI)[None, None, :, None]
    h2 = np.arange(nH)[None, None, None, :]
    u = data.diamond[h, y]
    u2 = data.diamond[h, y2]
    hh = DH[h, h2]
    ys = PI[PI[DI[u, u2], DI[u, data.f[h, h2]]], data.yleft[u, hh]]
    table = ys * nH + hh
    return table.reshape(nI * nH, nI * nH)


def build_product_extension(data):
    """ Builds the sum and `·` tables of `I x H` from cocycle data.

    # Arguments
        data: ExtensionData.

    # Returns
        ProductExtension: The tables together with `iota`, `pi` and the
            canonical section `h -> w_h`. They form an extension of linear
            cycle sets exactly when `check_general(data)` passes.
    """
    return ProductExtension(data)


def twist_by_cochain(data, phi):
    """ Data of the extension transported along `y + w_h -> y + φ(h) + w_h`.

    Returns the data with `β' = β + ∂_vφ` and `f' = f + ∂_hφ + Dφ`, that is

        β'(h,h') = β(h,h') - φ(h) + φ(h+h') - φ(h')
        f'(h,h') = f(h,h') + φ(h·h') - h◆φ(h') - (h◆φ(h))⊲(h·h')

    When `φ` takes values in the center of `I` and satisfies
    `h◆φ(h) ∈ Soc(I)`, both extensions are equivalent through that map.

    # Arguments
        data: ExtensionData.
        phi: Integer sequence of length |H| with values in `I` and
            `phi[0] = 0`.

    # Returns
        ExtensionData: Unvalidated twisted data with the same actions.

    # Raises
        ValueError: if `phi` is malformed.
    """
    nH = data.H.order
    phi = _table(phi, (nH,), data.I.order, 'phi')
    if phi[0] != 0:
        raise ValueError('phi(0) must be 0, got {}'.format(phi[0]))
    PI, NI = data.I.group.add_table, data.I.group.neg_table
    PH, DH = data.H.group.add_table, data.H.dot_table
    h = np.arange(nH)[:, None]
    h2 = np.arange(nH)[None, :]
    dv = PI[PI[NI[phi[h]], phi[PH]], NI[phi[h2]]]
    beta = PI[data.beta, dv]
    own = data.diamond[np.arange(nH), phi]
    dh = PI[phi[DH], NI[data.diamond[h, phi[h2]]]]
    d = NI[data.yleft[own[:, None], DH]]
    f = PI[PI[data.f, dh], d]
    return data.replace(beta=beta, f=f)
