""" Horizontal and vertical differentials and the diagonal maps `D`.

For a cochain `f` of bidegree `(r, s)` and `m = r + s`:

    ∂_h f(h_1..h_{m+1}) = f(h_1·h_2, ..., h_1·h_{m+1})
        + Σ_{j=1..r} (-1)^j f(.., h_j + h_{j+1}, ..)
        + (-1)^{r+1} R_{r1}(h_1..h_{r+1})◆f(h_1..h_r, h_{r+2}..h_{m+1})

    ∂_v f = (-1)^{r+1} δf, δ the bar differential on the last s+1 slots

    D f(h_1..h_{m+1}) = (-1)^{r+1} (R_{rs}(h_1..h_m)◆f(h_1..h_m))⊲R_{m1}

with `R_{rs}(h_1..h_m) = (h_1+..+h_r)·(h_{r+1}+..+h_m)`. Any argument list
containing `0` contributes nothing.
"""
from __future__ import absolute_import, division

import numpy as np

from .. import logging
from ..abelian import GroupHom, factor_through
from ..common import InvalidActionError, resolve_limits
from ..extension import ExtensionData, invariant_report
from ..lcs import trivial_lcs
from .cochains import CochainGroup, TermMatrix, tuple_index, value_group

__all__ = ['Bicomplex', 'diff_h', 'diff_v', 'diff_D']

_ELEMENTARY_LAWS = ('(1)', '(2)', '(3)', '(4)')


def _first(mask):
    positions = np.argwhere(mask)
    if not len(positions):
        return None
    return tuple(int(v) for v in positions[0])


def _running_sum(PH, columns):
    """ Sum in `H` of the given columns, `0` for no columns. """
    total = np.zeros(columns.shape[0], dtype=np.int64)
    for c in range(columns.shape[1]):
        total = PH[total, columns[:, c]]
    return total


def action_tables(H, I, diamond=None, yleft=None):
    """ Validated tables of `◆` and `⊲` for the differentials.

    # Arguments
        H: LinearCycleSet.
        I: FiniteAbelianGroup or LinearCycleSet.
        diamond: Integer array (|H| x |I|), `None` for the trivial action.
        yleft: Integer array (|I| x |H|), `None` for `⊲ = 0`.

    # Returns
        tuple: `(diamond, yleft)` as integer arrays.

    # Raises
        ValueError: if a table is malformed.
        InvalidActionError: if `y -> h◆y` or `y -> y⊲h` is not additive, or
            `0◆y = y`, `0⊲h = 0`, `y⊲0 = 0` fail.
    """
    values = value_group(I)
    nI, nH = values.order, H.order
    if diamond is None:
        diamond = np.tile(np.arange(nI, dtype=np.int64), (nH, 1))
    if yleft is None:
        yleft = np.zeros((nI, nH), dtype=np.int64)
    zeros = np.zeros((nH, nH), dtype=np.int64)
    data = ExtensionData(trivial_lcs(values), H, zeros, zeros, diamond, yleft,
                         validate=False)
    report = invariant_report(data)
    for name in _ELEMENTARY_LAWS:
        if not report[name].passed:
            raise InvalidActionError(report[name].formula,
                                     report[name].witness)
    PI, yl = values.add_table, data.yleft
    bad = _first(yl[PI] != PI[yl[:, None, :], yl[None, :, :]])
    if bad is not None:
        raise InvalidActionError("(y+y')⊲h = y⊲h + y'⊲h", bad)
    return data.diamond, data.yleft


class Bicomplex(object):
    """ Cochain groups, differentials and diagonal maps of the normalized
    double complex, built on demand and cached.

    Maps come in two flavours: `ambient_*` maps act on all functions on the
    basis tuples and `h`, `v`, `D` are their corestrictions to the cochain
    groups.

    # Arguments
        H: LinearCycleSet.
        I: FiniteAbelianGroup or LinearCycleSet. Group of values.
        diamond: Integer array (|H| x |I|) or `None` for the trivial action.
        yleft: Integer array (|I| x |H|) or `None` for `⊲ = 0`.
        limits: SizeLimits.

    # Raises
        InvalidActionError: see `action_tables`.
    """

    def __init__(self, H, I, diamond=None, yleft=None, limits=None):
        self.H = H
        self.values = value_group(I)
        self.diamond, self.yleft = action_tables(H, I, diamond, yleft)
        self.limits = resolve_limits(limits)
        self._groups = {}
        self._ambient = {}
        self._maps = {}

    @property
    def has_diagonal(self):
        return bool(self.yleft.any())

    def cochains(self, r, s):
        key = (r, s)
        if key not in self._groups:
            self._groups[key] = CochainGroup(self.H, self.values, r, s,
                                             limits=self.limits)
        return self._groups[key]

    @staticmethod
    def target(kind, r, s):
        """ Bidegree reached from `(r, s)` by `'h'`, `'v'` or `'D'`. """
        return {'h': (r + 1, s), 'v': (r, s + 1), 'D': (r + s, 1)}[kind]

    def ambient(self, kind, r, s):
        """ GroupHom between the ambient groups of `(r, s)` and its target.
        """
        key = (kind, r, s)
        if key not in self._ambient:
            source = self.cochains(r, s)
            target = self.cochains(*self.target(kind, r, s))
            terms = TermMatrix(self.values, source.size, target.size)
            build = {'h': self._add_h, 'v': self._add_v, 'D': self._add_D}
            build[kind](terms, target.tuples, r, s)
            self._ambient[key] = terms.hom(source.ambient, target.ambient)
            logging.verbose('Assembled {} on ({},{}): {}x{} matrix'.format(
                kind, r, s, *terms.matrix.shape), 2)
        return self._ambient[key]

    def _add_h(self, terms, X, r, s):
        nH = self.H.order
        PH, DH = self.H.group.add_table, self.H.dot_table
        target = np.arange(len(X))
        terms.add(target, tuple_index(nH, DH[X[:, :1], X[:, 1:]]), 1)
        for j in range(1, r + 1):
            merged = PH[X[:, j - 1], X[:, j]][:, None]
            args = np.hstack([X[:, :j - 1], merged, X[:, j + 1:]])
            terms.add(target, tuple_index(nH, args), (-1)**j)
        R = DH[_running_sum(PH, X[:, :r]), X[:, r]]
        args = np.hstack([X[:, :r], X[:, r + 1:]])
        terms.add(target, tuple_index(nH, args), (-1)**(r + 1),
                  self.diamond[R])

    def _add_v(self, terms, X, r, s):
        nH = self.H.order
        PH = self.H.group.add_table
        target = np.arange(len(X))
        sign = (-1)**(r + 1)
        terms.add(target, tuple_index(nH, np.hstack([X[:, :r], X[:, r + 1:]])),
                  sign)
        for i in range(1, s + 1):
            p = r + i - 1
            merged = PH[X[:, p], X[:, p + 1]][:, None]
            args = np.hstack([X[:, :p], merged, X[:, p + 2:]])
            terms.add(target, tuple_index(nH, args), sign * (-1)**i)
        terms.add(target, tuple_index(nH, X[:, :r + s]),
                  sign * (-1)**(s + 1))

    def _add_D(self, terms, X, r, s):
        if not self.has_diagonal:
            return
        nH, m = self.H.order, r + s
        PH, DH = self.H.group.add_table, self.H.dot_table
        R = DH[_running_sum(PH, X[:, :r]), _running_sum(PH, X[:, r:m])]
        R_last = DH[_running_sum(PH, X[:, :m]), X[:, m]]
        # E(y) = (R◆y)⊲R_last
        tables = self.yleft[self.diamond[R], R_last[:, None]]
        terms.add(np.arange(len(X)), tuple_index(nH, X[:, :m]),
                  (-1)**(r + 1), tables)

    def violation(self, kind, r, s):
        """ First generator of `Ĉ^{rs}` whose image leaves the target's
        shuffle subgroup, as a 1-tuple, or `None`.
        """
        source = self.cochains(r, s)
        target = self.cochains(*self.target(kind, r, s))
        if target.relations is None:
            return None
        image = target.relations.compose(
            self.ambient(kind, r, s).compose(source.inclusion))
        bad = np.argwhere(np.asarray(image.matrix != 0, dtype=bool))
        return (int(bad[:, 1].min()),) if len(bad) else None

    def map(self, kind, r, s):
        """ GroupHom `Ĉ^{rs} -> Ĉ^{target}` of `'h'`, `'v'` or `'D'`.

        # Raises
            RuntimeError: if the map does not preserve the shuffle relations.
        """
        key = (kind, r, s)
        if key not in self._maps:
            source = self.cochains(r, s)
            target = self.cochains(*self.target(kind, r, s))
            image = self.ambient(kind, r, s).compose(source.inclusion)
            try:
                self._maps[key] = factor_through(target.inclusion, image)
            except ValueError as e:
                raise RuntimeError(
                    'Map {} on ({},{}) leaves the normalized cochains: {}'.
                    format(kind, r, s, e))
        return self._maps[key]

    def h(self, r, s):
        return self.map('h', r, s)

    def v(self, r, s):
        return self.map('v', r, s)

    def D(self, r, s):
        return self.map('D', r, s)


def diff_h(H, I, diamond, r, s, limits=None):
    """ Horizontal differential `Ĉ^{rs} -> Ĉ^{r+1,s}`.

    # Arguments
        H: LinearCycleSet.
        I: FiniteAbelianGroup or LinearCycleSet.
        diamond: Integer array (|H| x |I|) or `None` for the trivial action.
        r, s: Integers. Bidegree of the source.
        limits: SizeLimits.

    # Returns
        GroupHom: The differential between the cochain groups.
    """
    return Bicomplex(H, I, diamond, limits=limits).h(r, s)


def diff_v(H, I, r, s, limits=None):
    """ Vertical differential `Ĉ^{rs} -> Ĉ^{r,s+1}`. """
    return Bicomplex(H, I, limits=limits).v(r, s)


def diff_D(H, I, diamond, yleft, r, s, limits=None):
    """ Diagonal map `Ĉ^{rs} -> Ĉ^{r+s,1}`, zero when `⊲ = 0`. """
    return Bicomplex(H, I, diamond, yleft, limits=limits).D(r, s)
