""" The total complex `(Ĉ^*, ∂_h + ∂_v + D)`, its verification and its
cohomology.
"""
from __future__ import absolute_import, division

import numpy as np

from .. import logging
from ..abelian import (FiniteAbelianGroup, GroupHom, hom_kernel,
                       subquotient_invariants)
from ..report import CheckReport
from .differentials import Bicomplex

__all__ = [
    'TotalComplex', 'total_complex', 'verify_double_complex',
    'verify_total_complex', 'verify_preserves_normalization', 'cohomology',
    'cohomology_order'
]


def _witness(hom, target):
    """ Bidegree and arguments of the first basis tuple of `target` where
    the image of some cochain under `hom` is nonzero.
    """
    image = target.inclusion.compose(hom)
    bad = np.argwhere(np.asarray(image.matrix != 0, dtype=bool))
    if not len(bad):
        return None
    t = int(bad[:, 0].min()) // target.values.rank
    return (target.r, target.s) + tuple(int(h) for h in target.tuples[t])


class TotalComplex(object):
    """ Total complex of the normalized double complex with the diagonal
    maps.

    Degree `n` is `Ĉ^n = ⊕_{r=0}^{n-1} Ĉ^{r,n-r}`, presented as the direct
    sum of the invariant factor forms of its blocks, block `r` first.

    # Arguments
        H: LinearCycleSet.
        I: FiniteAbelianGroup or LinearCycleSet. Group of values.
        diamond: Integer array (|H| x |I|) or `None` for the trivial action.
        yleft: Integer array (|I| x |H|) or `None` for `⊲ = 0`.
        N: Integer. Largest degree, `N >= 2`.
        limits: SizeLimits.

    # Raises
        ValueError: if `N < 2`.
        InvalidActionError: if the actions violate their elementary laws.
    """

    def __init__(self, H, I, diamond=None, yleft=None, N=2, limits=None):
        if N < 2:
            raise ValueError('Total complex needs N >= 2, got {}'.format(N))
        self.N = N
        self.bicomplex = Bicomplex(H, I, diamond, yleft, limits=limits)
        self._differentials = {}

    def _check_degree(self, n, top):
        if not 1 <= n <= top:
            raise ValueError('Degree {} out of range [1, {}]'.format(n, top))

    def blocks(self, n):
        """ The cochain groups `Ĉ^{r,n-r}`, `r = 0..n-1`. """
        self._check_degree(n, self.N)
        return [self.bicomplex.cochains(r, n - r) for r in range(n)]

    def offsets(self, n):
        ranks = [block.group.rank for block in self.blocks(n)]
        return list(np.cumsum([0] + ranks))

    def group(self, n):
        orders = []
        for block in self.blocks(n):
            orders.extend(block.group.cyclic_orders)
        return FiniteAbelianGroup(orders)

    def differential(self, n):
        """ GroupHom `d^n = ∂_h + ∂_v + D` from `Ĉ^n` to `Ĉ^{n+1}`. """
        self._check_degree(n, self.N - 1)
        if n not in self._differentials:
            bc = self.bicomplex
            source, target = self.offsets(n), self.offsets(n + 1)
            matrix = np.zeros((target[-1], source[-1]), dtype=object)
            for r in range(n):
                s = n - r
                parts = [(r + 1, bc.h(r, s)), (r, bc.v(r, s))]
                if bc.has_diagonal:
                    parts.append((n, bc.D(r, s)))
                for block, hom in parts:
                    matrix[target[block]:target[block + 1],
                           source[r]:source[r + 1]] += hom.matrix
            self._differentials[n] = GroupHom(self.group(n),
                                              self.group(n + 1), matrix,
                                              check=False)
        return self._differentials[n]

    def cohomology(self, n):
        """ Invariant factors of `ker d^n / im d^{n-1}`, `im d^0 = 0`. """
        self._check_degree(n, self.N - 1)
        _, kernel = hom_kernel(self.differential(n))
        image = self.differential(n - 1) if n > 1 else None
        factors = subquotient_invariants(self.group(n), kernel, image)
        logging.verbose('H^{} has invariant factors {}'.format(n, factors), 1)
        return [int(d) for d in factors]

    def composite_witness(self, n):
        """ Bidegree and arguments where `d^{n+1} o d^n` is nonzero, or
        `None`.
        """
        composite = self.differential(n + 1).compose(self.differential(n))
        offsets = self.offsets(n + 2)
        for r, block in enumerate(self.blocks(n + 2)):
            rows = composite.matrix[offsets[r]:offsets[r + 1], :]
            part = GroupHom(composite.domain, block.group, rows, check=False)
            witness = _witness(part, block)
            if witness is not None:
                return witness
        return None


def total_complex(H, I, diamond, yleft, N, limits=None):
    return TotalComplex(H, I, diamond, yleft, N=N, limits=limits)


def _double_complex_entries(report, bc, maxdeg):
    for n in range(1, maxdeg - 1):
        for r in range(n):
            s = n - r
            hh = bc.h(r + 1, s).compose(bc.h(r, s))
            report.add('∂h∘∂h ({},{})'.format(r, s), '∂_h∘∂_h = 0',
                       _witness(hh, bc.cochains(r + 2, s)))
            vv = bc.v(r, s + 1).compose(bc.v(r, s))
            report.add('∂v∘∂v ({},{})'.format(r, s), '∂_v∘∂_v = 0',
                       _witness(vv, bc.cochains(r, s + 2)))
            mixed = bc.v(r + 1, s).compose(bc.h(r, s)).add(
                bc.h(r, s + 1).compose(bc.v(r, s)))
            report.add('∂v∘∂h ({},{})'.format(r, s),
                       '∂_v∘∂_h + ∂_h∘∂_v = 0',
                       _witness(mixed, bc.cochains(r + 1, s + 1)))


def verify_double_complex(H, I, diamond, maxdeg, limits=None):
    """ Checks that `∂_h` and `∂_v` form a double complex.

    # Arguments
        H: LinearCycleSet.
        I: FiniteAbelianGroup or LinearCycleSet.
        diamond: Integer array (|H| x |I|) or `None` for the trivial action.
        maxdeg: Integer. Largest total degree of the target of a checked
            composition.
        limits: SizeLimits.

    # Returns
        CheckReport: One entry per identity and source bidegree, failing
            entries carry the target bidegree followed by the arguments.
    """
    bc = Bicomplex(H, I, diamond, limits=limits)
    report = CheckReport('double complex')
    _double_complex_entries(report, bc, maxdeg)
    logging.log_report(report)
    return report


def verify_total_complex(H, I, diamond, yleft, maxdeg, limits=None):
    """ Checks that `(∂ + D)^2 = 0` degree by degree, together with the
    identities it splits into.

    Besides the double complex identities, for every source bidegree
    `(r, s)` the report has `∂_v∘D = 0` and
    `(∂_h + D)∘D + D∘∂_h + D∘∂_v = 0`, and for every degree `n` the entry
    `d^{n+1}∘d^n = 0`.
    """
    complex_ = TotalComplex(H, I, diamond, yleft, N=max(maxdeg, 2),
                            limits=limits)
    bc = complex_.bicomplex
    report = CheckReport('total complex')
    _double_complex_entries(report, bc, maxdeg)
    for n in range(1, maxdeg - 1):
        for r in range(n):
            s = n - r
            vD = bc.v(n, 1).compose(bc.D(r, s))
            report.add('∂v∘D ({},{})'.format(r, s), '∂_v∘D = 0',
                       _witness(vD, bc.cochains(n, 2)))
            total = bc.h(n, 1).add(bc.D(n, 1)).compose(bc.D(r, s))
            total = total.add(bc.D(r + 1, s).compose(bc.h(r, s)))
            total = total.add(bc.D(r, s + 1).compose(bc.v(r, s)))
            report.add('D ({},{})'.format(r, s),
                       '(∂_h + D)∘D + D∘∂_h + D∘∂_v = 0',
                       _witness(total, bc.cochains(n + 1, 1)))
    for n in range(1, maxdeg - 1):
        report.add('d∘d {}'.format(n), 'd^{n+1}∘d^n = 0',
                   complex_.composite_witness(n))
    logging.log_report(report)
    return report


def verify_preserves_normalization(H, I, diamond, yleft, maxdeg,
                                   limits=None):
    """ Checks that the image of every generator of `Ĉ^{rs}` under `∂_h`,
    `∂_v` and `D` satisfies the shuffle relations of the target, for
    `r + s < maxdeg`.
    """
    bc = Bicomplex(H, I, diamond, yleft, limits=limits)
    report = CheckReport('normalization')
    for n in range(1, maxdeg):
        for r in range(n):
            for kind in ('h', 'v', 'D'):
                report.add('{} ({},{})'.format(kind, r, n - r),
                           'image of {} is shuffle normalized'.format(kind),
                           bc.violation(kind, r, n - r))
    logging.log_report(report)
    return report


def cohomology(H, I, diamond, yleft, n, limits=None):
    """ The cohomology group `H^n` of the total complex.

    # Arguments
        H: LinearCycleSet.
        I: FiniteAbelianGroup or LinearCycleSet.
        diamond: Integer array (|H| x |I|) or `None` for the trivial action.
        yleft: Integer array (|I| x |H|) or `None` for `⊲ = 0`.
        n: Integer. Degree, `n >= 1`.
        limits: SizeLimits.

    # Returns
        list: Invariant factors of `H^n`, the empty list for the trivial
            group.

    # Raises
        ValueError: if `n < 1`.
        SizeGuardError: if some cochain group has too many basis tuples.
    """
    if n < 1:
        raise ValueError('Cohomology degree must be at least 1, got {}'.format(
            n))
    return TotalComplex(H, I, diamond, yleft, N=n + 1,
                        limits=limits).cohomology(n)


def cohomology_order(H, I, diamond, yleft, n, limits=None):
    return int(np.prod(cohomology(H, I, diamond, yleft, n, limits=limits),
                       dtype=object))
