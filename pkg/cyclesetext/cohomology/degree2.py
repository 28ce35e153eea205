""" Degree two: cocycles, coboundaries and extensions.

A pair `(β, f)` of tables on `H x H` is an element of `Ĉ^2 = Ĉ^{02} ⊕ Ĉ^{11}`
when both vanish at arguments equal to `0` and `β` is symmetric. Then

    d^2(β, f) = (∂_vβ, ∂_hβ + ∂_vf, ∂_hf + Dβ + Df)
    d^1(φ) = (∂_vφ, ∂_hφ + Dφ)
"""
from __future__ import absolute_import, division

import itertools

import numpy as np

from .. import logging
from ..abelian import FiniteAbelianGroup, GroupHom, hom_kernel, preimage
from ..common import HypothesisError, NotACochainError, check_guard
from ..extension import (ExtensionData, cocycle_report,
                         enumerate_cocycle_data, equivalence_classes)
from ..lcs import trivial_lcs
from ..report import CheckReport
from .complex import TotalComplex
from .differentials import Bicomplex

__all__ = [
    'is_2cocycle', 'is_2coboundary', 'coboundary_d1', 'ext_vs_h2_report'
]


def _as_lcs(I):
    return I if hasattr(I, 'dot_table') else trivial_lcs(I)


def _add(group, *elements):
    total = group.zero()
    for x in elements:
        total = group.add(total, x)
    return total


def _pair_vectors(bc, beta, f):
    """ Ambient elements of `β` in `Ĉ^{02}` and `f` in `Ĉ^{11}`.

    # Raises
        NotACochainError: if `(β, f)` is not in `Ĉ^2`.
    """
    C02, C11 = bc.cochains(0, 2), bc.cochains(1, 1)
    beta_values = C02.restrict(beta)
    if not C02.contains(beta_values):
        raise NotACochainError('β is not symmetric on nonzero arguments')
    return C02.vector(beta_values), C11.vector(C11.restrict(f))


def _d2_vanishes(bc, beta, f):
    b, x = _pair_vectors(bc, beta, f)
    parts = [
        bc.ambient('v', 0, 2)(b),
        _add(bc.cochains(1, 2).ambient,
             bc.ambient('h', 0, 2)(b), bc.ambient('v', 1, 1)(x)),
        _add(bc.cochains(2, 1).ambient,
             bc.ambient('h', 1, 1)(x), bc.ambient('D', 0, 2)(b),
             bc.ambient('D', 1, 1)(x)),
    ]
    return not any(any(part) for part in parts)


def is_2cocycle(H, I, diamond, yleft, beta, f, limits=None):
    """ Whether `(β, f)` is a 2-cocycle of the total complex.

    The matrix verdict `d^2(β, f) = 0` is compared with the direct evaluation
    of (2.2), (3.4) and (3.16) on the tables.

    # Arguments
        H: LinearCycleSet.
        I: FiniteAbelianGroup or LinearCycleSet.
        diamond: Integer array (|H| x |I|) or `None` for the trivial action.
        yleft: Integer array (|I| x |H|) or `None` for `⊲ = 0`.
        beta: Integer array (|H| x |H|).
        f: Integer array (|H| x |H|).
        limits: SizeLimits.

    # Returns
        Boolean.

    # Raises
        NotACochainError: if `(β, f)` is not in `Ĉ^2`.
        RuntimeError: if both verdicts disagree.
    """
    bc = Bicomplex(H, I, diamond, yleft, limits=limits)
    verdict = _d2_vanishes(bc, beta, f)
    data = ExtensionData(_as_lcs(I), H, beta, f, bc.diamond, bc.yleft,
                         validate=False)
    report = cocycle_report(data)
    if verdict != report.passed:
        raise RuntimeError(
            'd^2 verdict {} disagrees with the cocycle conditions: {}'.format(
                verdict, report.first_failure()))
    return verdict


def _d1_hom(bc):
    """ `d^1` between ambient groups, `I^{H̄} -> I^{H̄^2} ⊕ I^{H̄^2}`. """
    C01, C02, C11 = bc.cochains(0, 1), bc.cochains(0, 2), bc.cochains(1, 1)
    top = bc.ambient('v', 0, 1).matrix
    bottom = bc.ambient('h', 0, 1).add(bc.ambient('D', 0, 1)).matrix
    codomain = FiniteAbelianGroup(C02.ambient.cyclic_orders +
                                  C11.ambient.cyclic_orders)
    return GroupHom(C01.ambient, codomain, np.vstack([top, bottom]),
                    check=False)


def _d1_tables(bc, phi_values):
    C01, C02, C11 = bc.cochains(0, 1), bc.cochains(0, 2), bc.cochains(1, 1)
    image = _d1_hom(bc)(C01.vector(phi_values))
    split = C02.ambient.rank
    beta = C02.table(C02.to_values(image[:split]))
    f = C11.table(C11.to_values(image[split:]))
    return beta, f


def _phi_values(bc, phi):
    C01 = bc.cochains(0, 1)
    phi = np.asarray(phi, dtype=np.int64)
    if phi.shape != (bc.H.order,):
        raise ValueError('phi must have {} entries, got shape {}'.format(
            bc.H.order, phi.shape))
    return C01.restrict(phi)


def coboundary_d1(H, I, diamond, yleft, phi, limits=None):
    """ Tables `(β, f)` of `d^1φ = (∂_vφ, ∂_hφ + Dφ)`.

    # Arguments
        phi: Integer sequence of length |H| with `phi[0] = 0`.

    # Returns
        tuple: Two integer arrays (|H| x |H|).

    # Raises
        NotACochainError: if `phi[0] != 0`.
    """
    bc = Bicomplex(H, I, diamond, yleft, limits=limits)
    return _d1_tables(bc, _phi_values(bc, phi))


def is_2coboundary(H, I, diamond, yleft, beta, f, limits=None):
    """ A cochain `φ` with `d^1φ = (β, f)`, if there is one.

    # Returns
        Integer array of length |H| with `φ[0] = 0`, the least solution in
            index order, or `None` if `(β, f)` is not a coboundary.

    # Raises
        NotACochainError: if `(β, f)` is not a 2-cocycle.
    """
    if not is_2cocycle(H, I, diamond, yleft, beta, f, limits=limits):
        raise NotACochainError('(β, f) is not a 2-cocycle')
    bc = Bicomplex(H, I, diamond, yleft, limits=limits)
    b, x = _pair_vectors(bc, beta, f)
    solution = preimage(_d1_hom(bc), b + x, limits=bc.limits)
    if solution is None:
        return None
    C01 = bc.cochains(0, 1)
    phi = np.zeros(H.order, dtype=np.int64)
    phi[1:] = C01.to_values(solution)
    return phi


def _coboundary_keys(bc):
    C01 = bc.cochains(0, 1)
    nI = bc.values.order
    check_guard(bc.limits, 'max_search', nI**C01.size)
    keys = set()
    for values in itertools.product(range(nI), repeat=C01.size):
        beta, f = _d1_tables(bc, values)
        keys.add(tuple(beta.ravel()) + tuple(f.ravel()))
    return keys


def ext_vs_h2_report(H, I, diamond, yleft, limits=None):
    """ Compares the second cohomology group with the classification of
    extensions.

    Both sides are computed independently: `|H^2|` and `|Z^2|` from the
    total complex, the equivalence classes and the cocycle pairs by the
    search of the extension module. Two pairs must be equivalent exactly
    when their difference is a coboundary.

    # Arguments
        H: LinearCycleSet.
        I: LinearCycleSet or FiniteAbelianGroup. Must be trivial.
        diamond: Integer array (|H| x |I|) or `None` for the trivial action.
        yleft: Integer array (|I| x |H|) or `None` for `⊲ = 0`.
        limits: SizeLimits.

    # Returns
        CheckReport: Entries `class count`, `cocycle count` and
            `coboundary classes`.

    # Raises
        HypothesisError: if `I` is not trivial.
        SizeGuardError: if a guard is exceeded.
    """
    I = _as_lcs(I)
    if not I.is_trivial():
        raise HypothesisError('I is trivial',
                              message='The ideal I is not a trivial linear '
                                      'cycle set')
    complex_ = TotalComplex(H, I, diamond, yleft, N=3, limits=limits)
    bc = complex_.bicomplex
    order = int(np.prod(complex_.cohomology(2), dtype=object))
    cocycle_order = hom_kernel(complex_.differential(2))[0].order

    candidates = enumerate_cocycle_data(I, H, bc.diamond, bc.yleft,
                                        limits=limits)
    classes = equivalence_classes(candidates, limits=limits)
    report = CheckReport('extensions vs cohomology')
    report.add('class count', '|H^2| = |Ext|',
               None if order == len(classes) else (order, len(classes)))
    report.add('cocycle count', '|ker d^2| = number of cocycle pairs',
               None if cocycle_order == len(candidates) else
               (cocycle_order, len(candidates)))

    label = {}
    for c, members in enumerate(classes):
        for data in members:
            label[data.key()] = c
    coboundaries = _coboundary_keys(bc)
    PI, NI = I.group.add_table, I.group.neg_table
    witness = None
    for (i, a), (j, b) in itertools.combinations(enumerate(candidates), 2):
        diff = tuple(PI[a.beta, NI[b.beta]].ravel()) + \
            tuple(PI[a.f, NI[b.f]].ravel())
        same = label[a.key()] == label[b.key()]
        if same != (diff in coboundaries):
            witness = (i, j)
            break
    report.add('coboundary classes',
               'equivalent <=> difference is a coboundary', witness)
    logging.verbose('|H^2| = {}, {} equivalence classes'.format(
        order, len(classes)), 0)
    logging.log_report(report)
    return report
