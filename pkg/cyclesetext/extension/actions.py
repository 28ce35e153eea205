""" Pairs of actions `(◆, ⊲)` that admit extensions by a trivial ideal.

With `I` trivial every `y -> h◆y` is an automorphism of `(I, +)` and
`h -> (y -> h◆y)` reverses the brace product of `H`, while `⊲` is additive in
both arguments. The search therefore runs over automorphisms attached to
multiplicative generators of `H` and endomorphisms attached to additive
generators, and keeps the pairs satisfying every fixed action law.
"""
from __future__ import absolute_import, division

import itertools

import numpy as np

from .. import logging
from ..abelian import all_homs, automorphisms, hom_table
from ..common import HypothesisError, check_guard, resolve_limits
from ..lcs import lcs_to_brace
from ..report import CheckReport
from .checks import action_report, check_trivial_ideal
from .data import ACTION_LAWS, ExtensionData, invariant_report

__all__ = ['fixed_action_report', 'admissible_actions']


def fixed_action_report(I, H, diamond, yleft):
    """ Every law on `◆` and `⊲` alone that an extension by a trivial `I`
    must satisfy.

    # Arguments
        I, H: LinearCycleSet. `I` must be trivial.
        diamond: Integer array (|H| x |I|).
        yleft: Integer array (|I| x |H|).

    # Returns
        CheckReport: elementary laws, bijectivity, (4.5), (4.6a), (4.6b),
            (4.9), (4.10) and (4.14)-(4.17).

    # Raises
        ValueError: if a table is malformed.
        HypothesisError: if `I` is not trivial.
    """
    zeros = np.zeros((H.order, H.order), dtype=np.int64)
    data = ExtensionData(I, H, zeros, zeros, diamond, yleft, validate=False)
    report = CheckReport('fixed actions')
    elementary = invariant_report(data)
    for name in ACTION_LAWS:
        report.results.append(elementary[name])
    report.results.extend(
        r for r in action_report(data).results if r.name != 'bijectivity')
    report.results.extend(
        r for r in check_trivial_ideal(data).results if r.name != '(4.19)')
    return report


def _closure(M, gens):
    elements = {0}
    frontier = [0]
    while frontier:
        a = frontier.pop()
        for g in gens:
            b = int(M[a, g])
            if b not in elements:
                elements.add(b)
                frontier.append(b)
    return elements


def _mul_generators(M):
    gens, span = [], {0}
    for a in range(M.shape[0]):
        if a not in span:
            gens.append(a)
            span = _closure(M, gens)
    return gens


def _diamond_candidates(H, autos, limits):
    M = lcs_to_brace(H).mul_table
    gens = _mul_generators(M)
    check_guard(limits, 'max_search', len(autos)**len(gens))
    identity = np.arange(len(autos[0]), dtype=np.int64)
    for images in itertools.product(autos, repeat=len(gens)):
        rows = {0: identity}
        frontier = [0]
        while frontier:
            a = frontier.pop(0)
            for g, image in zip(gens, images):
                b = int(M[a, g])
                if b not in rows:
                    # (a∘g)◆y = g◆(a◆y)
                    rows[b] = image[rows[a]]
                    frontier.append(b)
        yield np.stack([rows[h] for h in range(H.order)])


def _element_order(group, g):
    return len(group.generated_subgroup([g]))


def _yleft_candidates(I, H, limits):
    PI = I.group.add_table
    nI, nH = I.order, H.order
    endos = [hom_table(h) for h in all_homs(I.group, I.group, limits=limits)]
    gens, steps = H.group.spanning_steps()
    choices = []
    for g in gens:
        order, allowed = _element_order(H.group, g), []
        for table in endos:
            acc = np.zeros(nI, dtype=np.int64)
            for _ in range(order):
                acc = PI[acc, table]
            if not acc.any():
                allowed.append(table)
        choices.append(allowed)
    total = int(np.prod([len(c) for c in choices], dtype=object))
    check_guard(limits, 'max_search', total)
    for images in itertools.product(*choices):
        yl = np.zeros((nI, nH), dtype=np.int64)
        for g, image in zip(gens, images):
            yl[:, g] = image
        for b, a, g in steps:
            yl[:, b] = PI[yl[:, a], yl[:, g]]
        yield yl


def admissible_actions(H, I, limits=None):
    """ All pairs `(◆, ⊲)` passing `fixed_action_report`, for `I` trivial.

    # Arguments
        H: LinearCycleSet.
        I: LinearCycleSet with a `FiniteAbelianGroup` additive structure.
        limits: SizeLimits. `max_search` bounds the number of candidates of
            each kind and of pairs.

    # Returns
        list: `(diamond, yleft)` integer arrays, in lexicographic order of
            `(diamond, yleft)` tables. The trivial pair comes first.

    # Raises
        HypothesisError: if `I` is not trivial.
        SizeGuardError: if the search space is too large.
    """
    if not I.is_trivial():
        raise HypothesisError('I is trivial',
                              message='The ideal I is not a trivial linear '
                                      'cycle set')
    limits = resolve_limits(limits)
    autos = automorphisms(I.group, limits=limits)
    diamonds = list(_diamond_candidates(H, autos, limits))
    yl = list(_yleft_candidates(I, H, limits))
    check_guard(limits, 'max_search', len(diamonds) * len(yl))
    logging.verbose('Searching {} x {} candidate actions'.format(
        len(diamonds), len(yl)), 1)

    found = []
    for dia in diamonds:
        for yleft in yl:
            if fixed_action_report(I, H, dia, yleft).passed:
                found.append((dia, yleft))
    found.sort(key=lambda p: tuple(p[0].ravel()) + tuple(p[1].ravel()))
    logging.verbose('Found {} admissible pairs of actions'.format(len(found)),
                    1)
    return found
