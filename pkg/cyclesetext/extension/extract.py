""" Cocycle data of an abstract extension `0 -> I -> B -> H -> 0`.

Given a set theoretic section `s` of `π` with `s(0) = 0`, every element of
`B` is uniquely `ι(y) + s(h)` and

    ι(β(h,h')) = s(h) + s(h') - s(h+h')
    ι(h◆y)     = s(h)·ι(y)
    ι(y⊲h)     = ι(y)·s(h) - s(h)
    ι(f(h,h')) = s(h)·s(h') - s(h·h')
"""
from __future__ import absolute_import, division

import itertools

import numpy as np

from .. import logging
from ..common import NotExactError, check_guard, resolve_limits
from ..lcs import is_lcs_morphism
from ..report import CheckReport
from .data import ExtensionData, build_product_extension

__all__ = [
    'is_short_exact', 'extract_data', 'all_sections', 'section_isomorphism'
]


def _map_table(table, n, bound, name):
    table = np.asarray(table, dtype=np.int64)
    if table.shape != (n,):
        raise ValueError('{} must have {} entries, got shape {}'.format(
            name, n, table.shape))
    if n and (table.min() < 0 or table.max() >= bound):
        raise ValueError('{} has entries out of range [0, {})'.format(
            name, bound))
    return table


def _morphism_witness(L1, L2, table):
    P1, D1 = L1.group.add_table, L1.dot_table
    P2, D2 = L2.group.add_table, L2.dot_table
    bad = (table[P1] != P2[table[:, None], table[None, :]]) | \
        (table[D1] != D2[table[:, None], table[None, :]])
    positions = np.argwhere(bad)
    return None if not len(positions) else tuple(int(v) for v in positions[0])


def is_short_exact(I, B, H, iota, pi):
    """ Checks that `0 -> I -> B -> H -> 0` is a short exact sequence of
    linear cycle sets.

    # Arguments
        I, B, H: LinearCycleSet.
        iota: Integer array (|I|,), index in `B` of the image of each `y`.
        pi: Integer array (|B|,), index in `H` of the image of each `b`.

    # Returns
        CheckReport: morphism property of `iota` and `pi`, injectivity,
            surjectivity and `im ι = ker π`.

    # Raises
        ValueError: if the tables are malformed.
    """
    iota = _map_table(iota, I.order, B.order, 'iota')
    pi = _map_table(pi, B.order, H.order, 'pi')
    report = CheckReport('short exact sequence')
    report.add('iota morphism', 'ι preserves + and ·',
               _morphism_witness(I, B, iota))
    report.add('pi morphism', 'π preserves + and ·',
               _morphism_witness(B, H, pi))
    witness = None
    if len(np.unique(iota)) != I.order:
        seen = {}
        for y, b in enumerate(iota):
            if int(b) in seen:
                witness = (seen[int(b)], y)
                break
            seen[int(b)] = y
    report.add('injective', 'ι is injective', witness)
    missing = sorted(set(range(H.order)) - set(int(h) for h in pi))
    report.add('surjective', 'π is surjective',
               (missing[0],) if missing else None)
    kernel = set(int(b) for b in np.flatnonzero(pi == 0))
    image = set(int(b) for b in iota)
    difference = sorted(kernel.symmetric_difference(image))
    report.add('exact', 'im ι = ker π',
               (difference[0],) if difference else None)
    return report


def _check_section(pi, section, nH):
    if section[0] != 0:
        raise ValueError('Section must send 0 to 0, got {}'.format(section[0]))
    bad = np.flatnonzero(pi[section] != np.arange(nH))
    if len(bad):
        raise ValueError('Not a section of pi at h={}'.format(int(bad[0])))


def extract_data(B, I, H, iota, pi, section):
    """ Reads `(β, ◆, ⊲, f)` off an extension through a section.

    # Arguments
        B, I, H: LinearCycleSet.
        iota: Integer array (|I|,). Injection `I -> B`.
        pi: Integer array (|B|,). Projection `B -> H`.
        section: Integer array (|H|,). Set theoretic section of `pi` with
            `section[0] = 0`.

    # Returns
        ExtensionData: The data, whose product extension is equivalent to
            the given one through `(y, h) -> ι(y) + s(h)`.

    # Raises
        NotExactError: if the sequence is not a short exact sequence of
            linear cycle sets.
        ValueError: if `section` is not a section of `pi` or `s(0) != 0`.
    """
    report = is_short_exact(I, B, H, iota, pi)
    failure = report.first_failure()
    if failure is not None:
        raise NotExactError('Not a short exact sequence: {} fails at {}'.format(
            failure.formula, failure.witness))
    iota = np.asarray(iota, dtype=np.int64)
    pi = np.asarray(pi, dtype=np.int64)
    s = _map_table(section, H.order, B.order, 'section')
    _check_section(pi, s, H.order)

    back = np.full(B.order, -1, dtype=np.int64)
    back[iota] = np.arange(I.order)
    PB, NB, DB = B.group.add_table, B.group.neg_table, B.dot_table
    PH, DH = H.group.add_table, H.dot_table
    h = np.arange(H.order)[:, None]
    h2 = np.arange(H.order)[None, :]
    y = np.arange(I.order)

    beta = back[PB[PB[s[h], s[h2]], NB[s[PH]]]]
    diamond = back[DB[s[h], iota[y][None, :]]]
    yleft = back[PB[DB[iota[y][:, None], s[h2]], NB[s[h2]]]]
    f = back[PB[DB[s[h], s[h2]], NB[s[DH]]]]
    logging.verbose('Extracted data of an extension of order {}'.format(
        B.order), 2)
    return ExtensionData(I, H, beta, f, diamond, yleft)


def all_sections(B, H, pi, limits=None):
    """ Every set theoretic section `s` of `pi` with `s(0) = 0`.

    # Arguments
        B, H: LinearCycleSet.
        pi: Integer array (|B|,).
        limits: SizeLimits. The number of sections is bounded by
            `max_search`.

    # Returns
        generator: Integer arrays (|H|,), in lexicographic order.

    # Raises
        SizeGuardError: if there are too many sections.
    """
    pi = _map_table(pi, B.order, H.order, 'pi')
    fibres = [[int(b) for b in np.flatnonzero(pi == h)]
              for h in range(H.order)]
    total = int(np.prod([len(fibre) for fibre in fibres[1:]], dtype=object))
    check_guard(resolve_limits(limits), 'max_search', total)
    if 0 not in fibres[0]:
        return
    for choice in itertools.product(*fibres[1:]):
        yield np.asarray((0,) + choice, dtype=np.int64)


def section_isomorphism(data, B, iota, pi, section):
    """ Checks that `(y, h) -> ι(y) + s(h)` is an equivalence from the
    product extension of `data` onto `B`.

    # Returns
        CheckReport: bijectivity, morphism of linear cycle sets, and
            compatibility with `ι` and `π`.
    """
    product = build_product_extension(data)
    nH = data.H.order
    iota = np.asarray(iota, dtype=np.int64)
    pi = np.asarray(pi, dtype=np.int64)
    s = np.asarray(section, dtype=np.int64)
    index = np.arange(product.order)
    phi = B.group.add_table[iota[index // nH], s[index % nH]]
    report = CheckReport('section isomorphism')
    values, counts = np.unique(phi, return_counts=True)
    report.add('bijective', 'y + w_h -> ι(y) + s(h) is bijective',
               None if len(values) == B.order else
               (int(values[np.argmax(counts)]),))
    report.add('morphism', 'y + w_h -> ι(y) + s(h) preserves + and ·',
               None if is_lcs_morphism(product.B, B, phi) else
               _morphism_witness(product.B, B, phi))
    bad = np.flatnonzero(phi[product.iota] != iota)
    report.add('iota', 'φ∘ι = ι', (int(bad[0]),) if len(bad) else None)
    bad = np.flatnonzero(pi[phi] != product.pi)
    report.add('pi', 'π∘φ = π', (int(bad[0]),) if len(bad) else None)
    return report
