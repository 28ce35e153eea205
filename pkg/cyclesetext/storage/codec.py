""" JSON descriptors of groups, linear cycle sets, extension data and reports.

Groups are described by the orders of their cyclic factors and every other
structure by integer tables of element indices, in the encoding of
`FiniteAbelianGroup`:

    group:  {"cyclic_orders": [n1, ..., nk]}
    lcs:    {"group": group, "dot_table": [[a·b]]}
    data:   {"I": lcs, "H": lcs, "beta": [[.]], "f": [[.]],
             "diamond": [[h◆y]] | "trivial", "yleft": [[y⊲h]] | "zero"}

Wherever an ideal is expected a bare group descriptor stands for the trivial
linear cycle set on that group.
"""
from __future__ import absolute_import, division

import io
import json

import numpy as np

from .. import logging
from ..abelian import FiniteAbelianGroup
from ..common import DescriptorError
from ..extension import ExtensionData
from ..lcs import LinearCycleSet, trivial_lcs

__all__ = [
    'load_json', 'save_json', 'dumps', 'encode_group', 'decode_group',
    'encode_element', 'decode_element', 'encode_lcs', 'decode_lcs_table',
    'decode_lcs', 'decode_structure', 'decode_actions', 'encode_data',
    'decode_data', 'decode_request', 'decode_extract_request',
    'encode_report'
]


def load_json(path):
    """ Reads a JSON document.

    # Raises
        DescriptorError: if the file can not be read or parsed.
    """
    try:
        with io.open(path, encoding='utf-8') as fp:
            doc = json.load(fp)
    except (IOError, OSError) as e:
        raise DescriptorError('Cannot read {}: {}'.format(path, e))
    except ValueError as e:
        raise DescriptorError('Cannot parse {}: {}'.format(path, e))
    logging.verbose('Loaded {}'.format(path), 2)
    return doc


def dumps(doc):
    """ Deterministic rendering: sorted keys and fixed indentation. """
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def save_json(doc, path):
    with io.open(path, 'w', encoding='utf-8') as fp:
        fp.write(dumps(doc))
        fp.write(u'\n')


def _field(doc, key, what):
    if not isinstance(doc, dict):
        raise DescriptorError('{} must be a JSON object, got {}'.format(
            what, type(doc).__name__))
    if key not in doc:
        raise DescriptorError('{} has no field "{}"'.format(what, key))
    return doc[key]


def _int_array(value, shape, what):
    try:
        array = np.asarray(value, dtype=np.int64)
    except (TypeError, ValueError):
        raise DescriptorError('{} is not an integer table'.format(what))
    if array.shape != shape:
        raise DescriptorError('{} must have shape {}, got {}'.format(
            what, shape, array.shape))
    return array


def encode_group(G):
    if not isinstance(G, FiniteAbelianGroup):
        raise ValueError('Only direct sums of cyclic groups can be encoded, '
                         'got {}'.format(G))
    return {'cyclic_orders': [int(n) for n in G.cyclic_orders]}


def decode_group(doc):
    orders = _field(doc, 'cyclic_orders', 'group')
    if not isinstance(orders, list) or \
            not all(isinstance(n, int) for n in orders):
        raise DescriptorError(
            'cyclic_orders must be a list of integers, got {}'.format(orders))
    try:
        return FiniteAbelianGroup(orders)
    except ValueError as e:
        raise DescriptorError(str(e))


def encode_element(G, index):
    """ Coordinates of the element with the given index. """
    return [int(c) for c in G.from_index(index)]


def decode_element(G, coordinates):
    try:
        return G.index(coordinates)
    except (TypeError, ValueError) as e:
        raise DescriptorError(str(e))


def encode_lcs(L):
    return {
        'group': encode_group(L.group),
        'dot_table': L.dot_table.tolist(),
    }


def decode_lcs_table(doc):
    """ Group and `·` table of a descriptor, without checking the axioms.

    # Returns
        tuple: FiniteAbelianGroup and integer array (n x n).

    # Raises
        DescriptorError: if the descriptor is malformed or the table has
            entries that are not elements of the group.
    """
    group = decode_group(_field(doc, 'group', 'lcs'))
    n = group.order
    table = _int_array(_field(doc, 'dot_table', 'lcs'), (n, n), 'dot_table')
    if n and (table.min() < 0 or table.max() >= n):
        raise DescriptorError('dot_table has entries out of range [0, {})'
                              .format(n))
    return group, table


def decode_lcs(doc, validate=True):
    """ Linear cycle set of a descriptor.

    # Raises
        DescriptorError: if the descriptor is malformed.
        ValueError: if validating and some axiom fails.
    """
    group, table = decode_lcs_table(doc)
    return LinearCycleSet(group, table, validate=validate)


def decode_structure(doc):
    """ Linear cycle set of a descriptor, the trivial one for a bare group
    descriptor.
    """
    if isinstance(doc, dict) and 'dot_table' not in doc and \
            'cyclic_orders' in doc:
        return trivial_lcs(decode_group(doc))
    return decode_lcs(doc)


def decode_actions(doc, I, H):
    """ Tables `(◆, ⊲)` of a document, honoring the shorthands `"trivial"`
    and `"zero"`. Missing fields take the shorthand values.
    """
    nI, nH = I.order, H.order
    diamond = doc.get('diamond', 'trivial')
    if diamond == 'trivial':
        diamond = np.tile(np.arange(nI, dtype=np.int64), (nH, 1))
    elif isinstance(diamond, list):
        diamond = _int_array(diamond, (nH, nI), 'diamond')
    else:
        raise DescriptorError(
            'diamond must be a table or "trivial", got {!r}'.format(diamond))
    yleft = doc.get('yleft', 'zero')
    if yleft == 'zero':
        yleft = np.zeros((nI, nH), dtype=np.int64)
    elif isinstance(yleft, list):
        yleft = _int_array(yleft, (nI, nH), 'yleft')
    else:
        raise DescriptorError(
            'yleft must be a table or "zero", got {!r}'.format(yleft))
    return diamond, yleft


def encode_data(data, compact=False):
    """ Descriptor of an ExtensionData.

    # Arguments
        data: ExtensionData.
        compact: Boolean. Write the shorthands `"trivial"` and `"zero"` for
            the trivial `◆` and `⊲ = 0`.
    """
    doc = {
        'I': encode_lcs(data.I),
        'H': encode_lcs(data.H),
        'beta': data.beta.tolist(),
        'f': data.f.tolist(),
        'diamond': data.diamond.tolist(),
        'yleft': data.yleft.tolist(),
    }
    if compact:
        trivial = np.tile(np.arange(data.I.order), (data.H.order, 1))
        if np.array_equal(data.diamond, trivial):
            doc['diamond'] = 'trivial'
        if not data.yleft.any():
            doc['yleft'] = 'zero'
    return doc


def decode_data(doc, validate=True):
    """ ExtensionData of a descriptor.

    # Raises
        DescriptorError: if the descriptor is malformed.
        ValueError, InvalidActionError: if validating and the data violate
            their standing assumptions.
    """
    I = decode_structure(_field(doc, 'I', 'extension data'))
    H = decode_structure(_field(doc, 'H', 'extension data'))
    nH = H.order
    beta = _int_array(_field(doc, 'beta', 'extension data'), (nH, nH), 'beta')
    f = _int_array(_field(doc, 'f', 'extension data'), (nH, nH), 'f')
    diamond, yleft = decode_actions(doc, I, H)
    return ExtensionData(I, H, beta, f, diamond, yleft, validate=validate)


def decode_request(doc):
    """ The structures `{I, H, diamond, yleft}` of a classification or
    cohomology request.

    # Returns
        dict: `I` and `H` linear cycle sets, `diamond` and `yleft` tables.
    """
    I = decode_structure(_field(doc, 'I', 'request'))
    H = decode_structure(_field(doc, 'H', 'request'))
    diamond, yleft = decode_actions(doc, I, H)
    return dict(I=I, H=H, diamond=diamond, yleft=yleft)


def decode_extract_request(doc):
    """ The sequence `0 -> I -> B -> H -> 0` and the section of an
    extraction request `{B, I, H, iota, pi, section}`.
    """
    B = decode_structure(_field(doc, 'B', 'extract request'))
    I = decode_structure(_field(doc, 'I', 'extract request'))
    H = decode_structure(_field(doc, 'H', 'extract request'))
    iota = _int_array(_field(doc, 'iota', 'extract request'), (I.order,),
                      'iota')
    pi = _int_array(_field(doc, 'pi', 'extract request'), (B.order,), 'pi')
    section = _int_array(_field(doc, 'section', 'extract request'),
                         (H.order,), 'section')
    return dict(B=B, I=I, H=H, iota=iota, pi=pi, section=section)


def encode_report(report):
    return {
        'title': report.title,
        'passed': report.passed,
        'identities': report.to_dict(),
    }
