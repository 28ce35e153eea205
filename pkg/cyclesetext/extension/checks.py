""" Condition ledgers deciding whether cocycle data define an extension.

Every checker evaluates its identities on all tuples at once with numpy
broadcasting and reports, for each identity, the first failing tuple in
lexicographic order of the quantified variables (listed in the formula's
`for` clause below).
"""
from __future__ import absolute_import, division

import numpy as np

from .. import logging
from ..common import HypothesisError
from ..lcs import center, lcs_to_brace, socle, validate_lcs
from ..report import CheckReport
from .data import build_product_extension

__all__ = [
    'check_general', 'check_central_cocycle', 'check_trivial_ideal',
    'cocycle_report', 'action_report', 'compare_triangle_formulation',
    'check_remarks', 'sigma_nu_check', 'extension_report'
]


def _first(mask):
    positions = np.argwhere(mask)
    if not len(positions):
        return None
    return tuple(int(v) for v in positions[0])


class _Tables(object):
    """ Short names for the tables of some cocycle data.

    Axes of the broadcast helpers `ax(i, n, k)` give an index vector along
    axis `i` of a `k`-dimensional grid.
    """

    def __init__(self, data):
        self.nI, self.nH = data.I.order, data.H.order
        self.PI, self.NI = data.I.group.add_table, data.I.group.neg_table
        self.DI = data.I.dot_table
        self.PH, self.DH = data.H.group.add_table, data.H.dot_table
        self.beta, self.f = data.beta, data.f
        self.dia, self.yl = data.diamond, data.yleft

    @staticmethod
    def ax(i, n, k):
        shape = [1] * k
        shape[i] = n
        return np.arange(n).reshape(shape)

    def y_f(self, y, y2, h, h2):
        """ `(h◆y)·(h◆y') + (h◆y)·f(h,h') + (h◆y)⊲(h·h')`. """
        u, u2 = self.dia[h, y], self.dia[h, y2]
        return self.PI[self.PI[self.DI[u, u2], self.DI[u, self.f[h, h2]]],
                       self.yl[u, self.DH[h, h2]]]

    def y_beta(self, y, y2, h, h2):
        """ `y + y' + β(h,h')`. """
        return self.PI[self.PI[y, y2], self.beta[h, h2]]


def _bijectivity(report, t):
    bad = [h for h in range(t.nH) if len(np.unique(t.dia[h])) != t.nI]
    report.add('bijectivity', 'y -> h◆y is a permutation of I',
               (bad[0],) if bad else None)


def _add_34(report, t):
    # over (h, h', h'')
    h, h2, h3 = (t.ax(i, t.nH, 3) for i in range(3))
    left = t.PI[t.dia[h, t.beta[h2, h3]], t.f[h, t.PH[h2, h3]]]
    right = t.PI[t.PI[t.f[h, h2], t.f[h, h3]],
                 t.beta[t.DH[h, h2], t.DH[h, h3]]]
    report.add('(3.4)', "h◆β(h',h'') + f(h,h'+h'') = "
               "f(h,h') + f(h,h'') + β(h·h',h·h'')", _first(left != right))


def _add_316(report, t):
    # over (h, h', h'')
    h, h2, h3 = (t.ax(i, t.nH, 3) for i in range(3))
    s = t.PH[h, h2]
    p = t.DH[h, h2]
    left = t.PI[t.f[s, h3], t.yl[t.dia[s, t.beta[h, h2]], t.DH[s, h3]]]
    target = t.DH[p, t.DH[h, h3]]
    right = t.PI[t.PI[t.dia[p, t.f[h, h3]], t.f[p, t.DH[h, h3]]],
                 t.yl[t.dia[p, t.f[h, h2]], target]]
    report.add('(3.16)', "f(h+h',h'') + ((h+h')◆β(h,h'))⊲((h+h')·h'') = "
               "(h·h')◆f(h,h'') + f(h·h',h·h'') + "
               "((h·h')◆f(h,h'))⊲((h·h')·(h·h''))", _first(left != right))


def cocycle_report(data):
    """ Conditions on `(β, f)` alone: (2.2), (2.3), symmetry of `β`, (3.4)
    and (3.16).

    Under the standing assumptions on the actions these are exactly the
    conditions for `(β, f)` to be a 2-cocycle.
    """
    t = _Tables(data)
    report = CheckReport('cocycle')
    h, h2, h3 = (t.ax(i, t.nH, 3) for i in range(3))
    left = t.PI[t.beta[h, h2], t.beta[t.PH[h, h2], h3]]
    right = t.PI[t.beta[h2, h3], t.beta[h, t.PH[h2, h3]]]
    report.add('(2.2)', "β(h,h')+β(h+h',h'') = β(h',h'')+β(h,h'+h'')",
               _first(left != right))
    zero = np.concatenate([t.beta[:, 0], t.beta[0, :]])
    report.add('(2.3)', 'β(h,0) = β(0,h) = 0',
               None if not zero.any() else
               (int(np.flatnonzero(zero)[0]) % t.nH,))
    report.add('symmetry', "β(h,h') = β(h',h)", _first(t.beta != t.beta.T))
    _add_34(report, t)
    _add_316(report, t)
    return report


def action_report(data):
    """ Conditions on `◆` and `⊲` alone under the centrality hypothesis:
    bijectivity, (4.5), (4.6), (4.9) and (4.10).
    """
    t = _Tables(data)
    report = CheckReport('actions')
    _bijectivity(report, t)

    # over (y, h', h'')
    y, h2, h3 = t.ax(0, t.nI, 3), t.ax(1, t.nH, 3), t.ax(2, t.nH, 3)
    left = t.yl[y, t.PH[h2, h3]]
    right = t.PI[t.yl[y, h2], t.yl[y, h3]]
    report.add('(4.5)', "y⊲(h'+h'') = y⊲h' + y⊲h''", _first(left != right))

    # over (h, y, y')
    h, y, y2 = t.ax(0, t.nH, 3), t.ax(1, t.nI, 3), t.ax(2, t.nI, 3)
    left = t.DI[t.dia[h, y], t.dia[h, y2]]
    right = t.dia[h, t.DI[y, y2]]
    report.add('(4.6a)', "(h◆y)·(h◆y') = h◆(y·y')", _first(left != right))

    # over (h, h', y)
    h, h2, y = t.ax(0, t.nH, 3), t.ax(1, t.nH, 3), t.ax(2, t.nI, 3)
    left = t.dia[t.PH[h, h2], y]
    right = t.dia[t.DH[h, h2], t.dia[h, y]]
    report.add('(4.6b)', "(h+h')◆y = (h·h')◆(h◆y)", _first(left != right))

    # over (y, y', h)
    y, y2, h = t.ax(0, t.nI, 3), t.ax(1, t.nI, 3), t.ax(2, t.nH, 3)
    left = t.yl[t.PI[y, y2], h]
    right = t.PI[t.yl[y, h], t.yl[t.DI[y, y2], h]]
    report.add('(4.9)', "(y+y')⊲h = y⊲h + (y·y')⊲h", _first(left != right))

    # over (h, h', y)
    p = t.DH[h, h2]
    left = t.yl[t.dia[h, y], p]
    right = t.PI[t.dia[h, t.yl[y, h2]], t.yl[t.dia[h, t.yl[y, h]], p]]
    report.add('(4.10)', "(h◆y)⊲(h·h') = h◆(y⊲h') + (h◆(y⊲h))⊲(h·h')",
               _first(left != right))
    return report


def check_general(data):
    """ Decides whether the product built from `data` is an extension.

    The tables of `I x H` form a linear cycle set making `ι` and `π`
    morphisms exactly when every `y -> h◆y` is bijective and (3.4), (3.5),
    (3.7) and (3.8) hold, where

        y^β = y + y' + β(h,h')
        y^f = (h◆y)·(h◆y') + (h◆y)·f(h,h') + (h◆y)⊲(h·h')

    # Arguments
        data: ExtensionData satisfying the standing assumptions.

    # Returns
        CheckReport: bijectivity, (3.4), (3.5), (3.7) and (3.8).
    """
    t = _Tables(data)
    logging.verbose('Checking extension conditions for |I|={}, |H|={}'.format(
        t.nI, t.nH), 2)
    report = CheckReport('general')
    _bijectivity(report, t)
    _add_34(report, t)

    # over (y, h', h'')
    y, h2, h3 = t.ax(0, t.nI, 3), t.ax(1, t.nH, 3), t.ax(2, t.nH, 3)
    b = t.beta[h2, h3]
    left = t.yl[y, t.PH[h2, h3]]
    right = t.PI[t.PI[t.PI[t.yl[y, h2], t.yl[y, h3]], b],
                 t.NI[t.DI[y, b]]]
    report.add('(3.5)', "y⊲(h'+h'') = y⊲h' + y⊲h'' + β(h',h'') - "
               "y·β(h',h'')", _first(left != right))

    # over (y, y', y'', h, h')
    y, y2, y3 = (t.ax(i, t.nI, 5) for i in range(3))
    h, h2 = t.ax(3, t.nH, 5), t.ax(4, t.nH, 5)
    s, p = t.PH[h, h2], t.DH[h, h2]
    yb = t.y_beta(y, y2, h, h2)
    yf = t.y_f(y, y2, h, h2)
    left = t.DI[t.dia[s, yb], t.dia[s, y3]]
    right = t.DI[t.dia[p, yf],
                 t.dia[p, t.DI[t.dia[h, y], t.dia[h, y3]]]]
    report.add('(3.7)', "((h+h')◆y^β)·((h+h')◆y'') = "
               "((h·h')◆y^f)·((h·h')◆((h◆y)·(h◆y'')))", _first(left != right))

    # over (y, y', h, h', h'')
    y, y2 = t.ax(0, t.nI, 5), t.ax(1, t.nI, 5)
    h, h2, h3 = (t.ax(i, t.nH, 5) for i in range(2, 5))
    s, p = t.PH[h, h2], t.DH[h, h2]
    yb = t.y_beta(y, y2, h, h2)
    yf = t.y_f(y, y2, h, h2)
    yf0 = t.y_f(y, 0, h, h3)
    a = t.dia[s, yb]
    left = t.PI[t.DI[a, t.f[s, h3]], t.yl[a, t.DH[s, h3]]]
    c = t.dia[p, yf]
    inner = t.PI[t.dia[p, yf0], t.f[p, t.DH[h, h3]]]
    right = t.PI[t.DI[c, inner], t.yl[c, t.DH[p, t.DH[h, h3]]]]
    report.add('(3.8)', "((h+h')◆y^β)·f(h+h',h'') + "
               "((h+h')◆y^β)⊲((h+h')·h'') = ((h·h')◆y^f)·((h·h')◆y^f_(y,0,h,h'')"
               " + f(h·h',h·h'')) + ((h·h')◆y^f)⊲((h·h')·(h·h''))",
               _first(left != right))
    return report


def _check_centrality(data):
    t = _Tables(data)
    central = np.zeros(t.nI, dtype=bool)
    central[list(center(data.I))] = True
    # over (h, y, h')
    h, y, h2 = t.ax(0, t.nH, 3), t.ax(1, t.nI, 3), t.ax(2, t.nH, 3)
    witness = _first(~central[t.dia[h, t.yl[y, h2]]])
    if witness is not None:
        raise HypothesisError("h◆(y⊲h') ∈ Z(I)", witness)
    # over (h, h', h'')
    h, h2, h3 = (t.ax(i, t.nH, 3) for i in range(3))
    for name, table in (('β', t.beta), ('f', t.f)):
        witness = _first(~central[t.dia[h, table[h2, h3]]])
        if witness is not None:
            raise HypothesisError("h◆{}(h',h'') ∈ Z(I)".format(name), witness)


def check_central_cocycle(data):
    """ Decides extension-ness when the cocycles take central values.

    # Arguments
        data: ExtensionData.

    # Returns
        CheckReport: bijectivity, (2.2), (2.3), symmetry, (3.4), (4.5),
            (4.6a), (4.6b), (4.9), (4.10) and (3.16).

    # Raises
        HypothesisError: if some `h◆(y⊲h')`, `h◆β(h',h'')` or `h◆f(h',h'')`
            lies outside the center of `I`.
    """
    _check_centrality(data)
    actions = action_report(data)
    cocycle = cocycle_report(data)
    report = CheckReport('central cocycle')
    report.results.append(actions['bijectivity'])
    for name in ('(2.2)', '(2.3)', 'symmetry', '(3.4)'):
        report.results.append(cocycle[name])
    for name in ('(4.5)', '(4.6a)', '(4.6b)', '(4.9)', '(4.10)'):
        report.results.append(actions[name])
    report.results.append(cocycle['(3.16)'])
    return report


class _Triangle(object):
    """ `y◁h = h◆(y - y⊲h)` and `y^h = h⁻¹◆(y◁h)` as tables `[y, h]`. """

    def __init__(self, data):
        t = _Tables(data)
        brace = lcs_to_brace(data.H)
        self.mul = brace.mul_table
        self.inv = brace.mul_inv_table
        y, h = t.ax(0, t.nI, 2), t.ax(1, t.nH, 2)
        self.tri = t.dia[h, t.PI[y, t.NI[t.yl[y, h]]]]
        self.exp = t.dia[self.inv[h], self.tri]


def _add_413(report, data, name):
    t, w = _Tables(data), _Triangle(data)
    # over (y, h, h')
    y, h, h2 = t.ax(0, t.nI, 3), t.ax(1, t.nH, 3), t.ax(2, t.nH, 3)
    left = w.tri[y, w.mul[h, h2]]
    right = w.tri[w.tri[y, h], h2]
    report.add(name, "y◁(hh') = (y◁h)◁h'", _first(left != right))


def check_trivial_ideal(data):
    """ Conditions on `◆` and `⊲` when `I` is a trivial linear cycle set.

    They are stated with `y◁h = h◆(y - y⊲h)`, `y^h = h⁻¹◆(y◁h)` and the
    brace product `hh'` of `H`. When `⊲ = 0` the cocycle condition on `f`
    reduces to (4.19), which is checked too.

    # Arguments
        data: ExtensionData.

    # Returns
        CheckReport.

    # Raises
        HypothesisError: if `I` is not trivial.
    """
    if not data.I.is_trivial():
        raise HypothesisError('I is trivial',
                              message='The ideal I is not a trivial linear '
                                      'cycle set')
    t, w = _Tables(data), _Triangle(data)
    report = CheckReport('trivial ideal')

    _add_413(report, data, '(4.14a)')
    # over (y, y', h)
    y, y2, h = t.ax(0, t.nI, 3), t.ax(1, t.nI, 3), t.ax(2, t.nH, 3)
    left = w.tri[t.PI[y, y2], h]
    right = t.PI[w.tri[y, h], w.tri[y2, h]]
    report.add('(4.14b)', "(y+y')◁h = y◁h + y'◁h", _first(left != right))
    report.add('(4.14c)', 'y◁0 = y',
               _first(w.tri[:, 0] != np.arange(t.nI)))

    # over (h, h', y)
    h, h2, y = t.ax(0, t.nH, 3), t.ax(1, t.nH, 3), t.ax(2, t.nI, 3)
    left = t.dia[w.mul[h2, h], y]
    right = t.dia[h, t.dia[h2, y]]
    report.add('(4.15a)', "(h'h)◆y = h◆(h'◆y)", _first(left != right))
    # over (h, y, y')
    h, y, y2 = t.ax(0, t.nH, 3), t.ax(1, t.nI, 3), t.ax(2, t.nI, 3)
    left = t.dia[h, t.PI[y, y2]]
    right = t.PI[t.dia[h, y], t.dia[h, y2]]
    report.add('(4.15b)', "h◆(y+y') = h◆y + h◆y'", _first(left != right))
    report.add('(4.15c)', '0◆y = y', _first(t.dia[0] != np.arange(t.nI)))

    # over (y, h, h')
    y, h, h2 = t.ax(0, t.nI, 3), t.ax(1, t.nH, 3), t.ax(2, t.nH, 3)
    left = t.PI[w.exp[y, t.PH[h, h2]], y]
    right = t.PI[w.exp[y, h], w.exp[y, h2]]
    report.add('(4.16a)', "y^(h+h') + y = y^h + y^h'", _first(left != right))
    report.add('(4.16b)', '0^h = 0', _first(w.exp[0] != 0))

    report.add('(4.17a)', 'y^0 = y',
               _first(w.exp[:, 0] != np.arange(t.nI)))
    # over (y, y', h)
    y, y2, h = t.ax(0, t.nI, 3), t.ax(1, t.nI, 3), t.ax(2, t.nH, 3)
    left = w.exp[t.PI[y, y2], h]
    right = t.PI[w.exp[y, h], w.exp[y2, h]]
    report.add('(4.17b)', '(y+y\')^h = y^h + y\'^h', _first(left != right))

    if not t.yl.any():
        # over (h, h', h'')
        h, h2, h3 = (t.ax(i, t.nH, 3) for i in range(3))
        p = t.DH[h, h2]
        left = t.f[t.PH[h, h2], h3]
        right = t.PI[t.dia[p, t.f[h, h3]], t.f[p, t.DH[h, h3]]]
        report.add('(4.19)', "f(h+h',h'') = (h·h')◆f(h,h'') + "
                   "f(h·h',h·h'')", _first(left != right))
    return report


def compare_triangle_formulation(data):
    """ Verdicts of (4.10) and of its `◁` form `y◁(hh') = (y◁h)◁h'`.

    Both agree whenever `◆` is bijective and (4.5), (4.6b) and (4.9) hold.

    # Returns
        CheckReport: Entries `(4.10)` and `(4.13)`.
    """
    report = CheckReport('triangle formulation')
    report.results.append(action_report(data)['(4.10)'])
    _add_413(report, data, '(4.13)')
    return report


def extension_report(extension):
    """ Axioms of the built `B` together with the morphism property of `ι`
    and `π`.

    # Arguments
        extension: ProductExtension.

    # Returns
        CheckReport: the linear cycle set axioms of `B` followed by `iota`
            and `pi` entries.
    """
    data = extension.data
    report = validate_lcs(extension.B.group, extension.B.dot_table)
    report.title = 'product extension'
    PB, DB = extension.B.group.add_table, extension.B.dot_table
    iota, pi = extension.iota, extension.pi
    PI, DI = data.I.group.add_table, data.I.dot_table
    PH, DH = data.H.group.add_table, data.H.dot_table
    bad = (iota[PI] != PB[iota[:, None], iota[None, :]]) | \
        (iota[DI] != DB[iota[:, None], iota[None, :]])
    report.add('iota', 'ι is a morphism of linear cycle sets', _first(bad))
    bad = (pi[PB] != PH[pi[:, None], pi[None, :]]) | \
        (pi[DB] != DH[pi[:, None], pi[None, :]])
    report.add('pi', 'π is a morphism of linear cycle sets', _first(bad))
    return report


def check_remarks(data):
    """ Consequences that hold in every valid extension.

    # Returns
        CheckReport: the instance `(y+y')⊲h'' = (y·y')·(y⊲h'') + (y·y')⊲h''`,
            closure of the socle and the center of `I` under `◆`, and
            `⊲ = 0 <=> ι(I) ⊆ Soc(B)`.
    """
    t = _Tables(data)
    report = CheckReport('remarks')
    # over (y, y', h'')
    y, y2, h = t.ax(0, t.nI, 3), t.ax(1, t.nI, 3), t.ax(2, t.nH, 3)
    d = t.DI[y, y2]
    left = t.yl[t.PI[y, y2], h]
    right = t.PI[t.DI[d, t.yl[y, h]], t.yl[d, h]]
    report.add('yleft instance', "(y+y')⊲h'' = (y·y')·(y⊲h'') + "
               "(y·y')⊲h''", _first(left != right))

    for name, subset in (('socle', socle(data.I)), ('center',
                                                     center(data.I))):
        member = np.zeros(t.nI, dtype=bool)
        member[list(subset)] = True
        ys = np.asarray(subset)
        images = t.dia[:, ys]
        bad = np.argwhere(~member[images])
        report.add('{} closure'.format(name),
                   'y ∈ {} => h◆y ∈ {}'.format(name, name),
                   None if not len(bad) else
                   (int(bad[0][0]), int(ys[bad[0][1]])))

    extension = build_product_extension(data)
    soc_B = set(socle(extension.B))
    outside = [y for y in range(t.nI) if int(extension.iota[y]) not in soc_B]
    zero = not t.yl.any()
    witness = None
    if zero and outside:
        witness = (outside[0],)
    elif not zero and not outside:
        witness = _first(t.yl != 0)
    report.add('socle inclusion', '⊲ = 0 <=> ι(I) ⊆ Soc(B)', witness)
    return report


def sigma_nu_check(extension):
    """ The right action `◁` and the maps `ν` in the brace of `B`.

    Checks `ι(y◁h) = w_h⁻¹ ι(y) w_h` and `w_h⁻¹·ι(y) = w_(h⁻¹)·ι(y) =
    ι(h⁻¹◆y)` for all `y` and `h`, with `I` trivial.

    # Arguments
        extension: ProductExtension of a valid extension.

    # Returns
        CheckReport.

    # Raises
        HypothesisError: if `I` is not trivial.
    """
    data = extension.data
    if not data.I.is_trivial():
        raise HypothesisError('I is trivial',
                              message='The ideal I is not a trivial linear '
                                      'cycle set')
    t, w = _Tables(data), _Triangle(data)
    brace = lcs_to_brace(extension.B)
    M, inv = brace.mul_table, brace.mul_inv_table
    iota, section = extension.iota, extension.section
    DB = extension.B.dot_table
    report = CheckReport('sigma nu')
    y, h = t.ax(0, t.nI, 2), t.ax(1, t.nH, 2)
    wh = section[h]
    conj = M[M[inv[wh], iota[y]], wh]
    report.add('sigma', 'y◁h = w_h⁻¹ y w_h', _first(conj != iota[w.tri]))
    target = iota[t.dia[w.inv[h], y]]
    report.add('nu', 'w_h⁻¹·y = h⁻¹◆y', _first(DB[inv[wh], iota[y]] != target))
    report.add('nu section', 'w_(h⁻¹)·y = h⁻¹◆y',
               _first(DB[section[w.inv[h]], iota[y]] != target))
    return report
