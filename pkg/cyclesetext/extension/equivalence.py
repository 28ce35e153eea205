""" Equivalence of product extensions and classification up to equivalence.

Two product extensions over the same `I`, `H` and actions are equivalent
exactly when some `φ: H -> I` with `φ(0) = 0` makes
`y + w_h -> y + φ(h) + w_h` a morphism of linear cycle sets. On the additive
side `φ` is forced by its values on generators of `H`:

    φ(a+g) = φ(a) + φ(g) + β'(a,g) - β(a,g)

so the search runs over generator values only.
"""
from __future__ import absolute_import, division

import itertools

import networkx as nx
import numpy as np

from .. import logging
from ..common import (HypothesisError, InvalidActionError, check_guard,
                      resolve_limits)
from ..lcs import center, is_lcs_morphism, socle
from ..report import CheckReport
from .actions import fixed_action_report
from .checks import cocycle_report
from .data import ExtensionData, ProductExtension

__all__ = [
    'EquivalenceWitness', 'extensions_equivalent', 'witness_report',
    'enumerate_cocycle_data', 'equivalence_classes', 'classify_extensions'
]


class EquivalenceWitness(object):
    """ Map `φ: H -> I` performing an equivalence of product extensions.

    # Attributes
        phi: Integer array (|H|,) with `phi[0] = 0`.
        morphism: Integer array, image in the second extension of every
            element `y + w_h` of the first one.
    """

    def __init__(self, phi, morphism):
        self.phi = np.asarray(phi, dtype=np.int64)
        self.morphism = np.asarray(morphism, dtype=np.int64)

    def to_dict(self):
        return {'phi': [int(v) for v in self.phi]}

    def __eq__(self, other):
        return (isinstance(other, EquivalenceWitness) and
                np.array_equal(self.phi, other.phi))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'EquivalenceWitness(phi={})'.format(list(self.phi))


def _as_extension(E):
    return E if isinstance(E, ProductExtension) else ProductExtension(E)


def _check_same_structures(d1, d2):
    if d1.I != d2.I:
        raise ValueError('Extensions have different ideals I')
    if d1.H != d2.H:
        raise ValueError('Extensions have different quotients H')


def witness_report(d1, d2, phi):
    """ The conditions a witness of equivalence must satisfy.

    `φ` takes values in `Z(I)`, `h◆φ(h) ∈ Soc(I)` and

        φ(h·h') = h◆φ(h') + (h◆φ(h))⊲(h·h') + f'(h,h') - f(h,h')

    which reduces to its `f = f'` form on extensions with the same `f`.

    # Returns
        CheckReport.
    """
    PI, NI = d1.I.group.add_table, d1.I.group.neg_table
    DH = d1.H.dot_table
    nH = d1.H.order
    report = CheckReport('equivalence witness')
    z = set(center(d1.I))
    outside = [h for h in range(nH) if int(phi[h]) not in z]
    report.add('center', 'φ(h) ∈ Z(I)', (outside[0],) if outside else None)
    own = d1.diamond[np.arange(nH), phi]
    soc = set(socle(d1.I))
    outside = [h for h in range(nH) if int(own[h]) not in soc]
    report.add('(2.11)', 'h◆φ(h) ∈ Soc(I)', (outside[0],) if outside else None)
    DI = d1.I.dot_table
    bad = np.argwhere(DI[:, phi] != phi[None, :])
    report.add('(2.12)', 'φ(h) = y·φ(h)',
               None if not len(bad) else tuple(int(v) for v in bad[0]))
    h = np.arange(nH)[:, None]
    h2 = np.arange(nH)[None, :]
    right = PI[PI[d1.diamond[h, phi[h2]], d1.yleft[own[:, None], DH]],
               PI[d2.f, NI[d1.f]]]
    bad = np.argwhere(phi[DH] != right)
    report.add('(2.13)', "φ(h·h') = h◆φ(h') + (h◆φ(h))⊲(h·h') + "
               "f'(h,h') - f(h,h')",
               None if not len(bad) else tuple(int(v) for v in bad[0]))
    return report


def _propagate(d1, d2, values, gens, steps):
    PI = d1.I.group.add_table
    delta = PI[d2.beta, d1.I.group.neg_table[d1.beta]]
    phi = np.zeros(d1.H.order, dtype=np.int64)
    for g, v in zip(gens, values):
        phi[g] = v
    for b, a, g in steps:
        phi[b] = PI[PI[phi[a], phi[g]], delta[a, g]]
    return phi


def extensions_equivalent(E1, E2, limits=None):
    """ Decides whether two product extensions are equivalent.

    # Arguments
        E1, E2: ProductExtension or ExtensionData over the same `I` and `H`.
        limits: SizeLimits. The number of normalized maps `H -> I`,
            `|I|^(|H|-1)`, is bounded by `max_search`.

    # Returns
        EquivalenceWitness or `None`: the lexicographically least `φ`
            performing an equivalence, `None` when they are inequivalent.
            Extensions with different actions are never equivalent.

    # Raises
        ValueError: if `I` or `H` differ.
        SizeGuardError: if the search space is too large.
        RuntimeError: if the witness found violates the witness conditions.
    """
    E1, E2 = _as_extension(E1), _as_extension(E2)
    d1, d2 = E1.data, E2.data
    _check_same_structures(d1, d2)
    if not d1.same_actions(d2):
        logging.verbose('Extensions with different actions', 2)
        return None

    nI, nH = d1.I.order, d1.H.order
    gens, steps = d1.H.group.spanning_steps()
    check_guard(resolve_limits(limits), 'max_search', nI**(nH - 1))
    PI = d1.I.group.add_table
    y = np.arange(nI)[:, None]
    h = np.arange(nH)[None, :]

    best = None
    for values in itertools.product(range(nI), repeat=len(gens)):
        phi = _propagate(d1, d2, values, gens, steps)
        morphism = (PI[y, phi[h]] * nH + h).ravel()
        if not is_lcs_morphism(E1.B, E2.B, morphism):
            continue
        if best is None or tuple(phi) < tuple(best.phi):
            best = EquivalenceWitness(phi, morphism)
    if best is None:
        return None

    failure = witness_report(d1, d2, best.phi).first_failure()
    if failure is not None:
        raise RuntimeError(
            'Equivalence witness {} violates {} at {}'.format(
                list(best.phi), failure.formula, failure.witness))
    return best


def _free_values(nI, nH, gens):
    return itertools.product(range(nI), repeat=(nH - 1) * len(gens))


def _fill(table, values, gens, nH):
    it = iter(values)
    for g in gens:
        for x in range(1, nH):
            table[x, g] = next(it)


def _beta_candidates(I, H, limits):
    nI, nH = I.order, H.order
    PI, NI = I.group.add_table, I.group.neg_table
    PH = H.group.add_table
    gens, steps = H.group.spanning_steps()
    check_guard(limits, 'max_search', nI**((nH - 1) * len(gens)))
    for values in _free_values(nI, nH, gens):
        beta = np.zeros((nH, nH), dtype=np.int64)
        _fill(beta, values, gens, nH)
        for b, a, g in steps:
            # β(x,a+g) = β(x,a) + β(x+a,g) - β(a,g)
            beta[:, b] = PI[PI[beta[:, a], beta[PH[:, a], g]], NI[beta[a, g]]]
        yield beta


def _f_candidates(data, beta):
    nI, nH = data.I.order, data.H.order
    PI, NI = data.I.group.add_table, data.I.group.neg_table
    DH = data.H.dot_table
    gens, steps = data.H.group.spanning_steps()
    for values in _free_values(nI, nH, gens):
        f = np.zeros((nH, nH), dtype=np.int64)
        _fill(f, values, gens, nH)
        for b, a, g in steps:
            # f(h,a+g) = f(h,a) + f(h,g) + β(h·a,h·g) - h◆β(a,g)
            correction = PI[beta[DH[:, a], DH[:, g]],
                            NI[data.diamond[:, beta[a, g]]]]
            f[:, b] = PI[PI[f[:, a], f[:, g]], correction]
        yield f


def enumerate_cocycle_data(I, H, diamond, yleft, limits=None):
    """ Every `(β, f)` making an extension for fixed actions and trivial `I`.

    `β` is propagated from its values `β(x, g)` on generators `g` of `H`
    through (2.2) and `f` from `f(h, g)` through (3.4); the candidates are
    then filtered by the full cocycle conditions.

    # Arguments
        I, H: LinearCycleSet. `I` must be trivial.
        diamond, yleft: Integer arrays with the fixed actions.
        limits: SizeLimits. `max_classify_order` bounds `|I|` and `|H|`,
            `max_search` the candidates of each stage.

    # Returns
        list: ExtensionData, sorted by `key()`.

    # Raises
        HypothesisError: if `I` is not trivial.
        InvalidActionError: if the actions violate one of their laws.
        SizeGuardError: if a guard is exceeded.
    """
    limits = resolve_limits(limits)
    check_guard(limits, 'max_classify_order', I.order)
    check_guard(limits, 'max_classify_order', H.order)
    if not I.is_trivial():
        raise HypothesisError('I is trivial',
                              message='The ideal I is not a trivial linear '
                                      'cycle set')
    failure = fixed_action_report(I, H, diamond, yleft).first_failure()
    if failure is not None:
        raise InvalidActionError(failure.formula, failure.witness)

    zeros = np.zeros((H.order, H.order), dtype=np.int64)
    base = ExtensionData(I, H, zeros, zeros, diamond, yleft)
    betas = []
    for beta in _beta_candidates(I, H, limits):
        report = cocycle_report(base.replace(beta=beta))
        if report['(2.2)'].passed and report['symmetry'].passed:
            betas.append(beta)
    gens = H.group.spanning_steps()[0]
    check_guard(limits, 'max_search',
                len(betas) * I.order**((H.order - 1) * len(gens)))
    logging.verbose('{} abelian cocycles β, searching f'.format(len(betas)), 1)

    found = []
    for beta in betas:
        for f in _f_candidates(base, beta):
            candidate = base.replace(beta=beta, f=f)
            if cocycle_report(candidate).passed:
                found.append(candidate)
    found.sort(key=lambda d: d.key())
    logging.verbose('{} cocycle pairs (β, f)'.format(len(found)), 1)
    return found


def equivalence_classes(candidates, limits=None, all_pairs=False):
    """ Groups extension data into equivalence classes.

    Each candidate is compared with the representative of every class found
    so far; classes are the connected components of the resulting graph.

    # Arguments
        candidates: List of ExtensionData with the same actions, sorted.
        limits: SizeLimits for `extensions_equivalent`.
        all_pairs: Boolean. Compare every pair and check that each class is
            a clique, so that equivalence is transitive on the candidates.

    # Returns
        list: Lists of ExtensionData, one per class, each sorted and the
            classes sorted by their first element.

    # Raises
        RuntimeError: if `all_pairs` finds a class that is not a clique.
    """
    extensions = [ProductExtension(d) for d in candidates]
    graph = nx.Graph()
    graph.add_nodes_from(range(len(extensions)))
    if all_pairs:
        for i, j in itertools.combinations(range(len(extensions)), 2):
            if extensions_equivalent(extensions[i], extensions[j], limits):
                graph.add_edge(i, j)
    else:
        representatives = []
        for i, E in enumerate(extensions):
            for r in representatives:
                if extensions_equivalent(extensions[r], E, limits):
                    graph.add_edge(r, i)
                    break
            else:
                representatives.append(i)

    classes = [sorted(c) for c in nx.connected_components(graph)]
    if all_pairs:
        for members in classes:
            size = len(members)
            edges = graph.subgraph(members).number_of_edges()
            if edges != size * (size - 1) // 2:
                raise RuntimeError(
                    'Equivalence is not transitive on class {}'.format(
                        members))
    classes.sort()
    return [[candidates[i] for i in members] for members in classes]


def classify_extensions(I, H, diamond, yleft, limits=None, all_pairs=False):
    """ Extensions of `H` by a trivial `I` with fixed actions, up to
    equivalence.

    # Arguments
        I, H: LinearCycleSet.
        diamond: Integer array (|H| x |I|).
        yleft: Integer array (|I| x |H|).
        limits: SizeLimits.
        all_pairs: Boolean. See `equivalence_classes`.

    # Returns
        list: ProductExtension, the representative with least `(β, f)` of
            each class, in increasing order.

    # Raises
        HypothesisError: if `I` is not trivial.
        InvalidActionError: if the actions violate one of their laws.
        SizeGuardError: if a guard is exceeded.
    """
    candidates = enumerate_cocycle_data(I, H, diamond, yleft, limits)
    classes = equivalence_classes(candidates, limits, all_pairs=all_pairs)
    logging.verbose('{} equivalence classes of extensions'.format(
        len(classes)), 0)
    return [ProductExtension(members[0]) for members in classes]
