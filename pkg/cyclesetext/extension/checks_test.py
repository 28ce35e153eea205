from __future__ import absolute_import, division

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ..common import HypothesisError
from ..lcs import center
from ..lcs.cycle_set_test import z4_nontrivial
from .actions import admissible_actions
from .checks import (check_central_cocycle, check_general, check_remarks,
                     check_trivial_ideal, cocycle_report,
                     compare_triangle_formulation, extension_report,
                     sigma_nu_check)
from .data import (ExtensionData, build_product_extension, invariant_report,
                   trivial_data, twist_by_cochain)
from .data_test import (lcs, make_data, nilpotent_data, z2_data,
                        z3_negation, z4_doubling_data)

VALID = [
    ('trivial', lambda: trivial_data(lcs([2]), lcs([3]))),
    ('z4', lambda: z2_data(beta11=1)),
    ('z4 nontrivial', lambda: z2_data(beta11=1, f11=1)),
    ('negation', lambda: z3_negation()),
    ('negation twisted', lambda: z3_negation(1, 2)),
    ('nilpotent', nilpotent_data),
    ('doubling', z4_doubling_data),
]

CONFIGURATIONS = [([2], [2]), ([3], [2]), ([2], [3]), ([2, 2], [2]),
                  ([4], [2]), ([2], [4]), ([2], [2, 2])]
_ACTIONS = {}


@st.composite
def random_data(draw):
    """ Data with trivial `I`, admissible actions, `β` a coboundary and `f`
    arbitrary but normalized.
    """
    I_orders, H_orders = draw(st.sampled_from(CONFIGURATIONS))
    I, H = lcs(I_orders), lcs(H_orders)
    nI, nH = I.order, H.order
    key = (tuple(I_orders), tuple(H_orders))
    if key not in _ACTIONS:
        _ACTIONS[key] = admissible_actions(H, I)
    diamond, yleft = draw(st.sampled_from(_ACTIONS[key]))
    zeros = np.zeros((nH, nH), dtype=np.int64)
    base = ExtensionData(I, H, zeros, zeros, diamond, yleft)
    psi = [0] + draw(st.lists(st.integers(0, nI - 1), min_size=nH - 1,
                              max_size=nH - 1))
    beta = twist_by_cochain(base, psi).beta
    values = draw(st.lists(st.integers(0, nI - 1),
                           min_size=(nH - 1)**2, max_size=(nH - 1)**2))
    f = np.zeros((nH, nH), dtype=np.int64)
    f[1:, 1:] = np.reshape(values, (nH - 1, nH - 1))
    return base.replace(validate=True, beta=beta, f=f)


TRIVIAL_IDEAL_PAIRS = [
    ('Z/2 by Z/2', lambda: (lcs([2]), lcs([2]))),
    ('Z/3 by Z/2', lambda: (lcs([3]), lcs([2]))),
    ('Z/2 by Z/3', lambda: (lcs([2]), lcs([3]))),
    ('Z/2+Z/2 by Z/2', lambda: (lcs([2, 2]), lcs([2]))),
    ('Z/4 by Z/2', lambda: (lcs([4]), lcs([2]))),
    ('Z/2 by Z/4', lambda: (lcs([2]), lcs([4]))),
    ('Z/2 by Z/2+Z/2', lambda: (lcs([2]), lcs([2, 2]))),
    ('Z/2 by a·b = (1+2a)b', lambda: (lcs([2]), z4_nontrivial())),
]
SWEEP_PAIRS = TRIVIAL_IDEAL_PAIRS + [
    ('a·b = (1+2a)b by Z/2', lambda: (z4_nontrivial(), lcs([2]))),
]


def seeded(pairs):
    return [(seed, name, build) for seed, (name, build) in enumerate(pairs)]


def sweep_bases(I, H):
    """ Data with `β = f = 0` for every admissible pair of actions, or for
    the trivial actions when `I` is not trivial.
    """
    if not I.is_trivial():
        return [trivial_data(I, H)]
    zeros = np.zeros((H.order, H.order), dtype=np.int64)
    return [
        ExtensionData(I, H, zeros, zeros, diamond, yleft)
        for diamond, yleft in admissible_actions(H, I)
    ]


def abelian_cocycles(base):
    """ Every normalized symmetric `β` satisfying (2.2). """
    nI, nH = base.I.order, base.H.order
    slots = [(i, j) for i in range(1, nH) for j in range(i, nH)]
    found = []
    for values in itertools.product(range(nI), repeat=len(slots)):
        beta = np.zeros((nH, nH), dtype=np.int64)
        for (i, j), value in zip(slots, values):
            beta[i, j] = beta[j, i] = value
        if invariant_report(base.replace(beta=beta)).passed:
            found.append(beta)
    return found


def _normalized(rng, nH, nI, symmetric=False):
    table = np.zeros((nH, nH), dtype=np.int64)
    table[1:, 1:] = rng.randint(nI, size=(nH - 1, nH - 1))
    if symmetric:
        table = np.triu(table) + np.triu(table, 1).T
    return table


def draw_instance(rng, base, betas=None):
    """ Random data with the actions of `base`.

    One third are twists of `base` by a cochain with values in the center of
    `I`, one third the same with a single value of `f` changed, and the rest
    take an arbitrary normalized `f` with `β` drawn from `betas`, or any
    normalized symmetric `β` when `betas` is `None`.
    """
    I, nH = base.I, base.H.order
    kind = rng.randint(3)
    if kind == 2:
        if betas is None:
            beta = _normalized(rng, nH, I.order, symmetric=True)
        else:
            beta = betas[rng.randint(len(betas))]
        return base.replace(beta=beta, f=_normalized(rng, nH, I.order))
    phi = np.zeros(nH, dtype=np.int64)
    phi[1:] = rng.choice(center(I), size=nH - 1)
    data = twist_by_cochain(base, phi)
    if kind == 1:
        f = data.f.copy()
        h, g = rng.randint(1, nH, size=2)
        f[h, g] = I.group.add_table[f[h, g], rng.randint(1, I.order)]
        data = data.replace(f=f)
    return data


class TestCheckGeneral:

    @pytest.mark.parametrize('name, build', VALID)
    def test_valid(self, name, build):
        data = build()
        assert check_general(data).passed, name
        assert extension_report(build_product_extension(data)).passed, name
        assert cocycle_report(data).passed, name

    def test_mutation(self):
        data = z3_negation().replace(f=[[0, 0], [0, 1]])
        report = check_general(data)
        assert not report.passed
        assert report.first_failure().name == '(3.4)'
        assert report['(3.4)'].witness is not None
        assert not extension_report(build_product_extension(data)).passed

    def test_non_bijective(self):
        data = make_data(lcs([2]), lcs([2]), diamond=[[0, 1], [0, 0]],
                         validate=False)
        report = check_general(data)
        assert report['bijectivity'].witness == (1,)
        assert not extension_report(build_product_extension(data)).passed

    @settings(max_examples=40, deadline=None)
    @given(random_data())
    def test_agrees_with_axioms(self, data):
        general = check_general(data).passed
        assert general == extension_report(
            build_product_extension(data)).passed
        # I is trivial, hence central
        assert general == check_central_cocycle(data).passed

    @pytest.mark.slow
    @pytest.mark.parametrize('seed, name, build', seeded(SWEEP_PAIRS))
    def test_sweep(self, seed, name, build):
        rng = np.random.RandomState(seed)
        bases = sweep_bases(*build())
        betas = abelian_cocycles(bases[0])
        passing = 0
        for _ in range(150):
            data = draw_instance(rng, bases[rng.randint(len(bases))], betas)
            general = check_general(data).passed
            assert general == extension_report(
                build_product_extension(data)).passed, (name, data.key())
            passing += general
        assert passing > 0, name

    def test_nontrivial_ideal(self):
        # Z/4 with a·b = (1+2a)b by the trivial group
        I, H = z4_nontrivial(), lcs([])
        data = make_data(I, H)
        assert check_general(data).passed
        E = build_product_extension(data)
        assert np.array_equal(E.B.dot_table, I.dot_table)


class TestCentralCocycle:

    @pytest.mark.parametrize('name, build', VALID)
    def test_agrees(self, name, build):
        data = build()
        assert check_central_cocycle(data).passed == \
            check_general(data).passed

    def test_ordered_ledger(self):
        names = [r.name for r in check_central_cocycle(z2_data()).results]
        assert names == [
            'bijectivity', '(2.2)', '(2.3)', 'symmetry', '(3.4)', '(4.5)',
            '(4.6a)', '(4.6b)', '(4.9)', '(4.10)', '(3.16)'
        ]

    def test_non_central_f(self):
        # Z(I) = {0, 2} in Z/4 with a·b = (1+2a)b
        data = make_data(z4_nontrivial(), lcs([2]), f=[[0, 0], [0, 1]])
        with pytest.raises(HypothesisError) as excinfo:
            check_central_cocycle(data)
        assert 'f' in excinfo.value.condition
        assert excinfo.value.witness == (0, 1, 1)

    def test_central_f(self):
        data = make_data(z4_nontrivial(), lcs([2]), f=[[0, 0], [0, 2]])
        assert check_central_cocycle(data).passed
        assert check_general(data).passed


def _lambda_table(m):
    """ `y⊲1 = my` on Z/2+Z/2 with the index encoding `2*c0 + c1`. """
    table = np.zeros((4, 2), dtype=np.int64)
    for y in range(4):
        c0, c1 = y // 2, y % 2
        d0 = (m[0][0] * c0 + m[0][1] * c1) % 2
        d1 = (m[1][0] * c0 + m[1][1] * c1) % 2
        table[y, 1] = 2 * d0 + d1
    return table


class TestTrivialIdeal:

    def test_trivial_actions(self):
        report = check_trivial_ideal(z2_data(1, 1))
        assert report.passed
        assert '(4.19)' in report

    def test_nonzero_yleft(self):
        report = check_trivial_ideal(nilpotent_data())
        assert report.passed
        assert '(4.19)' not in report

    def test_not_trivial(self):
        with pytest.raises(HypothesisError):
            check_trivial_ideal(make_data(z4_nontrivial(), lcs([2])))

    def test_broken_action(self):
        # 1◆y = -y and 2◆y = y on Z/3 by Z/3
        data = make_data(lcs([3]), lcs([3]), validate=False,
                         diamond=[[0, 1, 2], [0, 2, 1], [0, 1, 2]])
        report = check_trivial_ideal(data)
        assert not report['(4.15a)'].passed
        assert report['(4.15b)'].passed

    def test_triangle_formulations(self):
        I, H = lcs([2, 2]), lcs([2])
        passing = 0
        for entries in itertools.product(range(2), repeat=4):
            m = [entries[:2], entries[2:]]
            data = make_data(I, H, yleft=_lambda_table(m), validate=False)
            report = compare_triangle_formulation(data)
            assert report['(4.10)'].passed == report['(4.13)'].passed
            passing += report['(4.10)'].passed
        # nilpotent 2x2 matrices over Z/2
        assert passing == 4

    @settings(max_examples=25, deadline=None)
    @given(random_data())
    def test_triangle_random(self, data):
        report = compare_triangle_formulation(data)
        assert report['(4.10)'].passed == report['(4.13)'].passed


class TestRemarks:

    @pytest.mark.parametrize('name, build', VALID)
    def test_valid(self, name, build):
        assert check_remarks(build()).passed, name

    def test_socle_inclusion(self):
        E = build_product_extension(nilpotent_data())
        assert check_remarks(nilpotent_data())['socle inclusion'].passed
        assert E.B.yleft(E.iota[1], E.section[1]) != 0

    def test_nontrivial_ideal(self):
        # f(1,1) = 2 is central in Z/4 with a·b = (1+2a)b
        data = make_data(z4_nontrivial(), lcs([2]), f=[[0, 0], [0, 2]])
        assert check_general(data).passed
        assert check_remarks(data).passed


class TestSigmaNu:

    @pytest.mark.parametrize('name, build', VALID)
    def test_valid(self, name, build):
        report = sigma_nu_check(build_product_extension(build()))
        assert report.passed, name

    def test_trivial_actions_reduce_to_identity(self):
        E = build_product_extension(trivial_data(lcs([3]), lcs([2])))
        assert sigma_nu_check(E).passed

    def test_not_trivial(self):
        data = make_data(z4_nontrivial(), lcs([2]))
        with pytest.raises(HypothesisError):
            sigma_nu_check(build_product_extension(data))


def test_product_of_nontrivial_quotient():
    H = z4_nontrivial()
    data = trivial_data(lcs([2]), H)
    E = build_product_extension(data)
    assert check_general(data).passed
    assert extension_report(E).passed
    assert not E.B.is_trivial()
