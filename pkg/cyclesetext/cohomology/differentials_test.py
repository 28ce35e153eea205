from __future__ import absolute_import, division

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ..abelian import group_from_orders
from ..common import InvalidActionError
from ..extension.data_test import NILPOTENT_YLEFT, lcs
from ..lcs.cycle_set_test import z4_nontrivial
from .differentials import Bicomplex, action_tables, diff_D, diff_h, diff_v

NEGATION = [[0, 1, 2], [0, 2, 1]]
DOUBLING = [[0, 0], [0, 2], [0, 0], [0, 2]]

CONFIGURATIONS = [
    ('trivial', lambda: lcs([3]), [2], None, None),
    ('negation', lambda: lcs([2]), [3], NEGATION, None),
    ('nilpotent', lambda: lcs([2]), [2, 2], None, NILPOTENT_YLEFT),
    ('doubling', lambda: lcs([2]), [4], None, DOUBLING),
    ('z4', z4_nontrivial, [2], None, None),
    ('z3 by z3', lambda: lcs([3]), [3], [[0, 1, 2], [0, 2, 1], [0, 1, 2]],
     None),
]

BIDEGREES = [(0, 1), (1, 1), (0, 2), (2, 1), (1, 2), (0, 3)]


class _Direct(object):
    """ The differentials evaluated one argument list at a time. """

    def __init__(self, H, I, diamond, yleft):
        self.PH, self.DH = H.group.add_table, H.dot_table
        self.G = I.group
        self.diamond, self.yleft = action_tables(H, I, diamond, yleft)

    def hsum(self, args):
        total = 0
        for a in args:
            total = self.PH[total, a]
        return total

    def combine(self, terms):
        total = 0
        for sign, y in terms:
            y = y if sign > 0 else self.G.neg_table[y]
            total = self.G.add_table[total, y]
        return total

    def h(self, f, r, s, x):
        DH, PH = self.DH, self.PH
        terms = [(1, f[tuple(DH[x[0], a] for a in x[1:])])]
        for j in range(1, r + 1):
            merged = x[:j - 1] + (PH[x[j - 1], x[j]],) + x[j + 1:]
            terms.append(((-1)**j, f[merged]))
        R = DH[self.hsum(x[:r]), x[r]]
        terms.append(((-1)**(r + 1), self.diamond[R, f[x[:r] + x[r + 1:]]]))
        return self.combine(terms)

    def v(self, f, r, s, x):
        c = (-1)**(r + 1)
        terms = [(c, f[x[:r] + x[r + 1:]])]
        for i in range(1, s + 1):
            p = r + i - 1
            merged = x[:p] + (self.PH[x[p], x[p + 1]],) + x[p + 2:]
            terms.append((c * (-1)**i, f[merged]))
        terms.append((c * (-1)**(s + 1), f[x[:r + s]]))
        return self.combine(terms)

    def D(self, f, r, s, x):
        m = r + s
        R = self.DH[self.hsum(x[:r]), self.hsum(x[r:m])]
        R_last = self.DH[self.hsum(x[:m]), x[m]]
        y = self.yleft[self.diamond[R, f[x[:m]]], R_last]
        return self.combine([((-1)**(r + 1), y)])


def _compare(bc, direct, kind, r, s, values):
    source = bc.cochains(r, s)
    target = bc.cochains(*bc.target(kind, r, s))
    table = source.table(values)
    image = bc.ambient(kind, r, s)(source.vector(values))
    expected = [getattr(direct, kind)(table, r, s, tuple(int(h) for h in x))
                for x in target.tuples]
    assert target.to_values(image).tolist() == expected


class TestAgainstFormulas:

    @pytest.mark.parametrize('name, build, orders, diamond, yleft',
                             CONFIGURATIONS)
    @pytest.mark.parametrize('kind', ['h', 'v', 'D'])
    @settings(max_examples=4, deadline=None)
    @given(seed=st.integers(0, 2**16))
    def test_random_cochains(self, name, build, orders, diamond, yleft, kind,
                             seed):
        H, I = build(), lcs(orders)
        bc = Bicomplex(H, I, diamond, yleft)
        direct = _Direct(H, I, diamond, yleft)
        rng = np.random.RandomState(seed)
        for r, s in BIDEGREES:
            values = rng.randint(0, I.order, size=bc.cochains(r, s).size)
            _compare(bc, direct, kind, r, s, values)

    def test_trivial_action_is_plain_evaluation(self):
        # with ◆ trivial the last term of ∂_h is (-1)^{r+1} f(h_1..h_r, ...)
        H, I = z4_nontrivial(), lcs([3])
        bc = Bicomplex(H, I)
        PH, DH = H.group.add_table, H.dot_table
        rng = np.random.RandomState(0)
        r, s = 1, 1
        source, target = bc.cochains(r, s), bc.cochains(r + 1, s)
        values = rng.randint(0, 3, size=source.size)
        f = source.table(values)
        image = target.to_values(bc.ambient('h', r, s)(source.vector(values)))
        for t, (h1, h2, h3) in enumerate(target.tuples):
            expected = (f[DH[h1, h2], DH[h1, h3]] - f[PH[h1, h2], h3] +
                        f[h1, h3]) % 3
            assert image[t] == expected


class TestDegreeOne:

    def test_h(self):
        # ∂_hφ(h1,h2) = φ(h1·h2) - h1◆φ(h2)
        H, I = z4_nontrivial(), lcs([3])
        diamond = [[0, 1, 2], [0, 2, 1], [0, 1, 2], [0, 2, 1]]
        bc = Bicomplex(H, I, diamond)
        phi = np.array([0, 1, 2, 2])
        image = bc.ambient('h', 0, 1)(bc.cochains(0, 1).vector(phi[1:]))
        target = bc.cochains(1, 1)
        for t, (h1, h2) in enumerate(target.tuples):
            value = (phi[H.dot(h1, h2)] - diamond[h1][phi[h2]]) % 3
            assert target.to_values(image)[t] == value

    def test_v(self):
        # ∂_vφ(h1,h2) = -φ(h2) + φ(h1+h2) - φ(h1)
        H, I = lcs([3]), lcs([5])
        bc = Bicomplex(H, I)
        phi = np.array([0, 1, 3])
        image = bc.ambient('v', 0, 1)(bc.cochains(0, 1).vector(phi[1:]))
        target = bc.cochains(0, 2)
        for t, (h1, h2) in enumerate(target.tuples):
            value = (-phi[h2] + phi[(h1 + h2) % 3] - phi[h1]) % 5
            assert target.to_values(image)[t] == value

    def test_v_on_z2(self):
        # h + h = 0, so ∂_vφ(1,1) = -2φ(1)
        bc = Bicomplex(lcs([2]), lcs([5]))
        image = bc.ambient('v', 0, 1)(bc.cochains(0, 1).vector([2]))
        assert bc.cochains(0, 2).to_values(image).tolist() == [1]

    def test_D(self):
        # Dφ(h1,h2) = -(h1◆φ(h1))⊲(h1·h2)
        bc = Bicomplex(lcs([2]), lcs([2, 2]), yleft=NILPOTENT_YLEFT)
        image = bc.ambient('D', 0, 1)(bc.cochains(0, 1).vector([1]))
        assert bc.cochains(1, 1).to_values(image).tolist() == [2]

    def test_trivial_quotient_action(self):
        # H trivial and ◆ trivial: ∂_hφ(h1,h2) = φ(h2) - φ(h2)
        assert diff_h(lcs([3]), group_from_orders([2]), None, 0, 1).is_zero()

    def test_zero_yleft(self):
        for r, s in [(0, 1), (1, 1), (0, 2)]:
            assert diff_D(lcs([3]), lcs([3]), None, None, r, s).is_zero()

    def test_homomorphisms(self):
        H, I = lcs([3]), group_from_orders([2])
        d = diff_v(H, I, 0, 2)
        assert d.domain.order == 2**3
        assert d.codomain == Bicomplex(H, I).cochains(0, 3).group


class TestActions:

    def test_defaults(self):
        diamond, yleft = action_tables(lcs([2]), lcs([3]))
        assert diamond.tolist() == [[0, 1, 2], [0, 1, 2]]
        assert not yleft.any()

    def test_non_additive_diamond(self):
        with pytest.raises(InvalidActionError) as excinfo:
            Bicomplex(lcs([2]), lcs([3]), diamond=[[0, 1, 2], [0, 1, 1]])
        assert '◆' in excinfo.value.law

    def test_non_additive_yleft(self):
        with pytest.raises(InvalidActionError) as excinfo:
            Bicomplex(lcs([2]), lcs([3]), yleft=[[0, 0], [0, 1], [0, 1]])
        assert excinfo.value.law == "(y+y')⊲h = y⊲h + y'⊲h"

    def test_identity_row(self):
        with pytest.raises(InvalidActionError):
            Bicomplex(lcs([2]), lcs([3]), diamond=[[0, 2, 1], [0, 2, 1]])

    def test_malformed(self):
        with pytest.raises(ValueError):
            Bicomplex(lcs([2]), lcs([3]), diamond=[[0, 1, 2]])


class TestNormalization:

    @pytest.mark.parametrize('name, build, orders, diamond, yleft',
                             CONFIGURATIONS[:4])
    def test_preserved(self, name, build, orders, diamond, yleft):
        bc = Bicomplex(build(), lcs(orders), diamond, yleft)
        for (r, s), kind in itertools.product([(0, 1), (0, 2), (1, 1)],
                                              ['h', 'v', 'D']):
            assert bc.violation(kind, r, s) is None, (name, kind, r, s)
            hom = bc.map(kind, r, s)
            assert hom.domain == bc.cochains(r, s).group

    def test_cached(self):
        bc = Bicomplex(lcs([3]), lcs([2]))
        assert bc.h(0, 2) is bc.h(0, 2)
        assert bc.cochains(1, 1) is bc.cochains(1, 1)
