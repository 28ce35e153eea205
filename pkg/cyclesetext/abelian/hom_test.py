from __future__ import absolute_import, division

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ..common import SizeGuardError, SizeLimits
from .group import group_from_orders
from .hom import (GroupHom, all_homs, automorphisms, factor_through,
                  hom_image, hom_kernel, hom_table, preimage,
                  quotient_invariants, subquotient_invariants)


def _times(k, G):
    return GroupHom.from_function(G, G, lambda x: G.scale(k, x))


def _image_set(h):
    return {h(x) for x in h.domain.elements()}


def _kernel_set(h):
    zero = h.codomain.zero()
    return {x for x in h.domain.elements() if h(x) == zero}


@st.composite
def random_homs(draw):
    orders = st.lists(st.integers(1, 4), min_size=0, max_size=2)
    G = group_from_orders(draw(orders))
    K = group_from_orders(draw(orders))
    return draw(st.sampled_from(all_homs(G, K)))


class TestGroupHom:

    def test_not_well_defined(self):
        Z2, Z4 = group_from_orders([2]), group_from_orders([4])
        with pytest.raises(ValueError):
            GroupHom(Z2, Z4, [[1]])
        GroupHom(Z2, Z4, [[2]])
        with pytest.raises(ValueError):
            GroupHom(Z2, Z4, [[1, 0]])

    def test_compose(self):
        G = group_from_orders([4, 6])
        h = _times(2, G).compose(_times(3, G))
        for x in G.elements():
            assert h(x) == G.scale(6, x)
        with pytest.raises(ValueError):
            h.compose(GroupHom.identity(group_from_orders([2])))

    @settings(max_examples=50, deadline=None)
    @given(random_homs())
    def test_additive(self, h):
        G = h.domain
        for x in G.elements():
            for y in G.elements():
                assert h(G.add(x, y)) == h.codomain.add(h(x), h(y))


class TestKernelImage:

    def test_times_two(self):
        Z4 = group_from_orders([4])
        K, inc = hom_kernel(_times(2, Z4))
        assert K.order == 2
        assert _image_set(inc) == {(0,), (2,)}
        Im, inc = hom_image(_times(2, Z4))
        assert Im.order == 2
        assert _image_set(inc) == {(0,), (2,)}

    def test_zero_and_identity(self):
        G = group_from_orders([2, 4])
        K, inc = hom_kernel(GroupHom.zero(G, G))
        assert K.order == G.order
        assert _image_set(inc) == set(G.elements())
        K, _ = hom_kernel(GroupHom.identity(G))
        assert K.order == 1
        Im, _ = hom_image(GroupHom.zero(G, G))
        assert Im.order == 1
        Im, inc = hom_image(GroupHom.identity(G))
        assert Im.order == G.order
        assert _image_set(inc) == set(G.elements())

    def test_trivial_codomain(self):
        G = group_from_orders([3, 3])
        K, inc = hom_kernel(GroupHom.zero(G, group_from_orders([])))
        assert K.order == 9

    @settings(max_examples=80, deadline=None)
    @given(random_homs())
    def test_first_isomorphism(self, h):
        K, k_inc = hom_kernel(h)
        Im, i_inc = hom_image(h)
        assert K.order * Im.order == h.domain.order
        assert h.codomain.order % Im.order == 0
        assert _image_set(k_inc) == _kernel_set(h)
        assert _image_set(i_inc) == _image_set(h)
        assert quotient_invariants(h.domain, k_inc) == Im.invariant_factors()


class TestQuotients:

    def test_examples(self):
        Z4 = group_from_orders([4])
        _, inc = hom_kernel(_times(2, Z4))
        assert quotient_invariants(Z4, inc) == [2]
        assert quotient_invariants(Z4, GroupHom.identity(Z4)) == []
        G = group_from_orders([2, 6])
        zero = group_from_orders([])
        assert quotient_invariants(G, GroupHom.zero(zero, G)) == [2, 6]

    def test_not_injective(self):
        Z4 = group_from_orders([4])
        with pytest.raises(ValueError):
            quotient_invariants(Z4, _times(2, Z4))

    def test_not_contained(self):
        Z4, Z2 = group_from_orders([4]), group_from_orders([2])
        with pytest.raises(ValueError):
            quotient_invariants(Z2, GroupHom.identity(Z4))
        _, half = hom_kernel(_times(2, Z4))
        whole = GroupHom.identity(Z4)
        with pytest.raises(ValueError):
            subquotient_invariants(Z4, half, whole)
        assert subquotient_invariants(Z4, whole, half) == [2]
        assert subquotient_invariants(Z4, half, None) == [2]


class TestPreimage:

    def test_examples(self):
        G = group_from_orders([2, 4])
        for y in G.elements():
            assert preimage(GroupHom.identity(G), y) == y
        assert preimage(GroupHom.zero(G, G), (1, 0)) is None
        Z4 = group_from_orders([4])
        assert preimage(_times(2, Z4), (2,)) == (1,)
        assert preimage(_times(2, Z4), (1,)) is None

    @settings(max_examples=80, deadline=None)
    @given(random_homs(), st.integers(0, 10**6))
    def test_least_solution(self, h, seed):
        G, K = h.domain, h.codomain
        y = h(G.from_index(seed % G.order))
        x = preimage(h, y)
        solutions = [z for z in G.elements() if h(z) == y]
        assert x == min(solutions, key=G.index)
        y = K.from_index(seed % K.order)
        if all(h(z) != y for z in G.elements()):
            assert preimage(h, y) is None

    def test_guard(self):
        G = group_from_orders([2, 2, 2])
        limits = SizeLimits(8, 4, 4, 10)
        with pytest.raises(SizeGuardError):
            preimage(GroupHom.zero(G, group_from_orders([2])), (0,),
                     limits=limits)


class TestAllHoms:

    def test_counts(self):
        Z2, Z4, Z6 = (group_from_orders([n]) for n in (2, 4, 6))
        assert len(all_homs(Z4, Z6)) == 2
        assert len(all_homs(Z2, Z4)) == 2
        assert len(all_homs(Z4, Z4)) == 4
        assert len(all_homs(group_from_orders([2, 2]), Z4)) == 4
        assert np.array_equal(all_homs(Z4, Z4)[1].matrix, [[1]])


class TestAutomorphisms:

    @pytest.mark.parametrize('orders,count', [([2], 1), ([3], 2), ([4], 2),
                                              ([2, 2], 6), ([], 1), ([6], 2),
                                              ([2, 2, 2], 168)])
    def test_counts(self, orders, count):
        G = group_from_orders(orders)
        auts = automorphisms(G)
        assert len(auts) == count
        assert [tuple(t) for t in auts] == sorted(tuple(t) for t in auts)
        assert tuple(auts[0]) == tuple(range(G.order))

    def test_hom_table(self):
        Z4 = group_from_orders([4])
        assert list(hom_table(_times(2, Z4))) == [0, 2, 0, 2]
        assert list(hom_table(_times(3, Z4))) == [0, 3, 2, 1]


class TestFactorThrough:

    def test_through_kernel(self):
        Z4 = group_from_orders([4])
        _, half = hom_kernel(_times(2, Z4))
        g = factor_through(half, _times(2, Z4))
        for x in Z4.elements():
            assert half(g(x)) == Z4.scale(2, x)

    def test_not_contained(self):
        Z4 = group_from_orders([4])
        _, half = hom_kernel(_times(2, Z4))
        with pytest.raises(ValueError):
            factor_through(half, GroupHom.identity(Z4))

    def test_trivial_subgroup(self):
        G = group_from_orders([2, 2])
        zero = group_from_orders([])
        g = factor_through(GroupHom.zero(zero, G), GroupHom.zero(G, G))
        assert g.codomain == zero
        with pytest.raises(ValueError):
            factor_through(GroupHom.zero(zero, G), GroupHom.identity(G))

    @settings(max_examples=50, deadline=None)
    @given(random_homs())
    def test_through_image(self, h):
        _, inc = hom_image(h)
        g = factor_through(inc, h)
        for x in h.domain.elements():
            assert inc(g(x)) == h(x)
