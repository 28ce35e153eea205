from __future__ import absolute_import, division

import itertools
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from .snf import diagonal, smith_normal_form


def _det(M):
    # Bareiss fraction-free determinant of a square integer matrix.
    M = [list(map(int, row)) for row in M]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _minors_gcd(M, k):
    m, n = M.shape
    g = 0
    for rows in itertools.combinations(range(m), k):
        for cols in itertools.combinations(range(n), k):
            g = gcd(g, abs(_det(M[np.ix_(rows, cols)])))
    return g


def _check_decomposition(M):
    M = np.array(M, dtype=object)
    S, U, V, U_inv, V_inv = smith_normal_form(M, return_inverses=True)
    assert np.array_equal(U.dot(M).dot(V), S)
    assert abs(_det(U)) == 1
    assert abs(_det(V)) == 1
    m, n = M.shape
    assert np.array_equal(U.dot(U_inv), np.eye(m, dtype=int))
    assert np.array_equal(V.dot(V_inv), np.eye(n, dtype=int))
    for i, j in itertools.product(range(m), range(n)):
        if i != j:
            assert S[i, j] == 0
    d = diagonal(S)
    assert all(x >= 0 for x in d)
    for a, b in zip(d, d[1:]):
        assert (a == 0 and b == 0) or (a != 0 and b % a == 0)
    return d


class TestSmithNormalForm:

    def test_identity(self):
        S, U, V = smith_normal_form(np.eye(3, dtype=int))
        assert np.array_equal(S, np.eye(3, dtype=int))
        assert np.array_equal(U, np.eye(3, dtype=int))
        assert np.array_equal(V, np.eye(3, dtype=int))

    def test_zero(self):
        S, U, V = smith_normal_form(np.zeros((2, 3), dtype=int))
        assert not np.any(S != 0)
        assert np.array_equal(U, np.eye(2, dtype=int))
        assert np.array_equal(V, np.eye(3, dtype=int))

    def test_small_example(self):
        assert _check_decomposition([[2, 4], [6, 8]]) == [2, 4]

    @pytest.mark.parametrize('shape', [(0, 0), (0, 3), (2, 0)])
    def test_empty(self, shape):
        S, U, V = smith_normal_form(np.zeros(shape, dtype=object))
        assert S.shape == shape
        assert U.shape == (shape[0], shape[0])
        assert V.shape == (shape[1], shape[1])

    def test_big_integers(self):
        big = 10**30
        d = _check_decomposition([[big, 0], [0, 3 * big]])
        assert d == [big, 3 * big]

    def test_diagonal_not_dividing(self):
        assert _check_decomposition([[2, 0], [0, 3]]) == [1, 6]
        assert _check_decomposition([[4, 0, 0], [0, 6, 0], [0, 0, 10]]) == \
            [2, 2, 60]

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-12, 12), min_size=n, max_size=n),
                min_size=m,
                max_size=m))))
    def test_random_against_minors(self, rows):
        M = np.array(rows, dtype=object)
        d = _check_decomposition(M)
        prod = 1
        for k in range(1, min(M.shape) + 1):
            prod *= d[k - 1]
            assert prod == _minors_gcd(M, k)
