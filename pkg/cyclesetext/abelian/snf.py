""" Smith normal form over the integers.

Matrices are numpy arrays of `dtype=object` so every entry is an arbitrary
precision Python integer. The elimination pivots on the entry of minimal
absolute value and keeps track of the unimodular transformations and their
inverses.
"""
from __future__ import absolute_import, division

import numpy as np

__all__ = ['smith_normal_form', 'as_integer_matrix', 'diagonal']


def as_integer_matrix(matrix, shape=None):
    """ Converts `matrix` to a 2D numpy array of Python integers. """
    M = np.array(matrix, dtype=object)
    if shape is not None:
        M = M.reshape(shape)
    if M.ndim != 2:
        raise ValueError('Expected a 2D matrix, got shape {}'.format(M.shape))
    return np.vectorize(int, otypes=[object])(M) if M.size else M


def _identity(n):
    I = np.zeros((n, n), dtype=object)
    for i in range(n):
        I[i, i] = 1
    return I


class _Reduction(object):
    """ Bookkeeping of U, V and their inverses along the elimination. """

    def __init__(self, matrix):
        self.A = as_integer_matrix(matrix).copy()
        m, n = self.A.shape
        self.U, self.U_inv = _identity(m), _identity(m)
        self.V, self.V_inv = _identity(n), _identity(n)

    def add_row(self, target, source, c):
        # row_target += c * row_source
        if c == 0:
            return
        self.A[target, :] += c * self.A[source, :]
        self.U[target, :] += c * self.U[source, :]
        self.U_inv[:, source] -= c * self.U_inv[:, target]

    def swap_rows(self, i, j):
        if i == j:
            return
        for M in (self.A, self.U):
            M[[i, j], :] = M[[j, i], :]
        self.U_inv[:, [i, j]] = self.U_inv[:, [j, i]]

    def swap_cols(self, i, j):
        if i == j:
            return
        for M in (self.A, self.V):
            M[:, [i, j]] = M[:, [j, i]]
        self.V_inv[[i, j], :] = self.V_inv[[j, i], :]

    def negate_row(self, i):
        self.A[i, :] = -self.A[i, :]
        self.U[i, :] = -self.U[i, :]
        self.U_inv[:, i] = -self.U_inv[:, i]


def _min_abs_position(block):
    if block.size == 0:
        return None
    magnitude = np.abs(block)
    nonzero = np.asarray(magnitude != 0, dtype=bool)
    if not nonzero.any():
        return None
    positions = np.argwhere(nonzero)
    k = int(np.argmin(magnitude[nonzero]))
    return int(positions[k][0]), int(positions[k][1])


def _reduce(matrix):
    r = _Reduction(matrix)
    A, U, U_inv, V, V_inv = r.A, r.U, r.U_inv, r.V, r.V_inv
    m, n = A.shape
    for t in range(min(m, n)):
        position = _min_abs_position(A[t:, t:])
        if position is None:
            break
        r.swap_rows(t, t + position[0])
        r.swap_cols(t, t + position[1])
        while True:
            p = A[t, t]
            # Clear column t below and row t to the right of the pivot.
            q = -(A[t + 1:, t] // p)
            A[t + 1:, :] += np.outer(q, A[t, :])
            U[t + 1:, :] += np.outer(q, U[t, :])
            U_inv[:, t] -= U_inv[:, t + 1:].dot(q)
            c = -(A[t, t + 1:] // p)
            A[:, t + 1:] += np.outer(A[:, t], c)
            V[:, t + 1:] += np.outer(V[:, t], c)
            V_inv[t, :] -= c.dot(V_inv[t + 1:, :])

            rest = _min_abs_position(
                np.concatenate([A[t + 1:, t], A[t, t + 1:]])[None, :])
            if rest is not None:
                # A remainder smaller than the pivot is left: it becomes the
                # new pivot.
                k = rest[1]
                if k < m - t - 1:
                    r.swap_rows(t, t + 1 + k)
                else:
                    r.swap_cols(t, t + 1 + k - (m - t - 1))
                continue
            if abs(p) != 1 and t + 1 < m and t + 1 < n:
                # Enforce d_t | every entry of the remaining block.
                bad = np.argwhere(
                    np.asarray(A[t + 1:, t + 1:] % p != 0, dtype=bool))
                if len(bad):
                    r.add_row(t, t + 1 + int(bad[0][0]), 1)
                    continue
            break
        if A[t, t] < 0:
            r.negate_row(t)
    return r


def smith_normal_form(matrix, return_inverses=False):
    """ Smith normal form of an integer matrix.

    # Arguments
        matrix: Array-like of integers with shape (m x n).
        return_inverses: Boolean. Also return the inverses of U and V.

    # Returns
        tuple: `(S, U, V)` with `U . M . V = S`, `S` diagonal with
            nonnegative entries `d_1 | d_2 | ...` and `U`, `V` unimodular. With
            `return_inverses=True` the tuple is `(S, U, V, U_inv, V_inv)`.
    """
    r = _reduce(matrix)
    if return_inverses:
        return r.A, r.U, r.V, r.U_inv, r.V_inv
    return r.A, r.U, r.V


def diagonal(S):
    """ Diagonal entries of a matrix in Smith normal form as integers. """
    return [int(d) for d in np.diagonal(S)]
