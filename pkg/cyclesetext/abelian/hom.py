""" Homomorphisms between finite abelian groups and their kernels, images and
quotients.

A homomorphism `G -> K` between direct sums of cyclic groups is an integer
matrix with one column per cyclic factor of `G`: column `c` holds the
coordinates of the image of the `c`-th generator. Subgroups are computed as
lattices `L` with `diag(orders) Z^g <= L <= Z^g`, whose Smith normal form
gives both the invariant factors and explicit generators.
"""
from __future__ import absolute_import, division

import itertools

import numpy as np

from ..common import check_guard, resolve_limits
from .group import FiniteAbelianGroup
from .snf import as_integer_matrix, diagonal, smith_normal_form

__all__ = [
    'GroupHom', 'hom_kernel', 'hom_image', 'quotient_invariants',
    'subquotient_invariants', 'preimage', 'all_homs', 'hom_table',
    'automorphisms'
]

# Largest absolute value for which matrix products are done with int64.
_INT64_SAFE = 2**62


def _diag(values):
    values = list(values)
    D = np.zeros((len(values), len(values)), dtype=object)
    for i, v in enumerate(values):
        D[i, i] = int(v)
    return D


def _moduli(group):
    return np.asarray(group.cyclic_orders, dtype=object)


def _matmul(A, B):
    """ Exact product of two integer matrices, using int64 when it is safe.
    """
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=object)
    bound_a = max(abs(int(v)) for v in A.flat) if A.size else 0
    bound_b = max(abs(int(v)) for v in B.flat) if B.size else 0
    if bound_a * bound_b * A.shape[1] < _INT64_SAFE:
        product = A.astype(np.int64).dot(B.astype(np.int64))
        return product.astype(object)
    return A.dot(B)


class GroupHom(object):
    """ Homomorphism of finite abelian groups given by its matrix.

    # Arguments
        domain: FiniteAbelianGroup.
        codomain: FiniteAbelianGroup.
        matrix: Integer matrix of shape (codomain.rank x domain.rank).
        check: Boolean. Verify that every generator relation is carried into
            a relation of the codomain.

    # Raises
        ValueError: if the matrix shape does not match the groups or the
            matrix does not define a homomorphism.
    """

    def __init__(self, domain, codomain, matrix, check=True):
        shape = (codomain.rank, domain.rank)
        if isinstance(matrix, np.ndarray) and matrix.size == 0:
            matrix = np.zeros(shape, dtype=object)
        M = as_integer_matrix(matrix)
        if M.shape != shape:
            raise ValueError('Homomorphism matrix has shape {}, expected {}'.
                             format(M.shape, shape))
        if M.size:
            M = M % _moduli(codomain)[:, None]
        self.domain = domain
        self.codomain = codomain
        self.matrix = M
        if check and M.size:
            relations = (M * _moduli(domain)[None, :]) % \
                _moduli(codomain)[:, None]
            bad = np.argwhere(np.asarray(relations != 0, dtype=bool))
            if len(bad):
                raise ValueError(
                    'Matrix is not well defined: generator {} of order {} is '
                    'sent to an element of larger order'.format(
                        bad[0][1], domain.cyclic_orders[bad[0][1]]))

    @classmethod
    def identity(cls, group):
        return cls(group, group, _diag([1] * group.rank), check=False)

    @classmethod
    def zero(cls, domain, codomain):
        return cls(domain, codomain,
                   np.zeros((codomain.rank, domain.rank), dtype=object),
                   check=False)

    @classmethod
    def from_function(cls, domain, codomain, function):
        """ Homomorphism whose generator images are `function(e_c)`. """
        columns = []
        for c in range(domain.rank):
            unit = [0] * domain.rank
            unit[c] = 1
            columns.append(codomain.element(function(tuple(unit))))
        M = np.array(columns, dtype=object).T.reshape(codomain.rank,
                                                      domain.rank)
        return cls(domain, codomain, M)

    def __call__(self, x):
        x = self.domain.element(x)
        if not self.codomain.rank:
            return ()
        if not x:
            return self.codomain.zero()
        image = self.matrix.dot(np.asarray(x, dtype=object))
        return self.codomain.element(image)

    def compose(self, other):
        """ Returns `self o other`. """
        if other.codomain != self.domain:
            raise ValueError('Cannot compose {} -> {} after {} -> {}'.format(
                self.domain, self.codomain, other.domain, other.codomain))
        return GroupHom(other.domain, self.codomain,
                        _matmul(self.matrix, other.matrix), check=False)

    def add(self, other):
        if (self.domain, self.codomain) != (other.domain, other.codomain):
            raise ValueError('Homomorphisms between different groups')
        return GroupHom(self.domain, self.codomain, self.matrix + other.matrix,
                        check=False)

    def is_zero(self):
        return not np.any(np.asarray(self.matrix != 0, dtype=bool))

    def __eq__(self, other):
        return (isinstance(other, GroupHom) and
                self.domain == other.domain and
                self.codomain == other.codomain and
                np.array_equal(self.matrix, other.matrix))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'GroupHom({} -> {})'.format(self.domain, self.codomain)


def _lattice_basis(group, generators):
    """ Basis of the lattice spanned by `generators` and the relations of
    `group`.

    Returns `(B, U, s)` with `B = U^-1 diag(s)` so that the coordinates of a
    vector `v` of the lattice in the basis `B` are `diag(s)^-1 U v`.
    """
    spanning = np.hstack([generators, _diag(group.cyclic_orders)])
    S, U, _, U_inv, _ = smith_normal_form(spanning, return_inverses=True)
    s = diagonal(S)[:group.rank]
    B = U_inv[:, :group.rank] * np.asarray(s, dtype=object)[None, :]
    return B, U, s


def _coordinates(U, s, vectors):
    W = U.dot(vectors) if vectors.size else \
        np.zeros((len(s), vectors.shape[1]), dtype=object)
    for i, si in enumerate(s):
        if any(w % si for w in W[i]):
            raise ValueError('Subgroup is not contained in the group')
    return W // np.asarray(s, dtype=object)[:, None] if W.size else W


def _subgroup(group, generators):
    """ Subgroup generated by the columns of `generators`, in invariant factor
    form, with its inclusion.
    """
    if not group.rank:
        trivial = FiniteAbelianGroup([])
        return trivial, GroupHom.zero(trivial, group)
    generators = as_integer_matrix(generators)
    B, U, s = _lattice_basis(group, generators)
    C = _coordinates(U, s, _diag(group.cyclic_orders))
    S, _, _, U2_inv, _ = smith_normal_form(C, return_inverses=True)
    d = diagonal(S)
    keep = [i for i, di in enumerate(d) if di > 1]
    subgroup = FiniteAbelianGroup([d[i] for i in keep])
    inclusion = B.dot(U2_inv)[:, keep]
    return subgroup, GroupHom(subgroup, group, inclusion)


def _relation_system(h):
    # h(x) = y  <=>  A x - diag(m) z = y for some integer vector z.
    return np.hstack([h.matrix, -_diag(h.codomain.cyclic_orders)])


def hom_kernel(h):
    """ Kernel of a homomorphism.

    # Arguments
        h: GroupHom.

    # Returns
        tuple: `(K, inclusion)` where `K` is a FiniteAbelianGroup in invariant
            factor form and `inclusion` the GroupHom `K -> h.domain`.
    """
    g = h.domain.rank
    if not h.codomain.rank:
        return _subgroup(h.domain, _diag([1] * g))
    S, _, V = smith_normal_form(_relation_system(h))
    rank = sum(1 for d in diagonal(S) if d != 0)
    return _subgroup(h.domain, V[:g, rank:])


def hom_image(h):
    """ Image of a homomorphism with its inclusion into the codomain. """
    return _subgroup(h.codomain, h.matrix)


def subquotient_invariants(group, big=None, small=None):
    """ Invariant factors of `big / small` for subgroups `small <= big` of
    `group`.

    # Arguments
        group: FiniteAbelianGroup.
        big: GroupHom. Inclusion of the larger subgroup, `None` for the whole
            group.
        small: GroupHom. Inclusion of the smaller subgroup, `None` for the
            zero subgroup.

    # Returns
        list: Invariant factors, trivial ones omitted.

    # Raises
        ValueError: if `small` is not contained in `big`.
    """
    g = group.rank
    if not g:
        return []
    big_gens = _diag([1] * g) if big is None else big.matrix
    small_gens = np.zeros((g, 0), dtype=object) if small is None else \
        small.matrix
    for inclusion in (big, small):
        if inclusion is not None and inclusion.codomain != group:
            raise ValueError('Subgroup is not contained in {}'.format(group))
    _, U, s = _lattice_basis(group, big_gens)
    relations = np.hstack([small_gens, _diag(group.cyclic_orders)])
    C = _coordinates(U, s, relations)
    S, _, _ = smith_normal_form(C)
    return [d for d in diagonal(S) if d > 1]


def quotient_invariants(group, inclusion):
    """ Invariant factors of `group / S` for a subgroup given by its inclusion.

    # Arguments
        group: FiniteAbelianGroup.
        inclusion: GroupHom. Injective homomorphism `S -> group`.

    # Returns
        list: Invariant factors `d_1 | d_2 | ...` of the quotient, trivial
            ones omitted. Their product is `|group| / |S|`.

    # Raises
        ValueError: if the inclusion does not land in `group` or is not
            injective.
    """
    if inclusion.codomain != group:
        raise ValueError('Subgroup is not contained in {}'.format(group))
    image, _ = hom_image(inclusion)
    if image.order != inclusion.domain.order:
        raise ValueError('Inclusion is not injective: {} elements map onto {}'.
                         format(inclusion.domain.order, image.order))
    return subquotient_invariants(group, None, inclusion)


def factor_through(inclusion, h):
    """ Corestriction of `h` to a subgroup.

    # Arguments
        inclusion: GroupHom. Injective homomorphism `S -> K`.
        h: GroupHom. Homomorphism `G -> K` whose image lies in the image of
            `inclusion`.

    # Returns
        GroupHom: The unique `g: G -> S` with `inclusion o g = h`.

    # Raises
        ValueError: if the image of some generator of `G` is not in the
            subgroup. The message names the generator.
    """
    if inclusion.codomain != h.codomain:
        raise ValueError('Homomorphisms with different codomains')
    S, G = inclusion.domain, h.domain
    if not S.rank or not G.rank:
        if G.rank and not h.is_zero():
            raise ValueError('Image is not contained in the trivial subgroup')
        return GroupHom.zero(G, S)
    if not h.codomain.rank:
        return GroupHom.zero(G, S)
    Sm, U, V = smith_normal_form(_relation_system(inclusion))
    d = diagonal(Sm)
    C = U.dot(h.matrix)
    W = np.zeros((V.shape[0], G.rank), dtype=object)
    for i in range(C.shape[0]):
        di = d[i] if i < len(d) else 0
        for c in range(G.rank):
            if di == 0:
                if C[i, c] != 0:
                    raise ValueError('Image of generator {} is not contained '
                                     'in the subgroup'.format(c))
            elif C[i, c] % di:
                raise ValueError('Image of generator {} is not contained in '
                                 'the subgroup'.format(c))
            else:
                W[i, c] = C[i, c] // di
    return GroupHom(G, S, V.dot(W)[:S.rank, :], check=False)


def preimage(h, y, limits=None):
    """ Least element (in index order) mapped by `h` onto `y`.

    # Arguments
        h: GroupHom.
        y: Element of the codomain.
        limits: SizeLimits. The kernel is scanned to find the least solution,
            its order is bounded by `max_search`.

    # Returns
        tuple or `None`: Coordinates of the solution, `None` if `y` is not in
            the image.
    """
    G, K = h.domain, h.codomain
    y = K.element(y)
    if not K.rank:
        return G.zero()
    S, U, V = smith_normal_form(_relation_system(h))
    c = U.dot(np.asarray(y, dtype=object))
    d = diagonal(S)
    w = np.zeros(G.rank + K.rank, dtype=object)
    for i, di in enumerate(d):
        if di == 0:
            if c[i] != 0:
                return None
        elif c[i] % di:
            return None
        else:
            w[i] = c[i] // di
    x0 = np.asarray(G.element(V.dot(w)[:G.rank]), dtype=np.int64)

    kernel, inclusion = hom_kernel(h)
    check_guard(resolve_limits(limits), 'max_search', kernel.order)
    M = inclusion.matrix.astype(np.int64)
    solutions = kernel.coordinates.dot(M.T) + x0[None, :] if G.rank else \
        np.zeros((1, 0), dtype=np.int64)
    best = int(np.min(G.indices_of(solutions)))
    return G.from_index(best)


def all_homs(domain, codomain, limits=None):
    """ All homomorphisms `domain -> codomain`, by generator images.

    # Raises
        SizeGuardError: if their number exceeds `max_search`.
    """
    choices = []
    for n in domain.cyclic_orders:
        choices.append([
            x for x in codomain.elements()
            if codomain.scale(n, x) == codomain.zero()
        ])
    total = int(np.prod([len(c) for c in choices], dtype=object)) \
        if choices else 1
    check_guard(resolve_limits(limits), 'max_search', total)
    homs = []
    for images in itertools.product(*choices):
        M = np.array(images, dtype=object).T.reshape(codomain.rank,
                                                     domain.rank)
        homs.append(GroupHom(domain, codomain, M, check=False))
    return homs


def hom_table(h):
    """ Index table of a homomorphism: entry `x` is the index of `h(x)`. """
    images = h.domain.coordinates.dot(h.matrix.astype(np.int64).T)
    return h.codomain.indices_of(images)


def automorphisms(group, limits=None):
    """ Index tables of all automorphisms of `group`, in lexicographic order.
    """
    tables = []
    for h in all_homs(group, group, limits=limits):
        table = hom_table(h)
        if len(np.unique(table)) == group.order:
            tables.append(tuple(int(v) for v in table))
    return [np.asarray(t, dtype=np.int64) for t in sorted(tables)]
