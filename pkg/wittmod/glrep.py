# Copyright (C) 2026  The wittmod developers

# This program is free software; you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation; either version 2 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License along
# with this program; if not, write to the Free Software Foundation, Inc.,
# 51 Franklin Street, Fifth Floor, Boston, MA 02110-1301 USA.

"""Finite-dimensional gl_n-modules.

A :class:`GlRep` stores one matrix per matrix unit E_ij together with
the weight of every basis vector. Exterior powers are built directly;
a general V(lambda) is cut out of a tensor product of exterior powers
(one per column of the Young diagram) by closing the product of
highest-weight vectors under the lowering operators E_{i+1,i}.
"""

from collections import OrderedDict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from . import field
from . import linalg
from .kernel import SparseCombo
from .utils.exc import RepresentationError, PreconditionError, \
    DimensionMismatchError


class GlRep(object):
    """A finite-dimensional representation of gl_n.

    **Parameters:**

    n : integer

    matrices : dict
        Maps each 0-based pair ``(i, j)`` to the ``DomainMatrix`` of
        E_ij.

    weights : list of tuples of Scalars
        The E_11, ..., E_nn eigenvalues of every basis vector.

    highest_weight : tuple of Scalars, optional
        When given, basis vector 0 must have this weight and be killed
        by every E_ij with i < j.

    label : string, optional

    basis_labels : list, optional
        Names of the basis vectors (the index sets of an exterior
        power, for instance).

    verify : bool
        Check the commutation relations and the weights.
    """

    def __init__(self, n, matrices, weights, highest_weight=None,
                 label=None, basis_labels=None, verify=True):
        self.n = n
        self.matrices = dict(matrices)
        self.weights = [tuple(field.convert(w) for w in weight)
                        for weight in weights]
        self.dim = len(self.weights)
        self.highest_weight = None if highest_weight is None else \
            tuple(field.convert(x) for x in highest_weight)
        self.label = label
        self.basis_labels = list(basis_labels) if basis_labels is not None \
            else list(range(self.dim))
        self.index_of = dict((b, k) for k, b in enumerate(self.basis_labels))
        self._columns = {}
        if verify:
            self.check()

    def __repr__(self):
        return 'GlRep(n=%d, dim=%d%s)' % (
            self.n, self.dim, ', %s' % self.label if self.label else '')

    def __eq__(self, other):
        if not isinstance(other, GlRep):
            return NotImplemented
        return self.n == other.n and self.weights == other.weights and \
            all(self.matrices[key] == other.matrices[key]
                for key in self.matrices)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.n, self.dim, tuple(self.weights)))

    def E(self, i, j):
        return self.matrices[(i, j)]

    def columns(self, i, j):
        """E_ij applied to every basis vector, as sparse dicts"""
        try:
            return self._columns[(i, j)]
        except KeyError:
            rows = self.matrices[(i, j)].to_list()
            cols = [dict((a, rows[a][b]) for a in range(self.dim)
                         if rows[a][b]) for b in range(self.dim)]
            self._columns[(i, j)] = cols
            return cols

    def apply(self, i, j, vector):
        """ E_ij times a vector given as a list of Scalars """
        if len(vector) != self.dim:
            raise DimensionMismatchError(
                "Vector of length %d for a module of dimension %d" %
                (len(vector), self.dim))
        return linalg.apply(self.matrices[(i, j)],
                            [field.convert(c) for c in vector])

    def check(self):
        n = self.n
        for i in range(n):
            for j in range(n):
                if (i, j) not in self.matrices:
                    raise RepresentationError(
                        "Missing matrix for E_%d%d" % (i + 1, j + 1))
                if self.matrices[(i, j)].shape != (self.dim, self.dim):
                    raise RepresentationError(
                        "E_%d%d has shape %s, expected %d x %d" %
                        (i + 1, j + 1, self.matrices[(i, j)].shape,
                         self.dim, self.dim))
        for i, j, k, l in product(range(n), repeat=4):
            lhs = linalg.commutator(self.E(i, j), self.E(k, l))
            rhs = linalg.zeros(self.dim, self.dim)
            if j == k:
                rhs = rhs + self.E(i, l)
            if l == i:
                rhs = rhs - self.E(k, j)
            if lhs != rhs:
                raise RepresentationError(
                    "[E_%d%d, E_%d%d] relation fails" %
                    (i + 1, j + 1, k + 1, l + 1), (i, j, k, l))
        for i in range(n):
            rows = self.E(i, i).to_list()
            for a in range(self.dim):
                for b in range(self.dim):
                    expected = self.weights[a][i] if a == b else field.zero
                    if rows[a][b] != expected:
                        raise RepresentationError(
                            "Basis vector %d is not an E_%d%d eigenvector "
                            "with the recorded weight" % (a, i + 1, i + 1),
                            (a, i))
        if self.highest_weight is not None:
            if not self.dim or self.weights[0] != self.highest_weight:
                raise RepresentationError(
                    "Basis vector 0 does not have the highest weight")
            for i in range(n):
                for j in range(i + 1, n):
                    if self.columns(i, j)[0]:
                        raise RepresentationError(
                            "E_%d%d does not kill the highest weight "
                            "vector" % (i + 1, j + 1), (i, j))

    def to_dict(self):
        fmt = field.format
        matrices = {}
        for (i, j), M in sorted(self.matrices.items()):
            rows = M.to_list()
            matrices['%d,%d' % (i + 1, j + 1)] = [
                [a, b, fmt(rows[a][b])] for a in range(self.dim)
                for b in range(self.dim) if rows[a][b]]
        return {
            'type': 'GlRep',
            'n': self.n,
            'dim': self.dim,
            'label': self.label,
            'highest_weight': None if self.highest_weight is None else
            [fmt(x) for x in self.highest_weight],
            'weights': [[fmt(x) for x in w] for w in self.weights],
            'basis_labels': [list(b) if isinstance(b, tuple) else b
                             for b in self.basis_labels],
            'matrices': matrices,
        }

    @classmethod
    def from_dict(cls, data):
        n, dim = data['n'], data['dim']
        matrices = {}
        for key, triplets in data['matrices'].items():
            i, j = [int(x) - 1 for x in key.split(',')]
            rows = [[field.zero] * dim for _ in range(dim)]
            for a, b, value in triplets:
                rows[a][b] = field.parse(value)
            matrices[(i, j)] = linalg.matrix(rows, dim)
        for i in range(n):
            for j in range(n):
                matrices.setdefault((i, j), linalg.zeros(dim, dim))
        hw = data.get('highest_weight')
        labels = data.get('basis_labels')
        if labels is not None:
            labels = [tuple(b) if isinstance(b, list) else b for b in labels]
        return cls(n, matrices,
                   [[field.parse(x) for x in w] for w in data['weights']],
                   highest_weight=None if hw is None else
                   [field.parse(x) for x in hw],
                   label=data.get('label'), basis_labels=labels)


def weight_spaces(V):
    """ Basis indices grouped by weight, in order of first appearance """
    spaces = OrderedDict()
    for k, w in enumerate(V.weights):
        spaces.setdefault(w, []).append(k)
    return spaces


def _wedge_apply(S, i, j):
    """E_ij e_S as (sign, S') or None"""
    if j not in S:
        return None
    if i == j:
        return 1, S
    if i in S:
        return None
    lo, hi = min(i, j), max(i, j)
    between = sum(1 for s in S if lo < s < hi)
    T = tuple(sorted([s for s in S if s != j] + [i]))
    return (-1) ** between, T


@lru_cache(maxsize=None)
def exterior_power(k, n):
    """ Lambda^k of the natural module, basis e_S in lex order """
    if not 0 <= k <= n:
        raise PreconditionError(
            "Exterior power %d out of range 0..%d" % (k, n))
    basis = list(combinations(range(n), k))
    index = dict((S, a) for a, S in enumerate(basis))
    dim = len(basis)
    matrices = {}
    for i in range(n):
        for j in range(n):
            rows = [[field.zero] * dim for _ in range(dim)]
            for b, S in enumerate(basis):
                image = _wedge_apply(S, i, j)
                if image is not None:
                    sign, T = image
                    rows[index[T]][b] = field.convert(sign)
            matrices[(i, j)] = linalg.matrix(rows, dim)
    weights = [tuple(1 if a in S else 0 for a in range(n)) for S in basis]
    delta = tuple(1 if a < k else 0 for a in range(n))
    return GlRep(n, matrices, weights, highest_weight=delta,
                 label='Lambda^%d' % k, basis_labels=basis)


def natural_module(n):
    return exterior_power(1, n)


def trivial_module(n):
    return exterior_power(0, n)


def weyl_dimension(shape):
    """prod_{i<j} (l_i - l_j + j - i) / (j - i) for an integer weight"""
    n = len(shape)
    result = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            result *= Fraction(shape[i] - shape[j] + j - i, j - i)
    return int(result)


class _TensorVec(SparseCombo):
    __slots__ = ()


def _tensor_apply(factors, i, j, vec):
    out = {}
    for key, c in vec.items():
        for pos, factor in enumerate(factors):
            for row, a in factor.columns(i, j)[key[pos]].items():
                new = key[:pos] + (row,) + key[pos + 1:]
                value = out.get(new, field.zero) + c * a
                if value:
                    out[new] = value
                else:
                    out.pop(new, None)
    return _TensorVec._from_clean(out)


def _tensor_weight(factors, key):
    n = factors[0].n
    return tuple(sum(1 for f, b in zip(factors, key)
                     if a in f.basis_labels[b])
                 for a in range(n))


def dominant_shape(lam):
    """Split lambda into (integer shape with last entry 0, shift).
    Raises PreconditionError unless every lambda_i - lambda_{i+1} is a
    nonnegative integer constant."""
    lam = [field.convert(x) for x in lam]
    n = len(lam)
    shift = lam[-1]
    shape = []
    for i in range(n):
        diff = field.is_integer_constant(lam[i] - shift)
        if diff is None:
            raise PreconditionError(
                "lambda_%d - lambda_%d = %s is not an integer constant" %
                (i + 1, n, field.format(lam[i] - shift)))
        shape.append(diff)
    for i in range(n - 1):
        if shape[i] < shape[i + 1]:
            raise PreconditionError(
                "lambda_%d - lambda_%d = %d is negative; lambda is not "
                "dominant" % (i + 1, i + 2, shape[i] - shape[i + 1]))
    return tuple(shape), shift


def highest_weight_module(lam, n=None):
    """The simple module V(lambda) for a dominant weight lambda.

    The integral part is realized inside a tensor product of exterior
    powers; the last entry lambda_n, which may be any Scalar, shifts
    every E_ii.
    """
    lam = tuple(field.convert(x) for x in lam)
    if n is not None and len(lam) != n:
        raise DimensionMismatchError(
            "Weight %s has length %d, expected %d" %
            (tuple(field.format(x) for x in lam), len(lam), n))
    n = len(lam)
    shape, shift = dominant_shape(lam)
    columns = []
    for k in range(1, n):
        columns.extend([k] * (shape[k - 1] - shape[k]))
    factors = [exterior_power(k, n) for k in columns] or \
        [exterior_power(0, n)]

    top = _TensorVec._from_clean({(0,) * len(factors): field.one})
    basis = [top]
    depth = [0]
    weights = [_tensor_weight(factors, (0,) * len(factors))]
    by_weight = {weights[0]: [0]}
    queue = [0]
    while queue:
        k = queue.pop(0)
        for i in range(n - 1):
            w = _tensor_apply(factors, i + 1, i, basis[k])
            if not w:
                continue
            weight = tuple(x + (a == i + 1) - (a == i)
                           for a, x in enumerate(weights[k]))
            same = [basis[b] for b in by_weight.get(weight, [])]
            if linalg.rank(same + [w]) == len(same):
                continue
            basis.append(w)
            depth.append(depth[k] + 1)
            weights.append(weight)
            by_weight.setdefault(weight, []).append(len(basis) - 1)
            queue.append(len(basis) - 1)

    order = sorted(range(len(basis)),
                   key=lambda b: (depth[b], tuple(-x for x in weights[b]), b))
    basis = [basis[b] for b in order]
    weights = [weights[b] for b in order]
    by_weight = {}
    for b, w in enumerate(weights):
        by_weight.setdefault(w, []).append(b)

    expected = weyl_dimension(shape)
    if len(basis) != expected:
        raise RepresentationError(
            "V%s has dimension %d, the Weyl dimension formula gives %d" %
            (shape, len(basis), expected))

    dim = len(basis)
    matrices = {}
    for i in range(n):
        for j in range(n):
            rows = [[field.zero] * dim for _ in range(dim)]
            for b in range(dim):
                image = _tensor_apply(factors, i, j, basis[b])
                if not image:
                    continue
                weight = tuple(x + (a == i) - (a == j)
                               for a, x in enumerate(weights[b]))
                targets = by_weight.get(weight, [])
                coords = linalg.express([basis[t] for t in targets], image)
                if coords is None:
                    raise RepresentationError(
                        "E_%d%d leaves the lowering closure" % (i + 1, j + 1))
                for t, c in zip(targets, coords):
                    rows[t][b] = c
            if i == j:
                for b in range(dim):
                    rows[b][b] = rows[b][b] + shift
            matrices[(i, j)] = linalg.matrix(rows, dim)
    shifted = [tuple(field.convert(x) + shift for x in w) for w in weights]
    label = 'V(%s)' % ','.join(field.format(x) for x in lam)
    return GlRep(n, matrices, shifted, highest_weight=lam, label=label)
