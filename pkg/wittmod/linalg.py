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

"""Exact linear algebra over the scalar field.

Thin wrappers around sympy's ``DomainMatrix``. Matrices are always
built over ``wittmod.field.domain`` so rank, row reduction and
determinants never leave exact arithmetic.
"""

from sympy.polys.matrices import DomainMatrix

from . import field
from .utils.exc import DimensionMismatchError


def matrix(rows, ncols=None):
    rows = [[field.convert(c) for c in row] for row in rows]
    if ncols is None:
        if not rows:
            raise DimensionMismatchError(
                "Can't infer the shape of an empty matrix")
        ncols = len(rows[0])
    if any(len(row) != ncols for row in rows):
        raise DimensionMismatchError("Ragged rows in matrix literal")
    return DomainMatrix(rows, (len(rows), ncols), field.domain)


def zeros(nrows, ncols):
    return DomainMatrix([[field.zero] * ncols for _ in range(nrows)],
                        (nrows, ncols), field.domain)


def identity(d, c=1):
    """ c times the d x d identity matrix """
    c = field.convert(c)
    return DomainMatrix([[c if a == b else field.zero for b in range(d)]
                         for a in range(d)], (d, d), field.domain)


def to_rows(M):
    return M.to_list()


def entry(M, i, j):
    return M.to_list()[i][j]


def is_zero(M):
    return all(not c for row in M.to_list() for c in row)


def commutator(A, B):
    return A * B - B * A


def scale(M, c):
    c = field.convert(c)
    rows = M.to_list()
    return DomainMatrix([[c * x for x in row] for row in rows],
                        M.shape, field.domain)


def det(M):
    nrows, ncols = M.shape
    if nrows != ncols:
        raise DimensionMismatchError(
            "Determinant of a non-square %dx%d matrix" % (nrows, ncols))
    if nrows == 0:
        return field.one
    return M.det()


def apply(M, vector):
    """ Matrix times a column given as a list of Scalars """
    return [sum((a * b for a, b in zip(row, vector)), field.zero)
            for row in M.to_list()]


def rref(M):
    """ Reduced row echelon form as (rows, pivots), pivots scaled to one """
    if M.shape[0] == 0:
        return [], ()
    R, pivots = M.rref()
    rows = R.to_list()
    out = []
    for k, p in enumerate(pivots):
        lead = rows[k][p]
        out.append([x / lead for x in rows[k]])
    return out, tuple(pivots)


def nullspace(M):
    """ A basis of {x : M x = 0}, as lists of Scalars """
    ncols = M.shape[1]
    rows, pivots = rref(M)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        vec = [field.zero] * ncols
        vec[f] = field.one
        for row, p in zip(rows, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def coordinates(vectors, keys=None):
    """Lay out sparse combinations as dense rows over a common key
    list. Returns ``(rows, keys)``."""
    if keys is None:
        support = set()
        for v in vectors:
            support.update(v.keys())
        keys = sorted(support, key=repr)
    index = dict((k, a) for a, k in enumerate(keys))
    rows = []
    for v in vectors:
        row = [field.zero] * len(keys)
        for k, c in v.items():
            row[index[k]] = c
        rows.append(row)
    return rows, keys


def rank(vectors):
    """ Rank of a list of sparse combinations """
    vectors = list(vectors)
    if not vectors:
        return 0
    rows, keys = coordinates(vectors)
    if not keys:
        return 0
    return matrix(rows, len(keys)).rank()


def express(basis, target):
    """Coefficients c with sum c_k basis_k = target, or None when the
    target is outside the span. ``basis`` must be linearly
    independent."""
    basis = list(basis)
    rows, keys = coordinates(basis + [target])
    if not keys:
        return [field.zero] * len(basis)
    # columns are the basis vectors, the last column is the target
    augmented = matrix([[rows[b][k] for b in range(len(rows))]
                        for k in range(len(keys))], len(rows))
    reduced, pivots = rref(augmented)
    if len(basis) in pivots:
        return None
    solution = [field.zero] * len(basis)
    for row, p in zip(reduced, pivots):
        solution[p] = row[len(basis)]
    return solution


def span_contains(basis, target):
    return express(basis, target) is not None
