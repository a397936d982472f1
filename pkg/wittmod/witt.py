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

"""The Lie algebra W_n of polynomial vector fields.

The basis elements are ``t^m d_j`` with ``m`` a nonnegative
multi-index and ``j`` a 0-based direction. The bracket is

    [t^m d_i, t^r d_j] = r_i t^(m+r-e_i) d_j - m_j t^(m+r-e_j) d_i

and everything else in this module (the Cartan elements ``h_i``, the
Euler field ``E``, generator trees and diagonal twists) is built on
top of it.

"""

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache

from . import field
from .kernel import SparseCombo, check_mindex, norm, unit, madd, msub, \
    zero_index
from .utils.exc import DimensionMismatchError, PreconditionError


class WittTerm(namedtuple('WittTerm', 'm j')):
    """ The basis vector t^m d_j (``j`` is 0-based) """

    __slots__ = ()

    @property
    def n(self):
        return len(self.m)

    @property
    def degree(self):
        return norm(self.m)

    def is_d(self):
        return norm(self.m) == 0

    def is_h(self):
        return self.m == unit(self.j, len(self.m))

    def weight(self):
        """ ad h_k eigenvalues, m_k - delta_jk """
        return tuple(mk - (k == self.j) for k, mk in enumerate(self.m))

    def __str__(self):
        return format_term(self)


def term_key(g):
    """ Canonical order of generators: |m|, then m, then j """
    return (norm(g.m), g.m, g.j)


def format_term(g):
    factors = []
    for i, mi in enumerate(g.m):
        if mi == 1:
            factors.append('t%d' % (i + 1))
        elif mi > 1:
            factors.append('t%d^%d' % (i + 1, mi))
    factors.append('d%d' % (g.j + 1))
    return '*'.join(factors)


class WittElem(SparseCombo):
    """ A finite linear combination of :class:`WittTerm` """

    __slots__ = ()

    @property
    def n(self):
        dims = set(len(g.m) for g in self.keys())
        if len(dims) > 1:
            raise DimensionMismatchError(
                "Mixed numbers of variables in %s" % (sorted(dims),))
        return dims.pop() if dims else None

    def format_key(self, key):
        return format_term(key)

    def sorted_items(self, key=None):
        return sorted(self.items(), key=lambda kv: term_key(kv[0]))

    def max_degree(self):
        return max([g.degree for g in self.keys()] or [0])


def vector_field(m, j, n=None):
    """ The element t^m d_j """
    m = check_mindex(m, n)
    if not 0 <= j < len(m):
        raise PreconditionError("Direction %d out of range for n=%d" %
                                (j + 1, len(m)))
    return WittElem._from_clean({WittTerm(m, j): field.one})


def d(i, n):
    return vector_field(zero_index(n), i)


def h(i, n):
    return vector_field(unit(i, n), i)


def euler(n):
    """ E_n = sum_i t_i d_i """
    return WittElem(dict((WittTerm(unit(i, n), i), 1) for i in range(n)))


def as_witt(x):
    if isinstance(x, WittTerm):
        return WittElem._from_clean({x: field.one})
    if isinstance(x, WittElem):
        return x
    raise TypeError("Expected a WittElem, got %s" % type(x).__name__)


@lru_cache(maxsize=None)
def bracket_terms(x, y):
    """Bracket of two basis vectors as a tuple of (WittTerm, int).
    The structure constants of W_n are integers."""
    if len(x.m) != len(y.m):
        raise DimensionMismatchError(
            "Can't bracket %s (n=%d) with %s (n=%d)" %
            (x, len(x.m), y, len(y.m)))
    n = len(x.m)
    out = {}
    m, i = x
    r, j = y
    if r[i]:
        key = WittTerm(msub(madd(m, r), unit(i, n)), j)
        out[key] = out.get(key, 0) + r[i]
    if m[j]:
        key = WittTerm(msub(madd(m, r), unit(j, n)), i)
        out[key] = out.get(key, 0) - m[j]
    return tuple((k, c) for k, c in out.items() if c)


def bracket(x, y):
    """ The Lie bracket [x, y] """
    x = as_witt(x)
    y = as_witt(y)
    if x.n is not None and y.n is not None and x.n != y.n:
        raise DimensionMismatchError(
            "Can't bracket elements with n=%d and n=%d" % (x.n, y.n))
    terms = {}
    for gx, cx in x.items():
        for gy, cy in y.items():
            for g, c in bracket_terms(gx, gy):
                terms[g] = terms.get(g, 0) + cx * cy * c
    return WittElem(terms)


def ad_power(x, y, k):
    """ (ad x)^k y """
    for _ in range(k):
        y = bracket(x, y)
    return y


def diagonal_twist(c, x):
    """Apply the automorphism induced by t_i -> c_i^{-1} t_i, which
    sends t^m d_j to c^{-m} c_j t^m d_j.

    **Parameters:**

    c : sequence of nonzero Scalars, one per variable

    x : WittElem
    """
    x = as_witt(x)
    c = [field(ci) for ci in c]
    if any(not ci for ci in c):
        raise PreconditionError("Diagonal twist needs nonzero factors, "
                                "got a zero at position %d" %
                                ([bool(ci) for ci in c].index(False) + 1))
    if x.n is not None and len(c) != x.n:
        raise DimensionMismatchError(
            "Twist of length %d applied to an element with n=%d" %
            (len(c), x.n))
    terms = {}
    for g, coeff in x.items():
        factor = c[g.j]
        for ci, mi in zip(c, g.m):
            factor = factor / ci ** mi
        terms[g] = coeff * factor
    return WittElem(terms)


def random_term(n, max_degree, rng=None):
    """ A uniformly chosen basis vector with |m| <= max_degree """
    if rng is None:
        from . import sampler as rng
    degree = int(rng.randint(0, max_degree + 1))
    cuts = sorted(int(v) for v in rng.randint(0, degree + 1, size=n - 1)) \
        if n > 1 else []
    bounds = [0] + cuts + [degree]
    m = tuple(bounds[k + 1] - bounds[k] for k in range(n))
    return WittTerm(m, int(rng.randint(0, n)))


def random_element(n, max_degree, terms=3, rng=None):
    if rng is None:
        from . import sampler as rng
    out = {}
    for _ in range(terms):
        g = random_term(n, max_degree, rng)
        out[g] = out.get(g, 0) + int(rng.randint(-3, 4))
    return WittElem(out)


# Generator trees

Leaf = namedtuple('Leaf', 'term')
Bracket = namedtuple('Bracket', 'left right scale case')
Sum = namedtuple('Sum', 'first second case')

CASE_NO_J = 'm_j = 0'
CASE_GENERIC = 'm_j != 0, 3'
CASE_CUBE = 'm = 3e_j'
CASE_CUBE_PLUS = 'm_j = 3, |m| > 3'


def express_generator(m, j):
    """Write t^m d_j as an iterated bracket of vector fields with
    |m| <= 2. Returns a tree of :data:`Leaf`, :data:`Bracket` and
    :data:`Sum` nodes; :func:`evaluate` turns it back into an element.

    When several choices of the auxiliary index i are possible the
    smallest one is taken.
    """
    m = check_mindex(m)
    n = len(m)
    if not 0 <= j < n:
        raise PreconditionError("Direction %d out of range for n=%d" %
                                (j + 1, n))
    if n == 1:
        raise PreconditionError(
            "express_generator needs n > 1; W_1 is generated by "
            "d_{-1}, d_0, d_1, d_2 directly")
    if norm(m) < 3:
        raise PreconditionError(
            "t^%s d_%d already has |m| = %d <= 2" % (m, j + 1, norm(m)))
    return _tree(m, j)


def _tree(m, j):
    n = len(m)
    if norm(m) <= 2:
        return Leaf(WittTerm(m, j))
    ej = unit(j, n)
    if m[j] == 0:
        i = min(k for k in range(n) if m[k] > 0)
        ei = unit(i, n)
        return Bracket(_tree(msub(m, ei), j), _tree(madd(ej, ei), j),
                       Fraction(1), CASE_NO_J)
    if m[j] != 3:
        return Bracket(_tree(msub(m, ej), j), _tree(unit(j, n, 2), j),
                       Fraction(1, 3 - m[j]), CASE_GENERIC)
    if norm(m) == 3:
        i = min(k for k in range(n) if k != j)
        ei = unit(i, n)
        corner = madd(unit(j, n, 2), ei)
        return Sum(Bracket(_tree(ej, i), _tree(corner, j),
                           Fraction(1), CASE_CUBE),
                   _tree(corner, i), CASE_CUBE)
    return Bracket(_tree(msub(m, unit(j, n, 2)), j), _tree(unit(j, n, 3), j),
                   Fraction(1, 2), CASE_CUBE_PLUS)


def evaluate(tree):
    if isinstance(tree, Leaf):
        return as_witt(tree.term)
    if isinstance(tree, Bracket):
        return bracket(evaluate(tree.left), evaluate(tree.right)) \
            * tree.scale
    return evaluate(tree.first) + evaluate(tree.second)


def leaves(tree):
    if isinstance(tree, Leaf):
        return [tree.term]
    if isinstance(tree, Bracket):
        return leaves(tree.left) + leaves(tree.right)
    return leaves(tree.first) + leaves(tree.second)


def cases(tree):
    """ The recursion cases used, outermost first """
    if isinstance(tree, Leaf):
        return []
    if isinstance(tree, Bracket):
        return [tree.case] + cases(tree.left) + cases(tree.right)
    return [tree.case] + cases(tree.first) + cases(tree.second)
