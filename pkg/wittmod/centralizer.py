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

"""Distinguished elements of the centralizer algebra H_n.

H_n is the subalgebra of U_d of elements commuting with every d_i
and every h_i. This module builds the three families of small
generators ``z_{i,j}``, ``z_{i,l,j}`` and ``z_i``, the generators
``X_{m,j}`` (by recursion, by the closed formula in one variable, or
by the closed family for any n) and the ordered X-monomials.

Every constructed element is verified when it is built. A failure
raises :class:`wittmod.utils.exc.CentralizerError` and means the
straightening code is broken.
"""

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from . import field
from .kernel import check_mindex, norm, unit, zero_index, madd, msub, mle, \
    format_mindex
from .pbw import UElem, letter, d_power, one, multiply, commutator, \
    centralizes, leading_key, format_monomial, \
    decompose_BH, x_label_key
from .witt import WittTerm, CASE_NO_J, CASE_GENERIC, CASE_CUBE, \
    CASE_CUBE_PLUS
from .utils.exc import CentralizerError, PreconditionError
from .utils.math import binomial, boxes_below


Z_IJ = 'z_ij'
Z_ILJ = 'z_ilj'
Z_I = 'z_i'


def _T(m, j):
    return letter(m, j)


def _D(s):
    return d_power(s)


def _H(i, n):
    return letter(unit(i, n), i)


def _check_index(i, n):
    if not 0 <= i < n:
        raise PreconditionError("Index %d out of range for n=%d" % (i + 1, n))


class ZGen(namedtuple('ZGen', 'kind indices n element')):
    """ One of z_{i,j}, z_{i,l,j}, z_i with its normal form """

    __slots__ = ()

    @property
    def label(self):
        return '%s(%s)' % (self.kind, ','.join(str(i + 1)
                                                for i in self.indices))

    def __str__(self):
        return '%s = %s' % (self.label, self.element)


def z_element(kind, indices, n):
    """ The unverified normal form of a z generator (0-based indices) """
    for i in indices:
        _check_index(i, n)
    e = lambda i: unit(i, n)
    if kind == Z_IJ:
        i, j = indices
        return multiply(_T(e(i), j), _D(msub(e(i), e(j)))) - _H(i, n)
    if kind == Z_ILJ:
        i, l, j = indices
        eil = madd(e(i), e(l))
        z = multiply(_T(eil, j), _D(msub(eil, e(j))))
        z = z - multiply(multiply(_T(e(i), j), _D(msub(e(i), e(j)))),
                         _H(l, n))
        z = z - multiply(multiply(_T(e(l), j), _D(msub(e(l), e(j)))),
                         _H(i, n))
        z = z + multiply(_H(l, n), _H(i, n))
        if i == l:
            z = z + _T(e(i), l)
        return z
    if kind == Z_I:
        i, = indices
        h = _H(i, n)
        z = multiply(_T(unit(i, n, 3), i), _D(unit(i, n, 2)))
        z = z - multiply(multiply(_T(unit(i, n, 2), i), h - 1),
                         _D(e(i))).scale(3)
        z = z + multiply(multiply(h, h - 1), h - 2).scale(2)
        return z
    raise PreconditionError("Unknown z kind %r; expected one of %s" %
                            (kind, ', '.join((Z_IJ, Z_ILJ, Z_I))))


@lru_cache(maxsize=None)
def make_z(kind, indices, n):
    """Build and verify a z generator.

    **Parameters:**

    kind : one of ``'z_ij'``, ``'z_ilj'``, ``'z_i'``

    indices : tuple of 0-based indices (two, three or one of them)

    n : number of variables
    """
    indices = tuple(indices)
    expected = {Z_IJ: 2, Z_ILJ: 3, Z_I: 1}.get(kind)
    if expected is not None and len(indices) != expected:
        raise PreconditionError("%s takes %d indices, got %d" %
                                (kind, expected, len(indices)))
    element = z_element(kind, indices, n)
    verdict = centralizes(element, n)
    if not verdict:
        raise CentralizerError(
            "%s%s does not commute with %s" %
            (kind, tuple(i + 1 for i in indices), verdict.against),
            verdict.witness)
    return ZGen(kind, indices, n, element)


def all_z(n):
    """ Every z generator for n variables, in a fixed order """
    out = []
    for i in range(n):
        for j in range(n):
            if i != j:
                out.append(make_z(Z_IJ, (i, j), n))
    for i in range(n):
        for l in range(i, n):
            for j in range(n):
                out.append(make_z(Z_ILJ, (i, l, j), n))
    for i in range(n):
        out.append(make_z(Z_I, (i,), n))
    return out


# X generators

RECURSION = 'recursion'
CLOSED = 'closed'
ONE_VARIABLE = 'one-variable'


class ShapeReport(namedtuple('ShapeReport', 'conforms degrees excess')):
    """How an X_{m,j} compares with the shape

        (t^m d_j) d^(m-e_j) + sum_r (t^r d_j) g_r(h) d^(r-e_j) + g_0(h).

    ``degrees`` maps each r to the largest h-degree found in its group,
    ``excess`` lists the monomials that fit no group.
    """

    __slots__ = ()


def shape_report(element, m, j):
    n = len(m)
    ej = unit(j, n)
    degrees = {}
    excess = []
    pure_degree = 0
    for mono in element.keys():
        word, s = mono
        hs = sum(1 for g in word if g.is_h())
        others = [g for g in word if not g.is_h()]
        if not others:
            if any(s) or hs > norm(m):
                excess.append(format_monomial(mono))
            pure_degree = max(pure_degree, hs)
            continue
        if len(others) > 1:
            excess.append(format_monomial(mono))
            continue
        g = others[0]
        if g.j != j or s != msub(g.m, ej) or not mle(g.m, m) or \
                hs > norm(m) - norm(g.m):
            excess.append(format_monomial(mono))
            continue
        degrees[g.m] = max(degrees.get(g.m, 0), hs)
    conforms = not excess and all(
        k == norm(m) - norm(r) for r, k in degrees.items())
    return ShapeReport(conforms, degrees, excess)


class XGen(namedtuple('XGen', 'm j construction trace recipe element shape')):
    """A verified generator X_{m,j}.

    ``trace`` lists the recursion cases used, ``recipe`` describes how
    to rebuild the generator from z generators by brackets:

    * ``('z', kind, indices)``
    * ``('bracket', left, right, scale)``
    * ``('bracket_plus', left, right, extra)`` for [left, right] + extra
    * ``('normalized', inner, scale, removed)`` for
      scale * (inner - sum c * X-monomial), ``removed`` listing the
      ``(labels, c)`` pairs, whose X-monomials are closed generators

    where ``left``, ``right`` and ``extra`` are labels ``(m, j)``. The
    closed constructions have no recipe.
    """

    __slots__ = ()

    @property
    def label(self):
        return (self.m, self.j)

    @property
    def n(self):
        return len(self.m)

    def leading(self):
        return self.element.leading_monomial()

    def __str__(self):
        return 'X[%s,%d] = %s' % (format_mindex(self.m), self.j + 1,
                                  self.element)


def _q_poly(a, h):
    """ Q_a(h) = (-1)^a (h - 1)(h - 2)...(h - a) """
    result = one(h.n)
    for i in range(1, a + 1):
        result = multiply(result, h - i)
    return result.scale((-1) ** a)


def closed_element(m, j):
    """The closed family

        X_{m,j} = sum_{0<=r<=m} C(m, r) (t^r d_j) prod_k Q_{m_k-r_k}(h_k)
                  d^(r - e_j)

    where t^0 d_j is d_j.
    """
    n = len(m)
    total = UElem({})
    for r in boxes_below(m):
        c = 1
        for mk, rk in zip(m, r):
            c *= binomial(mk, rk)
        term = _T(r, j)
        for k in range(n):
            term = multiply(term, _q_poly(m[k] - r[k], _H(k, n)))
        term = multiply(term, _D(msub(r, unit(j, n))))
        total = total + term.scale(c)
    return total


def one_variable_element(M):
    """X_{M,1} for n = 1 from the d_k = t^(k+1) d basis:

        X_{m+1} = d_m d_{-1}^m
                  + sum_{k=1}^{m-1} (-1)^(m-k) C(m+1, k+1) d_k
                    prod_{i=1}^{m-k} (d_0 - i) d_{-1}^k
                  + (-1)^m m prod_{i=0}^{m} (d_0 - i)
    """
    m = M - 1
    dk = lambda k: _T((k + 1,), 0)
    h = dk(0)
    total = multiply(dk(m), _D((m,)))
    for k in range(1, m):
        term = dk(k)
        for i in range(1, m - k + 1):
            term = multiply(term, h - i)
        term = multiply(term, _D((k,)))
        total = total + term.scale((-1) ** (m - k) * binomial(m + 1, k + 1))
    tail = one(1)
    for i in range(m + 1):
        tail = multiply(tail, h - i)
    return total + tail.scale((-1) ** m * m)


def _check_label(m, j):
    m = check_mindex(m)
    n = len(m)
    _check_index(j, n)
    if norm(m) < 1 or m == unit(j, n):
        raise PreconditionError(
            "X[%s,%d] needs |m| >= 1 and m != e_j" %
            (format_mindex(m), j + 1))
    return m


def _recursion(m, j):
    """ (trace case, recipe, element) for the default n > 1 recursion """
    n = len(m)
    ej = unit(j, n)
    if norm(m) == 1:
        i = m.index(1)
        z = make_z(Z_IJ, (i, j), n)
        return None, ('z', Z_IJ, (i, j)), z.element
    if norm(m) == 2:
        support = [k for k in range(n) for _ in range(m[k])]
        i, l = min(support), max(support)
        z = make_z(Z_ILJ, (i, l, j), n)
        return None, ('z', Z_ILJ, (i, l, j)), z.element

    def X(mm, jj):
        return make_X(mm, jj).element

    if m[j] == 0:
        i = min(k for k in range(n) if m[k] > 0)
        ei = unit(i, n)
        left, right = (msub(m, ei), j), (madd(ej, ei), j)
        return CASE_NO_J, ('bracket', left, right, Fraction(1)), \
            commutator(X(*left), X(*right))
    if m[j] != 3:
        scale = Fraction(1, 3 - m[j])
        left, right = (msub(m, ej), j), (unit(j, n, 2), j)
        return CASE_GENERIC, ('bracket', left, right, scale), \
            commutator(X(*left), X(*right)).scale(scale)
    if norm(m) == 3:
        i = min(k for k in range(n) if k != j)
        ei = unit(i, n)
        corner = madd(unit(j, n, 2), ei)
        left, right, extra = (ej, i), (corner, j), (corner, i)
        return CASE_CUBE, ('bracket_plus', left, right, extra), \
            commutator(X(*left), X(*right)) + X(*extra)
    scale = Fraction(1, 2)
    left, right = (msub(m, unit(j, n, 2)), j), (unit(j, n, 3), j)
    return CASE_CUBE_PLUS, ('bracket', left, right, scale), \
        commutator(X(*left), X(*right)).scale(scale)


def _fits_shape(labels, m, j):
    if not labels:
        return True
    if len(labels) != 1:
        return False
    r, i = labels[0]
    return i == j and mle(r, m)


def _normalize(element, m, j):
    """Bring a recursion result into the form

        X_{m,j} + sum_{r < m} c_r X_{r,j} + c

    over the closed generators. Brackets of generators pick up products
    of lower generators and generators X_{r,i} of the same degree;
    those are subtracted and the X_{m,j} coordinate is scaled to one.

    Returns ``(element, correction)`` where ``correction`` is None when
    nothing changed and ``(scale, removed)`` otherwise.
    """
    n = len(m)
    origin = zero_index(n)
    coordinates = decompose_BH(element, element.degree(),
                               construction=CLOSED)
    lead = coordinates.coefficient((((m, j),), origin, origin))
    if not lead:
        raise CentralizerError(
            "The recursion for X[%s,%d] has no X[%s,%d] component" %
            ((format_mindex(m), j + 1) * 2), element)
    removed = []
    for (labels, r, s), c in coordinates.sorted_items():
        if any(r) or any(s):
            raise CentralizerError(
                "The recursion for X[%s,%d] left H_n: component %s" %
                (format_mindex(m), j + 1, (labels, r, s)), element)
        if not _fits_shape(labels, m, j):
            removed.append((labels, c))
    if not removed and lead == field.one:
        return element, None
    for labels, c in removed:
        element = element - x_monomial(labels, CLOSED).scale(c)
    scale = field.inverse(lead)
    return element.scale(scale), (scale, tuple(removed))


def format_recipe(recipe):
    """ Text form of an :class:`XGen` recipe, 1-based """
    if recipe is None:
        return None

    def label(mj):
        return 'X[%s,%d]' % (format_mindex(mj[0]), mj[1] + 1)

    kind = recipe[0]
    if kind == 'z':
        return '%s(%s)' % (recipe[1], ','.join(str(i + 1)
                                               for i in recipe[2]))
    if kind == 'bracket':
        _, left, right, scale = recipe
        text = '[%s, %s]' % (label(left), label(right))
        return text if scale == 1 else '%s*%s' % (scale, text)
    if kind == 'bracket_plus':
        _, left, right, extra = recipe
        return '[%s, %s] + %s' % (label(left), label(right), label(extra))
    _, inner, scale, removed = recipe
    text = format_recipe(inner)
    for labels, c in removed:
        text += ' - (%s)*%s' % (field.format(c),
                                '*'.join(label(l) for l in labels))
    if scale == field.one:
        return text
    return '(%s)*(%s)' % (field.format(scale), text)


def _trace(m, j):
    from .witt import express_generator, cases
    if len(m) == 1 or norm(m) < 3:
        return ()
    return tuple(cases(express_generator(m, j)))


@lru_cache(maxsize=None)
def make_X(m, j, construction=None):
    """Build and verify X_{m,j}.

    **Parameters:**

    m : multi-index with |m| >= 1 and m != e_j

    j : 0-based direction

    construction : ``'recursion'``, ``'closed'`` or ``'one-variable'``
        Defaults to the one-variable formula for n = 1 and to the
        recursion otherwise.

    Centralizer membership, the leading term and the shape are checked
    for every construction. Recursion results of degree >= 3 are first
    normalized, see :func:`_normalize`.
    """
    m = _check_label(m, j)
    n = len(m)
    if construction is None:
        construction = ONE_VARIABLE if n == 1 else RECURSION

    recipe = None
    trace = ()
    if construction == RECURSION:
        if n == 1:
            raise PreconditionError(
                "The recursion needs n > 1; use the one-variable formula")
        case, recipe, element = _recursion(m, j)
        if norm(m) >= 3:
            element, correction = _normalize(element, m, j)
            if correction is not None:
                recipe = ('normalized', recipe) + correction
        trace = _trace(m, j)
    elif construction == CLOSED:
        element = closed_element(m, j)
    elif construction == ONE_VARIABLE:
        if n != 1:
            raise PreconditionError(
                "The one-variable formula is only defined for n = 1")
        element = one_variable_element(m[0])
    else:
        raise PreconditionError(
            "Unknown construction %r; expected one of %s" %
            (construction, ', '.join((RECURSION, CLOSED, ONE_VARIABLE))))

    verdict = centralizes(element, n)
    if not verdict:
        raise CentralizerError(
            "X[%s,%d] (%s) does not commute with %s" %
            (format_mindex(m), j + 1, construction, verdict.against),
            verdict.witness)

    expected = ((WittTerm(m, j),), msub(m, unit(j, n)))
    lead, c = element.leading_monomial()
    if lead != expected or c != field.one:
        raise CentralizerError(
            "X[%s,%d] (%s) has leading term %s*%s, expected %s" %
            (format_mindex(m), j + 1, construction, field.format(c),
             format_monomial(lead), format_monomial(expected)), element)

    shape = shape_report(element, m, j)
    if not shape.conforms:
        raise CentralizerError(
            "X[%s,%d] (%s) does not have the expected shape: %s" %
            (format_mindex(m), j + 1, construction,
             ', '.join(shape.excess) or shape.degrees), element)
    return XGen(m, j, construction, trace, recipe, element, shape)


def x_labels(max_degree, n):
    """ Labels (m, j) with 1 <= |m| <= max_degree and m != e_j """
    labels = []
    for degree in range(1, max_degree + 1):
        for m in _compositions(degree, n):
            for j in range(n):
                if m != unit(j, n):
                    labels.append((m, j))
    return sorted(labels, key=x_label_key)


def _compositions(total, n):
    if n == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, n - 1):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def x_monomial(labels, construction=None):
    """ The ordered product of the X generators named by ``labels`` """
    labels = tuple(labels)
    if not labels:
        raise PreconditionError("x_monomial needs at least one label; "
                                "the empty product is one(n)")
    result = None
    for m, j in labels:
        x = make_X(m, j, construction).element
        result = x if result is None else multiply(result, x)
    return result


def h_monomial_basis(max_degree, n, construction=None, verify=True):
    """The ordered X-monomials of filtration degree <= max_degree.

    Returns a list of label tuples, the empty tuple standing for 1.
    With ``verify`` the normal forms are checked to be linearly
    independent and to commute with every d_i and h_i.
    """
    from .linalg import rank

    labels = x_labels(max_degree, n)
    monomials = [()]
    for size in range(1, max_degree + 1):
        for combo in combinations_with_replacement(labels, size):
            if sum(norm(m) for m, _ in combo) <= max_degree:
                monomials.append(tuple(combo))
    if verify:
        elements = [one(n) if not mono else x_monomial(mono, construction)
                    for mono in monomials]
        for mono, elem in zip(monomials, elements):
            verdict = centralizes(elem, n)
            if not verdict:
                raise CentralizerError(
                    "X-monomial %s does not commute with %s" %
                    (mono, verdict.against), verdict.witness)
        r = rank(elements)
        if r != len(elements):
            raise CentralizerError(
                "X-monomials up to degree %d have rank %d, expected %d" %
                (max_degree, r, len(elements)))
    return monomials


class ConsistencyReport(namedtuple('ConsistencyReport',
                                   'consistent difference offending')):
    __slots__ = ()

    def __bool__(self):
        return bool(self.consistent)


def recursion_consistency(m, j):
    """Compare the recursion and the closed construction of X_{m,j}.

    The difference must be an element of H_n whose X-monomials all have
    a leading key below that of t^m d_j.
    """
    m = _check_label(m, j)
    n = len(m)
    default = ONE_VARIABLE if n == 1 else RECURSION
    difference = make_X(m, j, default).element - \
        make_X(m, j, CLOSED).element
    if not difference:
        return ConsistencyReport(True, difference, [])
    coordinates = decompose_BH(difference, norm(m))
    bound = leading_key(((WittTerm(m, j),), msub(m, unit(j, n))))
    offending = []
    for (labels, r, s), c in coordinates.items():
        if any(r) or any(s):
            offending.append((labels, r, s))
            continue
        if labels:
            lead = x_monomial(labels).leading_monomial()[0]
            if leading_key(lead) >= bound:
                offending.append((labels, r, s))
    return ConsistencyReport(not offending, coordinates, offending)
