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

"""The enveloping algebra U(W_n) and its localization at the d_i.

A PBW monomial is a pair ``(word, s)``. The word is a nondecreasing
tuple (in :func:`wittmod.witt.term_key` order) of basis vectors
t^m d_j with |m| >= 1 and ``s`` is the exponent vector of the d-part,
which always sits on the right and may be negative. Products are
straightened with two rules:

* ``g g' = g' g + [g, g']`` for letters out of order, and
* ``d^s g = sum_l C(s, l) (ad d)^l(g) d^(s-l)``, which is a finite sum
  for every integer ``s`` because ad d_i lowers the t-degree.

Both are memoized per pair, with integer structure constants.
"""

from collections import namedtuple
from functools import lru_cache

from . import field
from .kernel import SparseCombo, check_mindex, norm, unit, madd, msub, \
    zero_index, format_mindex
from .witt import WittTerm, WittElem, term_key, format_term, bracket_terms
from .utils.exc import DimensionMismatchError, PreconditionError, \
    DecompositionError
from .utils.math import multi_binomial, multi_falling_factorial, boxes_below


def _add_into(out, key, c):
    c = out.get(key, 0) + c
    if c:
        out[key] = c
    else:
        out.pop(key, None)


@lru_cache(maxsize=None)
def _insert(word, g):
    """ Straighten ``word * g`` inside U(W_n^{>=0}) """
    if not word or term_key(word[-1]) <= term_key(g):
        return ((word + (g,), 1),)
    prefix, last = word[:-1], word[-1]
    out = {}
    for w1, c1 in _insert(prefix, g):
        for w2, c2 in _insert(w1, last):
            _add_into(out, w2, c1 * c2)
    for b, cb in bracket_terms(last, g):
        for w1, c1 in _insert(prefix, b):
            _add_into(out, w1, cb * c1)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _mul_letter(mono, g):
    """ (word, s) * g in normal form """
    word, s = mono
    if len(s) != len(g.m):
        raise DimensionMismatchError(
            "Can't multiply a monomial with n=%d by %s" % (len(s), g))
    n = len(s)
    if norm(g.m) == 0:
        return (((word, madd(s, unit(g.j, n))), 1),)
    out = {}
    for l in boxes_below(g.m):
        c = multi_binomial(s, l) * multi_falling_factorial(g.m, l)
        if not c:
            continue
        rest = msub(g.m, l)
        s_rest = msub(s, l)
        if norm(rest) == 0:
            _add_into(out, (word, madd(s_rest, unit(g.j, n))), c)
            continue
        for w, cw in _insert(word, WittTerm(rest, g.j)):
            _add_into(out, (w, s_rest), c * cw)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _mul_mono(a, b):
    current = {a: 1}
    word, s = b
    for g in word:
        step = {}
        for mono, c in current.items():
            for mono2, c2 in _mul_letter(mono, g):
                _add_into(step, mono2, c * c2)
        current = step
    return tuple(((w, madd(t, s)), c) for (w, t), c in current.items())


multiply_monomials = _mul_mono


def monomial_degree(mono):
    return sum(norm(g.m) for g in mono[0])


def leading_key(mono):
    """Order used for leading terms: filtration degree, then the
    weight sum(|m| - 1), then the number of letters that are not h_i,
    then the letters from the largest down, then the d-exponent."""
    word, s = mono
    return (sum(norm(g.m) for g in word),
            sum(norm(g.m) - 1 for g in word),
            sum(1 for g in word if not g.is_h()),
            tuple(term_key(g) for g in reversed(word)),
            s)


def format_monomial(mono):
    word, s = mono
    parts = []
    k = 0
    while k < len(word):
        g = word[k]
        e = 1
        while k + e < len(word) and word[k + e] == g:
            e += 1
        k += e
        text = 'h%d' % (g.j + 1) if g.is_h() else format_term(g)
        if e > 1:
            text = ('(%s)^%d' if '*' in text else '%s^%d') % (text, e)
        parts.append(text)
    for i, si in enumerate(s):
        if si == 1:
            parts.append('d%d' % (i + 1))
        elif si:
            parts.append('d%d^%d' % (i + 1, si))
    return '*'.join(parts)


class UElem(SparseCombo):
    """An element of the localized enveloping algebra U_d.

    Keys are PBW monomials ``(word, s)`` as described in the module
    docstring. Multiplication by another :class:`UElem` (or a
    :class:`wittmod.witt.WittElem`) straightens the product.
    """

    __slots__ = ()

    @property
    def n(self):
        for word, s in self.keys():
            return len(s)
        return None

    def format_key(self, key):
        return format_monomial(key)

    def sorted_items(self, key=None):
        return sorted(self.items(), key=lambda kv: leading_key(kv[0]),
                      reverse=True)

    def degree(self):
        """ Filtration degree, the largest sum of |m| over the letters """
        return max([monomial_degree(k) for k in self.keys()] or [0])

    def has_negative_exponent(self):
        return any(si < 0 for _, s in self.keys() for si in s)

    def leading_monomial(self):
        if not self:
            raise PreconditionError("The zero element has no leading term")
        mono = max(self.keys(), key=leading_key)
        return mono, self.coefficient(mono)

    def _coerce(self, other):
        if isinstance(other, UElem):
            return other
        if isinstance(other, (WittElem, WittTerm)):
            return from_witt(other)
        if field.is_scalar(other):
            n = self.n
            if n is None:
                raise DimensionMismatchError(
                    "Can't infer n to promote a Scalar next to zero")
            return one(n).scale(other)
        return None

    def __add__(self, other):
        if not isinstance(other, UElem):
            if field.is_scalar(other) and not other:
                return self
            other = self._coerce(other)
            if other is None:
                return NotImplemented
        if self.n is not None and other.n is not None and \
                self.n != other.n:
            raise DimensionMismatchError(
                "Can't add elements with n=%d and n=%d" % (self.n, other.n))
        return SparseCombo.__add__(self, other)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (UElem, WittElem, WittTerm)):
            return multiply(self, self._coerce(other))
        return SparseCombo.__mul__(self, other)

    def __rmul__(self, other):
        if isinstance(other, (WittElem, WittTerm)):
            return multiply(from_witt(other), self)
        return SparseCombo.__rmul__(self, other)

    def __pow__(self, k):
        if k < 0:
            if len(self) == 1:
                (word, s), c = next(iter(self.items()))
                if not word:
                    return UElem._from_clean(
                        {((), tuple(k * si for si in s)): c ** k})
            raise PreconditionError(
                "Negative exponents are only allowed on d<j>, not on %s"
                % self)
        result = one(self.n)
        for _ in range(k):
            result = multiply(result, self)
        return result


def multiply(x, y):
    n_x, n_y = x.n, y.n
    if n_x is not None and n_y is not None and n_x != n_y:
        raise DimensionMismatchError(
            "Can't multiply elements with n=%d and n=%d" % (n_x, n_y))
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            c = ca * cb
            for mono, k in _mul_mono(a, b):
                _add_into(out, mono, c * k)
    return UElem._from_clean(out)


def one(n):
    return UElem._from_clean({((), zero_index(n)): field.one})


def d_power(s, n=None):
    """ The monomial d^s, with s any integer vector """
    s = check_mindex(s, n, nonnegative=False)
    return UElem._from_clean({((), s): field.one})


def letter(m, j, n=None):
    """ t^m d_j as an element of U_d """
    m = check_mindex(m, n)
    if norm(m) == 0:
        return d_power(unit(j, len(m)))
    return UElem._from_clean({((WittTerm(m, j),), zero_index(len(m))):
                              field.one})


def h_power(r):
    """ h_1^r_1 ... h_n^r_n """
    n = len(r)
    word = tuple(WittTerm(unit(i, n), i) for i in range(n)
                 for _ in range(r[i]))
    word = tuple(sorted(word, key=term_key))
    return UElem._from_clean({(word, zero_index(n)): field.one})


def from_witt(x):
    if isinstance(x, WittTerm):
        x = WittElem._from_clean({x: field.one})
    terms = {}
    for g, c in x.items():
        if norm(g.m) == 0:
            terms[((), unit(g.j, len(g.m)))] = c
        else:
            terms[((g,), zero_index(len(g.m)))] = c
    return UElem._from_clean(terms)


def as_u(x, n=None):
    if isinstance(x, UElem):
        return x
    if isinstance(x, (WittElem, WittTerm)):
        return from_witt(x)
    if field.is_scalar(x):
        if n is None:
            raise DimensionMismatchError(
                "Can't promote a Scalar to U_d without knowing n")
        return one(n).scale(x)
    raise TypeError("Can't interpret %s as an element of U_d" %
                    type(x).__name__)


def normal_form(factors, n=None):
    """Multiply a sequence of factors (UElem, WittElem or Scalars)
    left to right and return the straightened product."""
    factors = list(factors)
    if n is None:
        for f in factors:
            if isinstance(f, (UElem, WittElem)) and f.n is not None:
                n = f.n
                break
    if not factors:
        return one(n)
    result = as_u(factors[0], n)
    for f in factors[1:]:
        f = as_u(f, n)
        result = multiply(result, f)
    return result


def commutator(x, y):
    """ xy - yx """
    n = x.n if isinstance(x, (UElem, WittElem)) else None
    x = as_u(x, n or getattr(y, 'n', None))
    y = as_u(y, x.n)
    return multiply(x, y) - multiply(y, x)


class CentralizerVerdict(namedtuple('CentralizerVerdict',
                                    'holds witness against')):
    """Outcome of :func:`centralizes`. ``witness`` is the first
    nonzero commutator ``[x, g]`` and ``against`` names ``g``
    (for instance ``'d2'`` or ``'h1'``)."""

    __slots__ = ()

    def __bool__(self):
        return bool(self.holds)


def centralizes(x, n=None):
    """ Does ``x`` commute with every d_i and every h_i? """
    if n is None:
        n = x.n
    if n is None:
        return CentralizerVerdict(True, None, None)
    x = as_u(x, n)
    for kind, builder in (('d', lambda i: letter(zero_index(n), i)),
                          ('h', lambda i: letter(unit(i, n), i))):
        for i in range(n):
            witness = commutator(x, builder(i))
            if witness:
                return CentralizerVerdict(False, witness,
                                          '%s%d' % (kind, i + 1))
    return CentralizerVerdict(True, None, None)


# The B_n (x) H_n coordinates

class Decomposition(SparseCombo):
    """Coordinates with respect to X-monomial * h^r * d^s.

    Keys are triples ``(labels, r, s)`` where ``labels`` is a sorted
    tuple of X-generator labels ``(m, j)``.
    """

    __slots__ = ()

    def format_key(self, key):
        labels, r, s = key
        parts = ['X[%s,%d]' % (format_mindex(m), j + 1) for m, j in labels]
        rest = format_monomial((h_power(r).leading_monomial()[0][0], s))
        if rest:
            parts.append(rest)
        return '*'.join(parts)

    def sorted_items(self, key=None):
        return sorted(self.items(), key=lambda kv: repr(kv[0]))


def x_label_key(label):
    m, j = label
    return term_key(WittTerm(m, j))


def decompose_BH(u, degree_bound, max_steps=10000, construction=None):
    """Coordinates of ``u`` in the triangular basis X-monomial * h^r *
    d^s.

    The leading monomial (under :func:`leading_key`) is eliminated
    against the leading term of the matching basis element until
    nothing is left. The X generators come from
    :func:`wittmod.centralizer.make_X`.

    **Parameters:**

    u : UElem

    degree_bound : integer
        Largest filtration degree the elimination may meet; a larger
        one raises :class:`DecompositionError`.

    max_steps : integer, optional
        Limit on the number of elimination steps.
    """
    from .centralizer import x_monomial

    n = u.n
    remainder = u
    coordinates = {}
    steps = 0
    while remainder:
        steps += 1
        if steps > max_steps:
            raise DecompositionError(
                "Elimination did not finish within %d steps" % max_steps)
        mono, c = remainder.leading_monomial()
        word, s = mono
        degree = monomial_degree(mono)
        if degree > degree_bound:
            raise DecompositionError(
                "Met the monomial %s of degree %d above the bound %d" %
                (format_monomial(mono), degree, degree_bound))
        r = [0] * n
        labels = []
        for g in word:
            if g.is_h():
                r[g.j] += 1
            else:
                labels.append((g.m, g.j))
        r = tuple(r)
        shift = zero_index(n)
        for m, j in labels:
            shift = madd(shift, msub(m, unit(j, n)))
        s_rest = msub(s, shift)
        labels = tuple(sorted(labels, key=x_label_key))
        if labels:
            basis_elem = multiply(multiply(
                x_monomial(labels, construction), h_power(r)),
                d_power(s_rest))
        else:
            basis_elem = multiply(h_power(r), d_power(s_rest))
        remainder = remainder - basis_elem.scale(c)
        if remainder.coefficient(mono):
            raise DecompositionError(
                "Leading monomial %s did not cancel" % format_monomial(mono))
        key = (labels, r, s_rest)
        coordinates[key] = coordinates.get(key, field.zero) + c
    return Decomposition(coordinates)


def recombine(decomposition, n, construction=None):
    """ Rebuild the element whose coordinates are ``decomposition`` """
    from .centralizer import x_monomial

    total = UElem({})
    for (labels, r, s), c in decomposition.items():
        elem = multiply(h_power(r), d_power(s, n))
        if labels:
            elem = multiply(x_monomial(labels, construction), elem)
        total = total + elem.scale(c)
    return total
