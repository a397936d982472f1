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

"""Modules over the Weyl algebra D_n.

Two families are implemented:

* :class:`PolynomialModule`, the polynomial ring twisted by ``a``:
  t_i acts by multiplication and d_i by d/dt_i + a_i.
* :class:`LaurentModule`, the space t^mu C[t^(+-1)] on which t_i and
  d_i act in the usual way.

Operators are abstract words; the module decides how each letter acts.
A letter is a pair ``(kind, i)`` with kind one of ``'t'``, ``'d'`` or
``'dinv'``.
"""

from collections import namedtuple

from . import field
from .kernel import SparseCombo, check_mindex, unit, madd, msub, \
    zero_index, format_mindex
from .utils.exc import NonInvertibleError, PreconditionError, \
    DimensionMismatchError
from .utils.math import falling_factorial


T, D, DINV = 't', 'd', 'dinv'


class ModuleVec(SparseCombo):
    """ A vector that remembers its module """

    __slots__ = ('module',)

    @classmethod
    def of(cls, module, terms):
        obj = cls._from_clean(terms)
        obj.module = module
        return obj

    def _like(self, terms):
        return type(self).of(self.module, terms)

    def _check_compatible(self, other):
        SparseCombo._check_compatible(self, other)
        if self.module != other.module:
            raise DimensionMismatchError(
                "Vectors of %s and %s can't be combined" %
                (self.module, other.module))

    def __eq__(self, other):
        result = SparseCombo.__eq__(self, other)
        if result is True and isinstance(other, ModuleVec):
            return self.module == other.module
        return result

    def __hash__(self):
        return SparseCombo.__hash__(self)

    def format_key(self, key):
        return self.module.format_key(key)


class PolyVec(ModuleVec):
    __slots__ = ()


class LaurentVec(ModuleVec):
    __slots__ = ()


def _monomial_text(m, base=''):
    factors = []
    for i, mi in enumerate(m):
        if mi == 1:
            factors.append('t%d' % (i + 1))
        elif mi:
            factors.append('t%d^%d' % (i + 1, mi))
    text = '*'.join(factors)
    if base:
        return '%s*%s' % (base, text) if text else base
    return text


class _WeylModule(object):
    vector_class = None

    def __eq__(self, other):
        return type(self) is type(other) and self.params == other.params

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((type(self).__name__, self.params))

    @property
    def n(self):
        return len(self.params)

    def vector(self, terms):
        clean = {}
        items = terms.items() if hasattr(terms, 'items') else terms
        for m, c in items:
            m = self.check_key(m)
            c = clean.get(m, field.zero) + field.convert(c)
            if c:
                clean[m] = c
            else:
                clean.pop(m, None)
        return self.vector_class.of(self, clean)

    def monomial(self, m, c=1):
        return self.vector({tuple(m): c})

    def zero(self):
        return self.vector_class.of(self, {})

    def act(self, letter, v):
        """ Apply one Weyl letter ``(kind, i)`` """
        if v.module != self:
            raise DimensionMismatchError(
                "Vector of %s passed to %s" % (v.module, self))
        kind, i = letter
        if not 0 <= i < self.n:
            raise PreconditionError(
                "Index %d out of range for n=%d" % (i + 1, self.n))
        out = {}
        for m, c in v.items():
            for m2, c2 in self._act_monomial(kind, i, m):
                value = out.get(m2, field.zero) + c * c2
                if value:
                    out[m2] = value
                else:
                    out.pop(m2, None)
        return self.vector_class.of(self, out)

    def _act_monomial(self, kind, i, m):
        if kind == T:
            return [(madd(m, unit(i, self.n)), field.one)]
        if kind == D:
            return self._d(i, m)
        if kind == DINV:
            return self._d_inv(i, m)
        raise PreconditionError(
            "Unknown Weyl letter %r; expected 't', 'd' or 'dinv'" % (kind,))


class PolynomialModule(_WeylModule):
    """The twisted polynomial module A_n^a.

    **Parameters:**

    a : sequence of Scalars, the twist
    """

    vector_class = PolyVec

    def __init__(self, a):
        self.params = tuple(field.convert(x) for x in a)

    @property
    def a(self):
        return self.params

    def __repr__(self):
        return 'A^(%s)' % ','.join(field.format(x) for x in self.params)

    def check_key(self, m):
        return check_mindex(m, self.n)

    def format_key(self, m):
        return _monomial_text(m) or '1'

    def _d(self, i, m):
        out = []
        if m[i]:
            out.append((msub(m, unit(i, self.n)), field.convert(m[i])))
        if self.params[i]:
            out.append((m, self.params[i]))
        return out

    def _d_inv(self, i, m):
        a = self.params[i]
        if not a:
            raise NonInvertibleError(
                "d_%d is not invertible on A^a with a_%d = 0" % (i + 1, i + 1))
        out = []
        for k in range(m[i] + 1):
            c = field.convert((-1) ** k * falling_factorial(m[i], k)) / \
                a ** (k + 1)
            out.append((msub(m, unit(i, self.n, k)), c))
        return out


class LaurentModule(_WeylModule):
    """The module P(mu) spanned by t^(mu+m), m in Z^n.

    Keys are the integer offsets m.
    """

    vector_class = LaurentVec

    def __init__(self, mu):
        self.params = tuple(field.convert(x) for x in mu)

    @property
    def mu(self):
        return self.params

    def __repr__(self):
        return 'P(%s)' % ','.join(field.format(x) for x in self.params)

    def check_key(self, m):
        return check_mindex(m, self.n, nonnegative=False)

    def format_key(self, m):
        if not any(m):
            return 't^mu'
        return 't^(mu+%s)' % format_mindex(m)

    def _d(self, i, m):
        c = self.params[i] + m[i]
        if not c:
            return []
        return [(msub(m, unit(i, self.n)), c)]

    def _d_inv(self, i, m):
        c = self.params[i] + m[i] + 1
        if not c:
            raise NonInvertibleError(
                "d_%d^-1 is undefined on t^(mu+%s): mu_%d + %d = 0" %
                (i + 1, format_mindex(m), i + 1, m[i] + 1))
        return [(madd(m, unit(i, self.n)), field.one / c)]


def d_action(op, v):
    """ Apply ``op`` (a letter ``(kind, i)``) to the module vector ``v`` """
    return v.module.act(op, v)


def apply_word(word, v):
    """ Apply a sequence of letters, the rightmost one first """
    for letter in reversed(list(word)):
        v = d_action(letter, v)
    return v


class SimplicityVerdict(namedtuple('SimplicityVerdict',
                                   'simple coordinate witness')):
    """``simple`` is True when no mu_i is an integer constant. Otherwise
    ``coordinate`` is the first integral i and ``witness`` a nonzero
    vector killed by d_i."""

    __slots__ = ()

    def __bool__(self):
        return bool(self.simple)


def is_simple_witness(module):
    if not isinstance(module, LaurentModule):
        raise PreconditionError("is_simple_witness expects a P(mu) module")
    for i, mu_i in enumerate(module.mu):
        k = field.is_integer_constant(mu_i)
        if k is not None:
            witness = module.monomial(unit(i, module.n, -k))
            assert not d_action((D, i), witness)
            return SimplicityVerdict(False, i, witness)
    return SimplicityVerdict(True, None, None)


def random_polynomial(module, max_degree, terms=3, rng=None):
    if rng is None:
        from . import sampler as rng
    out = {}
    for _ in range(terms):
        m = tuple(int(x) for x in rng.randint(0, max_degree + 1,
                                               size=module.n))
        out[m] = out.get(m, 0) + int(rng.randint(1, 5))
    if isinstance(module, LaurentModule):
        out = dict((msub(m, (max_degree // 2,) * module.n), c)
                   for m, c in out.items())
    return module.vector(out)


def one_vector(module):
    return module.monomial(zero_index(module.n))
