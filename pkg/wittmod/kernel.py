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

"""Exact scalars, multi-indices and sparse linear combinations.

Scalars are elements of the field Q(a_1, ..., a_p) of rational
functions in the parameters declared by :func:`wittmod.init`. They are
sympy domain elements (``QQ`` or ``QQ.frac_field``), which are kept in
lowest terms with a monic denominator, so two Scalars are equal
exactly when their canonical forms agree.

Multi-indices are plain tuples of integers; the helpers below do the
arithmetic and validation.

"""

from fractions import Fraction
from numbers import Integral

import sympy
from sympy import QQ

from .utils.exc import ScalarDivisionError, DimensionMismatchError, \
    PreconditionError, ParameterMismatchError


class ScalarField(object):
    """The coefficient field of a wittmod session.

    **Parameters:**

    parameters : sequence of strings
        Names of the formal parameters; an empty sequence gives Q.
    """

    def __init__(self, parameters=()):
        self.parameters = tuple(parameters)
        if len(set(self.parameters)) != len(self.parameters):
            raise ParameterMismatchError(
                "Duplicate parameter names in %s" % (self.parameters,))
        self.symbols = tuple(sympy.Symbol(p) for p in self.parameters)
        if self.symbols:
            self.domain = QQ.frac_field(*self.symbols)
        else:
            self.domain = QQ
        self.zero = self.domain.zero
        self.one = self.domain.one

    def __repr__(self):
        return 'ScalarField(%s)' % (self.parameters,)

    def __call__(self, value):
        return self.convert(value)

    def convert(self, value):
        domain = self.domain
        if domain.of_type(value):
            return value
        if isinstance(value, bool):
            raise TypeError("Refusing to convert a boolean to a Scalar")
        if isinstance(value, Integral):
            return domain.convert(int(value))
        if isinstance(value, Fraction):
            return domain.convert(value.numerator) / \
                domain.convert(value.denominator)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, sympy.Basic):
            return self.from_sympy(value)
        try:
            return domain.convert(value)
        except Exception:
            raise TypeError("Can't convert %r to a Scalar over %s" %
                            (value, domain))

    def is_scalar(self, value):
        return self.domain.of_type(value) or \
            (isinstance(value, (Integral, Fraction))
             and not isinstance(value, bool))

    def parameter(self, name):
        """ The Scalar of a formal parameter, by name or 0-based index """
        if isinstance(name, Integral):
            name = self.parameters[name]
        if name not in self.parameters:
            from .utils.string_utils import match
            hint = ' Did you mean %s?' % match(name, self.parameters) \
                if self.parameters else ''
            raise ParameterMismatchError(
                "Unknown parameter %s.%s" % (name, hint))
        return self.from_sympy(self.symbols[self.parameters.index(name)])

    def from_sympy(self, expr):
        unknown = expr.free_symbols - set(self.symbols)
        if unknown:
            raise ParameterMismatchError(
                "Expression %s uses undeclared parameters %s" %
                (expr, ', '.join(sorted(str(s) for s in unknown))))
        return self.domain.from_sympy(expr)

    def to_sympy(self, s):
        return self.domain.to_sympy(s)

    def divide(self, a, b):
        b = self.convert(b)
        if not b:
            raise ScalarDivisionError("Division by the zero Scalar")
        return self.convert(a) / b

    def inverse(self, a):
        return self.divide(self.one, a)

    def power(self, a, k):
        a = self.convert(a)
        if k < 0:
            return self.inverse(a) ** (-k)
        return a ** k

    def is_integer_constant(self, s):
        """Return the integer value of ``s`` if ``s`` is a constant
        integer, otherwise None. A Scalar with genuine parameter
        dependence is never an integer constant."""
        expr = self.to_sympy(self.convert(s))
        if expr.is_Integer:
            return int(expr)
        return None

    def is_constant(self, s):
        return not self.to_sympy(self.convert(s)).free_symbols

    def format(self, s):
        """ Text form of a Scalar, readable by :meth:`parse` """
        return str(self.to_sympy(self.convert(s)))

    def parse(self, text):
        from .parser import parse_scalar
        return parse_scalar(text)

    def factors(self, s):
        """Irreducible factors of the numerator of ``s``, as text,
        with multiplicities. Used to report where a determinant
        vanishes."""
        numerator, _ = sympy.fraction(sympy.cancel(self.to_sympy(
            self.convert(s))))
        coefficient, factors = sympy.factor_list(numerator)
        return [(str(f), int(k)) for f, k in factors]

    def specialize(self, s, values):
        """ Substitute ``{name: value}`` for parameters in ``s`` """
        substitution = dict((self.symbols[self.parameters.index(k)],
                             self.to_sympy(self.convert(v)))
                            for k, v in values.items())
        return self.from_sympy(self.to_sympy(self.convert(s))
                               .subs(substitution))


# Multi-indices

def check_mindex(m, n=None, nonnegative=True):
    m = tuple(int(x) for x in m)
    if n is not None and len(m) != n:
        raise DimensionMismatchError(
            "Multi-index %s has length %d, expected %d" % (m, len(m), n))
    if nonnegative and any(x < 0 for x in m):
        raise PreconditionError(
            "Multi-index %s has negative entries" % (m,))
    return m


def norm(m):
    """ |m| """
    return sum(m)


def unit(i, n, k=1):
    return tuple(k if a == i else 0 for a in range(n))


def zero_index(n):
    return (0,) * n


def madd(m, r):
    return tuple(a + b for a, b in zip(m, r))


def msub(m, r):
    return tuple(a - b for a, b in zip(m, r))


def mle(l, m):
    return all(a <= b for a, b in zip(l, m))


def format_mindex(m):
    return '(%s)' % ','.join(str(a) for a in m)


class SparseCombo(object):
    """A finitely supported map from basis keys to Scalars.

    Zero coefficients are never stored, so two combinations are equal
    exactly when their dictionaries are. Instances are treated as
    immutable; every operation returns a new object of the same class.
    Subclasses that carry extra context (the module a vector lives in,
    say) override :meth:`_like`.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        from . import field
        clean = {}
        if terms is not None:
            items = terms.items() if hasattr(terms, 'items') else terms
            for key, c in items:
                c = field.convert(c)
                if key in clean:
                    c = clean[key] + c
                if c:
                    clean[key] = c
                else:
                    clean.pop(key, None)
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    def _like(self, terms):
        return type(self)._from_clean(terms)

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key):
        from . import field
        return self._terms.get(key, field.zero)

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __contains__(self, key):
        return key in self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, SparseCombo):
            return type(self) is type(other) and self._terms == other._terms
        if isinstance(other, Integral) and other == 0:
            return not self._terms
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self._terms.items())))

    def _check_compatible(self, other):
        if type(self) is not type(other):
            raise TypeError("Can't combine %s with %s" %
                            (type(self).__name__, type(other).__name__))

    def __add__(self, other):
        if isinstance(other, Integral) and other == 0:
            return self
        self._check_compatible(other)
        terms = dict(self._terms)
        for key, c in other._terms.items():
            c = terms.get(key, 0) + c
            if c:
                terms[key] = c
            else:
                terms.pop(key, None)
        return self._like(terms)

    def __radd__(self, other):
        if isinstance(other, Integral) and other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return self._like(dict((k, -c) for k, c in self._terms.items()))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        from . import field
        c = field.convert(c)
        if not c:
            return self._like({})
        return self._like(dict((k, c * v) for k, v in self._terms.items()))

    def __mul__(self, other):
        from . import field
        if field.is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        from . import field
        if field.is_scalar(other):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        from . import field
        return self.scale(field.inverse(other))

    def map_keys(self, f):
        """ Rename basis keys; colliding keys are added together """
        terms = {}
        for key, c in self._terms.items():
            new = f(key)
            c = terms.get(new, 0) + c
            if c:
                terms[new] = c
            else:
                terms.pop(new, None)
        return self._like(terms)

    def sorted_items(self, key=None):
        return sorted(self._terms.items(),
                      key=(lambda kv: key(kv[0])) if key else
                      (lambda kv: repr(kv[0])))

    def __repr__(self):
        return '%s(%s)' % (type(self).__name__, str(self))

    def format_key(self, key):
        return repr(key)

    def __str__(self):
        if not self._terms:
            return '0'
        from . import field
        parts = []
        for key, c in self.sorted_items():
            text = self.format_key(key)
            if c == field.one:
                parts.append(text or '1')
            elif c == -field.one:
                parts.append('-' + (text or '1'))
            else:
                cs = field.format(c)
                if any(op in cs.lstrip('-') for op in '+-/ '):
                    cs = '(%s)' % cs
                parts.append('%s*%s' % (cs, text) if text else cs)
        return ' + '.join(parts).replace('+ -', '- ')
