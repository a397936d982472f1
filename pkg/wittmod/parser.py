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

"""Text grammar for Scalars and elements of W_n and U_d.

::

    expr    := ['+' | '-'] term (('+' | '-') term)*
    term    := power (('*' | '/') power)*
    power   := atom [('^' | '**') ['-'] INT]
    atom    := INT | NAME | '(' expr ')' | '[' expr ',' expr ']'

``NAME`` is ``t<i>``, ``d<i>``, ``h<i>`` (1-based), ``E`` for the
Euler field or a declared parameter. A product of t's followed by a
vector field forms a single generator, so ``t1^2*d2`` is t^(2,0) d_2
and ``t1*d1*t2*d2`` is the product (t_1 d_1)(t_2 d_2). Negative
exponents are allowed on ``d<i>`` and on Scalars only.
"""

import re
from collections import namedtuple

from . import field
from .kernel import SparseCombo, unit, zero_index, madd
from .witt import WittTerm, WittElem, bracket, euler, vector_field
from .pbw import UElem, from_witt, commutator
from .utils.exc import ParseError, PreconditionError, ScalarDivisionError
from .utils.string_utils import match, split_list


Token = namedtuple('Token', 'kind text pos')

_TOKEN_RE = re.compile(r'\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)'
                       r'|(?P<op>\*\*|[-+*/^()\[\],]))')
_GENERATOR_RE = re.compile(r'^([tdh])([1-9][0-9]*)$')


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == '':
            break
        found = _TOKEN_RE.match(text, pos)
        if found is None:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError("Unexpected character %r" % text[start],
                             text, start)
        kind = found.lastgroup
        tokens.append(Token(kind, found.group(kind), found.start(kind)))
        pos = found.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


class TPoly(SparseCombo):
    """ A polynomial in the t's that still waits for its vector field """
    __slots__ = ()

    def format_key(self, key):
        return '*'.join('t%d^%d' % (i + 1, k) for i, k in enumerate(key)
                        if k) or '1'


def _tpoly_mul(x, y):
    out = {}
    for a, ca in x.items():
        for b, cb in y.items():
            m = madd(a, b)
            c = out.get(m, field.zero) + ca * cb
            if c:
                out[m] = c
            else:
                out.pop(m, None)
    return TPoly._from_clean(out)


class _Parser(object):
    """One parse of ``text`` over ``n`` variables.

    Values are Scalars, :class:`TPoly` or :class:`UElem`.
    """

    def __init__(self, text, n=None, laurent=False):
        self.text = text
        self.tokens = tokenize(text)
        self.k = 0
        self.laurent = laurent
        if n is None:
            n = max([int(m.group(2)) for m in
                     (_GENERATOR_RE.match(t.text) for t in self.tokens
                      if t.kind == 'name') if m] or [1])
        self.n = n

    # token helpers

    @property
    def token(self):
        return self.tokens[self.k]

    def error(self, message, expected=(), token=None):
        token = token or self.token
        raise ParseError(message, self.text, token.pos, expected)

    def accept(self, *texts):
        if self.token.kind == 'op' and self.token.text in texts:
            token = self.token
            self.k += 1
            return token
        return None

    def expect(self, text):
        token = self.accept(text)
        if token is None:
            self.error("Unexpected %s" % (repr(self.token.text) or 'end'),
                       (repr(text),))
        return token

    # grammar

    def parse(self):
        value = self.expr()
        if self.token.kind != 'end':
            self.error("Unexpected %r" % self.token.text,
                       ("an operator", "end of input"))
        return value

    def expr(self):
        sign = self.accept('+', '-')
        value = self.term()
        if sign is not None and sign.text == '-':
            value = self.negate(value)
        while True:
            op = self.accept('+', '-')
            if op is None:
                return value
            right = self.term()
            if op.text == '-':
                right = self.negate(right)
            value = self.add(value, right, op)

    def term(self):
        scalar = field.one
        pending = None
        product = None
        first = True
        while True:
            if first:
                op = None
                first = False
            else:
                op = self.accept('*', '/')
                if op is None:
                    break
            at = self.token
            value = self.power()
            if op is not None and op.text == '/':
                if not field.is_scalar(value):
                    self.error("Only Scalars can divide", token=at)
                if not value:
                    raise ScalarDivisionError(
                        "Division by zero at offset %d in %r" %
                        (at.pos, self.text))
                scalar = scalar / value
            elif field.is_scalar(value):
                scalar = scalar * field.convert(value)
            elif isinstance(value, TPoly):
                pending = value if pending is None else \
                    _tpoly_mul(pending, value)
            else:
                if pending is not None:
                    value = self.attach(pending, value, at)
                    pending = None
                product = value if product is None else product * value
        if pending is not None:
            if product is not None:
                self.error("A t-monomial must be followed by a vector "
                           "field", ("d<i>", "h<i>", "E"))
            return pending * scalar
        if product is None:
            return scalar
        return product * scalar if scalar != field.one else product

    def power(self):
        base_token = self.token
        value = self.atom()
        if self.accept('^', '**') is None:
            return value
        negative = self.accept('-') is not None
        token = self.token
        if token.kind != 'int':
            self.error("Exponents are integer literals", ('an integer',))
        self.k += 1
        k = int(token.text) * (-1 if negative else 1)
        if field.is_scalar(value):
            if k < 0 and not value:
                raise ScalarDivisionError("Zero to a negative power in %r"
                                          % self.text)
            return field.power(value, k)
        if isinstance(value, TPoly):
            if k < 0:
                if self.laurent and len(value) == 1:
                    (m, c), = value.items()
                    return TPoly._from_clean(
                        {tuple(k * x for x in m): c ** k})
                self.error("Negative exponents are not allowed on t "
                           "(there is no t-localization)", token=base_token)
            result = TPoly._from_clean({zero_index(self.n): field.one})
            for _ in range(k):
                result = _tpoly_mul(result, value)
            return result
        try:
            return value ** k
        except PreconditionError as e:
            self.error(str(e), token=base_token)

    def atom(self):
        token = self.token
        if token.kind == 'int':
            self.k += 1
            return field.convert(int(token.text))
        if token.kind == 'name':
            self.k += 1
            return self.name(token)
        if self.accept('('):
            value = self.expr()
            self.expect(')')
            return value
        if self.accept('['):
            left = self.expr()
            self.expect(',')
            right = self.expr()
            self.expect(']')
            return self.bracket(left, right, token)
        self.error("Unexpected %s" % (repr(token.text) if token.text
                                      else 'end of input'),
                   ('a number', 'a name', "'('", "'['"))

    def name(self, token):
        text = token.text
        generator = _GENERATOR_RE.match(text)
        if generator is not None:
            kind, i = generator.group(1), int(generator.group(2)) - 1
            if i >= self.n:
                self.error("Index %d out of range for n=%d" %
                           (i + 1, self.n), token=token)
            if kind == 't':
                return TPoly._from_clean({unit(i, self.n): field.one})
            if kind == 'd':
                return from_witt(vector_field(zero_index(self.n), i))
            return from_witt(vector_field(unit(i, self.n), i))
        if text == 'E':
            return from_witt(euler(self.n))
        if text in field.parameters:
            return field.parameter(text)
        candidates = list(field.parameters) + ['E', 't1', 'd1', 'h1']
        self.error("Unknown name %r. Did you mean %s?" %
                   (text, match(text, candidates)),
                   ('t<i>', 'd<i>', 'h<i>', 'E', 'a parameter'), token)

    # value arithmetic

    def negate(self, value):
        if field.is_scalar(value):
            return -field.convert(value)
        return -value

    def add(self, x, y, op):
        if field.is_scalar(x) and field.is_scalar(y):
            return field.convert(x) + field.convert(y)
        if isinstance(x, TPoly) or isinstance(y, TPoly):
            if isinstance(x, UElem) or isinstance(y, UElem):
                self.error("Can't add a t-polynomial to an operator",
                           token=op)
            x, y = [v if isinstance(v, TPoly) else
                    TPoly._from_clean({zero_index(self.n):
                                       field.convert(v)} if v else {})
                    for v in (x, y)]
            return x + y
        x = x if isinstance(x, UElem) else _scalar_u(x, self.n)
        y = y if isinstance(y, UElem) else _scalar_u(y, self.n)
        return x + y

    def attach(self, poly, value, token):
        """ t^m times a linear combination of generators """
        witt = to_witt(value)
        if witt is None:
            self.error("A t-monomial can only multiply a single vector "
                       "field, not %s" % value, token=token)
        out = {}
        for m, c in poly.items():
            for g, cg in witt.items():
                key = WittTerm(madd(m, g.m), g.j)
                out[key] = out.get(key, field.zero) + c * cg
        return from_witt(WittElem(out))

    def bracket(self, x, y, token):
        for v in (x, y):
            if isinstance(v, TPoly):
                self.error("Brackets need vector fields, not "
                           "t-polynomials", token=token)
        if field.is_scalar(x) or field.is_scalar(y):
            return field.zero
        wx, wy = to_witt(x), to_witt(y)
        if wx is not None and wy is not None:
            return from_witt(bracket(wx, wy))
        return commutator(x, y)


def _scalar_u(c, n):
    from .pbw import one
    return one(n).scale(field.convert(c))


def to_witt(u):
    """The WittElem equal to ``u``, or None when ``u`` is not a
    linear combination of generators."""
    if isinstance(u, WittElem):
        return u
    out = {}
    for (word, s), c in u.items():
        if not word and sum(s) == 1 and all(x in (0, 1) for x in s):
            out[WittTerm(zero_index(len(s)), s.index(1))] = c
        elif len(word) == 1 and not any(s):
            out[word[0]] = c
        else:
            return None
    return WittElem._from_clean(out)


def parse_expr(text, n=None):
    """Parse an element. Returns a :class:`WittElem` when the result is
    a linear combination of generators, else a :class:`UElem`.
    """
    value = _Parser(text, n).parse()
    if field.is_scalar(value):
        if n is None:
            return field.convert(value)
        return _scalar_u(value, n)
    if isinstance(value, TPoly):
        raise ParseError("%r is a polynomial, not an operator; multiply it "
                         "by a vector field" % text, text, 0,
                         ('d<i>', 'h<i>', 'E'))
    witt = to_witt(value)
    return witt if witt is not None and witt else value


def parse_element(text, n=None):
    """ Parse into U_d """
    value = parse_expr(text, n)
    if isinstance(value, WittElem):
        return from_witt(value)
    if field.is_scalar(value):
        return _scalar_u(value, n or 1)
    return value


def parse_witt(text, n=None):
    value = parse_expr(text, n)
    if isinstance(value, UElem):
        if not value:
            return WittElem({})
        raise ParseError("%r is not a linear combination of vector fields"
                         % text, text, 0)
    if field.is_scalar(value):
        if value:
            raise ParseError("%r is a Scalar, not a vector field" % text,
                             text, 0)
        return WittElem({})
    return value


def parse_scalar(text):
    value = _Parser(text, n=1).parse()
    if not field.is_scalar(value):
        raise ParseError("%r is not a Scalar" % text, text, 0,
                         ('a number', 'a parameter'))
    return field.convert(value)


def _wrapped(text):
    """ True when the first bracket of ``text`` closes at its last char """
    if len(text) < 2 or text[0] not in '([' or text[-1] not in ')]':
        return False
    depth = 0
    for pos, char in enumerate(text):
        if char in '([':
            depth += 1
        elif char in ')]':
            depth -= 1
            if depth == 0:
                return pos == len(text) - 1
    return False


def parse_scalar_list(text, n=None):
    """ ``'a1, 1/2'`` or ``'(a1, 1/2)'`` as a tuple of Scalars """
    if not isinstance(text, str):
        values = tuple(field.convert(x) for x in text)
    else:
        stripped = text.strip()
        if _wrapped(stripped):
            stripped = stripped[1:-1]
        values = tuple(parse_scalar(part) for part in split_list(stripped)
                       if part)
    if n is not None and len(values) != n:
        raise ParseError("Expected %d entries, got %d in %r" %
                         (n, len(values), text), str(text), 0)
    return values


def parse_polynomial(text, n, laurent=False):
    """A polynomial in the t's as a ``{m: Scalar}`` dict. With
    ``laurent`` single monomials may carry negative exponents."""
    value = _Parser(text, n, laurent=laurent).parse()
    if field.is_scalar(value):
        value = field.convert(value)
        return {zero_index(n): value} if value else {}
    if not isinstance(value, TPoly):
        raise ParseError("%r is not a polynomial in t" % text, text, 0)
    return dict(value.items())


_WEYL_RE = re.compile(r'^(t|d)([1-9][0-9]*)(?:\^(-?[0-9]+))?$')


def parse_weyl_word(text, n):
    """``'d1*t2*d1^-1'`` as a list of Weyl letters ``(kind, i)``,
    leftmost first. ``d<i>^-k`` gives ``k`` inverse letters."""
    from .weylmod import T, D, DINV
    text = text.replace('**', '^')
    letters = []
    pos = 0
    for part in text.split('*'):
        piece = part.strip()
        found = _WEYL_RE.match(piece)
        if found is None:
            raise ParseError("Bad Weyl letter %r" % piece, text,
                             text.find(part, pos),
                             ('t<i>', 'd<i>', 'd<i>^-k'))
        kind, i = found.group(1), int(found.group(2)) - 1
        k = int(found.group(3) or 1)
        if i >= n:
            raise ParseError("Index %d out of range for n=%d" % (i + 1, n),
                             text, text.find(part, pos))
        if k < 0 and kind == 't':
            raise ParseError("t has no inverse", text, text.find(part, pos))
        letter = (T if kind == 't' else (D if k > 0 else DINV), i)
        letters.extend([letter] * abs(k))
        pos += len(part) + 1
    return letters
