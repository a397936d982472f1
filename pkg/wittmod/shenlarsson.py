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

"""Tensor modules, the de Rham type complex and Whittaker vectors.

The homomorphism

    phi(t^m d_k) = t^m d_k (x) 1 + sum_i m_i t^(m-e_i) (x) E_ik

from U(W_n) to D_n (x) U(gl_n) makes P (x) V a W_n-module T(P, V) for
every D_n-module P and gl_n-module V. This module implements phi, the
action on T(P, V), the maps pi_k between the T(P, Lambda^k), Whittaker
spaces of truncated modules and the universal Whittaker module Q_1.

All infinite-dimensional computations take an explicit degree bound
and report whether the answer was already reached at the previous
bound.
"""

import warnings
from collections import namedtuple
from functools import lru_cache
from itertools import product

from . import field
from . import linalg
from .kernel import SparseCombo, norm, unit, madd, msub, zero_index
from .pbw import UElem, as_u, multiply_monomials, centralizes, \
    format_monomial
from .weylmod import PolynomialModule, ModuleVec, D, DINV
from .glrep import exterior_power
from .utils.exc import LocalizationError, PreconditionError, \
    TruncationError, CentralizerError, DimensionMismatchError
from .utils.math import binomial, falling_factorial


def _add_into(out, key, c):
    c = out.get(key, field.zero) + c
    if c:
        out[key] = c
    else:
        out.pop(key, None)


# phi: U(W_n) -> D_n (x) U(gl_n)

def _gl_bracket(x, y):
    """ [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb """
    (a, b), (c, d) = x, y
    out = {}
    if b == c:
        out[(a, d)] = out.get((a, d), 0) + 1
    if d == a:
        out[(c, b)] = out.get((c, b), 0) - 1
    return tuple((k, v) for k, v in out.items() if v)


@lru_cache(maxsize=None)
def _gl_insert(word, g):
    if not word or word[-1] <= g:
        return ((word + (g,), 1),)
    prefix, last = word[:-1], word[-1]
    out = {}
    for w1, c1 in _gl_insert(prefix, g):
        for w2, c2 in _gl_insert(w1, last):
            out[w2] = out.get(w2, 0) + c1 * c2
    for b, cb in _gl_bracket(last, g):
        for w1, c1 in _gl_insert(prefix, b):
            out[w1] = out.get(w1, 0) + cb * c1
    return tuple((k, v) for k, v in out.items() if v)


@lru_cache(maxsize=None)
def _gl_mul(u, v):
    current = {u: 1}
    for g in v:
        step = {}
        for w, c in current.items():
            for w2, c2 in _gl_insert(w, g):
                step[w2] = step.get(w2, 0) + c * c2
        current = dict((k, c) for k, c in step.items() if c)
    return tuple(current.items())


@lru_cache(maxsize=None)
def _weyl_mul(x, y):
    """(t^a d^b)(t^c d^e) = sum_k prod C(b, k) ff(c, k) t^(a+c-k) d^(b+e-k)"""
    (a, b), (c, e) = x, y
    out = []
    for k in product(*[range(min(bi, ci) + 1) for bi, ci in zip(b, c)]):
        coeff = 1
        for bi, ci, ki in zip(b, c, k):
            coeff *= binomial(bi, ki) * falling_factorial(ci, ki)
        if coeff:
            out.append(((msub(madd(a, c), k), msub(madd(b, e), k)), coeff))
    return tuple(out)


def _format_weyl(key):
    a, b = key
    parts = []
    for i, ai in enumerate(a):
        if ai:
            parts.append('t%d' % (i + 1) + ('^%d' % ai if ai > 1 else ''))
    for i, bi in enumerate(b):
        if bi:
            parts.append('d%d' % (i + 1) + ('^%d' % bi if bi > 1 else ''))
    return '*'.join(parts) or '1'


def _format_gl(word):
    return '*'.join('E%d%d' % (i + 1, j + 1) for i, j in word) or '1'


class PhiImage(SparseCombo):
    """An element of D_n (x) U(gl_n).

    Keys are ``((a, b), gl_word)``: the Weyl monomial t^a d^b and a
    nondecreasing tuple of matrix units ``(i, j)``.
    """

    __slots__ = ()

    def format_key(self, key):
        weyl, gl = key
        return '%s (x) %s' % (_format_weyl(weyl), _format_gl(gl))

    def sorted_items(self, key=None):
        return sorted(self.items(), key=lambda kv: kv[0])

    def __mul__(self, other):
        if isinstance(other, PhiImage):
            out = {}
            for (w1, g1), c1 in self.items():
                for (w2, g2), c2 in other.items():
                    c = c1 * c2
                    for w, cw in _weyl_mul(w1, w2):
                        for g, cg in _gl_mul(g1, g2):
                            _add_into(out, (w, g), c * cw * cg)
            return PhiImage._from_clean(out)
        return SparseCombo.__mul__(self, other)


def phi_one(n):
    z = zero_index(n)
    return PhiImage._from_clean({((z, z), ()): field.one})


@lru_cache(maxsize=None)
def _phi_letter(g):
    n = len(g.m)
    z = zero_index(n)
    terms = {((g.m, unit(g.j, n)), ()): field.one}
    for i in range(n):
        if g.m[i]:
            terms[((msub(g.m, unit(i, n)), z), ((i, g.j),))] = \
                field.convert(g.m[i])
    return PhiImage._from_clean(terms)


def phi(u):
    """ The image of an element of U(W_n) (no inverse powers of d_i) """
    u = as_u(u)
    if u.has_negative_exponent():
        raise LocalizationError(
            "phi is only defined on U(W_n); %s has inverse powers of d" % u)
    total = PhiImage({})
    for (word, s), c in u.items():
        n = len(s)
        image = phi_one(n)
        for g in word:
            image = image * _phi_letter(g)
        image = image * PhiImage._from_clean(
            {((zero_index(n), s), ()): field.one})
        total = total + image.scale(c)
    return total


def phi_commutator(x, y):
    return x * y - y * x


# Tensor modules

class TensorModule(object):
    """T(P, V) for a Weyl module P and a gl_n-module V"""

    def __init__(self, P, V):
        if P.n != V.n:
            raise DimensionMismatchError(
                "P has n=%d but V has n=%d" % (P.n, V.n))
        self.P = P
        self.V = V

    @property
    def n(self):
        return self.P.n

    def __repr__(self):
        return 'T(%s, %s)' % (self.P, self.V.label or 'V')

    def __eq__(self, other):
        return isinstance(other, TensorModule) and self.P == other.P and \
            (self.V is other.V or self.V == other.V)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.P, self.V.dim))

    def format_key(self, key):
        p, b = key
        label = self.V.basis_labels[b]
        if isinstance(label, tuple):
            label = 'e' + ''.join(str(i + 1) for i in label) if label \
                else '1'
        else:
            label = 'v%d' % (b + 1)
        return '%s (x) %s' % (self.P.format_key(p), label)

    def vector(self, terms):
        clean = {}
        items = terms.items() if hasattr(terms, 'items') else terms
        for (p, b), c in items:
            p = self.P.check_key(p)
            if not 0 <= b < self.V.dim:
                raise PreconditionError(
                    "Basis index %d out of range for dim %d" % (b, self.V.dim))
            _add_into(clean, (p, b), field.convert(c))
        return TenVec.of(self, clean)

    def pure(self, p, b, c=1):
        """ t^p (x) v_b """
        return self.vector({(tuple(p), b): c})

    def lift(self, v, b):
        """ p (x) v_b for a P-vector p """
        return TenVec.of(self, dict(((m, b), c) for m, c in v.items()))

    def spanning(self, degree_bound):
        """ t^m (x) v_b with |m| <= degree_bound """
        if not isinstance(self.P, PolynomialModule):
            raise PreconditionError(
                "Truncations are only defined over a polynomial P")
        return [self.pure(m, b) for m in monomials_up_to(degree_bound, self.n)
                for b in range(self.V.dim)]


class TenVec(ModuleVec):
    __slots__ = ()


def monomials_up_to(degree, n):
    return [m for m in product(range(degree + 1), repeat=n)
            if sum(m) <= degree]


def _p_apply(P, kind, i, terms):
    """ A d or d^-1 letter on the P factor of a dict of (p, b) keys """
    out = {}
    for (p, b), c in terms.items():
        for q, cq in P._act_monomial(kind, i, p):
            _add_into(out, (q, b), c * cq)
    return out


def _letter_apply(T, g, terms):
    """ t^m d_k on a dict of (p, b) keys """
    P, V = T.P, T.V
    n = T.n
    out = {}
    for (p, b), c in terms.items():
        for q, cq in P._act_monomial(D, g.j, p):
            _add_into(out, (madd(q, g.m), b), c * cq)
        for i in range(n):
            if not g.m[i]:
                continue
            shifted = madd(p, msub(g.m, unit(i, n)))
            for row, a in V.columns(i, g.j)[b].items():
                _add_into(out, (shifted, row), c * a * g.m[i])
    return out


def tensor_action(x, w):
    """Act with ``x`` (a UElem or WittElem, possibly with inverse
    powers of d_i) on ``w`` in T(P, V)."""
    T = w.module
    x = as_u(x, T.n)
    if x.n is not None and x.n != T.n:
        raise DimensionMismatchError(
            "Element with n=%d acting on a module with n=%d" % (x.n, T.n))
    out = {}
    base = dict(w.items())
    for (word, s), c in x.items():
        terms = base
        for i, si in enumerate(s):
            kind = D if si > 0 else DINV
            for _ in range(abs(si)):
                terms = _p_apply(T.P, kind, i, terms)
        for g in reversed(word):
            terms = _letter_apply(T, g, terms)
        for key, v in terms.items():
            _add_into(out, key, c * v)
    return TenVec.of(T, out)


def pi_map(k, w):
    """pi_k: p (x) v  ->  sum_j d_j p (x) (e_j ^ v), from T(P, Lambda^k)
    to T(P, Lambda^(k+1))."""
    T = w.module
    n = T.n
    if not 0 <= k < n:
        raise PreconditionError("pi_%d is defined for 0 <= k < n = %d" %
                                (k, n))
    if T.V is not exterior_power(k, n) and T.V != exterior_power(k, n):
        raise PreconditionError(
            "pi_%d expects vectors of T(P, Lambda^%d), got %s" % (k, k, T))
    target = TensorModule(T.P, exterior_power(k + 1, n))
    out = {}
    for (p, b), c in w.items():
        S = T.V.basis_labels[b]
        for j in range(n):
            if j in S:
                continue
            sign = (-1) ** sum(1 for s in S if s < j)
            wedge = target.V.index_of[tuple(sorted(S + (j,)))]
            for q, cq in T.P._act_monomial(D, j, p):
                _add_into(out, (q, wedge), c * cq * sign)
    return TenVec.of(target, out)


def complex_module(k, P):
    return TensorModule(P, exterior_power(k, P.n))


# Truncated submodules and their Whittaker vectors

def joint_kernel(domain, operators):
    """Combinations of ``domain`` vectors killed by every operator.

    Returns the kernel as lists of coefficients.
    """
    domain = list(domain)
    if not domain:
        return []
    images = []
    for v in domain:
        image = {}
        for k, op in enumerate(operators):
            for key, c in op(v).items():
                image[(k, key)] = c
        images.append(image)
    support = sorted(set(key for image in images for key in image), key=repr)
    if not support:
        return [[field.one if a == b else field.zero
                 for a in range(len(domain))] for b in range(len(domain))]
    rows = [[image.get(key, field.zero) for image in images]
            for key in support]
    return linalg.nullspace(linalg.matrix(rows, len(domain)))


def combine(domain, coefficients):
    total = None
    for v, c in zip(domain, coefficients):
        if not c:
            continue
        term = v.scale(c)
        total = term if total is None else total + term
    return total if total is not None else domain[0].scale(0)


def echelon_basis(vectors):
    """ A canonical basis of span(vectors) from reduced row echelon form """
    vectors = [v for v in vectors if v]
    if not vectors:
        return []
    rows, keys = linalg.coordinates(vectors)
    reduced, pivots = linalg.rref(linalg.matrix(rows, len(keys)))
    template = vectors[0]
    return [template._like(dict((key, c) for key, c in zip(keys, row) if c))
            for row in reduced]


class PiImage(object):
    """ The image of pi_k inside T(P, Lambda^(k+1)) """

    def __init__(self, k, P):
        self.k = k
        self.P = P
        self.source = complex_module(k, P)
        self.ambient = complex_module(k + 1, P)

    def __repr__(self):
        return 'im pi_%d over %s' % (self.k, self.P)

    def spanning(self, degree_bound):
        return echelon_basis([pi_map(self.k, v)
                              for v in self.source.spanning(degree_bound)])


class PiKernel(object):
    """ The kernel of pi_k inside T(P, Lambda^k) """

    def __init__(self, k, P):
        self.k = k
        self.P = P
        self.ambient = complex_module(k, P)

    def __repr__(self):
        return 'ker pi_%d over %s' % (self.k, self.P)

    def spanning(self, degree_bound):
        domain = self.ambient.spanning(degree_bound)
        kernel = joint_kernel(domain, [lambda v: pi_map(self.k, v)])
        return echelon_basis([combine(domain, c) for c in kernel])


def _ambient(M):
    return M.ambient if hasattr(M, 'ambient') else M


class WhittakerSpace(namedtuple('WhittakerSpace',
                                'module bound a basis dims stable')):
    """Whittaker vectors of a truncated module.

    ``dims`` maps the bounds ``bound - 1`` and ``bound`` to the kernel
    dimensions found there; ``stable`` is True when they agree.
    """

    __slots__ = ()

    @property
    def dim(self):
        return len(self.basis)

    def require_stable(self):
        if not self.stable:
            raise TruncationError(
                "Whittaker space of %s is not stable at bound %d: %s" %
                (self.module, self.bound, self.dims), self.dims)
        return self

    def to_dict(self):
        return {
            'module': repr(self.module),
            'bound': self.bound,
            'a': [field.format(x) for x in self.a],
            'dims': dict((str(k), v) for k, v in sorted(self.dims.items())),
            'stable': self.stable,
            'basis': [str(v) for v in self.basis],
        }


def _whittaker_at(M, bound, a):
    ambient = _ambient(M)
    domain = M.spanning(bound)
    n = ambient.n

    def op(i):
        d_i = UElem._from_clean({((), unit(i, n)): field.one})
        return lambda v: tensor_action(d_i, v) - v.scale(a[i])

    kernel = joint_kernel(domain, [op(i) for i in range(n)])
    return echelon_basis([combine(domain, c) for c in kernel])


def whittaker_space(M, degree_bound, a=None):
    """Whittaker vectors ``d_i v = a_i v`` of a truncated module.

    **Parameters:**

    M : TensorModule, PiImage or PiKernel over a polynomial P

    degree_bound : integer >= 1

    a : sequence of Scalars, optional (defaults to all ones)
    """
    if degree_bound < 1:
        raise PreconditionError("degree_bound must be at least 1")
    n = _ambient(M).n
    a = tuple(field.convert(x) for x in (a if a is not None else [1] * n))
    basis = _whittaker_at(M, degree_bound, a)
    previous = _whittaker_at(M, degree_bound - 1, a)
    dims = {degree_bound - 1: len(previous), degree_bound: len(basis)}
    stable = len(previous) == len(basis)
    if not stable:
        warnings.warn("Whittaker space of %s still grows at bound %d" %
                      (M, degree_bound))
    return WhittakerSpace(M, degree_bound, a, basis, dims, stable)


class NilpotencyReport(namedtuple('NilpotencyReport', 'nilpotent steps')):
    __slots__ = ()

    def __bool__(self):
        return bool(self.nilpotent)


def locally_nilpotent_check(vectors, a, bound):
    """Iterate (d_i - a_i) on each vector of a tensor module.

    ``steps[i]`` is the largest number of applications needed to reach
    zero, or None when some vector survived ``bound`` applications.
    """
    vectors = list(vectors)
    if not vectors:
        return NilpotencyReport(True, {})
    n = vectors[0].module.n
    a = [field.convert(x) for x in a]
    steps = {}
    for i in range(n):
        d_i = UElem._from_clean({((), unit(i, n)): field.one})
        worst = 0
        for v in vectors:
            k = 0
            while v and k <= bound:
                v = tensor_action(d_i, v) - v.scale(a[i])
                k += 1
            if v:
                worst = None
                break
            worst = max(worst, k)
        steps[i] = worst
    return NilpotencyReport(all(s is not None for s in steps.values()),
                            steps)


# The universal Whittaker module Q_1

class Q1Vec(SparseCombo):
    """w * v_1 in Q_1, stored as a combination of PBW words in the
    letters t^m d_j with |m| >= 1."""

    __slots__ = ('n',)

    @classmethod
    def of(cls, n, terms):
        obj = cls._from_clean(terms)
        obj.n = n
        return obj

    def _like(self, terms):
        return Q1Vec.of(self.n, terms)

    def format_key(self, key):
        return format_monomial((key, zero_index(self.n))) or 'v1'

    def sorted_items(self, key=None):
        return sorted(self.items(), key=lambda kv: (word_degree(kv[0]),
                                                    kv[0]))


def v_one(n):
    return Q1Vec.of(n, {(): field.one})


def word_degree(word):
    return sum(norm(g.m) for g in word)


def word_weight(word):
    return sum(norm(g.m) - 1 for g in word)


def q1_action(x, w):
    """ x * w in Q_1: straighten, then let every d^s act as one """
    x = as_u(x, w.n)
    out = {}
    for mono, c in x.items():
        for word, cw in w.items():
            for (w2, _), k in multiply_monomials(mono, (word,
                                                        zero_index(w.n))):
                _add_into(out, w2, c * cw * k)
    return Q1Vec.of(w.n, out)


def is_whittaker_q1(w):
    for i in range(w.n):
        d_i = UElem._from_clean({((), unit(i, w.n)): field.one})
        if q1_action(d_i, w) != w:
            return False
    return True


def theta_of(x, n=None):
    """ Theta(x)(v_1) = x v_1 for x in H_n """
    x = as_u(x, n)
    n = x.n if x.n is not None else n
    verdict = centralizes(x, n)
    if not verdict:
        raise CentralizerError(
            "Theta is only defined on H_n; %s fails against %s" %
            (x, verdict.against), verdict.witness)
    result = q1_action(x, v_one(n))
    if not is_whittaker_q1(result):
        raise CentralizerError(
            "Theta(%s)(v_1) is not a Whittaker vector" % x, result)
    return result


def whittaker_degree(w):
    """(d, N): the top filtration degree of ``w`` and the largest
    weight sum(|m| - 1) among the words of that degree."""
    if not w:
        raise PreconditionError("The zero vector has no Whittaker degree")
    d = max(word_degree(word) for word in w.keys())
    N = max(word_weight(word) for word in w.keys() if word_degree(word) == d)
    return d, N


def top_terms_h_free(w):
    """ The words of maximal (degree, weight) contain no h_i """
    d, N = whittaker_degree(w)
    return all(not any(g.is_h() for g in word) for word in w.keys()
               if word_degree(word) == d and word_weight(word) == N)


@lru_cache(maxsize=None)
def q1_words(degree, n):
    """ PBW words of filtration degree <= degree in Q_1 """
    from .witt import WittTerm, term_key
    from .centralizer import _compositions
    letters = []
    for k in range(1, degree + 1):
        for m in _compositions(k, n):
            for j in range(n):
                letters.append(WittTerm(m, j))
    letters.sort(key=term_key)
    words = [()]

    def extend(word, start, total):
        for a in range(start, len(letters)):
            g = letters[a]
            t = total + norm(g.m)
            if t > degree:
                continue
            new = word + (g,)
            words.append(new)
            extend(new, a, t)

    extend((), 0, 0)
    return tuple(words)


class Q1Dimensions(namedtuple('Q1Dimensions',
                              'per_degree expected spanned')):
    """``per_degree[d]`` is dim wh_1(F_d) - dim wh_1(F_{d-1}),
    ``expected[d]`` the number of X-monomials of degree d and
    ``spanned[d]`` whether the images of the X-monomials of degree
    <= d span the kernel on F_d."""

    __slots__ = ()

    @property
    def matches(self):
        return self.per_degree == self.expected and all(self.spanned)


def q1_whittaker_dimensions(degree_bound, n):
    from .centralizer import h_monomial_basis, x_monomial
    from .pbw import one

    if degree_bound < 0:
        raise PreconditionError("degree_bound must be nonnegative")
    monomials = h_monomial_basis(degree_bound, n, verify=False)
    per_degree, expected, spanned = [], [], []
    previous = 0
    for d in range(degree_bound + 1):
        domain = [Q1Vec.of(n, {word: field.one}) for word in q1_words(d, n)]
        ops = []
        for i in range(n):
            d_i = UElem._from_clean({((), unit(i, n)): field.one})
            ops.append(lambda v, d_i=d_i: q1_action(d_i, v) - v)
        kernel = [combine(domain, c) for c in joint_kernel(domain, ops)]
        per_degree.append(len(kernel) - previous)
        previous = len(kernel)
        labels = [mono for mono in monomials
                  if sum(norm(m) for m, _ in mono) <= d]
        expected.append(sum(1 for mono in labels
                            if sum(norm(m) for m, _ in mono) == d))
        images = [theta_of(one(n) if not mono else x_monomial(mono), n)
                  for mono in labels]
        spanned.append(len(images) == len(kernel) and
                       linalg.rank(images) == len(images) and
                       all(linalg.span_contains(images, v) for v in kernel))
    return Q1Dimensions(per_degree, expected, spanned)
