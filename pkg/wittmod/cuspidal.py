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

"""Weight modules built from finite-dimensional H_n-modules.

An :class:`HRep` is a finite-dimensional H_n-module given by matrices
for the z generators. It is realized as the Whittaker space 1 (x) V
of T(A^1, V), which gives every element of H_n a matrix and is used
to cross-check the closed formulas

    z_ij      -> E_ij - E_ii
    z_{i,l,k} -> E_ll E_ii - E_ik E_ll - E_lk E_ii + delta_il E_il
                 + (delta_lk - delta_il) E_ik + (delta_ik - delta_il) E_lk
    z_i       -> 2 (E_ii^3 - 3 E_ii^2 + 2 E_ii)

A :class:`WeightWindow` is the finite box of weight spaces
d^r (x) V, r in [-R, R]^n, of the induced module G_1(V) with
support in alpha + Z^n.
"""

from collections import namedtuple
from functools import lru_cache

import numpy as np
import sympy

from . import field
from . import linalg
from .kernel import SparseCombo, unit, madd, msub, zero_index, format_mindex
from .pbw import as_u, decompose_BH
from .centralizer import make_X, all_z, Z_IJ, Z_ILJ, Z_I, CLOSED, \
    ONE_VARIABLE
from .glrep import GlRep, exterior_power, highest_weight_module
from .weylmod import PolynomialModule, LaurentModule
from .shenlarsson import TensorModule, tensor_action, whittaker_space, \
    PiImage
from .utils.exc import RepresentationError, PreconditionError, \
    DimensionMismatchError


def _vec(coords):
    return SparseCombo(dict((k, c) for k, c in enumerate(coords) if c))


class HRep(object):
    """A finite-dimensional H_n-module inside 1 (x) V.

    **Parameters:**

    V : GlRep

    subspace : list of coordinate vectors, optional
        A basis of an H_n-stable subspace of V; the module is then this
        subspace (W(delta_i), for instance).

    label : string, optional

    verify : bool
        Cross-check the z formulas against the action on T(A^1, V).
    """

    def __init__(self, V, subspace=None, label=None, verify=True):
        self.V = V
        self.n = V.n
        self.subspace = None if subspace is None else \
            [[field.convert(c) for c in vec] for vec in subspace]
        self.dim = V.dim if subspace is None else len(self.subspace)
        self.label = label or V.label
        self.tensor = TensorModule(PolynomialModule([1] * self.n), V)
        self._z = {}
        self._x = {}
        if verify:
            self.verify()

    def __repr__(self):
        return 'HRep(%s, dim=%d)' % (self.label, self.dim)

    # matrices on V, before restriction

    def _E(self, i, j):
        return self.V.E(i, j)

    def _formula(self, kind, indices):
        E = self._E
        if kind == Z_IJ:
            i, j = indices
            return E(i, j) - E(i, i)
        if kind == Z_ILJ:
            i, l, k = indices
            M = E(l, l) * E(i, i) - E(i, k) * E(l, l) - E(l, k) * E(i, i)
            if i == l:
                M = M + E(i, l)
            coeff_ik = (l == k) - (i == l)
            coeff_lk = (i == k) - (i == l)
            if coeff_ik:
                M = M + linalg.scale(E(i, k), coeff_ik)
            if coeff_lk:
                M = M + linalg.scale(E(l, k), coeff_lk)
            return M
        if kind == Z_I:
            i, = indices
            A = E(i, i)
            return linalg.scale(A * A * A - linalg.scale(A * A, 3) +
                                linalg.scale(A, 2), 2)
        raise PreconditionError("Unknown z kind %r" % (kind,))

    def _tensor_matrix(self, element):
        """Matrix of an H_n element on 1 (x) V through T(A^1, V)"""
        d = self.V.dim
        rows = [[field.zero] * d for _ in range(d)]
        origin = zero_index(self.n)
        for b in range(d):
            image = tensor_action(element, self.tensor.pure(origin, b))
            for (p, row), c in image.items():
                if p != origin:
                    raise RepresentationError(
                        "%s maps 1 (x) v_%d outside 1 (x) V" %
                        (element, b + 1), image)
                rows[row][b] = c
        return linalg.matrix(rows, d)

    def restrict(self, M):
        """ The matrix of M on the subspace, in the subspace basis """
        if self.subspace is None:
            return M
        basis = [_vec(v) for v in self.subspace]
        rows = [[field.zero] * self.dim for _ in range(self.dim)]
        for b, v in enumerate(self.subspace):
            coords = linalg.express(basis, _vec(linalg.apply(M, v)))
            if coords is None:
                raise RepresentationError(
                    "The subspace of %s is not stable" % self.label)
            for a, c in enumerate(coords):
                rows[a][b] = c
        return linalg.matrix(rows, self.dim)

    # public matrices

    def z_matrix(self, kind, indices):
        key = (kind, tuple(indices))
        if key not in self._z:
            self._z[key] = self.restrict(self._formula(kind, key[1]))
        return self._z[key]

    def matrix_of(self, element):
        """ Matrix of any element of H_n, through T(A^1, V) """
        return self.restrict(self._tensor_matrix(as_u(element, self.n)))

    def _recipe_matrix(self, recipe, construction):
        kind = recipe[0]
        if kind == 'z':
            return self.z_matrix(recipe[1], recipe[2])
        if kind == 'bracket':
            _, left, right, scale = recipe
            return linalg.scale(linalg.commutator(
                self.x_matrix(*left, construction=construction),
                self.x_matrix(*right, construction=construction)), scale)
        if kind == 'bracket_plus':
            _, left, right, extra = recipe
            return linalg.commutator(
                self.x_matrix(*left, construction=construction),
                self.x_matrix(*right, construction=construction)) + \
                self.x_matrix(*extra, construction=construction)
        _, inner, scale, removed = recipe
        M = self._recipe_matrix(inner, construction)
        for labels, c in removed:
            M = M - linalg.scale(self.x_monomial_matrix(labels, CLOSED), c)
        return linalg.scale(M, scale)

    def x_matrix(self, m, j, construction=None, cross_check=False):
        """Matrix of X_{m,j}. Recursion generators use their recipe, the
        one-variable X_2 and X_3 are z_{1,1,1} and z_1, all others go
        through the tensor realization."""
        m = tuple(m)
        key = (m, j, construction)
        if key in self._x:
            return self._x[key]
        x = make_X(m, j, construction)
        recipe = x.recipe
        if recipe is not None:
            M = self._recipe_matrix(recipe, construction)
        elif x.construction == ONE_VARIABLE and m == (2,):
            M = self.z_matrix(Z_ILJ, (0, 0, 0))
        elif x.construction == ONE_VARIABLE and m == (3,):
            M = self.z_matrix(Z_I, (0,))
        else:
            M = self.matrix_of(x.element)
        if cross_check and recipe is not None:
            direct = self.matrix_of(x.element)
            if direct != M:
                raise RepresentationError(
                    "Bracket recipe and direct action disagree for "
                    "X[%s,%d]" % (format_mindex(m), j + 1), (M, direct))
        self._x[key] = M
        return M

    def x_monomial_matrix(self, labels, construction=None):
        M = linalg.identity(self.dim)
        for m, j in labels:
            M = M * self.x_matrix(m, j, construction)
        return M

    def verify(self):
        for z in all_z(self.n):
            formula = self._formula(z.kind, z.indices)
            direct = self._tensor_matrix(z.element)
            if formula != direct:
                raise RepresentationError(
                    "The formula for %s disagrees with its action on "
                    "T(A^1, %s)" % (z.label, self.V.label), (formula, direct))
            self.restrict(formula)

    def to_dict(self):
        return {
            'type': 'HRep',
            'label': self.label,
            'V': self.V.to_dict(),
            'subspace': None if self.subspace is None else
            [[field.format(c) for c in v] for v in self.subspace],
        }

    @classmethod
    def from_dict(cls, data):
        subspace = data.get('subspace')
        if subspace is not None:
            subspace = [[field.parse(c) for c in v] for v in subspace]
        return cls(GlRep.from_dict(data['V']), subspace=subspace,
                   label=data.get('label'))


def make_hrep(V, verify=True):
    return HRep(V, verify=verify)


def delta_index(lam):
    """ i when lambda = delta_i with 1 <= i <= n, else None """
    n = len(lam)
    values = [field.is_integer_constant(x) for x in lam]
    if any(v is None for v in values):
        return None
    for i in range(1, n + 1):
        if values == [1] * i + [0] * (n - i):
            return i
    return None


def make_w_module(lam, degree_bound=2):
    """The simple H_n-module W(lambda).

    It is V(lambda) unless lambda = delta_i, in which case it is
    wh_1(im pi_{i-1}) inside 1 (x) Lambda^i.
    """
    lam = tuple(field.convert(x) for x in lam)
    n = len(lam)
    i = delta_index(lam)
    if i is None:
        return HRep(highest_weight_module(lam),
                    label='W(%s)' % ','.join(field.format(x) for x in lam))
    V = exterior_power(i, n)
    space = whittaker_space(PiImage(i - 1, PolynomialModule([1] * n)),
                            degree_bound).require_stable()
    origin = zero_index(n)
    subspace = []
    for w in space.basis:
        coords = [field.zero] * V.dim
        for (p, b), c in w.items():
            if p != origin:
                raise RepresentationError(
                    "Whittaker vector %s of im pi_%d is not in 1 (x) V" %
                    (w, i - 1), w)
            coords[b] = c
        subspace.append(coords)
    return HRep(V, subspace=subspace, label='W(delta_%d)' % i)


# The induced weight module

H, DK, TD, TTD, TE = 'h', 'd', 'td', 'ttd', 'tE'


def _shift(op, n):
    kind = op[0]
    if kind in (H,):
        return zero_index(n)
    if kind == DK:
        return unit(op[1], n)
    if kind == TD:
        _, i, j = op
        return msub(unit(j, n), unit(i, n))
    if kind in (TTD, TE):
        return tuple(-x for x in unit(op[1], n))
    raise PreconditionError("Unknown window operator %r" % (op,))


def format_op(op):
    kind = op[0]
    if kind == H:
        return 'h%d' % (op[1] + 1)
    if kind == DK:
        return 'd%d' % (op[1] + 1)
    if kind == TD:
        return 't%d*d%d' % (op[1] + 1, op[2] + 1)
    if kind == TTD:
        _, i, j = op
        return ('t%d^2*d%d' % (i + 1, j + 1)) if i == j else \
            ('t%d*t%d*d%d' % (i + 1, j + 1, j + 1))
    return 't%d*E' % (op[1] + 1)


class WeightWindow(object):
    """The weight spaces d^r (x) V of G_1(V), r in [-R, R]^n.

    **Parameters:**

    hrep : HRep

    alpha : sequence of Scalars (usually formal parameters)

    radius : integer >= 1
    """

    def __init__(self, hrep, alpha, radius):
        if radius < 1:
            raise PreconditionError("The window radius must be at least 1")
        alpha = tuple(field.convert(x) for x in alpha)
        if len(alpha) != hrep.n:
            raise DimensionMismatchError(
                "alpha has length %d, expected %d" % (len(alpha), hrep.n))
        self.hrep = hrep
        self.alpha = alpha
        self.radius = radius
        self.n = hrep.n
        self._decompositions = {}

    @property
    def slices(self):
        R = self.radius
        return [tuple(int(x) - R for x in idx)
                for idx in np.ndindex(*([2 * R + 1] * self.n))]

    def contains(self, r):
        return all(abs(x) <= self.radius for x in r)

    def interior(self, r, margin=1):
        return all(abs(x) <= self.radius - margin for x in r)

    def weight(self, r):
        """ The h-eigenvalues on the r-slice """
        return tuple(a - x for a, x in zip(self.alpha, r))

    def operator(self, op, r):
        """(target slice, matrix) of a listed operator on the r-slice"""
        n, d = self.n, self.hrep.dim
        alpha = self.alpha
        target = madd(r, _shift(op, n))
        kind = op[0]
        if kind == H:
            k = op[1]
            return target, linalg.identity(d, alpha[k] - r[k])
        if kind == DK:
            return target, linalg.identity(d)
        if kind == TD:
            _, i, j = op
            M = linalg.identity(d, alpha[i] - r[i] + 1 - (i == j))
            if i != j:
                M = self.hrep.z_matrix(Z_IJ, (i, j)) + M
            return target, M
        if kind == TTD:
            _, i, j = op
            inner = linalg.identity(d, alpha[i] - r[i] + 1)
            if i != j:
                inner = self.hrep.z_matrix(Z_IJ, (i, j)) + inner
            M = self.hrep.z_matrix(Z_ILJ, (i, j, j)) + \
                linalg.scale(inner, alpha[j] - r[j])
            return target, M
        if kind == TE:
            i = op[1]
            M = linalg.zeros(d, d)
            for j in range(n):
                M = M + self.operator((TTD, i, j), r)[1]
            return target, M
        raise PreconditionError("Unknown window operator %r" % (op,))

    def act_matrices(self, u, r):
        """Act with any element u of U_d on the r-slice.

        Returns a dict from target slices to matrices. The element is
        written in the basis X-monomial * h^a * d^s first; d^s moves the
        slice, h^a is a scalar there and the X-monomial acts on V.
        """
        u = as_u(u, self.n)
        d = self.hrep.dim
        out = {}
        if not u:
            return out
        if u not in self._decompositions:
            self._decompositions[u] = decompose_BH(u, u.degree())
        for (labels, a, s), c in self._decompositions[u].items():
            target = madd(r, s)
            scalar = c
            for k in range(self.n):
                scalar = scalar * (self.alpha[k] - target[k]) ** a[k]
            if not scalar:
                continue
            if labels:
                M = linalg.scale(self.hrep.x_monomial_matrix(labels), scalar)
            else:
                M = linalg.identity(d, scalar)
            out[target] = out[target] + M if target in out else M
        return dict((t, M) for t, M in out.items() if not linalg.is_zero(M))

    def act(self, u, r, v):
        """ u applied to d^r (x) v, as {target slice: coordinates} """
        v = [field.convert(c) for c in v]
        out = {}
        for target, M in self.act_matrices(u, r).items():
            image = linalg.apply(M, v)
            if any(image):
                out[target] = image
        return out

    def operators(self):
        n = self.n
        ops = [(H, k) for k in range(n)] + [(DK, k) for k in range(n)]
        ops += [(TD, i, j) for i in range(n) for j in range(n)]
        ops += [(TTD, i, j) for i in range(n) for j in range(n)]
        ops += [(TE, i) for i in range(n)]
        return ops


def op_element(op, n):
    """ The U_d element of a window operator """
    from .witt import vector_field, euler
    from .pbw import from_witt, multiply
    kind = op[0]
    if kind == H:
        return from_witt(vector_field(unit(op[1], n), op[1]))
    if kind == DK:
        return from_witt(vector_field(zero_index(n), op[1]))
    if kind == TD:
        return from_witt(vector_field(unit(op[1], n), op[2]))
    if kind == TTD:
        _, i, j = op
        return from_witt(vector_field(madd(unit(i, n), unit(j, n)), j))
    if kind == TE:
        i = op[1]
        total = None
        for j in range(n):
            term = op_element((TTD, i, j), n)
            total = term if total is None else total + term
        return total
    raise PreconditionError("Unknown window operator %r" % (op,))


def induce_G1(hrep, alpha, radius):
    return WeightWindow(hrep, alpha, radius)


class CuspidalityReport(namedtuple('CuspidalityReport',
                                   'cuspidal determinants zeros')):
    """``determinants`` lists ``(op, r, det)``; ``zeros`` the
    ``(op, r)`` whose determinant vanishes."""

    __slots__ = ()

    def __bool__(self):
        return bool(self.cuspidal)

    def factors(self):
        """ Irreducible factors of every nonconstant determinant """
        out = []
        for op, r, det in self.determinants:
            if det and not field.is_constant(det):
                out.append((op, r, field.factors(det)))
        return out

    def excluded(self):
        """Integer conditions ``linear form = k`` under which some
        determinant vanishes; only linear factors with integer
        coefficients count."""
        conditions = set()
        for op, r, det in self.determinants:
            if not det or field.is_constant(det):
                continue
            numerator, _ = sympy.fraction(sympy.cancel(field.to_sympy(det)))
            for factor, _ in sympy.factor_list(numerator)[1]:
                symbols = sorted(factor.free_symbols, key=str)
                poly = sympy.Poly(factor, *symbols)
                if poly.total_degree() != 1 or \
                        not all(c.is_Integer for c in poly.coeffs()):
                    continue
                constant = factor.subs(dict((s, 0) for s in symbols))
                conditions.add('%s = %s' % (sympy.expand(factor - constant),
                                            -constant))
        return sorted(conditions)

    def to_dict(self):
        return {
            'cuspidal': self.cuspidal,
            'excluded': self.excluded(),
            'determinants': [
                {'op': format_op(op), 'slice': list(r),
                 'det': field.format(det)}
                for op, r, det in self.determinants],
            'zeros': [{'op': format_op(op), 'slice': list(r)}
                      for op, r in self.zeros],
        }


def injectivity_operators(n):
    ops = [(DK, i) for i in range(n)]
    ops += [(TD, i, j) for i in range(n) for j in range(n) if i != j]
    ops += [(TE, i) for i in range(n)]
    return ops


def cuspidality_check(window):
    """Determinants of d_i, t_i d_j (i != j) and t_i E_n on every slice
    of the window. The verdict only covers the window."""
    determinants = []
    zeros = []
    for op in injectivity_operators(window.n):
        for r in window.slices:
            _, M = window.operator(op, r)
            det = linalg.det(M)
            determinants.append((op, r, det))
            if not det:
                zeros.append((op, r))
    return CuspidalityReport(not zeros, determinants, zeros)


def tensor_slice_basis(V, k):
    """The weight slice k of T(P(mu), V): the pairs ``(m, b)`` with
    m + wt(v_b) = wt(v_1) + k, one for every basis vector of V."""
    reference = V.weights[0]
    basis = []
    for b, weight in enumerate(V.weights):
        offset = []
        for r, w in zip(reference, weight):
            x = field.is_integer_constant(r - w)
            if x is None:
                raise RepresentationError(
                    "The weights of %s are not in one coset of Z^n" %
                    V.label, weight)
            offset.append(x)
        basis.append((madd(k, tuple(offset)), b))
    return basis


def tensor_slice_matrix(T, x, k, shift):
    """Matrix of ``x`` from the weight slice k to the slice k + shift"""
    source = tensor_slice_basis(T.V, k)
    target = tensor_slice_basis(T.V, madd(k, shift))
    index = dict((key, a) for a, key in enumerate(target))
    rows = [[field.zero] * len(source) for _ in target]
    for col, (m, b) in enumerate(source):
        image = tensor_action(x, T.pure(m, b))
        for key, c in image.items():
            if key not in index:
                raise RepresentationError(
                    "%s maps the weight slice %s outside the slice %s" %
                    (x, k, madd(k, shift)), image)
            rows[index[key]][col] = c
    return linalg.matrix(rows, len(source))


def tensor_cuspidality_check(mu, V, radius):
    """Slice determinants of d_i, t_i d_j (i != j) and t_i E_n on
    T(P(mu), V), for weight slices k in [-R, R]^n."""
    mu = tuple(field.convert(x) for x in mu)
    n = len(mu)
    if V.n != n:
        raise DimensionMismatchError("mu and V disagree on n")
    T = TensorModule(LaurentModule(mu), V)
    determinants = []
    zeros = []
    slices = [tuple(int(x) - radius for x in idx)
              for idx in np.ndindex(*([2 * radius + 1] * n))]
    for op in injectivity_operators(n):
        x = op_element(op, n)
        shift = tuple(-s for s in _shift(op, n))
        for k in slices:
            det = linalg.det(tensor_slice_matrix(T, x, k, shift))
            determinants.append((op, k, det))
            if not det:
                zeros.append((op, k))
    return CuspidalityReport(not zeros, determinants, zeros)


class CriterionVerdict(namedtuple('CriterionVerdict',
                                  'cuspidal coordinate reason')):
    __slots__ = ()

    def __bool__(self):
        return bool(self.cuspidal)


def tensor_module_is_cuspidal(mu, lam):
    """mu_i and |mu + lambda| + lambda_i are never integers"""
    mu = [field.convert(x) for x in mu]
    lam = [field.convert(x) for x in lam]
    total = sum(mu, field.zero) + sum(lam, field.zero)
    for i in range(len(mu)):
        if field.is_integer_constant(mu[i]) is not None:
            return CriterionVerdict(False, i, 'mu_%d is an integer' % (i + 1))
        if field.is_integer_constant(total + lam[i]) is not None:
            return CriterionVerdict(
                False, i, '|mu+lambda| + lambda_%d is an integer' % (i + 1))
    return CriterionVerdict(True, None, None)


# Eigenvalue separation

class SeparationVerdict(namedtuple('SeparationVerdict',
                                   'disjoint coordinate shift')):
    """``coordinate`` is a coordinate where lambda - gamma is not an
    integer (for a disjoint verdict); ``shift`` is lambda - gamma when
    it lies in Z^n."""

    __slots__ = ()

    def __bool__(self):
        return bool(self.disjoint)


def separation_check(gamma, lam):
    """Do the z_{i,i,i}, z_i eigenvalue sets of the blocks gamma + Z^n
    and lambda + Z^n meet?

    Two scalars x, y give the same pair (x - x^2, x^3 - x^2) exactly
    when x = y or {x, y} = {0, 1}; in both cases x - y is an integer.
    """
    gamma = [field.convert(x) for x in gamma]
    lam = [field.convert(x) for x in lam]
    if len(gamma) != len(lam):
        raise DimensionMismatchError("gamma and lambda differ in length")
    shift = []
    for i, (g, l) in enumerate(zip(gamma, lam)):
        k = field.is_integer_constant(l - g)
        if k is None:
            return SeparationVerdict(True, i, None)
        shift.append(k)
    return SeparationVerdict(False, None, tuple(shift))


def eigenvalue_pair(x):
    """ (x - x^2, x^3 - x^2) """
    x = field.convert(x)
    return x - x * x, x * x * x - x * x


@lru_cache(maxsize=None)
def scalar_dichotomy():
    """Solutions of x - x^2 = y - y^2, x^3 - x^2 = y^3 - y^2 off the
    diagonal x = y, found exactly."""
    x, y = sympy.symbols('x y')
    first = sympy.cancel(((x - x ** 2) - (y - y ** 2)) / (x - y))
    second = sympy.cancel(((x ** 3 - x ** 2) - (y ** 3 - y ** 2)) / (x - y))
    eliminated = sympy.resultant(first, second, y)
    solutions = set()
    for x0 in sympy.roots(sympy.Poly(eliminated, x)):
        in_y = sympy.Poly(first.subs(x, x0), y)
        for y0 in sympy.roots(in_y):
            if sympy.simplify(second.subs({x: x0, y: y0})) == 0:
                solutions.add((x0, y0))
    return frozenset(solutions)


# Round trips

class RoundtripReport(namedtuple('RoundtripReport', 'ok checks')):
    __slots__ = ()

    def __bool__(self):
        return bool(self.ok)


def roundtrip_F_G(hrep, alpha, radius=1, degree_bound=2):
    """Example-scale check that the functors between Whittaker and
    weight modules invert each other on ``hrep``.

    * wh_1 of the Whittaker module realizing ``hrep`` is the module
      itself and the z matrices agree;
    * the alpha-weight space of the induced window carries the same
      H_n action;
    * every slice weight lies in alpha + Z^n.
    """
    n = hrep.n
    checks = {}
    P = PolynomialModule([1] * n)
    i = None
    if hrep.subspace is not None:
        i = delta_index(hrep.V.highest_weight or ())
    module = TensorModule(P, hrep.V) if i is None else PiImage(i - 1, P)
    space = whittaker_space(module, degree_bound)
    checks['stable'] = space.stable
    checks['whittaker_dimension'] = space.dim == hrep.dim

    origin = zero_index(n)
    in_origin = all(p == origin for w in space.basis for (p, _), _ in
                    w.items())
    checks['whittaker_in_1xV'] = in_origin
    matrices_agree = True
    for z in all_z(n):
        if hrep.z_matrix(z.kind, z.indices) != hrep.matrix_of(z.element):
            matrices_agree = False
    checks['F_G_matrices'] = matrices_agree

    window = WeightWindow(hrep, alpha, radius)
    slice_agrees = True
    for z in all_z(n):
        M = hrep.z_matrix(z.kind, z.indices)
        for b in range(hrep.dim):
            v = [field.one if a == b else field.zero
                 for a in range(hrep.dim)]
            image = window.act(z.element, origin, v)
            expected = linalg.apply(M, v)
            got = image.get(origin, [field.zero] * hrep.dim)
            if set(image) - set([origin]) or got != expected:
                slice_agrees = False
    checks['F1_G1_matrices'] = slice_agrees

    support = True
    for r in window.slices:
        for a, w in zip(window.alpha, window.weight(r)):
            if field.is_integer_constant(w - a) is None:
                support = False
    checks['support'] = support
    return RoundtripReport(all(checks.values()), checks)
