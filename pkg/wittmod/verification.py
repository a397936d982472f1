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

"""The batch verification suite.

:func:`verify_all` runs every check at the scale of a
:class:`wittmod.config.Config` and collects the outcomes in a
:class:`Report`. A check ends as ``pass``, ``fail`` or ``unstable``
(a truncated kernel was still growing); anything but ``pass`` carries
a witness.
"""

import json
from collections import OrderedDict

from . import field, sampler
from . import linalg
from .kernel import unit, zero_index, format_mindex
from .witt import bracket, random_term, random_element, as_witt
from .pbw import from_witt, normal_form, commutator, decompose_BH, \
    recombine, d_power, letter, centralizes
from .centralizer import all_z, make_z, make_X, x_labels, \
    h_monomial_basis, Z_IJ, Z_ILJ, Z_I, CLOSED
from .glrep import highest_weight_module, trivial_module, natural_module
from .weylmod import PolynomialModule, LaurentModule, is_simple_witness
from .shenlarsson import phi, phi_commutator, TensorModule, tensor_action, \
    pi_map, complex_module, whittaker_space, PiImage, theta_of, \
    is_whittaker_q1, q1_whittaker_dimensions, monomials_up_to
from .cuspidal import HRep, make_w_module, WeightWindow, op_element, \
    cuspidality_check, separation_check, scalar_dichotomy, roundtrip_F_G, \
    tensor_module_is_cuspidal, format_op
from .utils.exc import WittmodError, TruncationError

PASS, FAIL, UNSTABLE = 'pass', 'fail', 'unstable'
STATUSES = (PASS, FAIL, UNSTABLE)


class Report(object):
    """Outcome of a command.

    ``checks`` is a list of ``{'name', 'status', 'witness'}`` dicts;
    ``results`` holds command specific data. Everything is JSON
    compatible, so :meth:`to_json` is the only output path.
    """

    def __init__(self, command, inputs=None, results=None, checks=None):
        self.command = command
        self.inputs = inputs or {}
        self.results = results if results is not None else OrderedDict()
        self.checks = list(checks or [])

    def add_check(self, name, status, witness=None):
        if status not in STATUSES:
            raise ValueError("Unknown status %r" % status)
        if status != PASS and witness is None:
            witness = 'no witness recorded'
        check = OrderedDict([('name', name), ('status', status),
                             ('witness', witness)])
        self.checks.append(check)
        return check

    @property
    def ok(self):
        return all(c['status'] == PASS for c in self.checks)

    @property
    def failed(self):
        return [c for c in self.checks if c['status'] == FAIL]

    def exit_status(self):
        return 1 if self.failed else 0

    def to_dict(self):
        return {
            'command': self.command,
            'inputs': self.inputs,
            'results': self.results,
            'checks': [dict(c) for c in self.checks],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n'

    @classmethod
    def from_dict(cls, data):
        return cls(data['command'], data.get('inputs'),
                   data.get('results'), data.get('checks'))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, Report):
            return NotImplemented
        return self.to_json() == other.to_json()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def pretty(self):
        """ A human readable view of :meth:`to_dict` """
        data = json.loads(self.to_json())
        lines = ['%s' % data['command']]
        for key in sorted(data['inputs']):
            lines.append('  %s: %s' % (key, _inline(data['inputs'][key])))
        for key in sorted(data['results']):
            lines.append('%s: %s' % (key, _inline(data['results'][key])))
        for check in data['checks']:
            line = '[%s] %s' % (check['status'].upper(), check['name'])
            if check['status'] != PASS:
                line += '  witness: %s' % _inline(check['witness'])
            lines.append(line)
        return '\n'.join(lines) + '\n'


def _inline(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


# The individual checks. Each returns (passed, witness, results).

def check_lie_axioms(config, n):
    count = 10 * config.samples
    for _ in range(count):
        x, y, z = [as_witt(random_term(n, 4)) for _ in range(3)]
        if bracket(x, y) != -bracket(y, x):
            return False, 'antisymmetry fails for %s, %s' % (x, y), {}
        jacobi = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + \
            bracket(z, bracket(x, y))
        if jacobi:
            return False, 'Jacobi fails for %s, %s, %s' % (x, y, z), {}
    return True, None, {'triples': count, 'n': n}


def check_phi_homomorphism(config):
    n = config.n
    count = 5 * config.samples
    for _ in range(count):
        x = from_witt(random_element(n, 2))
        y = from_witt(random_element(n, 2))
        if phi(x * y) != phi(x) * phi(y):
            return False, 'phi(xy) != phi(x)phi(y) for x=%s, y=%s' % (x, y), {}
        if phi(commutator(x, y)) != phi_commutator(phi(x), phi(y)):
            return False, 'phi([x,y]) != [phi x, phi y] for x=%s, y=%s' % \
                (x, y), {}
    return True, None, {'pairs': count}


def check_centralizer(config, n):
    max_degree = min(4, config.degree + 1)
    for z in all_z(n):
        verdict = centralizes(z.element, n)
        if not verdict:
            return False, '%s fails against %s: %s' % \
                (z.label, verdict.against, verdict.witness), {}
    labels = x_labels(max_degree, n)
    normalized = 0
    for m, j in labels:
        for x in (make_X(m, j), make_X(m, j, CLOSED)):
            if not x.shape.conforms:
                return False, '%s X[%s,%d] does not have the expected ' \
                    'shape: %s' % (x.construction, format_mindex(m), j + 1,
                                   x.shape), {}
            if not centralizes(x.element, n):
                return False, '%s X[%s,%d] is not in H_n' % \
                    (x.construction, format_mindex(m), j + 1), {}
        recipe = make_X(m, j).recipe
        if recipe is not None and recipe[0] == 'normalized':
            normalized += 1
    return True, None, {'z': len(all_z(n)), 'x': len(labels),
                        'max_degree': max_degree,
                        'normalized': normalized}


def check_one_variable(config):
    pairs = [((2,), make_z(Z_ILJ, (0, 0, 0), 1)), ((3,), make_z(Z_I, (0,), 1))]
    for m, z in pairs:
        x = make_X(m, 0)
        if x.element != z.element:
            return False, 'X[%d] = %s differs from %s = %s' % \
                (m[0], x.element, z.label, z.element), {}
    return True, None, {}


def _decomposition_targets(n):
    targets = []
    for i in range(n):
        for j in range(n):
            targets.append(letter(unit(i, n), j))
            for l in range(i, n):
                targets.append(letter(tuple(a + b for a, b in
                                            zip(unit(i, n), unit(l, n))), j))
    targets.append(letter(unit(0, n, 2), 0))
    targets.append(letter(unit(0, n, 3), 0))
    return targets


def check_decomposition(config):
    n = config.n
    targets = _decomposition_targets(n)
    for u in targets:
        decomposition = decompose_BH(u, u.degree())
        if recombine(decomposition, n) != u:
            return False, 'decompose_BH does not round-trip %s' % u, {}
    # t_i d_j = z_ij d_j d_i^-1 + h_i d_j d_i^-1
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            shift = d_power(tuple(a - b for a, b in
                                  zip(unit(j, n), unit(i, n))))
            z = make_z(Z_IJ, (i, j), n).element
            h = letter(unit(i, n), i)
            rhs = normal_form([z, shift]) + normal_form([h, shift])
            if rhs != letter(unit(i, n), j):
                return False, 't%d*d%d != z d_j d_i^-1 + h_i d_j d_i^-1' % \
                    (i + 1, j + 1), {}
    return True, None, {'elements': len(targets)}


def check_pbw_independence(config):
    n = min(config.n, 2)
    basis = h_monomial_basis(3, n, verify=True)
    return True, None, {'monomials': len(basis), 'n': n}


def _laurent_vectors(T, degree):
    n = T.n
    out = []
    for m in monomials_up_to(degree, n):
        shifted = tuple(x - 1 for x in m)
        for b in range(T.V.dim):
            out.append(T.pure(shifted, b))
    return out


def check_complex(config, n=None):
    n = n or config.n
    # extra coordinates of mu, when n exceeds config.n, are 1/2
    mu = (tuple(config.mu) + (field.convert(1) / 2,) * n)[:n]
    polynomial = PolynomialModule([1] * n)
    laurent = LaurentModule(mu)
    for P in (polynomial, laurent):
        for k in range(n):
            T = complex_module(k, P)
            vectors = T.spanning(3) if P is polynomial else \
                _laurent_vectors(T, 3)
            for v in vectors:
                if k + 1 < n and pi_map(k + 1, pi_map(k, v)):
                    return False, 'pi_%d pi_%d does not vanish on %s' % \
                        (k + 1, k, v), {}
            for _ in range(config.samples):
                x = random_element(n, 2)
                v = vectors[int(sampler.randint(len(vectors)))]
                if pi_map(k, tensor_action(x, v)) != \
                        tensor_action(x, pi_map(k, v)):
                    return False, 'pi_%d does not commute with %s on %s' % \
                        (k, x, v), {}
    return True, None, {}


def _suite_modules(config):
    n = config.n
    modules = [trivial_module(n), natural_module(n)]
    if n > 1:
        modules.append(highest_weight_module((2,) + (0,) * (n - 1)))
    return modules


def check_whittaker(config):
    n = config.n
    P = PolynomialModule([1] * n)
    origin = zero_index(n)
    dims = {}
    for V in _suite_modules(config):
        space = whittaker_space(TensorModule(P, V), config.degree)
        space.require_stable()
        dims[V.label] = space.dim
        if space.dim != V.dim:
            return False, 'dim wh_1(T(A^1, %s)) = %d, expected %d' % \
                (V.label, space.dim, V.dim), {}
        for w in space.basis:
            if any(p != origin for (p, _) in w.keys()):
                return False, 'Whittaker vector %s is not in 1 (x) V' % w, {}
    image = whittaker_space(PiImage(0, P), config.degree).require_stable()
    dims['im pi_0'] = image.dim
    if image.dim != 1:
        return False, 'dim wh_1(im pi_0) = %d' % image.dim, {}
    return True, None, {'dimensions': dims}


def _hrep_suite(config):
    return [HRep(highest_weight_module(lam)) for lam in
            config.representations]


def check_h_action(config):
    labels = []
    for lam in config.representations:
        V = highest_weight_module(lam)
        HRep(V, verify=True)
        labels.append(V.label)
    return True, None, {'modules': labels}


def check_q1(config):
    n = config.n
    for z in all_z(n):
        if not is_whittaker_q1(theta_of(z.element, n)):
            return False, 'Theta(%s) v_1 is not a Whittaker vector' % \
                z.label, {}
    dims = q1_whittaker_dimensions(4, 1)
    if not dims.matches:
        return False, 'wh_1(Q_1) per degree %s, expected %s' % \
            (dims.per_degree, dims.expected), {}
    return True, None, {'per_degree': dims.per_degree}


def _compose(window, x, y, r):
    """ Matrices of x(y .) from the r-slice """
    out = {}
    for middle, B in window.act_matrices(y, r).items():
        for target, A in window.act_matrices(x, middle).items():
            M = A * B
            out[target] = out[target] + M if target in out else M
    return dict((t, M) for t, M in out.items() if not linalg.is_zero(M))


def _difference(P, Q):
    keys = set(P) | set(Q)
    for key in sorted(keys):
        if key not in P or key not in Q:
            return key
        if P[key] != Q[key]:
            return key
    return None


def check_weight_actions(config):
    n = config.n
    radius = config.radius
    for hrep in _hrep_suite(config):
        window = WeightWindow(hrep, config.alpha, radius)
        ops = window.operators()
        for op in ops:
            x = op_element(op, n)
            for r in window.slices:
                target, M = window.operator(op, r)
                expected = {} if linalg.is_zero(M) else {target: M}
                if window.act_matrices(x, r) != expected:
                    return False, '%s on slice %s of %s' % \
                        (format_op(op), r, hrep.label), {}
        interior = [r for r in window.slices if window.interior(r)]
        elements = [op_element(op, n) for op in ops]
        for a in range(len(ops)):
            for b in range(a + 1, len(ops)):
                x, y = elements[a], elements[b]
                xy = commutator(x, y)
                for r in interior:
                    lhs = window.act_matrices(xy, r)
                    rhs = _compose(window, x, y, r)
                    for target, M in _compose(window, y, x, r).items():
                        rhs[target] = rhs[target] - M if target in rhs \
                            else linalg.scale(M, -1)
                    rhs = dict((t, M) for t, M in rhs.items()
                               if not linalg.is_zero(M))
                    if _difference(lhs, rhs) is not None:
                        return False, '[%s, %s] on slice %s of %s' % \
                            (format_op(ops[a]), format_op(ops[b]), r,
                             hrep.label), {}
    return True, None, {'radius': radius}


def check_cuspidality(config):
    n = config.n
    determinants = {}
    for lam in config.representations:
        if not any(lam):
            continue
        hrep = HRep(highest_weight_module(lam))
        report = cuspidality_check(WeightWindow(hrep, config.alpha,
                                                config.radius))
        determinants[hrep.label] = len(report.determinants)
        if not report:
            op, r = report.zeros[0]
            return False, 'det %s vanishes on slice %s of %s' % \
                (format_op(op), r, hrep.label), {}
    control = cuspidality_check(WeightWindow(HRep(trivial_module(n)),
                                             [0] * n, config.radius))
    if control:
        return False, 'the negative control alpha = 0 on the trivial ' \
            'module gave no vanishing determinant', {}
    op, r = control.zeros[0]
    return True, None, {'determinants': determinants,
                        'negative_control': '%s on slice %s' %
                        (format_op(op), list(r))}


def check_separation(config):
    solutions = scalar_dichotomy()
    expected = set([(0, 1), (1, 0)])
    if set((int(x), int(y)) for x, y in solutions) != expected:
        return False, 'off-diagonal solutions %s' % sorted(solutions), {}
    verdict = separation_check(config.gamma, config.lam)
    if not verdict:
        return False, 'gamma and lambda collide with shift %s' % \
            (verdict.shift,), {}
    if separation_check(config.gamma, config.gamma):
        return False, 'separation_check(gamma, gamma) reports disjoint', {}
    return True, None, {'coordinate': verdict.coordinate + 1}


def check_roundtrip(config):
    n = config.n
    hreps = _hrep_suite(config) + [make_w_module((1,) + (0,) * (n - 1),
                                                 config.degree)]
    results = {}
    for hrep in hreps:
        report = roundtrip_F_G(hrep, config.alpha, 1, config.degree)
        results[hrep.label] = dict(report.checks)
        if not report.checks.get('stable', True):
            raise TruncationError('Whittaker space of %s still grows at '
                                  'bound %d' % (hrep.label, config.degree))
        if not report:
            failed = sorted(k for k, v in report.checks.items() if not v)
            return False, '%s: %s' % (hrep.label, ', '.join(failed)), {}
    return True, None, {'modules': sorted(results)}


def check_tensor_negative_control(config):
    n = config.n
    mu = (field.zero,) + tuple(config.mu[1:])
    lam = (1,) + (0,) * (n - 1)
    verdict = tensor_module_is_cuspidal(mu, lam)
    if verdict:
        return False, 'criterion accepts an integral mu', {}
    simple = is_simple_witness(LaurentModule(mu))
    T = TensorModule(LaurentModule(mu), natural_module(n))
    w = T.pure(zero_index(n), 0)
    d_i = d_power(unit(verdict.coordinate, n))
    if tensor_action(d_i, w):
        return False, 'd_%d does not kill %s' % (verdict.coordinate + 1, w), {}
    return True, None, {'coordinate': verdict.coordinate + 1,
                        'kernel_vector': str(w),
                        'simple_P': bool(simple)}


def _checks(config):
    n = config.n
    checks = [
        ('lie_axioms', lambda: check_lie_axioms(config, n)),
        ('phi_homomorphism', lambda: check_phi_homomorphism(config)),
        ('centralizer', lambda: check_centralizer(config, n)),
        ('one_variable_closed_formula', lambda: check_one_variable(config)),
        ('decomposition', lambda: check_decomposition(config)),
        ('pbw_independence', lambda: check_pbw_independence(config)),
        ('complex', lambda: check_complex(config)),
        ('whittaker', lambda: check_whittaker(config)),
        ('h_action_formulas', lambda: check_h_action(config)),
        ('q1', lambda: check_q1(config)),
        ('weight_actions', lambda: check_weight_actions(config)),
        ('cuspidality', lambda: check_cuspidality(config)),
        ('separation', lambda: check_separation(config)),
        ('roundtrip', lambda: check_roundtrip(config)),
        ('tensor_negative_control',
         lambda: check_tensor_negative_control(config)),
    ]
    if config.extended and n < 3:
        checks += [
            ('lie_axioms_n3', lambda: check_lie_axioms(config, 3)),
            ('centralizer_n3', lambda: check_centralizer(config, 3)),
            ('complex_n3', lambda: check_complex(config, 3)),
        ]
    return checks


def run_check(report, name, fn, monitor=None):
    try:
        passed, witness, results = fn()
        status = PASS if passed else FAIL
    except TruncationError as e:
        status, witness, results = UNSTABLE, str(e), {}
    except WittmodError as e:
        status, witness, results = FAIL, '%s: %s' % (type(e).__name__, e), {}
    if results:
        report.results[name] = results
    check = report.add_check(name, status, witness)
    if monitor is not None:
        monitor.report(check)
    return check


def verify_all(config, monitor=None, only=None):
    """Run the verification suite at the scale of ``config``.

    Checks run one after the other in a fixed order; ``only`` selects a
    subset by name.
    """
    from .config import as_config
    config = as_config(config)
    if config.seed is not None:
        sampler.set_seed(config.seed)
    report = Report('verify-all', inputs=config.to_dict())
    if monitor is not None:
        monitor.start('verify-all')
    for name, fn in _checks(config):
        if only is not None and name not in only:
            continue
        run_check(report, name, fn, monitor)
    if monitor is not None:
        monitor.finish(report)
    return report
