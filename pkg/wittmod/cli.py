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

"""Command line interface.

Every subcommand produces a :class:`wittmod.verification.Report`. It
is printed as JSON (``--pretty`` gives a readable view of the same
data) and written to ``--emit`` when given. Indices on the command
line are 1-based.
"""

import argparse
import sys
from collections import OrderedDict

import wittmod
from . import field
from .utils import serial
from .utils.exc import WittmodError, TruncationError
from .verification import Report, PASS, FAIL, UNSTABLE, verify_all

description = """Exact computations with W_n, its localized enveloping
algebra and the modules built from them. E.g.:

    wittmod_cli.py bracket "d1" "t1^2*d1"
    wittmod_cli.py --n 2 cuspidal-check --lambda "1,0" --radius 2
    wittmod_cli.py --config configs/default.yml verify-all
"""


def _fmt(s):
    return field.format(s)


def _vec(v):
    return [_fmt(x) for x in v]


def _label(m, j):
    from .kernel import format_mindex
    return 'X[%s,%d]' % (format_mindex(m), j + 1)


def _check(report, name, ok, witness=None):
    report.add_check(name, PASS if ok else FAIL,
                     None if ok else witness)


# Subcommands

def cmd_bracket(args, config):
    from .parser import parse_witt
    from .witt import bracket
    x, y = parse_witt(args.x, config.n), parse_witt(args.y, config.n)
    report = Report('bracket', {'x': args.x, 'y': args.y})
    result = bracket(x, y)
    report.results['bracket'] = str(result)
    _check(report, 'antisymmetry', result == -bracket(y, x), str(result))
    return report


def cmd_normal_form(args, config):
    from .parser import parse_element
    u = parse_element(args.expr, config.n)
    report = Report('normal-form', {'expr': args.expr})
    report.results['normal_form'] = str(u)
    report.results['degree'] = u.degree()
    return report


def cmd_commutator(args, config):
    from .parser import parse_element
    from .pbw import commutator
    x, y = parse_element(args.x, config.n), parse_element(args.y, config.n)
    report = Report('commutator', {'x': args.x, 'y': args.y})
    report.results['commutator'] = str(commutator(x, y))
    return report


def cmd_decompose(args, config):
    from .parser import parse_element
    from .pbw import decompose_BH, recombine
    u = parse_element(args.expr, config.n)
    bound = args.degree if args.degree is not None else u.degree()
    decomposition = decompose_BH(u, bound, construction=args.construction)
    report = Report('decompose', {'expr': args.expr, 'degree': bound})
    report.results['terms'] = [
        OrderedDict([('x', [_label(m, j) for m, j in labels]),
                     ('h', list(r)), ('d', list(s)),
                     ('coefficient', _fmt(c))])
        for (labels, r, s), c in decomposition.sorted_items()]
    report.results['decomposition'] = str(decomposition)
    _check(report, 'recombine',
           recombine(decomposition, u.n, args.construction) == u,
           str(decomposition))
    return report


def cmd_make_z(args, config):
    from .centralizer import make_z
    from .pbw import centralizes
    indices = tuple(i - 1 for i in args.indices)
    z = make_z(args.kind, indices, config.n)
    report = Report('make-z', {'kind': args.kind, 'indices': args.indices})
    report.results['label'] = z.label
    report.results['element'] = str(z.element)
    verdict = centralizes(z.element, config.n)
    _check(report, 'centralizes', verdict,
           '%s: %s' % (verdict.against, verdict.witness))
    return report


def cmd_make_x(args, config):
    from .centralizer import make_X, format_recipe
    from .utils.exc import ParseError
    try:
        m = tuple(int(x) for x in args.m.strip("()").split(","))
    except ValueError:
        raise ParseError("Bad multi-index %r" % args.m, args.m, 0,
                         ("comma separated integers",))
    if len(m) != config.n:
        raise ParseError("Expected %d entries in %r" % (config.n, args.m),
                         args.m, 0)
    x = make_X(m, args.j - 1, args.construction)
    report = Report('make-x', {'m': list(m), 'j': args.j,
                               'construction': x.construction})
    report.results['element'] = str(x.element)
    report.results['trace'] = list(x.trace)
    report.results['recipe'] = format_recipe(x.recipe)
    report.results['shape'] = {
        'conforms': x.shape.conforms,
        'degrees': dict(('%s' % (list(r),), k)
                        for r, k in sorted(x.shape.degrees.items())),
        'excess': [str(e) for e in x.shape.excess],
    }
    return report


def cmd_h_basis(args, config):
    from .centralizer import h_monomial_basis
    basis = h_monomial_basis(args.degree, config.n,
                             construction=args.construction)
    report = Report('h-basis', {'degree': args.degree})
    report.results['count'] = len(basis)
    report.results['monomials'] = [
        '*'.join(_label(m, j) for m, j in labels) or '1'
        for labels in basis]
    _check(report, 'independent', True)
    return report


def cmd_phi(args, config):
    from .parser import parse_element
    from .shenlarsson import phi
    u = parse_element(args.expr, config.n)
    report = Report('phi', {'expr': args.expr})
    report.results['phi'] = str(phi(u))
    return report


def _p_module(args, config):
    from .weylmod import PolynomialModule, LaurentModule
    from .parser import parse_scalar_list
    if getattr(args, 'mu', None) is not None:
        return LaurentModule(parse_scalar_list(args.mu, config.n))
    if getattr(args, 'twist', None) is not None:
        return PolynomialModule(parse_scalar_list(args.twist, config.n))
    return PolynomialModule(config.twist)


def _gl_module(args, config):
    from .glrep import highest_weight_module
    from .parser import parse_scalar_list
    lam = parse_scalar_list(args.lam, config.n) if args.lam is not None \
        else config.highest_weight
    return highest_weight_module(lam)


def cmd_tensor_apply(args, config):
    from .parser import parse_element, parse_polynomial
    from .weylmod import LaurentModule
    from .shenlarsson import TensorModule, tensor_action
    P = _p_module(args, config)
    V = _gl_module(args, config)
    T = TensorModule(P, V)
    poly = parse_polynomial(args.vector, config.n,
                            laurent=isinstance(P, LaurentModule))
    w = T.vector(dict(((m, args.basis - 1), c) for m, c in poly.items()))
    u = parse_element(args.expr, config.n)
    report = Report('tensor-apply', {'expr': args.expr, 'vector': args.vector,
                                     'basis': args.basis, 'module': repr(T)})
    report.results['result'] = str(tensor_action(u, w))
    return report


def cmd_complex_check(args, config):
    from .shenlarsson import complex_module, pi_map
    from .weylmod import PolynomialModule
    P = _p_module(args, config)
    n = config.n
    report = Report('complex-check', {'module': repr(P), 'degree':
                                      args.degree})
    for k in range(n - 1):
        T = complex_module(k, P)
        if isinstance(P, PolynomialModule):
            vectors = T.spanning(args.degree)
        else:
            from .verification import _laurent_vectors
            vectors = _laurent_vectors(T, args.degree)
        bad = [v for v in vectors if pi_map(k + 1, pi_map(k, v))]
        _check(report, 'pi_%d pi_%d = 0' % (k + 1, k), not bad,
               str(bad[0]) if bad else None)
    return report


def cmd_whittaker(args, config):
    from .shenlarsson import TensorModule, PiImage, whittaker_space
    from .weylmod import PolynomialModule
    P = PolynomialModule([1] * config.n)
    if args.pi_image is not None:
        M = PiImage(args.pi_image, P)
    else:
        M = TensorModule(P, _gl_module(args, config))
    space = whittaker_space(M, args.degree)
    report = Report('whittaker', {'module': repr(M), 'degree': args.degree})
    report.results['whittaker'] = space.to_dict()
    report.results['dim'] = space.dim
    report.add_check('stable', PASS if space.stable else UNSTABLE,
                     None if space.stable else space.to_dict()['dims'])
    return report


def cmd_q1(args, config):
    from .shenlarsson import q1_whittaker_dimensions
    dims = q1_whittaker_dimensions(args.degree, config.n)
    report = Report('q1', {'degree': args.degree})
    report.results['per_degree'] = dims.per_degree
    report.results['expected'] = dims.expected
    report.results['spanned'] = dims.spanned
    _check(report, 'dimensions', dims.matches,
           {'per_degree': dims.per_degree, 'expected': dims.expected})
    return report


def cmd_glrep(args, config):
    from .glrep import weight_spaces
    V = _gl_module(args, config)
    report = Report('glrep', {'lambda': _vec(V.highest_weight)})
    report.results['dim'] = V.dim
    report.results['weights'] = dict(
        (','.join(_vec(w)), len(basis))
        for w, basis in weight_spaces(V).items())
    report.results['module'] = V.to_dict()
    return report


def cmd_cuspidal_check(args, config):
    from .cuspidal import make_w_module, HRep, WeightWindow, \
        cuspidality_check, tensor_module_is_cuspidal, \
        tensor_cuspidality_check
    from .parser import parse_scalar_list
    from .config import SYMBOLIC
    V = _gl_module(args, config)
    hrep = make_w_module(V.highest_weight, config.degree) if args.simple \
        else HRep(V)
    alpha = config.alpha if args.alpha in (None, SYMBOLIC) else \
        parse_scalar_list(args.alpha, config.n)
    radius = args.radius or config.radius
    result = cuspidality_check(WeightWindow(hrep, alpha, radius))
    report = Report('cuspidal-check', {'module': hrep.label,
                                       'alpha': _vec(alpha),
                                       'radius': radius})
    report.results['window'] = result.to_dict()
    _check(report, 'cuspidal_on_window', result,
           [{'op': z['op'], 'slice': z['slice']}
            for z in result.to_dict()['zeros']])
    if args.mu is not None:
        mu = parse_scalar_list(args.mu, config.n)
        verdict = tensor_module_is_cuspidal(mu, V.highest_weight)
        report.results['tensor_criterion'] = {
            'cuspidal': bool(verdict), 'reason': verdict.reason}
        window = tensor_cuspidality_check(mu, V, radius)
        report.results['tensor_window'] = window.to_dict()
        # criterion cuspidal implies window cuspidal
        _check(report, 'tensor_window_consistent',
               bool(window) or not verdict,
               [{'op': z['op'], 'slice': z['slice']}
                for z in window.to_dict()['zeros']])
    return report


def cmd_separation(args, config):
    from .cuspidal import separation_check, scalar_dichotomy
    from .parser import parse_scalar_list
    gamma = parse_scalar_list(args.gamma, config.n) if args.gamma \
        else config.gamma
    lam = parse_scalar_list(args.lam, config.n) if args.lam else config.lam
    verdict = separation_check(gamma, lam)
    report = Report('separation', {'gamma': _vec(gamma), 'lambda': _vec(lam)})
    report.results['disjoint'] = bool(verdict)
    report.results['coordinate'] = None if verdict.coordinate is None \
        else verdict.coordinate + 1
    report.results['shift'] = None if verdict.shift is None \
        else list(verdict.shift)
    report.results['dichotomy'] = sorted(
        [str(x), str(y)] for x, y in scalar_dichotomy())
    return report


def cmd_roundtrip(args, config):
    from .cuspidal import make_w_module, HRep, roundtrip_F_G
    V = _gl_module(args, config)
    hrep = make_w_module(V.highest_weight, config.degree) if args.simple \
        else HRep(V)
    radius = args.radius or 1
    result = roundtrip_F_G(hrep, config.alpha, radius, config.degree)
    report = Report('roundtrip', {'module': hrep.label, 'radius': radius,
                                  'degree': config.degree})
    report.results['checks'] = dict(result.checks)
    if not result.checks.get('stable', True):
        report.add_check('roundtrip', UNSTABLE, dict(result.checks))
    else:
        _check(report, 'roundtrip', result, dict(result.checks))
    return report


def cmd_dmod_apply(args, config):
    from .parser import parse_weyl_word, parse_polynomial
    from .weylmod import LaurentModule, apply_word
    P = _p_module(args, config)
    letters = parse_weyl_word(args.word, config.n)
    v = P.vector(parse_polynomial(args.vector, config.n,
                                  laurent=isinstance(P, LaurentModule)))
    report = Report('dmod-apply', {'word': args.word, 'vector': args.vector,
                                   'module': repr(P)})
    report.results['result'] = str(apply_word(letters, v))
    return report


def cmd_verify_all(args, config, monitor=None):
    only = args.only.split(',') if args.only else None
    return verify_all(config, monitor=monitor, only=only)


def _add_global_options(parser, degree=True, default=None):
    """The options accepted before and after the subcommand. Copies on
    a subcommand use ``argparse.SUPPRESS`` so they only override what
    was given before it."""
    kwargs = {} if default is None else {'default': default}
    parser.add_argument('--config', help='YAML configuration file',
                        **kwargs)
    parser.add_argument('--emit', help='write the JSON report to this path',
                        **kwargs)
    parser.add_argument('--seed', type=int, **kwargs)
    parser.add_argument('--n', type=int, help='number of variables',
                        **kwargs)
    parser.add_argument('--params',
                        help='comma separated formal parameters', **kwargs)
    if degree:
        parser.add_argument('--degree', type=int, dest='global_degree',
                            help='truncation degree D', **kwargs)
    parser.add_argument('--pretty', action='store_true', **kwargs)


def build_parser():
    parser = argparse.ArgumentParser(
        description=description,
        formatter_class=argparse.RawDescriptionHelpFormatter)
    _add_global_options(parser)

    # subcommands with their own --degree keep it
    common = argparse.ArgumentParser(add_help=False)
    _add_global_options(common, degree=False, default=argparse.SUPPRESS)
    common_degree = argparse.ArgumentParser(add_help=False)
    _add_global_options(common_degree, default=argparse.SUPPRESS)
    own_degree = ('decompose', 'h-basis', 'complex-check', 'whittaker', 'q1')

    sub = parser.add_subparsers(dest='command')
    sub.required = True

    def add(name):
        parent = common if name in own_degree else common_degree
        return sub.add_parser(name, parents=[parent])

    p = add('bracket')
    p.add_argument('x')
    p.add_argument('y')
    p.set_defaults(func=cmd_bracket)

    p = add('normal-form')
    p.add_argument('expr')
    p.set_defaults(func=cmd_normal_form)

    p = add('commutator')
    p.add_argument('x')
    p.add_argument('y')
    p.set_defaults(func=cmd_commutator)

    p = add('decompose')
    p.add_argument('expr')
    p.add_argument('--degree', '--max-degree', type=int)
    p.add_argument('--construction')
    p.set_defaults(func=cmd_decompose)

    p = add('make-z')
    p.add_argument('kind', choices=['z_ij', 'z_ilj', 'z_i'])
    p.add_argument('indices', type=int, nargs='+')
    p.set_defaults(func=cmd_make_z)

    p = add('make-x')
    p.add_argument('m', help='multi-index, e.g. "2,1"')
    p.add_argument('j', type=int)
    p.add_argument('--construction',
                   choices=['recursion', 'closed', 'one-variable'])
    p.set_defaults(func=cmd_make_x)

    p = add('h-basis')
    p.add_argument('--degree', '--max-degree', type=int, default=3)
    p.add_argument('--construction')
    p.set_defaults(func=cmd_h_basis)

    p = add('phi')
    p.add_argument('expr')
    p.set_defaults(func=cmd_phi)

    p = add('tensor-apply')
    p.add_argument('expr')
    p.add_argument('--vector', default='1', help='polynomial part')
    p.add_argument('--basis', type=int, default=1,
                   help='basis vector of V (1-based)')
    p.add_argument('--lambda', dest='lam')
    p.add_argument('--mu')
    p.add_argument('--twist')
    p.set_defaults(func=cmd_tensor_apply)

    p = add('complex-check')
    p.add_argument('--degree', '--max-degree', type=int, default=3)
    p.add_argument('--mu')
    p.add_argument('--twist')
    p.set_defaults(func=cmd_complex_check)

    p = add('whittaker')
    p.add_argument('--lambda', dest='lam')
    p.add_argument('--degree', '--max-degree', type=int, default=3)
    p.add_argument('--pi-image', type=int, dest='pi_image',
                   help='use im pi_k instead of T(A^1, V)')
    p.set_defaults(func=cmd_whittaker)

    p = add('q1')
    p.add_argument('--degree', '--max-degree', type=int, default=4)
    p.set_defaults(func=cmd_q1)

    p = add('glrep')
    p.add_argument('--lambda', dest='lam')
    p.set_defaults(func=cmd_glrep)

    p = add('cuspidal-check')
    p.add_argument('--lambda', dest='lam')
    p.add_argument('--alpha')
    p.add_argument('--radius', type=int)
    p.add_argument('--mu', help='also test the criterion on T(P(mu), V)')
    p.add_argument('--simple', action='store_true',
                   help='use W(lambda) instead of V(lambda)')
    p.set_defaults(func=cmd_cuspidal_check)

    p = add('separation')
    p.add_argument('--gamma')
    p.add_argument('--lambda', dest='lam')
    p.set_defaults(func=cmd_separation)

    p = add('roundtrip')
    p.add_argument('--lambda', dest='lam')
    p.add_argument('--radius', type=int)
    p.add_argument('--simple', action='store_true')
    p.set_defaults(func=cmd_roundtrip)

    p = add('dmod-apply')
    p.add_argument('word', help='Weyl word, e.g. "d1*t1*d2^-1"')
    p.add_argument('--vector', default='1')
    p.add_argument('--mu')
    p.add_argument('--twist')
    p.set_defaults(func=cmd_dmod_apply)

    p = add('verify-all')
    p.add_argument('--only', help='comma separated check names')
    p.set_defaults(func=cmd_verify_all)

    return parser


def _configure(args):
    from .config import Config, load_path, as_config
    settings = {}
    if args.config is not None:
        graph = load_path(args.config)
        args.yaml_monitor = graph.get('monitor')
        config = graph.get('config')
        if isinstance(config, Config):
            settings = None
            result = config
        else:
            settings = dict(config or {})
    if not wittmod.is_initialized or args.params is not None:
        params = None if args.params is None else \
            tuple(p.strip() for p in args.params.split(',') if p.strip())
        wittmod.init(parameters=params, random_seed=args.seed)
    if settings is None:
        return result
    if args.n is not None:
        settings['n'] = args.n
    if args.seed is not None:
        settings['seed'] = args.seed
    if args.global_degree is not None:
        settings['degree'] = args.global_degree
    return as_config(settings)


def main(argv=None, monitor=None, out=None):
    """ Run one command; returns the exit status """
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _configure(args)
        if args.seed is not None:
            wittmod.sampler.set_seed(args.seed)
        if args.func is cmd_verify_all:
            report = args.func(args, config,
                               monitor or getattr(args, 'yaml_monitor', None))
        else:
            report = args.func(args, config)
    except TruncationError as e:
        report = Report(args.command)
        report.add_check(args.command, UNSTABLE, str(e))
    except WittmodError as e:
        sys.stderr.write('%s: %s\n' % (type(e).__name__, e))
        return 2
    if args.emit:
        serial.save(args.emit, report, on_overwrite='backup')
    out.write(report.pretty() if args.pretty else report.to_json())
    return report.exit_status()


if __name__ == '__main__':
    sys.exit(main())
