# Copyright (c) 2008--2011, Theano Development Team, Hannes Bretschneider
# Copyright (C) 2026  The wittmod developers
# All rights reserved.

# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:

#     * Redistributions of source code must retain the above copyright
#       notice, this list of conditions and the following disclaimer.
#     * Redistributions in binary form must reproduce the above copyright
#       notice, this list of conditions and the following disclaimer in the
#       documentation and/or other materials provided with the distribution.
#     * Neither the name of Theano nor the names of its contributors may be
#       used to endorse or promote products derived from this software without
#       specific prior written permission.

# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS ''AS IS'' AND ANY
# EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE IMPLIED
# WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDERS BE LIABLE FOR ANY
# DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL DAMAGES
# (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR SERVICES;
# LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER CAUSED AND
# ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY, OR TORT
# (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE OF THIS

"""Parse YAML configuration files that describe verification runs.

A configuration has an optional ``init:`` section, passed to
:func:`wittmod.init`, and a ``config:`` section that is either a
mapping or a ``!obj:wittmod.config.Config`` object::

    init:
      parameters: [a1, a2, a3]
      random_seed: 0
    config:
      n: 2
      degree: 3
      radius: 2
      alpha: symbolic

Derived from the pylearn2 loader.
"""

import importlib
import os
import re
import warnings

import yaml

from .utils.call_check import checked_call
from .utils.string_utils import match, preprocess
from .utils.exc import ConfigError, ParseError

is_initialized = False
root = os.path.curdir

SYMBOLIC = 'symbolic'


class Config(object):
    """Validated settings of a verification run.

    **Parameters:**

    n : integer, 1 <= n <= 4

    alpha : vector literal or ``'symbolic'``
        Support of the weight windows. ``'symbolic'`` takes the first n
        parameters.

    highest_weight : vector literal
        Highest weight used by single-representation commands.

    gamma, lam : vector literals
        The pair compared by the separation check. The defaults are
        ``(a1, ..., a1)`` and ``(a1 + 1/2, a1, ..., a1)``.

    mu : vector literal or ``'symbolic'``
        Exponent of the Laurent module P(mu).

    twist : vector literal
        The twist a of A_n^a, all ones by default.

    degree : integer >= 1
        Truncation degree D.

    radius : integer >= 1
        Window radius R.

    seed : integer, optional

    samples : integer >= 1
        Number of random samples in randomized checks.

    output : path, optional

    representations : list of vector literals
        Highest weights used by the suites.

    extended : bool
        Also run the n = 3 checks.
    """

    def __init__(self, n=2, alpha=SYMBOLIC, highest_weight=None, gamma=None,
                 lam=None, mu=SYMBOLIC, twist=None, degree=3, radius=2,
                 seed=None, samples=20, output=None, representations=None,
                 extended=None):
        from . import field

        if not isinstance(n, int) or not 1 <= n <= 4:
            raise ConfigError("n must be an integer between 1 and 4, got %r"
                              % (n,))
        self.n = n
        for name, value in (('degree', degree), ('radius', radius),
                            ('samples', samples)):
            if not isinstance(value, int) or value < 1:
                raise ConfigError("%s must be an integer >= 1, got %r" %
                                  (name, value))
        self.degree = degree
        self.radius = radius
        self.samples = samples
        self.seed = seed
        self.output = output
        if extended is None:
            extended = os.environ.get('WITTMOD_EXTENDED') == '1'
        self.extended = bool(extended)

        self.alpha = self._vector('alpha', alpha, symbolic=True)
        self.mu = self._vector('mu', mu, symbolic=True)
        self.twist = self._vector('twist', twist or [1] * n)
        self.highest_weight = self._vector(
            'highest_weight', highest_weight or [1] + [0] * (n - 1))
        if gamma is None or lam is None:
            a = self._symbolic('separation default', 1)[0]
        self.gamma = self._vector('gamma', gamma) if gamma is not None \
            else (a,) * n
        self.lam = self._vector('lam', lam) if lam is not None else \
            (a + field.convert(1) / 2,) + (a,) * (n - 1)

        if representations is None:
            representations = [[0] * n, [1] + [0] * (n - 1)]
            if n > 1:
                representations += [[2] + [0] * (n - 1),
                                    [1, 1] + [0] * (n - 2)]
        self.representations = [self._vector('representations', r)
                                for r in representations]

    def _symbolic(self, name, k):
        from . import field
        if len(field.parameters) < k:
            raise ConfigError(
                "The symbolic %s needs %d parameters but only %s are "
                "declared" % (name, k, list(field.parameters)))
        return tuple(field.parameter(p) for p in field.parameters[:k])

    def _vector(self, name, value, symbolic=False):
        from .parser import parse_scalar_list
        if symbolic and value == SYMBOLIC:
            return self._symbolic(name, self.n)
        try:
            vector = parse_scalar_list(value)
        except (ParseError, TypeError) as e:
            raise ConfigError("Can't read %s: %s" % (name, e))
        if len(vector) != self.n:
            raise ConfigError("%s has length %d, expected n = %d" %
                              (name, len(vector), self.n))
        return vector

    def to_dict(self):
        from . import field
        vec = lambda v: [field.format(x) for x in v]
        return {
            'n': self.n,
            'parameters': list(field.parameters),
            'alpha': vec(self.alpha),
            'mu': vec(self.mu),
            'twist': vec(self.twist),
            'highest_weight': vec(self.highest_weight),
            'gamma': vec(self.gamma),
            'lam': vec(self.lam),
            'degree': self.degree,
            'radius': self.radius,
            'seed': self.seed,
            'samples': self.samples,
            'representations': [vec(r) for r in self.representations],
            'extended': self.extended,
        }


def as_config(value):
    if isinstance(value, Config):
        return value
    if value is None:
        return Config()
    if hasattr(value, 'keys'):
        try:
            return checked_call(Config, dict(value))
        except TypeError as e:
            raise ConfigError(str(e))
    raise ConfigError("The config section must be a mapping, got %s" %
                      type(value).__name__)


def load(stream, overrides=None, **kwargs):
    """
    Loads a YAML configuration from a string or file-like object.

    Parameters
    ----------
    stream : str or object
        Either a string containing valid YAML or a file-like object
        supporting the .read() interface.
    overrides : dict, optional
        A dictionary containing overrides to apply. The location of
        the override is specified in the key as a dot-delimited path
        to the desired parameter, e.g. "config.radius".

    Returns
    -------
    graph : dict or object
        The dictionary or object (if the top-level element specified a
        Python object to instantiate).
    """

    global is_initialized
    if not is_initialized:
        initialize()

    if isinstance(stream, str):
        string = stream
    else:
        string = stream.read()

    proxy_graph = yaml.load(preprocess(string), Loader=yaml.Loader, **kwargs)
    if proxy_graph is None:
        proxy_graph = {}
    if not hasattr(proxy_graph, 'get'):
        raise ConfigError("A configuration must be a mapping at the top")

    from . import init
    init_dict = proxy_graph.get('init') or {}
    checked_call(init, init_dict)

    if overrides is not None:
        handle_overrides(proxy_graph, overrides)
    return instantiate_all(proxy_graph)


def load_path(path, overrides=None, **kwargs):
    """
    Convenience function for loading a YAML configuration from a file.
    """
    global root
    from .utils.serial import raise_cannot_open
    if not os.path.exists(path):
        raise_cannot_open(path)
    with open(path, 'r') as f:
        content = f.read()

    old_root = root
    root = os.path.dirname(os.path.abspath(path))
    try:
        return load(content, overrides, **kwargs)
    finally:
        root = old_root


def handle_overrides(graph, overrides):
    """
    Handle any overrides for this configuration.

    Parameters
    ----------
    graph : dict or object
        A dictionary (or an ObjectProxy) containing the object graph
        loaded from a YAML file.
    overrides : dict
        A dictionary containing overrides to apply. The location of
        the override is specified in the key as a dot-delimited path
        to the desired parameter, e.g. "config.radius".
    """
    for key in overrides:
        levels = key.split('.')
        part = graph
        for lvl in levels[:-1]:
            try:
                part = part[lvl]
            except KeyError:
                raise KeyError("'%s' override failed at '%s'" % (key, lvl))
        part[levels[-1]] = overrides[key]


def instantiate_all(graph):
    """
    Instantiate all ObjectProxy objects in a nested hierarchy.
    """

    def should_instantiate(obj):
        return isinstance(obj, (ObjectProxy, dict, list))

    if not isinstance(graph, list):
        for key in list(graph):
            if should_instantiate(graph[key]):
                graph[key] = instantiate_all(graph[key])

    if isinstance(graph, ObjectProxy):
        graph = graph.instantiate()

    if isinstance(graph, list):
        for i, elem in enumerate(graph):
            if should_instantiate(elem):
                graph[i] = instantiate_all(elem)

    return graph


class ObjectProxy(object):
    """
    Class used to delay instantiation of objects so that overrides can be
    applied.
    """
    def __init__(self, cls, kwds, yaml_src):
        self.cls = cls
        self.kwds = kwds
        self.yaml_src = yaml_src
        self.instance = None

    def __setitem__(self, key, value):
        self.kwds[key] = value

    def __getitem__(self, key):
        return self.kwds[key]

    def __iter__(self):
        return self.kwds.__iter__()

    def keys(self):
        return list(self.kwds)

    def instantiate(self):
        """
        Instantiate this object with the supplied parameters in `self.kwds`,
        or if already instantiated, return the cached instance.
        """
        if self.instance is None:
            self.instance = checked_call(self.cls, self.kwds)
        try:
            self.instance.yaml_src = self.yaml_src
        except AttributeError:
            pass
        return self.instance


def try_to_import(tag_suffix):
    components = tag_suffix.split('.')
    modulename = '.'.join(components[:-1])
    try:
        module = importlib.import_module(modulename)
    except ImportError as e:
        pcomponents = components[:-1]
        j = 1
        while j <= len(pcomponents):
            modulename = '.'.join(pcomponents[:j])
            try:
                importlib.import_module(modulename)
            except ImportError:
                base_msg = 'Could not import %s' % modulename
                if j > 1:
                    modulename = '.'.join(pcomponents[:j - 1])
                    base_msg += ' but could import %s' % modulename
                raise ImportError(base_msg + '. Original exception: ' +
                                  str(e))
            j += 1
        raise

    try:
        return getattr(module, components[-1])
    except AttributeError as e:
        try:
            candidates = dir(module)
            msg = ('Could not evaluate %s. ' % tag_suffix) + \
                'Did you mean ' + match(components[-1], candidates) + \
                '? Original error was ' + str(e)
        except Exception:
            warnings.warn("Attempt to decipher AttributeError failed")
            raise AttributeError(('Could not evaluate %s. ' % tag_suffix) +
                                 'Original error was ' + str(e))
        raise AttributeError(msg)


def multi_constructor(loader, tag_suffix, node):
    """
    Constructor function passed to PyYAML telling it how to construct
    objects from argument descriptions.
    """
    yaml_src = yaml.serialize(node)
    mapping = loader.construct_mapping(node, deep=True)
    if '.' not in tag_suffix:
        raise yaml.YAMLError("!obj: tag %r needs a module path" % tag_suffix)
    return ObjectProxy(try_to_import(tag_suffix), mapping, yaml_src)


def multi_constructor_import(loader, tag_suffix, node):
    if '.' not in tag_suffix:
        raise yaml.YAMLError("import tag suffix contains no '.'")
    return try_to_import(tag_suffix)


def multi_constructor_include(loader, tag_suffix, node):
    global root

    old_root = root

    filename = os.path.join(root, loader.construct_scalar(node))
    root = os.path.split(filename)[0]
    with open(filename, 'r') as f:
        data = yaml.load(preprocess(f.read()), Loader=yaml.Loader)

    root = old_root
    return data


def initialize():
    """
    Initialize the configuration system by installing YAML handlers.
    Automatically done on first call to load() specified in this file.
    """
    global is_initialized
    yaml.add_multi_constructor('!obj:', multi_constructor,
                               Loader=yaml.Loader)
    yaml.add_multi_constructor('!import:', multi_constructor_import,
                               Loader=yaml.Loader)
    yaml.add_multi_constructor('!include:', multi_constructor_include,
                               Loader=yaml.Loader)

    def import_constructor(loader, node):
        value = loader.construct_scalar(node)
        return try_to_import(value)

    yaml.add_constructor('!import', import_constructor, Loader=yaml.Loader)
    yaml.add_implicit_resolver(
        '!import',
        re.compile(r'(?:[a-zA-Z_][\w_]+\.)+[a-zA-Z_][\w_]+'),
        Loader=yaml.Loader
    )
    is_initialized = True
