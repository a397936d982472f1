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

"""Before wittmod can be used, it must be initialized using the function
:func:`wittmod.init`. Initialization fixes the list of formal
parameters (and with it the coefficient field of every computation)
and seeds the random number generator used for sampled checks.

"""

import numpy as np

import os as _os
wittmod_root = _os.path.split(
    _os.path.abspath(_os.path.dirname(__file__)))[0]

DEFAULT_PARAMETERS = ('a1', 'a2', 'a3')

is_initialized = False


class _Sampler(object):
    _sampler = None
    seed = None

    def __getattribute__(self, name):
        if name in ('seed', 'set_seed'):
            return object.__getattribute__(self, name)

        sampler = object.__getattribute__(self, '_sampler')
        if sampler is None:
            sampler = np.random.RandomState(self.seed)
            self._sampler = sampler
        return sampler.__getattribute__(name)

    def set_seed(self, seed):
        self.seed = None if seed is None else int(seed)
        self._sampler = None
sampler = _Sampler()


class _Field(object):
    _field = None

    def init_field(self, parameters):
        from .kernel import ScalarField
        self._field = ScalarField(parameters)

    def __getattribute__(self, name):
        if name == 'init_field':
            return object.__getattribute__(self, name)

        if object.__getattribute__(self, '_field') is None:
            raise RuntimeError("Scalar field hasn't been initialized yet")

        return object.__getattribute__(self, '_field').__getattribute__(name)

    def __call__(self, value):
        if object.__getattribute__(self, '_field') is None:
            raise RuntimeError("Scalar field hasn't been initialized yet")
        return object.__getattribute__(self, '_field')(value)

field = _Field()


def init(parameters=None, random_seed=None):
    """Initialize wittmod.

    This function creates the exact coefficient field Q(a_1, ..., a_p)
    and seeds the pseudo-random number generator.

    **Parameters:**

    parameters : sequence of strings, optional
        Names of the formal parameters. If this is omitted, the names
        are taken from the comma separated environment variable
        ``WITTMOD_PARAMETERS`` and if that is not defined,
        ``('a1', 'a2', 'a3')`` is used. An empty sequence gives the
        field of rational numbers. Calling :func:`init` again with a
        different list raises
        :class:`wittmod.utils.exc.ParameterMismatchError`.

    random_seed : integer, optional
        The seed to use for the pseudo-random number generator. If
        this is omitted, the seed is taken from the environment
        variable ``RANDOM_SEED`` and if that is not defined, a random
        integer is used as a seed.
    """

    if parameters is None:
        env = _os.environ.get('WITTMOD_PARAMETERS')
        parameters = tuple(p.strip() for p in env.split(',') if p.strip()) \
            if env is not None else DEFAULT_PARAMETERS
    parameters = tuple(parameters)

    if random_seed is None:
        random_seed = _os.environ.get('RANDOM_SEED')

    global is_initialized
    if not is_initialized:
        is_initialized = True
        field.init_field(parameters)
    elif field.parameters != parameters:
        from .utils.exc import ParameterMismatchError
        raise ParameterMismatchError(
            "wittmod was initialized with parameters %s, can't switch to %s"
            % (', '.join(field.parameters) or '()',
               ', '.join(parameters) or '()'))

    sampler.set_seed(random_seed)
