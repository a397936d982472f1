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

""" Utilities for modifying strings"""

import os

from .exc import EnvironmentVariableError


def preprocess(string):
    """
    Preprocesses a string, by replacing ${VARNAME} with
    os.environ['VARNAME']

    Parameters
    ----------
    string: the str object to preprocess

    Returns
    -------
    the preprocessed string
    """

    split = string.split('${')

    rval = [split[0]]

    for candidate in split[1:]:
        subsplit = candidate.split('}')

        if len(subsplit) < 2:
            raise ValueError('Open ${ not followed by } before '
                             'end of string or next ${ in "%s"' % string)

        varname = subsplit[0]

        try:
            val = os.environ[varname]
        except KeyError:
            if varname.startswith('WITTMOD_'):
                raise EnvironmentVariableError(
                    'Environment variable %s is referenced by the '
                    'configuration but is not set' % varname)
            raise ValueError('Unrecognized environment variable "%s". '
                             'Did you mean %s?' %
                             (varname, match(varname, os.environ.keys())))

        rval.append(val)
        rval.append('}'.join(subsplit[1:]))

    return ''.join(rval)


def match(wrong, candidates):
    """
    Returns the element of candidates that is the closest match to
    wrong in Levenshtein distance. Ties go to the earliest candidate.
    """
    candidates = list(candidates)
    assert len(candidates) > 0

    def distance(a, b):
        previous = list(range(len(b) + 1))
        for i, ca in enumerate(a):
            current = [i + 1]
            for j, cb in enumerate(b):
                current.append(min(previous[j + 1] + 1,
                                   current[j] + 1,
                                   previous[j] + (ca != cb)))
            previous = current
        return previous[-1]

    return min(candidates, key=lambda c: distance(wrong, c))


def split_list(text, sep=','):
    """ Split a comma separated literal, ignoring brackets and parentheses """
    parts = []
    depth = 0
    current = []
    for char in text:
        if char in '([':
            depth += 1
        elif char in ')]':
            depth -= 1
        if char == sep and depth == 0:
            parts.append(''.join(current).strip())
            current = []
        else:
            current.append(char)
    tail = ''.join(current).strip()
    if tail or parts:
        parts.append(tail)
    return parts
