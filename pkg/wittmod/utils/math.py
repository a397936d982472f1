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

""" Integer combinatorics shared by the straightening code """

from functools import lru_cache
from itertools import product

import sympy


@lru_cache(maxsize=None)
def binomial(s, l):
    """Generalized binomial coefficient s(s-1)...(s-l+1)/l!.

    ``s`` may be any integer (negative values appear when inverse
    powers of d_i are moved past a generator); ``l`` must be
    nonnegative. The result is always an integer.
    """
    if l < 0:
        return 0
    return int(sympy.binomial(s, l))


@lru_cache(maxsize=None)
def falling_factorial(x, k):
    return int(sympy.ff(x, k))


def multi_binomial(s, l):
    result = 1
    for si, li in zip(s, l):
        result *= binomial(si, li)
        if not result:
            return 0
    return result


def multi_falling_factorial(m, l):
    result = 1
    for mi, li in zip(m, l):
        result *= falling_factorial(mi, li)
        if not result:
            return 0
    return result


def boxes_below(m):
    """ All multi-indices l with 0 <= l <= m componentwise """
    return product(*[range(mi + 1) for mi in m])
