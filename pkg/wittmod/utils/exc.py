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

"""
Exceptions raised by wittmod
"""


class WittmodError(Exception):
    """ Base class of all errors raised by the library """

    def __init__(self, *args):
        super(WittmodError, self).__init__(*args)


class EnvironmentVariableError(WittmodError):
    """ Raised when a required environment variable is not defined """

    def __init__(self, *args):
        super(EnvironmentVariableError, self).__init__(*args)


class ParameterMismatchError(WittmodError):
    """
    Raised when wittmod is re-initialized with a different parameter
    list, or when Scalars of two different fields meet.
    """


class ScalarDivisionError(WittmodError, ZeroDivisionError):
    """ Division by the zero rational function """


class DimensionMismatchError(WittmodError, ValueError):
    """ Elements living in different numbers of variables were combined """


class PreconditionError(WittmodError, ValueError):
    """ An operation was called outside of its domain of definition """


class DecompositionError(WittmodError):
    """
    Greedy elimination against the X-monomial basis did not finish
    within the degree bound, or the leading term did not cancel.
    """


class CentralizerError(WittmodError):
    """
    A constructed element failed its verification. This is never
    expected to happen and points at a bug in the straightening code.

    The offending commutator (or monomial) is kept as ``witness``.
    """

    def __init__(self, message, witness=None):
        super(CentralizerError, self).__init__(message)
        self.witness = witness


class RepresentationError(WittmodError):
    """ Matrices of a gl_n- or H_n-module violate their relations """

    def __init__(self, message, witness=None):
        super(RepresentationError, self).__init__(message)
        self.witness = witness


class NonInvertibleError(WittmodError):
    """ The inverse of some d_i does not exist on the given vector """


class LocalizationError(WittmodError):
    """ A localized element was passed where U(W_n) is required """


class TruncationError(WittmodError):
    """
    A truncated kernel computation changed between consecutive degree
    bounds, so the result cannot be trusted at this bound.
    """

    def __init__(self, message, dimensions=None):
        super(TruncationError, self).__init__(message)
        self.dimensions = dimensions


class ParseError(WittmodError, ValueError):
    """
    Syntax error in an expression. ``position`` is the 0-based offset
    into the source text and ``expected`` lists what would have been
    accepted there.
    """

    def __init__(self, message, text='', position=0, expected=()):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        full = message
        if expected:
            full += ' (expected %s)' % ' or '.join(self.expected)
        if text:
            full += '\n    %s\n    %s^' % (text, ' ' * position)
        super(ParseError, self).__init__(full)


class ConfigError(WittmodError, ValueError):
    """ A configuration failed validation """
