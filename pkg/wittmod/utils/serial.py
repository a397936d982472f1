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

"""Reading and writing JSON documents (representations, reports).

Objects that know how to serialize themselves expose ``to_dict``;
everything else must already be JSON compatible.
"""

import json
import os
import shutil

from .string_utils import preprocess, match


def raise_cannot_open(path):
    pieces = path.split('/')
    for i in range(1, len(pieces) + 1):
        so_far = '/'.join(pieces[0:i])
        if not os.path.exists(so_far):
            if i == 1:
                if so_far == '':
                    continue
                raise IOError('Cannot open ' + path +
                              ' (' + so_far + ' does not exist)')
            parent = '/'.join(pieces[0:i - 1])
            bad = pieces[i - 1]

            if not os.path.isdir(parent):
                raise IOError("Cannot open " + path + " because " +
                              parent + " is not a directory.")

            candidates = os.listdir(parent)

            if len(candidates) == 0:
                raise IOError("Cannot open " + path + " because " +
                              parent + " is empty.")

            if len(candidates) > 100:
                # Don't attempt to guess the right name in a huge directory
                raise IOError("Cannot open " + path +
                              " but can open " + parent + ".")

            raise IOError("Cannot open " + path + " but can open " + parent +
                          ". Did you mean " + match(bad, candidates) +
                          " instead of " + bad + "?")
    assert False


def to_string(obj):
    if hasattr(obj, 'to_dict'):
        obj = obj.to_dict()
    return json.dumps(obj, sort_keys=True, indent=2) + '\n'


def from_string(s):
    return json.loads(s)


def load(filepath):
    filepath = preprocess(filepath)
    if not os.path.exists(filepath):
        raise_cannot_open(filepath)
    with open(filepath, 'r') as f:
        return from_string(f.read())


def save(filepath, obj, on_overwrite='ignore'):
    """
    Serialize ``obj`` to ``filepath`` as JSON.

    Parameters
    ----------
    filepath : str
        The file to write.
    obj : object
        A JSON compatible value or an object with a ``to_dict`` method.
    on_overwrite : str
        'ignore' overwrites an existing file; 'backup' moves the old file
        out of the way first and removes the backup once the new file
        has been written.
    """
    filepath = preprocess(filepath)
    mkdir(os.path.dirname(filepath))
    content = to_string(obj)

    if on_overwrite == 'backup' and os.path.exists(filepath):
        backup = filepath + '.bak'
        while os.path.exists(backup):
            backup += '.bak'
        shutil.move(filepath, backup)
        try:
            _save(filepath, content)
        except Exception:
            shutil.move(backup, filepath)
            raise
        os.remove(backup)
    elif on_overwrite in ('ignore', 'backup'):
        _save(filepath, content)
    else:
        raise ValueError("on_overwrite must be 'ignore' or 'backup', "
                         "got %r" % on_overwrite)


def _save(filepath, content):
    with open(filepath, 'w') as f:
        f.write(content)


def mkdir(filepath):
    """
    Make a directory. Should succeed even if it needs to make more than
    one directory and nest subdirectories to do so. Raises an error if
    the directory can't be made. Does not raise an error if the
    directory already exists.
    """
    if filepath and not os.path.isdir(filepath):
        os.makedirs(filepath)
