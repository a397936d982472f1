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

""" Monitors that report on the progress of a verification run. Every
monitor has ``start``, ``report`` (once per finished check) and
``finish`` (with the assembled report).

"""

import os
import sys
from datetime import datetime


def _status_line(check):
    return '[%s] %s' % (check['status'].upper(), check['name'])


class ProgressMonitor(object):
    """Prints to stdout and optionally to ``<save_path>/output.log``;
    ``finish`` writes ``report.json`` next to the log."""

    def __init__(self, experiment_name='wittmod', save_path=None,
                 output_to_log=False, make_subdir=True, save_report=True):

        self.experiment_name = experiment_name
        self.output_to_log = output_to_log
        self.save_report = save_report
        self.log = None
        self.checks = []
        self.save_path = None
        if save_path is not None:
            self.makedir(save_path, make_subdir)

    def print_(self, obj):
        if self.log is not None:
            self.log.write(str(obj) + '\n')
        print(obj)
        sys.stdout.flush()

    def makedir(self, save_path, make_subdir=True):
        if make_subdir:
            experiment_dir_name = '_'.join((
                self.experiment_name,
                datetime.now().strftime('%Y-%m-%dT%H-%M-%S')))
            path = os.path.join(save_path, experiment_dir_name)
        else:
            path = save_path
        if not os.path.exists(path):
            os.makedirs(path)
        self.save_path = path

        if self.output_to_log:
            self.log = open(os.path.join(self.save_path, 'output.log'), 'w', 1)

    def start(self, command='verify-all'):
        self.start_time = datetime.now()
        self.print_('Running %s' % command)

    def report(self, check):
        self.checks.append(check)
        self.print_(_status_line(check))
        if check['status'] != 'pass' and check.get('witness') is not None:
            self.print_('    witness: %s' % (check['witness'],))

    def finish(self, report=None):
        runtime = (datetime.now() - self.start_time).total_seconds()
        counts = {}
        for check in self.checks:
            counts[check['status']] = counts.get(check['status'], 0) + 1
        self.print_('%d checks: %s' % (
            len(self.checks),
            ', '.join('%d %s' % (counts[k], k) for k in sorted(counts))))
        self.print_("Runtime: %dm %ds" % (runtime // 60, runtime % 60))

        if report is not None and self.save_report and \
                self.save_path is not None:
            path = os.path.join(self.save_path, 'report.json')
            self.print_("Saving report to %s" % path)
            with open(path, 'w') as f:
                f.write(report.to_json())

    def __del__(self):
        if self.log is not None:
            self.log.close()


class SimpleProgressMonitor(object):
    def __init__(self):
        self.checks = []

    def start(self, command='verify-all'):
        self.start_time = datetime.now()

    def report(self, check):
        self.checks.append(check)
        print(_status_line(check))
        sys.stdout.flush()

    def finish(self, report=None):
        runtime = (datetime.now() - self.start_time).total_seconds()
        print("Runtime: %dm %ds" % (runtime // 60, runtime % 60))
        sys.stdout.flush()


class DummyProgressMonitor(object):
    def __init__(self):
        self.checks = []

    def start(self, command='verify-all'):
        pass

    def report(self, check):
        self.checks.append(check)

    def finish(self, report=None):
        pass
