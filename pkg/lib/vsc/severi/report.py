#
# Copyright 2024-2026 Ghent University
#
# This file is part of vsc-severi,
# originally created by the HPC team of Ghent University (http://ugent.be/hpc/en),
# with support of Ghent University (http://ugent.be/hpc),
# the Flemish Supercomputer Centre (VSC) (https://www.vscentrum.be),
# the Flemish Research Foundation (FWO) (http://www.fwo.be/en)
# and the Department of Economy, Science and Innovation (EWI) (http://www.ewi-vlaanderen.be/en).
#
# https://github.com/hpcugent/vsc-severi
#
# vsc-severi is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation v2.
#
# vsc-severi is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with vsc-severi.  If not, see <http://www.gnu.org/licenses/>.
#
"""
Machine readable verification reports: one JSON object per suite, stable key order.
"""
import difflib
import hashlib
import json
import logging
import os
from fractions import Fraction

from vsc.severi.common import FixtureError, fmt_rational

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'fixtures')


def plain(value):
    """JSON friendly copy: Fractions become exact strings, vectors become lists"""
    if isinstance(value, Fraction):
        return fmt_rational(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if hasattr(value, 'coords'):
        return [plain(x) for x in value.coords]
    if isinstance(value, (list, tuple)):
        return [plain(x) for x in value]
    return str(value)


def dumps(data):
    return json.dumps(plain(data), sort_keys=True, indent=2) + '\n'


def digest(data):
    return hashlib.sha256(dumps(data).encode('utf8')).hexdigest()


class CheckRecord:
    """All trials of one check on one target"""

    def __init__(self, check):
        self.check = check
        self.attempted = 0
        self.passed = 0
        self.failures = []
        self._hash = hashlib.sha256()

    def add(self, trial, ok, inputs, error=None):
        self.attempted += 1
        self._hash.update(digest(inputs).encode('ascii'))
        if ok:
            self.passed += 1
        else:
            failure = {'trial': trial, 'inputs': plain(inputs)}
            if error is not None:
                failure['error'] = str(error)
            self.failures.append(failure)

    @property
    def ok(self):
        return self.passed == self.attempted

    def to_dict(self):
        return {
            'check': self.check,
            'attempted': self.attempted,
            'passed': self.passed,
            'inputs_digest': self._hash.hexdigest(),
            'failures': self.failures,
        }


class VerificationReport:
    """Outcome of one suite on one target (model, algebra or root system selection)"""

    def __init__(self, suite, target, seed, extra=None):
        self.suite = suite
        self.target = target
        self.seed = seed
        self.records = {}
        self.extra = extra or {}
        self.timing = None

    def record(self, check):
        if check not in self.records:
            self.records[check] = CheckRecord(check)
        return self.records[check]

    @property
    def attempted(self):
        return sum(r.attempted for r in self.records.values())

    @property
    def passed(self):
        return sum(r.passed for r in self.records.values())

    @property
    def ok(self):
        return all(r.ok for r in self.records.values())

    def to_dict(self):
        res = {
            'suite': self.suite,
            'target': self.target,
            'seed': self.seed,
            'attempted': self.attempted,
            'passed': self.passed,
            'ok': self.ok,
            'checks': [self.records[k].to_dict() for k in sorted(self.records)],
        }
        res.update(self.extra)
        if self.timing is not None:
            res['timing'] = round(self.timing, 3)
        return res

    def __repr__(self):
        return f"VerificationReport({self.suite}, {self.target}: {self.passed}/{self.attempted})"


def write(reports, path=None):
    """Write the reports (a list of dicts or VerificationReports) to path, or return the text"""
    text = dumps([r.to_dict() if hasattr(r, 'to_dict') else r for r in reports])
    if path:
        with open(path, 'w') as fh:
            fh.write(text)
        logging.info("report written to %s", path)
    return text


def load_fixture(name, fixture_dir=None):
    """Parsed contents of fixtures/<name>.json"""
    path = os.path.join(fixture_dir or FIXTURE_DIR, f'{name}.json')
    try:
        with open(path) as fh:
            return json.load(fh)
    except (IOError, OSError, ValueError) as err:
        raise FixtureError("Cannot read fixture %s: %s", path, err)


def compare_fixture(name, data, fixture_dir=None, select=None):
    """
    Compare data with a fixture.

    @param select: function applied to the parsed fixture first, to compare with a part of it
    @return: (match, unified diff text)
    """
    fixture = load_fixture(name, fixture_dir=fixture_dir)
    if select is not None:
        fixture = select(fixture)
    expected = dumps(fixture)
    actual = dumps(data)
    if expected == actual:
        logging.info("fixture %s matches", name)
        return True, ''
    diff = ''.join(difflib.unified_diff(expected.splitlines(True), actual.splitlines(True),
                                        fromfile=f'fixtures/{name}.json', tofile=name))
    logging.error("fixture %s differs:\n%s", name, diff)
    return False, diff
