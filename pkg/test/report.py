#
# Copyright 2024-2024 Ghent University
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
Tests for vsc.severi.report
"""
import json
import os
from fractions import Fraction

from vsc.install.testing import TestCase

from vsc.severi.common import FixtureError
from vsc.severi.cubic.space import get_model
from vsc.severi.report import CheckRecord, VerificationReport, compare_fixture, dumps, load_fixture, plain, write


class TestReport(TestCase):
    """JSON reports and fixtures"""

    def test_plain(self):
        """exact strings for fractions, lists for vectors"""
        model = get_model('veronese')
        data = {'x': model.point([1, Fraction(-1, 2), 0, 0, 0, 3]), 'n': 2, 't': (Fraction(4, 2),), 'ok': True}
        self.assertEqual(plain(data), {'x': ['1', '-1/2', '0', '0', '0', '3'], 'n': 2, 't': ['2'], 'ok': True})
        self.assertEqual(dumps({'b': 1, 'a': None}), '{\n  "a": null,\n  "b": 1\n}\n')

    def test_record(self):
        """failed trials keep their inputs"""
        record = CheckRecord('euler')
        record.add(0, True, {'x': Fraction(1, 3)})
        record.add(1, False, {'x': Fraction(2)}, error='boom')
        self.assertFalse(record.ok)
        data = record.to_dict()
        self.assertEqual((data['attempted'], data['passed']), (2, 1))
        self.assertEqual(data['failures'], [{'trial': 1, 'inputs': {'x': '2'}, 'error': 'boom'}])

        other = CheckRecord('euler')
        other.add(0, True, {'x': Fraction(1, 3)})
        other.add(1, True, {'x': Fraction(2)})
        self.assertEqual(other.to_dict()['inputs_digest'], data['inputs_digest'])

    def test_verification_report(self):
        """totals, extra keys and the written file"""
        report = VerificationReport('verify-algebra', 'segre', 42, extra={'note': 'x'})
        report.record('a').add(0, True, {})
        report.record('b').add(0, True, {})
        report.record('b').add(1, True, {})
        self.assertTrue(report.ok)
        self.assertEqual((report.attempted, report.passed), (3, 3))

        path = os.path.join(self.tmpdir, 'report.json')
        text = write([report], path)
        with open(path) as fh:
            self.assertEqual(fh.read(), text)
        data = json.loads(text)[0]
        self.assertEqual([c['check'] for c in data['checks']], ['a', 'b'])
        self.assertEqual((data['note'], data['seed'], data['ok']), ('x', 42, True))
        self.assertFalse('timing' in data)

        report.timing = 1.23456
        self.assertEqual(report.to_dict()['timing'], 1.235)

    def test_fixtures(self):
        """missing fixtures raise, select compares a part"""
        self.assertErrorRegex(FixtureError, 'Cannot read fixture', load_fixture, 'nosuchfixture')
        varieties = load_fixture('varieties')
        self.assertEqual(len(varieties), 4)
        match, diff = compare_fixture('varieties', varieties[:1], select=lambda fixture: fixture[:1])
        self.assertTrue(match)
        self.assertEqual(diff, '')
        match, diff = compare_fixture('varieties', varieties[:1])
        self.assertFalse(match)
        self.assertTrue('fixtures/varieties.json' in diff)
