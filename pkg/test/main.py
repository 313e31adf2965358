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
Tests for vsc.severi.main
"""
import json
import os
import shutil

from mock import patch
from vsc.install.testing import TestCase

from vsc.severi.common import SeveriError
from vsc.severi.cubic.space import get_model
from vsc.severi.main import Classification, cmd_cremona, cremona_lines, main, regime
from vsc.severi.option import SEED_ENV, SeveriOption
from vsc.severi.report import FIXTURE_DIR, load_fixture
from vsc.severi.roots import classify

IDENTITY = '1,0,0,0,1,0,0,0,1'


def parse(*args):
    return SeveriOption(go_args=list(args), go_useconfigfiles=False)


class TestCremona(TestCase):
    """the cremona command"""

    def test_lines(self):
        """the three regimes of the Segre model"""
        model = get_model('segre')
        lines, ok = cremona_lines(model, model.point(IDENTITY.split(',')))
        self.assertTrue(ok)
        self.assertEqual(lines, [
            'coords=m11,m12,m13,m21,m22,m23,m31,m32,m33',
            'det=1',
            'grad=1/3,0,0,0,1/3,0,0,0,1/3',
            'sharp=1,0,0,0,1,0,0,0,1',
            'regime=off Sec',
            'involution=ok',
        ])

        lines, ok = cremona_lines(model, model.point([1, 0, 0, 0, 1, 0, 0, 0, 0]))
        self.assertTrue(ok)
        self.assertEqual(lines[1:], ['det=0', 'grad=0,0,0,0,0,0,0,0,1/3', 'sharp=0,0,0,0,0,0,0,0,1', 'regime=on Sec-X'])

        self.assertEqual(regime(model, model.basis(0)), 'total-transform regime')

    def test_cmd(self):
        """model from the arguments or from --model"""
        lines, ok = cmd_cremona(parse('cremona', 'segre', '2,0,0,0,2,0,0,0,2'))
        self.assertTrue(ok)
        self.assertEqual(lines[1], 'det=8')

        lines, _ = cmd_cremona(parse('cremona', '--model', 'veronese', '1,1,1,0,0,0'))
        self.assertEqual(lines[:2], ['coords=a,b,c,x1,x2,x3', 'det=1'])

        self.assertErrorRegex(SeveriError, 'needs one model', cmd_cremona, parse('cremona', '1,1,1,0,0,0'))
        self.assertErrorRegex(SeveriError, 'needs 6 coordinates', cmd_cremona, parse('cremona', 'veronese', '1,2'))
        self.assertErrorRegex(SeveriError, 'cremona needs', cmd_cremona, parse('cremona'))


class TestClassification(TestCase):
    """classify against the fixtures"""

    def test_partial(self):
        """rank <= 5 is partial, the fixtures match on the selected part"""
        classification = Classification(5)
        self.assertTrue(classification.partial)
        self.assertFalse(classification.has_e6)
        self.assertEqual(classification.an_labels, ['A2', 'A3', 'A4', 'A5'])
        self.assertEqual(classification.emit('e6-table'), {})

        report = classification.report(1)
        self.assertTrue(report.ok, report.to_dict())
        data = report.to_dict()
        self.assertTrue(data['partial'])
        self.assertEqual([v['type'] for v in data['varieties']], ['A2', 'A2xA2', 'A5'])
        self.assertEqual(report.records['fixtures'].attempted, 5)
        self.assertErrorRegex(SeveriError, 'Nothing to emit', classification.emit, 'report')

    def test_types(self):
        """a type selection without E is partial and has no product"""
        classification = Classification(8, types=['B', 'G'])
        self.assertTrue(classification.partial)
        self.assertFalse(classification.has_product)
        self.assertEqual(classification.varieties, [])
        self.assertEqual(classification.compare('catalog'), (True, ''))
        self.assertEqual(classification.compare('nonsimple'), (True, ''))

    def test_mismatch(self):
        """a changed fixture is reported"""
        fixtures = os.path.join(self.tmpdir, 'fixtures')
        shutil.copytree(FIXTURE_DIR, fixtures)
        varieties = load_fixture('varieties')
        varieties[0]['dim'] = 7
        with open(os.path.join(fixtures, 'varieties.json'), 'w') as fh:
            json.dump(varieties, fh)

        classification = Classification(3)
        match, diff = classification.compare('varieties', fixture_dir=fixtures)
        self.assertFalse(match)
        self.assertTrue('"dim": 6' in diff)
        self.assertEqual(classification.compare('varieties'), (True, ''))


class TestMain(TestCase):
    """main() end to end, with the output in a file"""

    def setUp(self):
        super().setUp()
        self.env_patcher = patch.dict(os.environ)
        self.env_patcher.start()
        os.environ.pop(SEED_ENV, None)

    def tearDown(self):
        self.env_patcher.stop()
        super().tearDown()

    def run_main(self, *args):
        """Run main with args, return (exit code, output text)"""
        out = os.path.join(self.tmpdir, 'out.txt')
        if os.path.exists(out):
            os.remove(out)
        with patch('sys.argv', ['severi.py', '--out', out] + list(args)):
            with self.assertRaises(SystemExit) as ctx:
                main()
        text = None
        if os.path.exists(out):
            with open(out) as fh:
                text = fh.read()
        return ctx.exception.code, text

    def test_cremona(self):
        """exit code 0 and the text report"""
        code, text = self.run_main('cremona', 'segre', IDENTITY)
        self.assertEqual(code, 0)
        self.assertTrue(text.startswith('coords=m11,m12,m13,m21,m22,m23,m31,m32,m33\ndet=1\n'))
        self.assertTrue(text.endswith('involution=ok\n'))

    def test_emit(self):
        """--emit writes the data, equal to the fixture"""
        code, text = self.run_main('classify', '--emit', 'e6-table')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(text), load_fixture('e6_table'))
        self.assertEqual(json.loads(text)['note'], classify.E6_NOTE)

        code, text = self.run_main('classify', '--emit', 'an-candidates', '--max-rank', '4')
        self.assertEqual(code, 0)
        self.assertEqual(sorted(json.loads(text)['candidates']), ['A2', 'A3', 'A4'])

        code, text = self.run_main('classify', '--emit', 'an-table', '--max-rank', '5')
        self.assertEqual(code, 0)
        data = json.loads(text)
        self.assertEqual(data['note'], classify.AN_NOTE)
        self.assertEqual(data['values']['A5']['w2'], ['1', '1', '0', '0', '-1', '-1'])

    def test_fixture_mismatch(self):
        """a changed fixture gives exit code 1"""
        fixtures = os.path.join(self.tmpdir, 'fixtures')
        shutil.copytree(FIXTURE_DIR, fixtures)
        with open(os.path.join(fixtures, 'nonsimple.json'), 'w') as fh:
            fh.write('[]\n')
        code, _ = self.run_main('classify', '--emit', 'nonsimple', '--fixtures', fixtures)
        self.assertEqual(code, 1)

    def test_errors(self):
        """errors are logged, exit code 1"""
        self.assertEqual(self.run_main('nosuchcommand')[0], 1)
        self.assertEqual(self.run_main('cremona', 'segre', '1,2,3')[0], 1)

    def test_reproducible(self):
        """same options, same bytes"""
        args = ['verify-algebra', '--model', 'veronese', '--trials', '2', '--seed', '5']
        code, first = self.run_main(*args)
        self.assertEqual(code, 0)
        second = self.run_main(*args)[1]
        self.assertEqual(first, second)
        reports = json.loads(first)
        self.assertEqual([r['target'] for r in reports], ['R', 'C', 'H', 'O', 'veronese'])
        self.assertTrue(all(r['seed'] == 5 and r['ok'] for r in reports))
        self.assertFalse(any('timing' in r for r in reports))

        code, third = self.run_main(*(args[:-1] + ['6']))
        self.assertEqual(code, 0)
        self.assertNotEqual(first, third)
