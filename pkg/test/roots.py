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
Tests for the vsc.severi.roots.rootsystem, classical and exceptional modules
"""
from fractions import Fraction

from vsc.install.testing import TestCase

from vsc.severi.common import RootSystemError
from vsc.severi.roots.classical import TypeA, TypeD
from vsc.severi.roots.classify import DominantWeight, an_closed_form, an_table, orbit_dim, w0_descent_check, weyl_dim
from vsc.severi.roots.rootsystem import build, parse_label, what_rootsystem

# (type, rank, positive roots, coxeter number)
SYSTEMS = [
    ('A', 1, 1, 2),
    ('A', 5, 15, 6),
    ('B', 3, 9, 6),
    ('C', 4, 16, 8),
    ('D', 5, 20, 8),
    ('E', 6, 36, 12),
    ('E', 7, 63, 18),
    ('E', 8, 120, 30),
    ('F', 4, 24, 12),
    ('G', 2, 6, 6),
]


class TestRootSystems(TestCase):
    """Bourbaki data of the simple root systems"""

    def test_what_rootsystem(self):
        """type discovery"""
        klass, found = what_rootsystem('a')
        self.assertEqual(klass, TypeA)
        self.assertEqual(sorted(k.TYPE for k in found), ['A', 'B', 'C', 'D', 'E', 'F', 'G'])
        self.assertEqual(what_rootsystem('X')[0], None)

    def test_build(self):
        """positive root counts and coxeter numbers"""
        for kind, rank, positive, coxeter in SYSTEMS:
            rs = build(kind, rank)
            self.assertEqual(rs.label, f'{kind}{rank}')
            self.assertEqual(len(rs.positive_roots), positive)
            self.assertEqual(rs.coxeter_number, coxeter)
            self.assertEqual(len(rs.fundamental_weights), rank)
            self.assertTrue(build(kind, rank) is rs)

    def test_invalid(self):
        """unknown types and out of range ranks"""
        self.assertErrorRegex(RootSystemError, 'Unknown root system type', build, 'X', 3)
        self.assertErrorRegex(RootSystemError, 'Invalid rank', build, 'E', 9)
        self.assertErrorRegex(RootSystemError, 'Invalid rank', build, 'D', 3)
        self.assertErrorRegex(RootSystemError, 'Invalid root system label', parse_label, 'E')
        self.assertEqual(parse_label(' e6 '), ('E', 6))

    def test_cartan(self):
        """Cartan matrices of G2 and B2"""
        self.assertEqual(build('G', 2).cartan_matrix, [[2, -1], [-3, 2]])
        cartan = build('B', 2).cartan_matrix
        self.assertEqual(sorted([cartan[0][1], cartan[1][0]]), [-2, -1])

    def test_highest_root(self):
        """theta is dominant, and the fundamental weights pair with the simple coroots as the identity"""
        for kind, rank, _, _ in SYSTEMS:
            rs = build(kind, rank)
            self.assertTrue(all(c >= 0 for c in rs.weight_coefficients(rs.highest_root)))
            for i, omega in enumerate(rs.fundamental_weights):
                self.assertEqual(rs.weight_coefficients(omega), [int(i == j) for j in range(rank)])

    def test_w0(self):
        """w0 agrees with reflection descent"""
        for kind, rank, _, _ in SYSTEMS:
            self.assertTrue(w0_descent_check(build(kind, rank)), f'{kind}{rank}')

    def test_theta(self):
        """diagram involutions of A, D and E6"""
        self.assertEqual(build('A', 4).theta, [3, 2, 1, 0])
        self.assertEqual(build('D', 5).theta, [0, 1, 2, 4, 3])
        self.assertEqual(build('D', 4).theta, [0, 1, 2, 3])
        self.assertEqual(build('E', 6).theta, [5, 1, 4, 3, 2, 0])
        self.assertEqual(build('E', 7).theta, list(range(7)))
        self.assertTrue(isinstance(build('D', 6), TypeD))

        e6 = build('E', 6)
        self.assertEqual(DominantWeight(e6, [1, 0, 0, 0, 0, 0]).dual.coeffs, (0, 0, 0, 0, 0, 1))
        self.assertEqual(DominantWeight(build('A', 2), [2, 0]).dual.coeffs, (0, 2))

    def test_dimensions(self):
        """Weyl dimension formula and orbit dimensions"""
        cases = [
            ('A', 2, [2, 0], 6, 2),
            ('A', 5, [0, 1, 0, 0, 0], 15, 8),
            ('E', 6, [1, 0, 0, 0, 0, 0], 27, 16),
            ('E', 7, [0, 0, 0, 0, 0, 0, 1], 56, 27),
            ('E', 8, [0, 0, 0, 0, 0, 0, 0, 1], 248, 57),
            ('D', 5, [0, 0, 0, 0, 1], 16, 10),
            ('B', 4, [0, 0, 0, 1], 16, 10),
            ('G', 2, [1, 0], 7, 5),
            ('F', 4, [0, 0, 0, 1], 26, 15),
        ]
        for kind, rank, coeffs, dim, n in cases:
            rs = build(kind, rank)
            weight = DominantWeight(rs, coeffs)
            self.assertEqual(weyl_dim(rs, weight), dim, weight)
            self.assertEqual(orbit_dim(rs, weight), n, weight)

    def test_weight_coordinates(self):
        """fundamental weights of A2 in the epsilon basis"""
        rs = build('A', 2)
        self.assertEqual(list(rs.weight([1, 0])), [Fraction(2, 3), Fraction(-1, 3), Fraction(-1, 3)])
        self.assertEqual(list(rs.highest_root), [1, 0, -1])

    def test_an_longest_element(self):
        """w0(omega_i) = -omega_{n+1-i}, omega_i - w0(omega_i) = e_1 + ... + e_i - e_{n+2-i} - ... - e_{n+1}"""
        for n in range(1, 9):
            rs = build('A', n)
            values = an_table(rs)
            for i in range(1, n + 1):
                self.assertEqual(list(values[f'w{i}']), an_closed_form(n, i), (n, i))
                weight = rs.weight([int(j == i - 1) for j in range(n)])
                dual = rs.weight([int(j == n - i) for j in range(n)])
                self.assertEqual(list(rs.w0(weight)), [-x for x in dual], (n, i))
        self.assertEqual(an_closed_form(5, 2), [1, 1, 0, 0, -1, -1])
        self.assertEqual(list(an_table(build('A', 5))['w2']), [1, 1, 0, 0, -1, -1])
        self.assertEqual(list(an_table(build('A', 2))['w1']), [1, 0, -1])
