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
Exceptional root systems E6, E7, E8, F4, G2 (Bourbaki, Planches V-IX).

E6 and E7 are realized inside the 8-dimensional space of E8, using its first 6 and 7 simple roots.
"""
import itertools
from fractions import Fraction

from vsc.severi.roots.rootsystem import RootSystem, add, scale, sub, unit, vec

HALF = Fraction(1, 2)


def _eps(size):
    return [unit(size, i) for i in range(size)]


def _pm_pairs(eps, upto):
    """-epsilon_i + epsilon_j and epsilon_i + epsilon_j, i < j <= upto"""
    roots = []
    for j in range(upto):
        for i in range(j):
            roots.append(sub(eps[j], eps[i]))
            roots.append(add(eps[i], eps[j]))
    return roots


def _e8_simple():
    eps = _eps(8)
    alpha1 = scale(HALF, vec([1, -1, -1, -1, -1, -1, -1, 1]))
    alpha2 = add(eps[0], eps[1])
    rest = [sub(eps[i], eps[i - 1]) for i in range(1, 7)]
    return [alpha1, alpha2] + rest


def _half_roots(fixed, free, parity):
    """1/2 (fixed + sum_(i < free) (-1)^nu(i) epsilon_i) with sum nu(i) = parity mod 2"""
    roots = []
    for signs in itertools.product([1, -1], repeat=free):
        if sum(1 for s in signs if s < 0) % 2 != parity:
            continue
        roots.append(scale(HALF, vec(list(signs) + list(fixed))))
    return roots


class TypeE(RootSystem):
    """E6, E7, E8"""
    HIDDEN = False
    TYPE = 'E'
    MIN_RANK = 6
    MAX_RANK = 8
    COXETER = staticmethod(lambda n: {6: 12, 7: 18, 8: 30}[n])

    def _simple_roots(self):
        return _e8_simple()[:self.rank]

    def _positive_roots(self):
        eps = _eps(8)
        if self.rank == 6:
            # epsilon_8 - epsilon_7 - epsilon_6 part fixed, even number of minus signs on epsilon_1..5
            return _pm_pairs(eps, 5) + _half_roots([-1, -1, 1], 5, 0)
        if self.rank == 7:
            return _pm_pairs(eps, 6) + [sub(eps[7], eps[6])] + _half_roots([-1, 1], 6, 1)
        return _pm_pairs(eps, 8) + _half_roots([1], 7, 0)

    def expected_positive_count(self):
        return {6: 36, 7: 63, 8: 120}[self.rank]

    def _theta(self):
        if self.rank == 6:
            return [5, 1, 4, 3, 2, 0]
        return list(range(self.rank))


class TypeF(RootSystem):
    """F4"""
    HIDDEN = False
    TYPE = 'F'
    MIN_RANK = 4
    MAX_RANK = 4
    COXETER = staticmethod(lambda n: 12)

    def _simple_roots(self):
        eps = _eps(4)
        return [sub(eps[1], eps[2]), sub(eps[2], eps[3]), eps[3], scale(HALF, vec([1, -1, -1, -1]))]

    def _positive_roots(self):
        eps = _eps(4)
        halves = [scale(HALF, vec([1] + list(signs))) for signs in itertools.product([1, -1], repeat=3)]
        pairs = [op(eps[i], eps[j]) for i, j in itertools.combinations(range(4), 2) for op in (sub, add)]
        return eps + pairs + halves

    def expected_positive_count(self):
        return 24


class TypeG(RootSystem):
    """G2, in the plane sum = 0 of a 3-dimensional space"""
    HIDDEN = False
    TYPE = 'G'
    MIN_RANK = 2
    MAX_RANK = 2
    COXETER = staticmethod(lambda n: 6)

    def _simple_roots(self):
        return [vec([1, -1, 0]), vec([-2, 1, 1])]

    def _positive_roots(self):
        a1, a2 = self._simple_roots()
        return [add(scale(p, a1), scale(q, a2)) for p, q in [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]]

    def expected_positive_count(self):
        return 6
